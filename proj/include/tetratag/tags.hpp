#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace tetratag {

// The four structural actions, declared in tie-break order l < r < L < R.
enum class Action : std::uint8_t {
  kShiftLeft = 0,     // "l": this word is a left child
  kShiftRight = 1,    // "r": this word is a right child
  kCombineLeft = 2,   // "L": node at this fencepost is a left child
  kCombineRight = 3,  // "R": node at this fencepost is a right child
};

inline constexpr bool is_shift(Action a) noexcept {
  return a == Action::kShiftLeft || a == Action::kShiftRight;
}

char action_char(Action a) noexcept;
std::optional<Action> action_from_char(char c) noexcept;

// A structural action plus an optional label. On shifts the label is the leaf
// unary chain; on combines it is the new node's label. An empty label means
// none (or the binarization dummy).
struct TetraTag {
  Action action = Action::kShiftLeft;
  std::string label;

  // "l", "L/S::VP", "r/NP". Throws FormatError on anything else.
  static TetraTag parse(std::string_view text);
  std::string str() const;

  friend bool operator==(const TetraTag&, const TetraTag&) = default;
  friend auto operator<=>(const TetraTag&, const TetraTag&) = default;
};

using TagSequence = std::vector<TetraTag>;

// Positions alternate word, fencepost, word, ...; even indices are words.
inline constexpr bool is_word_position(std::size_t i) noexcept { return i % 2 == 0; }

inline constexpr std::size_t sequence_length(std::size_t n_words) noexcept {
  return n_words == 0 ? 0 : 2 * n_words - 1;
}

std::string format_tags(const TagSequence& tags);
// Space-separated serialized tags.
TagSequence parse_tags(std::string_view line);

// Ordered tag list indexing score-matrix columns.
class TagVocabulary {
 public:
  TagVocabulary() = default;
  // Duplicates are rejected with FormatError.
  explicit TagVocabulary(std::vector<TetraTag> tags);

  // The four bare structural tags plus every distinct tag in `sequences`,
  // sorted by (action, label).
  static TagVocabulary induce(const std::vector<TagSequence>& sequences);

  std::size_t size() const noexcept { return tags_.size(); }
  const TetraTag& operator[](std::size_t i) const { return tags_[i]; }
  const std::vector<TetraTag>& tags() const noexcept { return tags_; }
  std::optional<std::size_t> index_of(const TetraTag& tag) const;
  // Columns carrying action `a`, in ascending label order.
  std::span<const std::size_t> columns(Action a) const {
    return by_action_[static_cast<std::size_t>(a)];
  }

  friend bool operator==(const TagVocabulary& a, const TagVocabulary& b) {
    return a.tags_ == b.tags_;
  }

 private:
  std::vector<TetraTag> tags_;
  std::unordered_map<std::string, std::size_t> index_;
  std::array<std::vector<std::size_t>, 4> by_action_;
};

// One serialized tag per line.
std::string write_vocabulary(const TagVocabulary& vocab);
TagVocabulary read_vocabulary(std::string_view text);

}  // namespace tetratag
