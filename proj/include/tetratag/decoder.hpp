#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "tetratag/codec.hpp"
#include "tetratag/tags.hpp"

namespace tetratag {

// Per-position tag scores for one sentence: 2n-1 rows (word, fencepost, word,
// ...) by one column per vocabulary entry, row-major, log domain. Only shift
// columns are read on word rows and only combine columns on fencepost rows;
// the remaining cells are carried along but ignored.
class ScoreMatrix {
 public:
  // Throws FormatError when the grid size is not (2n-1) x |vocab| or a score
  // is not finite.
  ScoreMatrix(std::shared_ptr<const TagVocabulary> vocab, std::size_t n_words,
              std::vector<double> grid, std::string id = {});

  std::size_t n_words() const noexcept { return n_words_; }
  std::size_t rows() const noexcept { return sequence_length(n_words_); }
  std::size_t cols() const noexcept { return vocab_->size(); }
  const TagVocabulary& vocabulary() const noexcept { return *vocab_; }
  const std::shared_ptr<const TagVocabulary>& vocabulary_ptr() const noexcept {
    return vocab_;
  }
  const std::string& id() const noexcept { return id_; }

  double at(std::size_t row, std::size_t col) const { return grid_[row * cols() + col]; }
  std::span<const double> row(std::size_t r) const {
    return std::span<const double>(grid_).subspan(r * cols(), cols());
  }
  const std::vector<double>& grid() const noexcept { return grid_; }

  // Score of `tag` at `row`; throws FormatError when the tag is not in the
  // vocabulary.
  double score_of(std::size_t row, const TetraTag& tag) const;

  friend bool operator==(const ScoreMatrix& a, const ScoreMatrix& b) {
    return a.n_words_ == b.n_words_ && a.id_ == b.id_ && *a.vocab_ == *b.vocab_ &&
           a.grid_ == b.grid_;
  }

 private:
  std::shared_ptr<const TagVocabulary> vocab_;
  std::size_t n_words_;
  std::vector<double> grid_;
  std::string id_;
};

// How equal-scoring paths are ordered. Paths are compared at the last position
// where their actions differ.
enum class TieBreak : std::uint8_t {
  // Prefer the action entering from the shallower stack: l over r, L over R.
  kPreferShallow,
  // Prefer r over l and R over L.
  kPreferDeep,
};

std::string_view tie_break_name(TieBreak t) noexcept;
// "shallow" or "deep"; throws Error otherwise.
TieBreak parse_tie_break(std::string_view name);

struct DecoderConfig {
  int max_depth = 8;
  TieBreak tie_break = TieBreak::kPreferShallow;
};

struct DecodeResult {
  TagSequence tags;
  double score = 0.0;
};

// The (actions taken) x (stack depth) table. best(t, k) is the highest score
// of a valid prefix of t actions ending at depth k, -inf when unreachable.
struct Lattice {
  std::size_t steps = 0;  // 2n - 1
  int max_depth = 0;
  std::vector<double> best;
  std::vector<char> reachable;
  // Action taken to enter each cell; meaningful only when reachable.
  std::vector<Action> via;
  // Column chosen for each row and each of its two actions (first, second).
  std::vector<std::optional<std::size_t>> label_choice;

  std::size_t cell(std::size_t t, int k) const {
    return t * static_cast<std::size_t>(max_depth + 1) + static_cast<std::size_t>(k);
  }
  double at(std::size_t t, int k) const { return best[cell(t, k)]; }
};

Lattice build_lattice(const ScoreMatrix& scores, const DecoderConfig& config);

// Highest-scoring valid tag sequence whose stack depth never exceeds
// config.max_depth. Labels are chosen independently per position (argmax over
// the label variants of the chosen action). Runs in O(n * d).
// Throws NoPathError when no valid sequence fits under the cap.
DecodeResult dp_decode(const ScoreMatrix& scores, const DecoderConfig& config = {});

struct OracleResult {
  DecodeResult best;
  std::uint64_t candidates = 0;  // structural sequences covered, 2^(2n-1)
  std::uint64_t valid = 0;       // of those, valid under the depth cap
};

inline constexpr std::size_t kDefaultOracleGuard = 12;

// Exhaustive search over every structural sequence; invalid prefixes are
// rejected together with all their completions. Throws Error when the
// sentence is longer than `guard` words.
OracleResult oracle_decode(const ScoreMatrix& scores, const DecoderConfig& config = {},
                           std::size_t guard = kDefaultOracleGuard);

struct GreedyResult {
  TagSequence argmax;  // per-position argmax, possibly invalid
  double score = 0.0;
  std::optional<Violation> violation;

  bool valid() const noexcept { return !violation.has_value(); }
};

// Independent per-position argmax, then a validity check.
GreedyResult greedy_decode(const ScoreMatrix& scores,
                           TieBreak tie_break = TieBreak::kPreferShallow);

}  // namespace tetratag
