#include "tetratag/tags.hpp"

#include <algorithm>
#include <cctype>
#include <set>

#include "tetratag/error.hpp"

namespace tetratag {

char action_char(Action a) noexcept {
  switch (a) {
    case Action::kShiftLeft:
      return 'l';
    case Action::kShiftRight:
      return 'r';
    case Action::kCombineLeft:
      return 'L';
    case Action::kCombineRight:
      return 'R';
  }
  return '?';
}

std::optional<Action> action_from_char(char c) noexcept {
  switch (c) {
    case 'l':
      return Action::kShiftLeft;
    case 'r':
      return Action::kShiftRight;
    case 'L':
      return Action::kCombineLeft;
    case 'R':
      return Action::kCombineRight;
    default:
      return std::nullopt;
  }
}

TetraTag TetraTag::parse(std::string_view text) {
  if (text.empty()) throw FormatError("empty tag");
  std::optional<Action> action = action_from_char(text.front());
  if (!action) throw FormatError("unknown tag '" + std::string(text) + "'");
  TetraTag tag{*action, {}};
  if (text.size() == 1) return tag;
  if (text[1] != '/' || text.size() == 2) {
    throw FormatError("unknown tag '" + std::string(text) + "'");
  }
  tag.label = std::string(text.substr(2));
  return tag;
}

std::string TetraTag::str() const {
  std::string out(1, action_char(action));
  if (!label.empty()) {
    out += '/';
    out += label;
  }
  return out;
}

std::string format_tags(const TagSequence& tags) {
  std::string out;
  for (const TetraTag& t : tags) {
    if (!out.empty()) out += ' ';
    out += t.str();
  }
  return out;
}

TagSequence parse_tags(std::string_view line) {
  TagSequence out;
  std::size_t pos = 0;
  auto space = [](char c) { return std::isspace(static_cast<unsigned char>(c)) != 0; };
  while (pos < line.size()) {
    while (pos < line.size() && space(line[pos])) ++pos;
    std::size_t end = pos;
    while (end < line.size() && !space(line[end])) ++end;
    if (end > pos) out.push_back(TetraTag::parse(line.substr(pos, end - pos)));
    pos = end;
  }
  return out;
}

TagVocabulary::TagVocabulary(std::vector<TetraTag> tags) : tags_(std::move(tags)) {
  index_.reserve(tags_.size());
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    if (!index_.emplace(tags_[i].str(), i).second) {
      throw FormatError("duplicate tag '" + tags_[i].str() + "' in vocabulary");
    }
  }
  for (std::size_t i = 0; i < tags_.size(); ++i) {
    by_action_[static_cast<std::size_t>(tags_[i].action)].push_back(i);
  }
  for (auto& cols : by_action_) {
    std::sort(cols.begin(), cols.end(),
              [&](std::size_t a, std::size_t b) { return tags_[a].label < tags_[b].label; });
  }
}

TagVocabulary TagVocabulary::induce(const std::vector<TagSequence>& sequences) {
  std::set<TetraTag> seen = {
      {Action::kShiftLeft, {}},
      {Action::kShiftRight, {}},
      {Action::kCombineLeft, {}},
      {Action::kCombineRight, {}},
  };
  for (const TagSequence& s : sequences) seen.insert(s.begin(), s.end());
  return TagVocabulary(std::vector<TetraTag>(seen.begin(), seen.end()));
}

std::optional<std::size_t> TagVocabulary::index_of(const TetraTag& tag) const {
  auto it = index_.find(tag.str());
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::string write_vocabulary(const TagVocabulary& vocab) {
  std::string out;
  for (const TetraTag& t : vocab.tags()) {
    out += t.str();
    out += '\n';
  }
  return out;
}

TagVocabulary read_vocabulary(std::string_view text) {
  std::vector<TetraTag> tags;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) {
      line.remove_suffix(1);
    }
    if (!line.empty()) tags.push_back(TetraTag::parse(line));
    pos = end + 1;
  }
  return TagVocabulary(std::move(tags));
}

}  // namespace tetratag
