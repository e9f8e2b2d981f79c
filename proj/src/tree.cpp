#include "tetratag/tree.hpp"

#include <cctype>
#include <optional>
#include <utility>

#include "tetratag/error.hpp"

namespace tetratag {

Tree Tree::leaf(std::string word, std::string preterminal, std::string chain) {
  Tree t;
  t.label = std::move(preterminal);
  t.word = std::move(word);
  t.chain = std::move(chain);
  return t;
}

Tree Tree::node(std::string label, std::vector<Tree> children) {
  Tree t;
  t.label = std::move(label);
  t.children = std::move(children);
  return t;
}

namespace {

void collect_leaves(const Tree& t, Sentence& out) {
  if (t.is_leaf()) {
    out.push_back({t.word, t.label});
    return;
  }
  for (const Tree& c : t.children) collect_leaves(c, out);
}

bool is_space(char c) {
  return std::isspace(static_cast<unsigned char>(c)) != 0;
}

// Recursive-descent reader over a flat token stream. Symbols are maximal runs
// of characters that are neither whitespace nor parentheses.
class Reader {
 public:
  explicit Reader(std::string_view text) : text_(text) {}

  bool at_end() {
    skip_space();
    return pos_ >= text_.size();
  }

  std::size_t position() const noexcept { return pos_; }

  // Newlines in [from, current position).
  std::size_t lines_between(std::size_t from) const {
    std::size_t n = 0;
    for (std::size_t i = from; i < pos_; ++i) n += text_[i] == '\n';
    return n;
  }

  Tree read_top() {
    skip_space();
    if (peek() != '(') {
      if (peek() == ')') fail("unmatched ')'", pos_);
      fail("expected '('", pos_);
    }
    top_open_ = pos_;
    Tree t = read_node();
    if (t.label.empty() && !t.is_leaf() && t.children.size() == 1) {
      Tree inner = std::move(t.children.front());
      return inner;
    }
    return t;
  }

 private:
  char peek() {
    skip_space();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void skip_space() {
    while (pos_ < text_.size() && is_space(text_[pos_])) ++pos_;
  }

  std::pair<std::size_t, std::size_t> line_column(std::size_t offset) const {
    std::size_t line = 1;
    std::size_t line_start = 0;
    for (std::size_t i = 0; i < offset && i < text_.size(); ++i) {
      if (text_[i] == '\n') {
        ++line;
        line_start = i + 1;
      }
    }
    return {line, offset - line_start + 1};
  }

  [[noreturn]] void fail(const std::string& what, std::size_t offset) const {
    auto [line, column] = line_column(offset);
    throw ParseError(what, offset, line, column);
  }

  [[noreturn]] void unbalanced() const {
    auto [line, column] = line_column(top_open_);
    fail("unbalanced parentheses: tree opened at line " + std::to_string(line) + ", column " +
             std::to_string(column) + " is never closed; input ends",
         text_.size());
  }

  std::string_view read_symbol() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && !is_space(text_[pos_]) &&
           text_[pos_] != '(' && text_[pos_] != ')') {
      ++pos_;
    }
    return text_.substr(start, pos_ - start);
  }

  bool is_symbol_start(char c) const {
    return c != '\0' && c != '(' && c != ')';
  }

  Tree read_node() {
    std::size_t open = pos_;
    ++pos_;  // '('
    std::string label;
    if (is_symbol_start(peek())) label = std::string(read_symbol());

    if (is_symbol_start(peek())) {
      std::size_t word_at = pos_;
      std::string word(read_symbol());
      char next = peek();
      if (next == '\0') unbalanced();
      if (next != ')') {
        throw StructureError("unexpected token after word '" + word +
                             "' at offset " + std::to_string(pos_));
      }
      if (label.empty()) {
        throw StructureError("word without preterminal at offset " +
                             std::to_string(word_at));
      }
      ++pos_;
      return Tree::leaf(std::move(word), std::move(label));
    }

    std::vector<Tree> children;
    for (;;) {
      char c = peek();
      if (c == '\0') unbalanced();
      if (c == ')') break;
      if (c == '(') {
        children.push_back(read_node());
        continue;
      }
      throw StructureError("stray word at offset " + std::to_string(pos_));
    }
    if (children.empty()) {
      throw StructureError("internal node with no children at offset " +
                           std::to_string(open));
    }
    ++pos_;  // ')'
    return Tree::node(std::move(label), std::move(children));
  }

  std::string_view text_;
  std::size_t pos_ = 0;
  std::size_t top_open_ = 0;
};

void write_into(const Tree& t, std::string& out) {
  if (t.is_leaf()) {
    if (!t.chain.empty()) {
      out += '(';
      out += t.chain;
      out += ' ';
    }
    out += '(';
    out += t.label;
    out += ' ';
    out += t.word;
    out += ')';
    if (!t.chain.empty()) out += ')';
    return;
  }
  out += '(';
  out += t.label;
  for (const Tree& c : t.children) {
    out += ' ';
    write_into(c, out);
  }
  out += ')';
}

std::optional<Tree> strip_into(const Tree& t, const StripOptions& options) {
  if (t.is_leaf()) {
    if (options.drop_trace_subtrees && t.label == kTraceTag) return std::nullopt;
    Tree out = t;
    if (options.strip_function_tags) out.label = strip_function_tag(t.label);
    return out;
  }
  std::vector<Tree> kept;
  kept.reserve(t.children.size());
  for (const Tree& c : t.children) {
    if (auto s = strip_into(c, options)) kept.push_back(std::move(*s));
  }
  if (kept.empty()) return std::nullopt;
  std::string label =
      options.strip_function_tags ? strip_function_tag(t.label) : t.label;
  return Tree::node(std::move(label), std::move(kept));
}

}  // namespace

Sentence leaves(const Tree& t) {
  Sentence out;
  collect_leaves(t, out);
  return out;
}

std::size_t leaf_count(const Tree& t) {
  if (t.is_leaf()) return 1;
  std::size_t n = 0;
  for (const Tree& c : t.children) n += leaf_count(c);
  return n;
}

std::size_t internal_count(const Tree& t) {
  if (t.is_leaf()) return 0;
  std::size_t n = 1;
  for (const Tree& c : t.children) n += internal_count(c);
  return n;
}

bool is_binary(const Tree& t) {
  if (t.is_leaf()) return true;
  if (t.children.size() != 2) return false;
  return is_binary(t.children[0]) && is_binary(t.children[1]);
}

std::vector<Tree> read_trees(std::string_view text) {
  Reader reader(text);
  std::vector<Tree> out;
  while (!reader.at_end()) out.push_back(reader.read_top());
  return out;
}

std::vector<LocatedTree> read_trees_located(std::string_view text) {
  Reader reader(text);
  std::vector<LocatedTree> out;
  std::size_t line = 1;
  std::size_t counted = 0;
  while (!reader.at_end()) {
    line += reader.lines_between(counted);
    counted = reader.position();
    Tree t = reader.read_top();
    out.push_back({std::move(t), line});
  }
  return out;
}

Tree read_tree(std::string_view text) {
  std::vector<Tree> trees = read_trees(text);
  if (trees.size() != 1) {
    throw StructureError("expected exactly one tree, found " +
                         std::to_string(trees.size()));
  }
  return std::move(trees.front());
}

std::string write_tree(const Tree& t) {
  std::string out;
  write_into(t, out);
  return out;
}

std::string strip_function_tag(std::string_view label) {
  if (label.empty() || label.front() == '-') return std::string(label);
  std::size_t cut = label.find_first_of("-=", 1);
  return std::string(label.substr(0, cut));
}

Tree strip_annotations(const Tree& t, const StripOptions& options) {
  std::optional<Tree> out = strip_into(t, options);
  if (!out) throw EmptyTreeError();
  return std::move(*out);
}

Sentence read_sentence(std::string_view line,
                       std::string_view default_preterminal) {
  std::size_t first = 0;
  while (first < line.size() && is_space(line[first])) ++first;
  Sentence out;
  if (first < line.size() && line[first] == '(') {
    for (Tree& t : read_trees(line)) {
      if (!t.is_leaf()) {
        throw StructureError("sentence token is not a (preterminal word) pair: " +
                             write_tree(t));
      }
      out.push_back({std::move(t.word), std::move(t.label)});
    }
    return out;
  }
  std::size_t pos = first;
  while (pos < line.size()) {
    std::size_t end = pos;
    while (end < line.size() && !is_space(line[end])) ++end;
    out.push_back({std::string(line.substr(pos, end - pos)),
                   std::string(default_preterminal)});
    pos = end;
    while (pos < line.size() && is_space(line[pos])) ++pos;
  }
  return out;
}

std::string write_sentence(const Sentence& sentence) {
  std::string out;
  for (const Token& tok : sentence) {
    if (!out.empty()) out += ' ';
    out += '(';
    out += tok.preterminal;
    out += ' ';
    out += tok.word;
    out += ')';
  }
  return out;
}

}  // namespace tetratag
