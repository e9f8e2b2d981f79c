#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace tetratag {

// A labeled ordered constituency tree.
//
// A node with no children is a leaf: `label` holds the preterminal (POS tag)
// and `word` the token. Internal nodes have an empty `word` and at least one
// child. `chain` is only used on leaves of collapsed trees, where it records
// the unary chain that sat directly above the preterminal ("NP" or "S::VP");
// it is empty everywhere else.
struct Tree {
  std::string label;
  std::string word;
  std::string chain;
  std::vector<Tree> children;

  static Tree leaf(std::string word, std::string preterminal,
                   std::string chain = {});
  static Tree node(std::string label, std::vector<Tree> children);

  bool is_leaf() const noexcept { return children.empty(); }

  friend bool operator==(const Tree&, const Tree&) = default;
};

struct Token {
  std::string word;
  std::string preterminal;

  friend bool operator==(const Token&, const Token&) = default;
};

using Sentence = std::vector<Token>;

// Leaves of `t` in order.
Sentence leaves(const Tree& t);
std::size_t leaf_count(const Tree& t);
std::size_t internal_count(const Tree& t);

// True when every internal node has exactly two children.
bool is_binary(const Tree& t);

// Reads zero or more bracketed trees. A top-level unlabeled wrapper with a
// single child, as in "( (S ...) )", is removed.
//
// Throws ParseError on unbalanced input and StructureError on childless
// internal nodes or stray words.
std::vector<Tree> read_trees(std::string_view text);

// Reads exactly one tree; throws if the text holds zero or several.
struct LocatedTree {
  Tree tree;
  std::size_t line = 0;  // 1-based line of the opening parenthesis
};

// read_trees() that also remembers where each tree started.
std::vector<LocatedTree> read_trees_located(std::string_view text);

Tree read_tree(std::string_view text);

// Single-line bracketed form, tokens separated by one space. Leaves carrying a
// chain are written as "(CHAIN (POS word))".
std::string write_tree(const Tree& t);

struct StripOptions {
  bool strip_function_tags = true;
  bool drop_trace_subtrees = true;
};

inline constexpr std::string_view kTraceTag = "-NONE-";

// Removes function tags and coindexation ("NP-SBJ-1" -> "NP", "NP=2" -> "NP")
// and/or subtrees made only of traces. Labels starting with '-' such as
// "-LRB-" and "-NONE-" are kept whole. Throws EmptyTreeError when nothing is
// left.
Tree strip_annotations(const Tree& t, const StripOptions& options = {});

// "NP-SBJ-1" -> "NP". Exposed for the evaluator.
std::string strip_function_tag(std::string_view label);

// Parses a sentence line: either bracketed leaves "(DT the) (NN cat)" or bare
// space-separated words, which receive `default_preterminal`.
Sentence read_sentence(std::string_view line,
                       std::string_view default_preterminal = "XX");

// Inverse of read_sentence for bracketed tokens.
std::string write_sentence(const Sentence& sentence);

}  // namespace tetratag
