#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "tetratag/tags.hpp"
#include "tetratag/transform.hpp"
#include "tetratag/tree.hpp"

namespace tetratag {

// Tags a binary tree: word i gets l/r by whether its leaf is a left or right
// child, fencepost i gets L/R by the direction of the internal node covering
// it, i.e. the i-th internal node of an in-order traversal. The root counts
// as a left child. Leaf chains ride on shifts, node labels on combines.
TagSequence encode(const BinaryTree& bt);

struct Violation {
  std::size_t position;
  std::string reason;

  friend bool operator==(const Violation&, const Violation&) = default;
};

// Checks that `tags` alternates shift/combine starting and ending on a shift
// and that the stack-depth rules hold: l pushes (+1), r and L need a non-empty
// stack, R needs two elements and pops one, and exactly one element remains.
// Returns the first violation.
std::optional<Violation> check_validity(const TagSequence& tags);

// Stack depth after each action. Throws ValidityError on invalid input.
std::vector<int> depth_profile(const TagSequence& tags);
int max_depth(const TagSequence& tags);

// Runs the left-corner transition system over `sentence`. Throws
// ValidityError for invalid sequences and StructureError when the sentence
// length does not match.
BinaryTree decode(const TagSequence& tags, const Sentence& sentence);

// One row of a derivation: the action taken and the stack afterwards, each
// element rendered in bracketed form with "<>" marking the empty slot.
struct DerivationStep {
  TetraTag action;
  std::vector<std::string> stack;
};

// decode() that also records every intermediate stack.
BinaryTree decode_traced(const TagSequence& tags, const Sentence& sentence,
                         std::vector<DerivationStep>& trace);

}  // namespace tetratag
