#pragma once

#include <string>
#include <string_view>
#include <vector>

#include "tetratag/tree.hpp"

namespace tetratag {

inline constexpr std::string_view kChainSeparator = "::";
inline constexpr std::string_view kDefaultFallbackRoot = "TOP";

// Label of a node in the binarized form: a collapsed unary chain
// ("S::VP" -> {S, VP}) or the dummy label introduced by binarization, which
// has no parts and serializes as the empty string.
struct CollapsedLabel {
  std::vector<std::string> parts;

  static CollapsedLabel dummy() { return {}; }
  static CollapsedLabel parse(std::string_view text);

  bool is_dummy() const noexcept { return parts.empty(); }
  std::string str() const;

  friend bool operator==(const CollapsedLabel&, const CollapsedLabel&) = default;
};

// A Tree whose internal nodes all have exactly two children. Constructing one
// validates the shape and throws StructureError otherwise.
class BinaryTree {
 public:
  explicit BinaryTree(Tree tree);

  const Tree& tree() const noexcept { return tree_; }
  Tree release() && { return std::move(tree_); }
  std::size_t leaf_count() const;

  friend bool operator==(const BinaryTree&, const BinaryTree&) = default;

 private:
  Tree tree_;
};

// Folds every unary chain into a single node labeled "X::Y::Z". Chains that end
// in a leaf are stored on the leaf's `chain` field. Throws StructureError for
// labels containing "::" and for unlabeled internal nodes (the empty label is
// reserved for the binarization dummy).
Tree collapse_unaries(const Tree& t);

// Right-branching binarization: (X c1 c2 ... ck) becomes
// (X c1 (<dummy> c2 (<dummy> ... ck))). Unary internal nodes are rejected.
BinaryTree binarize_right(const Tree& t);

// Splices out every dummy node, promoting its children into the parent. Total
// over arbitrary dummy placement; a dummy root is relabeled `fallback_root`.
Tree unbinarize(const BinaryTree& bt,
                std::string_view fallback_root = kDefaultFallbackRoot);

// Inverse of collapse_unaries.
Tree expand_unaries(const Tree& t);

// collapse_unaries followed by binarize_right.
BinaryTree to_binary(const Tree& t);

// unbinarize followed by expand_unaries.
Tree from_binary(const BinaryTree& bt,
                 std::string_view fallback_root = kDefaultFallbackRoot);

}  // namespace tetratag
