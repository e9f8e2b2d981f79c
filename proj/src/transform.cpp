#include "tetratag/transform.hpp"

#include <utility>

#include "tetratag/error.hpp"

namespace tetratag {

CollapsedLabel CollapsedLabel::parse(std::string_view text) {
  CollapsedLabel out;
  if (text.empty()) return out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t cut = text.find(kChainSeparator, pos);
    out.parts.emplace_back(text.substr(pos, cut - pos));
    if (cut == std::string_view::npos) break;
    pos = cut + kChainSeparator.size();
  }
  return out;
}

std::string CollapsedLabel::str() const {
  std::string out;
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i > 0) out += kChainSeparator;
    out += parts[i];
  }
  return out;
}

namespace {

void check_binary(const Tree& t) {
  if (t.is_leaf()) return;
  if (t.children.size() != 2) {
    throw StructureError("node '" + t.label + "' has " +
                         std::to_string(t.children.size()) +
                         " children in a binary tree");
  }
  check_binary(t.children[0]);
  check_binary(t.children[1]);
}

void check_label(const std::string& label) {
  if (label.empty()) {
    throw StructureError("unlabeled internal node");
  }
  if (label.find(kChainSeparator) != std::string::npos) {
    throw StructureError("label '" + label + "' contains the reserved \"" +
                         std::string(kChainSeparator) + "\" separator");
  }
}

Tree binarize_span(const std::string& label, std::vector<Tree>::const_iterator first,
                   std::vector<Tree>::const_iterator last);

Tree binarize_node(const Tree& t) {
  if (t.is_leaf()) return t;
  if (t.children.size() == 1) {
    throw StructureError("unary node '" + t.label +
                         "' cannot be binarized; collapse unary chains first");
  }
  return binarize_span(t.label, t.children.begin(), t.children.end());
}

// Builds (label first (<dummy> ...)) over [first, last), at least two trees.
Tree binarize_span(const std::string& label, std::vector<Tree>::const_iterator first,
                   std::vector<Tree>::const_iterator last) {
  std::vector<Tree> pair;
  pair.reserve(2);
  pair.push_back(binarize_node(*first));
  if (last - first == 2) {
    pair.push_back(binarize_node(*(first + 1)));
  } else {
    pair.push_back(binarize_span(std::string(), first + 1, last));
  }
  return Tree::node(label, std::move(pair));
}

void splice_into(const Tree& t, std::vector<Tree>& out);

Tree unbinarize_node(const Tree& t) {
  if (t.is_leaf()) return t;
  std::vector<Tree> children;
  for (const Tree& c : t.children) splice_into(c, children);
  return Tree::node(t.label, std::move(children));
}

void splice_into(const Tree& t, std::vector<Tree>& out) {
  if (!t.is_leaf() && t.label.empty()) {
    for (const Tree& c : t.children) splice_into(c, out);
    return;
  }
  out.push_back(unbinarize_node(t));
}

Tree wrap_chain(const std::vector<std::string>& parts, Tree inner) {
  for (auto it = parts.rbegin(); it != parts.rend(); ++it) {
    std::vector<Tree> one;
    one.push_back(std::move(inner));
    inner = Tree::node(*it, std::move(one));
  }
  return inner;
}

}  // namespace

BinaryTree::BinaryTree(Tree tree) : tree_(std::move(tree)) {
  check_binary(tree_);
}

std::size_t BinaryTree::leaf_count() const {
  return tetratag::leaf_count(tree_);
}

Tree collapse_unaries(const Tree& t) {
  if (t.is_leaf()) return t;

  std::vector<std::string> chain;
  const Tree* cur = &t;
  for (;;) {
    check_label(cur->label);
    chain.push_back(cur->label);
    if (cur->children.size() != 1) break;
    cur = &cur->children.front();
    if (cur->is_leaf()) {
      CollapsedLabel folded{std::move(chain)};
      if (!cur->chain.empty()) {
        for (auto& p : CollapsedLabel::parse(cur->chain).parts) {
          folded.parts.push_back(std::move(p));
        }
      }
      return Tree::leaf(cur->word, cur->label, folded.str());
    }
  }

  std::vector<Tree> children;
  children.reserve(cur->children.size());
  for (const Tree& c : cur->children) children.push_back(collapse_unaries(c));
  return Tree::node(CollapsedLabel{std::move(chain)}.str(), std::move(children));
}

BinaryTree binarize_right(const Tree& t) { return BinaryTree(binarize_node(t)); }

Tree unbinarize(const BinaryTree& bt, std::string_view fallback_root) {
  Tree out = unbinarize_node(bt.tree());
  if (!out.is_leaf() && out.label.empty()) out.label = std::string(fallback_root);
  return out;
}

Tree expand_unaries(const Tree& t) {
  if (t.is_leaf()) {
    if (t.chain.empty()) return t;
    return wrap_chain(CollapsedLabel::parse(t.chain).parts,
                      Tree::leaf(t.word, t.label));
  }
  std::vector<Tree> children;
  children.reserve(t.children.size());
  for (const Tree& c : t.children) children.push_back(expand_unaries(c));
  CollapsedLabel label = CollapsedLabel::parse(t.label);
  if (label.parts.size() <= 1) return Tree::node(t.label, std::move(children));
  std::vector<std::string> outer(label.parts.begin(), label.parts.end() - 1);
  return wrap_chain(outer, Tree::node(label.parts.back(), std::move(children)));
}

BinaryTree to_binary(const Tree& t) { return binarize_right(collapse_unaries(t)); }

Tree from_binary(const BinaryTree& bt, std::string_view fallback_root) {
  return expand_unaries(unbinarize(bt, fallback_root));
}

}  // namespace tetratag
