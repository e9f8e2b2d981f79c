#include "tetratag/codec.hpp"

#include <algorithm>
#include <memory>
#include <utility>

#include "tetratag/error.hpp"

namespace tetratag {

namespace {

void encode_into(const Tree& t, bool left_child, TagSequence& out) {
  if (t.is_leaf()) {
    out.push_back({left_child ? Action::kShiftLeft : Action::kShiftRight, t.chain});
    return;
  }
  encode_into(t.children[0], true, out);
  out.push_back({left_child ? Action::kCombineLeft : Action::kCombineRight, t.label});
  encode_into(t.children[1], false, out);
}

// A stack element: a tree plus the position of its empty slot, if any. The
// tree lives on the heap so that `slot` survives moves of the element.
struct Partial {
  std::unique_ptr<Tree> root;
  Tree* slot = nullptr;
};

Partial make_node(Tree left, std::string label) {
  Partial p;
  p.root = std::make_unique<Tree>();
  p.root->label = std::move(label);
  p.root->children.reserve(2);
  p.root->children.push_back(std::move(left));
  p.root->children.emplace_back();
  p.slot = &p.root->children.back();
  return p;
}

void render(const Tree& t, const Tree* slot, std::string& out) {
  if (&t == slot) {
    out += "<>";
    return;
  }
  if (t.is_leaf()) {
    out += t.word;
    return;
  }
  out += '(';
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i > 0) out += ' ';
    render(t.children[i], slot, out);
  }
  out += ')';
}

BinaryTree run(const TagSequence& tags, const Sentence& sentence,
               std::vector<DerivationStep>* trace) {
  if (sentence.empty()) throw StructureError("cannot decode an empty sentence");
  if (tags.size() != sequence_length(sentence.size())) {
    throw StructureError("tag sequence of length " + std::to_string(tags.size()) +
                         " does not match a sentence of " +
                         std::to_string(sentence.size()) + " words");
  }
  if (auto v = check_validity(tags)) throw ValidityError(v->position, v->reason);

  std::vector<Partial> stack;
  std::size_t next_word = 0;
  for (const TetraTag& tag : tags) {
    switch (tag.action) {
      case Action::kShiftLeft: {
        const Token& tok = sentence[next_word++];
        stack.push_back({std::make_unique<Tree>(
                             Tree::leaf(tok.word, tok.preterminal, tag.label)),
                         nullptr});
        break;
      }
      case Action::kShiftRight: {
        const Token& tok = sentence[next_word++];
        Partial& top = stack.back();
        *top.slot = Tree::leaf(tok.word, tok.preterminal, tag.label);
        top.slot = nullptr;
        break;
      }
      case Action::kCombineLeft: {
        Partial& top = stack.back();
        top = make_node(std::move(*top.root), tag.label);
        break;
      }
      case Action::kCombineRight: {
        Partial popped = std::move(stack.back());
        stack.pop_back();
        Partial made = make_node(std::move(*popped.root), tag.label);
        Partial& top = stack.back();
        *top.slot = std::move(*made.root);
        top.slot = made.slot;
        break;
      }
    }
    if (trace != nullptr) {
      DerivationStep step{tag, {}};
      for (const Partial& p : stack) {
        std::string s;
        render(*p.root, p.slot, s);
        step.stack.push_back(std::move(s));
      }
      trace->push_back(std::move(step));
    }
  }
  return BinaryTree(std::move(*stack.front().root));
}

}  // namespace

TagSequence encode(const BinaryTree& bt) {
  TagSequence out;
  out.reserve(sequence_length(bt.leaf_count()));
  encode_into(bt.tree(), true, out);
  return out;
}

std::optional<Violation> check_validity(const TagSequence& tags) {
  if (tags.empty()) return Violation{0, "empty tag sequence"};
  if (tags.size() % 2 == 0) {
    return Violation{tags.size() - 1, "sequence must have odd length 2n-1"};
  }
  int depth = 0;
  for (std::size_t i = 0; i < tags.size(); ++i) {
    Action a = tags[i].action;
    if (is_word_position(i) != is_shift(a)) {
      return Violation{i, is_word_position(i)
                              ? "combine action at a word position"
                              : "shift action at a fencepost position"};
    }
    switch (a) {
      case Action::kShiftLeft:
        ++depth;
        break;
      case Action::kShiftRight:
        if (depth < 1) return Violation{i, "first action must shift onto empty stack"};
        break;
      case Action::kCombineLeft:
        if (depth < 1) return Violation{i, "make-node needs a stack element"};
        break;
      case Action::kCombineRight:
        if (depth < 2) return Violation{i, "R needs at least two stack elements"};
        --depth;
        break;
    }
  }
  if (depth != 1) {
    return Violation{tags.size() - 1, "stack must hold exactly one element at the end, has " +
                                          std::to_string(depth)};
  }
  return std::nullopt;
}

std::vector<int> depth_profile(const TagSequence& tags) {
  if (auto v = check_validity(tags)) throw ValidityError(v->position, v->reason);
  std::vector<int> out;
  out.reserve(tags.size());
  int depth = 0;
  for (const TetraTag& t : tags) {
    if (t.action == Action::kShiftLeft) ++depth;
    if (t.action == Action::kCombineRight) --depth;
    out.push_back(depth);
  }
  return out;
}

int max_depth(const TagSequence& tags) {
  std::vector<int> profile = depth_profile(tags);
  return *std::max_element(profile.begin(), profile.end());
}

BinaryTree decode(const TagSequence& tags, const Sentence& sentence) {
  return run(tags, sentence, nullptr);
}

BinaryTree decode_traced(const TagSequence& tags, const Sentence& sentence,
                         std::vector<DerivationStep>& trace) {
  trace.clear();
  return run(tags, sentence, &trace);
}

}  // namespace tetratag
