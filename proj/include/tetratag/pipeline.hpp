#pragma once

#include <string_view>

#include "tetratag/codec.hpp"
#include "tetratag/tags.hpp"
#include "tetratag/transform.hpp"
#include "tetratag/tree.hpp"

namespace tetratag {

// collapse -> binarize -> encode.
inline TagSequence tree_to_tags(const Tree& t) { return encode(to_binary(t)); }

// decode -> unbinarize -> expand.
inline Tree tags_to_tree(const TagSequence& tags, const Sentence& sentence,
                         std::string_view fallback_root = kDefaultFallbackRoot) {
  return from_binary(decode(tags, sentence), fallback_root);
}

}  // namespace tetratag
