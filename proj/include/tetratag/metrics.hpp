#pragma once

#include <cstddef>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

#include "tetratag/decoder.hpp"
#include "tetratag/tags.hpp"
#include "tetratag/tree.hpp"

namespace tetratag {

// Which evalb conventions to apply. Preterminal brackets are never counted.
struct EvalOptions {
  bool strip_function_tags = true;
  bool drop_traces = true;
  bool count_root = true;
};

struct Bracket {
  std::string label;
  std::size_t start = 0;
  std::size_t end = 0;

  friend auto operator<=>(const Bracket&, const Bracket&) = default;
};

// Multiset of labeled internal-node spans, sorted. Each node of a unary chain
// contributes its own bracket.
std::vector<Bracket> brackets(const Tree& t, const EvalOptions& options = {});

struct SentenceScore {
  std::size_t index = 0;
  std::size_t gold_brackets = 0;
  std::size_t pred_brackets = 0;
  std::size_t matched = 0;
  std::optional<std::string> error;  // set when the pair was excluded
};

struct F1Report {
  double precision = 0.0;  // percent
  double recall = 0.0;
  double f1 = 0.0;
  std::size_t matched = 0;
  std::size_t gold_brackets = 0;
  std::size_t pred_brackets = 0;
  std::vector<SentenceScore> sentences;

  std::size_t excluded() const;
};

// Labeled bracket precision, recall and F1 in percent. Zero denominators give
// zero. Pairs whose leaf counts differ are excluded and reported. Throws Error
// when the lists differ in length.
F1Report bracket_f1(const std::vector<Tree>& gold, const std::vector<Tree>& pred,
                    const EvalOptions& options = {});

struct TagAccuracy {
  double structural = 0.0;
  double labeled = 0.0;
  std::size_t positions = 0;
};

// Per-position exact-match rates. Throws Error naming the first sentence whose
// lengths differ.
TagAccuracy tag_accuracy(const std::vector<TagSequence>& gold,
                         const std::vector<TagSequence>& pred);

struct CapPoint {
  int cap = 0;
  double representable_fraction = 0.0;
  double f1_under_cap = 0.0;
  std::size_t no_path = 0;  // sentences the cap could not decode at all
};

struct CoverageReport {
  std::size_t trees = 0;
  int max_observed_depth = 0;
  std::map<int, std::size_t> depth_histogram;  // max gold depth -> tree count
  std::vector<CapPoint> points;
  // Per tree maximum stack depth of its gold derivation.
  std::vector<int> tree_depths;
};

// For each cap, the share of trees whose gold derivation fits, and the F1 of
// decoding one-hot gold scores under that cap. Trees are preprocessed with
// `options` before being transformed.
CoverageReport coverage_analysis(const std::vector<Tree>& corpus, const std::vector<int>& caps,
                                 const EvalOptions& options = {});

}  // namespace tetratag
