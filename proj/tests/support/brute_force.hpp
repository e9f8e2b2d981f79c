// Exhaustive reference decoder for tests. Shares nothing with the library
// decoders beyond the score matrix accessors.
#pragma once

#include <cstddef>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "tetratag/decoder.hpp"
#include "tetratag/tags.hpp"

namespace tetratag::testing {

struct BruteForceResult {
  bool found = false;
  TagSequence tags;
  double score = 0.0;
};

class BruteForce {
 public:
  BruteForce(const ScoreMatrix& scores, int max_depth, bool prefer_shallow)
      : scores_(scores), max_depth_(max_depth), prefer_shallow_(prefer_shallow) {
    const TagVocabulary& v = scores.vocabulary();
    for (std::size_t row = 0; row < scores.rows(); ++row) {
      // For each of the row's two legal actions, the best label column.
      std::vector<std::optional<std::size_t>> pick(4);
      for (std::size_t c = 0; c < v.size(); ++c) {
        auto a = static_cast<std::size_t>(v[c].action);
        bool legal = row % 2 == 0 ? a <= 1 : a >= 2;
        if (!legal) continue;
        auto& p = pick[a];
        if (!p || scores.at(row, c) > scores.at(row, *p) ||
            (scores.at(row, c) == scores.at(row, *p) && v[c].label < v[*p].label)) {
          p = c;
        }
      }
      best_col_.push_back(pick);
    }
    current_.resize(scores.rows());
  }

  BruteForceResult run() {
    walk(0, 0, 0.0);
    return result_;
  }

 private:
  void walk(std::size_t i, int depth, double score) {
    if (i == scores_.rows()) {
      if (depth == 1) offer(score);
      return;
    }
    const std::size_t base = i % 2 == 0 ? 0 : 2;
    for (std::size_t a = base; a < base + 2; ++a) {
      const auto& col = best_col_[i][a];
      if (!col) continue;
      int next = depth;
      if (a == 0) next = depth + 1;                // l
      if ((a == 1 || a == 2) && depth == 0) continue;  // r, L
      if (a == 3) {                                 // R
        if (depth < 2) continue;
        next = depth - 1;
      }
      if (next > max_depth_) continue;
      current_[i] = scores_.vocabulary()[*col];
      walk(i + 1, next, score + scores_.at(i, *col));
    }
  }

  // Equal scores: compare actions at the last position where they differ.
  bool beats(const TagSequence& a) const {
    for (std::size_t i = a.size(); i-- > 0;) {
      if (a[i].action == result_.tags[i].action) continue;
      bool a_first = a[i].action == Action::kShiftLeft || a[i].action == Action::kCombineLeft;
      return prefer_shallow_ ? a_first : !a_first;
    }
    return false;
  }

  void offer(double score) {
    if (!result_.found || score > result_.score || (score == result_.score && beats(current_))) {
      result_.found = true;
      result_.score = score;
      result_.tags = current_;
    }
  }

  const ScoreMatrix& scores_;
  int max_depth_;
  bool prefer_shallow_;
  std::vector<std::vector<std::optional<std::size_t>>> best_col_;
  TagSequence current_;
  BruteForceResult result_;
};

inline BruteForceResult brute_force_decode(const ScoreMatrix& scores, int max_depth,
                                           bool prefer_shallow = true) {
  return BruteForce(scores, max_depth, prefer_shallow).run();
}

// Vocabulary of the four bare tags plus a couple of labeled variants.
inline std::shared_ptr<const TagVocabulary> small_vocabulary() {
  return std::make_shared<const TagVocabulary>(
      std::vector<TetraTag>{{Action::kShiftLeft, ""},
                            {Action::kShiftLeft, "NP"},
                            {Action::kShiftRight, ""},
                            {Action::kCombineLeft, ""},
                            {Action::kCombineLeft, "S"},
                            {Action::kCombineLeft, "VP"},
                            {Action::kCombineRight, ""},
                            {Action::kCombineRight, "NP"}});
}

// Uniform real scores, or small integers when `integral` (to force ties).
inline ScoreMatrix random_scores(std::mt19937_64& rng, std::shared_ptr<const TagVocabulary> vocab,
                                 std::size_t n, bool integral) {
  std::vector<double> grid(sequence_length(n) * vocab->size());
  std::uniform_real_distribution<double> real(-5.0, 5.0);
  std::uniform_int_distribution<int> small(-2, 1);
  for (double& g : grid) g = integral ? small(rng) : real(rng);
  return ScoreMatrix(std::move(vocab), n, std::move(grid), "r");
}

}  // namespace tetratag::testing
