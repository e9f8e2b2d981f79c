#include "tetratag/metrics.hpp"

#include <algorithm>
#include <memory>

#include "tetratag/error.hpp"
#include "tetratag/pipeline.hpp"
#include "tetratag/scores_io.hpp"

namespace tetratag {

namespace {

// Returns the end offset of `t` given its start.
std::size_t collect(const Tree& t, std::size_t start, bool is_root, const EvalOptions& options,
                    std::vector<Bracket>& out) {
  if (t.is_leaf()) {
    for (std::string& part : CollapsedLabel::parse(t.chain).parts) {
      out.push_back({std::move(part), start, start + 1});
    }
    return start + 1;
  }
  std::size_t end = start;
  for (const Tree& c : t.children) end = collect(c, end, false, options, out);
  CollapsedLabel label = CollapsedLabel::parse(t.label);
  for (std::size_t i = 0; i < label.parts.size(); ++i) {
    if (is_root && i == 0 && !options.count_root) continue;
    out.push_back({std::move(label.parts[i]), start, end});
  }
  return end;
}

std::size_t multiset_overlap(const std::vector<Bracket>& a, const std::vector<Bracket>& b) {
  std::size_t matched = 0;
  auto i = a.begin();
  auto j = b.begin();
  while (i != a.end() && j != b.end()) {
    if (*i < *j) {
      ++i;
    } else if (*j < *i) {
      ++j;
    } else {
      ++matched;
      ++i;
      ++j;
    }
  }
  return matched;
}

Tree preprocess(const Tree& t, const EvalOptions& options) {
  if (!options.strip_function_tags && !options.drop_traces) return t;
  return strip_annotations(t, {options.strip_function_tags, options.drop_traces});
}

double percent(std::size_t num, std::size_t den) {
  return den == 0 ? 0.0 : 100.0 * static_cast<double>(num) / static_cast<double>(den);
}

void finish(F1Report& r) {
  r.precision = percent(r.matched, r.pred_brackets);
  r.recall = percent(r.matched, r.gold_brackets);
  r.f1 = r.precision + r.recall == 0.0
             ? 0.0
             : 2.0 * r.precision * r.recall / (r.precision + r.recall);
}

}  // namespace

std::vector<Bracket> brackets(const Tree& t, const EvalOptions& options) {
  std::vector<Bracket> out;
  collect(t, 0, true, options, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t F1Report::excluded() const {
  return static_cast<std::size_t>(std::count_if(
      sentences.begin(), sentences.end(), [](const SentenceScore& s) { return s.error.has_value(); }));
}

F1Report bracket_f1(const std::vector<Tree>& gold, const std::vector<Tree>& pred,
                    const EvalOptions& options) {
  if (gold.size() != pred.size()) {
    throw Error("gold has " + std::to_string(gold.size()) + " trees but prediction has " +
                std::to_string(pred.size()));
  }
  F1Report report;
  report.sentences.reserve(gold.size());
  for (std::size_t i = 0; i < gold.size(); ++i) {
    SentenceScore s;
    s.index = i;
    try {
      Tree g = preprocess(gold[i], options);
      Tree p = preprocess(pred[i], options);
      std::size_t gn = leaf_count(g);
      std::size_t pn = leaf_count(p);
      if (gn != pn) {
        s.error = "leaf count mismatch: gold " + std::to_string(gn) + ", predicted " +
                  std::to_string(pn);
      } else {
        std::vector<Bracket> gb = brackets(g, options);
        std::vector<Bracket> pb = brackets(p, options);
        s.gold_brackets = gb.size();
        s.pred_brackets = pb.size();
        s.matched = multiset_overlap(gb, pb);
      }
    } catch (const EmptyTreeError& e) {
      s.error = e.what();
    }
    if (!s.error) {
      report.matched += s.matched;
      report.gold_brackets += s.gold_brackets;
      report.pred_brackets += s.pred_brackets;
    }
    report.sentences.push_back(std::move(s));
  }
  finish(report);
  return report;
}

TagAccuracy tag_accuracy(const std::vector<TagSequence>& gold,
                         const std::vector<TagSequence>& pred) {
  if (gold.size() != pred.size()) {
    throw Error("gold has " + std::to_string(gold.size()) + " sequences but prediction has " +
                std::to_string(pred.size()));
  }
  std::size_t structural = 0;
  std::size_t labeled = 0;
  std::size_t total = 0;
  for (std::size_t i = 0; i < gold.size(); ++i) {
    if (gold[i].size() != pred[i].size()) {
      throw Error("sentence " + std::to_string(i) + ": gold has " +
                  std::to_string(gold[i].size()) + " tags, prediction has " +
                  std::to_string(pred[i].size()));
    }
    for (std::size_t j = 0; j < gold[i].size(); ++j) {
      if (gold[i][j].action == pred[i][j].action) {
        ++structural;
        if (gold[i][j].label == pred[i][j].label) ++labeled;
      }
    }
    total += gold[i].size();
  }
  TagAccuracy acc;
  acc.positions = total;
  if (total > 0) {
    acc.structural = static_cast<double>(structural) / static_cast<double>(total);
    acc.labeled = static_cast<double>(labeled) / static_cast<double>(total);
  }
  return acc;
}

CoverageReport coverage_analysis(const std::vector<Tree>& corpus, const std::vector<int>& caps,
                                 const EvalOptions& options) {
  CoverageReport report;
  report.trees = corpus.size();

  std::vector<Tree> gold;
  std::vector<TagSequence> sequences;
  gold.reserve(corpus.size());
  sequences.reserve(corpus.size());
  for (const Tree& t : corpus) {
    gold.push_back(preprocess(t, options));
    sequences.push_back(tree_to_tags(gold.back()));
    int depth = max_depth(sequences.back());
    report.tree_depths.push_back(depth);
    ++report.depth_histogram[depth];
    report.max_observed_depth = std::max(report.max_observed_depth, depth);
  }

  auto vocab = std::make_shared<const TagVocabulary>(TagVocabulary::induce(sequences));
  std::vector<ScoreMatrix> scores;
  scores.reserve(sequences.size());
  for (const TagSequence& s : sequences) scores.push_back(one_hot_scores(s, vocab));

  std::vector<std::vector<Bracket>> gold_brackets;
  gold_brackets.reserve(gold.size());
  for (const Tree& g : gold) gold_brackets.push_back(brackets(g, options));

  for (int cap : caps) {
    CapPoint point;
    point.cap = cap;
    std::size_t fits = 0;
    F1Report agg;
    DecoderConfig config;
    config.max_depth = cap;
    for (std::size_t i = 0; i < gold.size(); ++i) {
      if (report.tree_depths[i] <= cap) ++fits;
      agg.gold_brackets += gold_brackets[i].size();
      try {
        DecodeResult decoded = dp_decode(scores[i], config);
        Tree pred = tags_to_tree(decoded.tags, leaves(gold[i]));
        std::vector<Bracket> pb = brackets(pred, options);
        agg.pred_brackets += pb.size();
        agg.matched += multiset_overlap(gold_brackets[i], pb);
      } catch (const NoPathError&) {
        ++point.no_path;
      }
    }
    finish(agg);
    point.representable_fraction =
        gold.empty() ? 1.0 : static_cast<double>(fits) / static_cast<double>(gold.size());
    point.f1_under_cap = agg.f1;
    report.points.push_back(point);
  }
  return report;
}

}  // namespace tetratag
