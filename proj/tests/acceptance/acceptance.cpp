// Acceptance checks: one PASS/FAIL line per criterion, exit status 1 if any
// fails. Runs without doctest so the output stays one line per check.
#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <numeric>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "support/brute_force.hpp"
#include "support/trees.hpp"
#include "tetratag/codec.hpp"
#include "tetratag/decoder.hpp"
#include "tetratag/error.hpp"
#include "tetratag/metrics.hpp"
#include "tetratag/pipeline.hpp"
#include "tetratag/scores_io.hpp"

using namespace tetratag;
using namespace tetratag::testing;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

int failures = 0;

void report(const char* name, const std::function<Outcome()>& check) {
  Outcome o;
  auto start = Clock::now();
  try {
    o = check();
  } catch (const std::exception& e) {
    o.fail(std::string("exception: ") + e.what());
  }
  double secs = seconds_since(start);
  if (!o.pass) ++failures;
  std::printf("%s  %-22s %7.2fs  %s\n", o.pass ? "PASS" : "FAIL", name, secs, o.detail.c_str());
  std::fflush(stdout);
}

std::vector<Tree> sample_corpus() { return read_trees(read_file(TETRATAG_SAMPLE_TREEBANK)); }

std::size_t catalan(std::size_t k) {
  std::size_t c = 1;
  for (std::size_t i = 0; i < k; ++i) c = c * 2 * (2 * i + 1) / (i + 2);
  return c;
}

Outcome round_trip() {
  Outcome o;
  auto start = Clock::now();
  std::vector<Tree> corpus = sample_corpus();
  const std::size_t from_sample = corpus.size();
  RandomTreeGenerator gen(20240601);
  std::mt19937_64 sizes(7);
  std::uniform_int_distribution<std::size_t> length(1, 40);
  for (int i = 0; i < 10000; ++i) corpus.push_back(gen.generate(length(sizes)));

  std::vector<TagSequence> gold;
  gold.reserve(corpus.size());
  for (const Tree& t : corpus) gold.push_back(tree_to_tags(t));
  auto vocab = std::make_shared<const TagVocabulary>(TagVocabulary::induce(gold));

  std::vector<Tree> predicted;
  predicted.reserve(corpus.size());
  std::size_t mismatches = 0;
  for (std::size_t i = 0; i < corpus.size(); ++i) {
    // Depth never exceeds the word count, and n <= 40 here.
    DecodeResult r = dp_decode(one_hot_scores(gold[i], vocab), {40, TieBreak::kPreferShallow});
    predicted.push_back(tags_to_tree(r.tags, leaves(corpus[i])));
    if (!(predicted.back() == corpus[i])) {
      if (mismatches++ == 0) o.fail("tree " + std::to_string(i) + " differs: " + write_tree(corpus[i]));
    }
  }
  F1Report f1 = bracket_f1(corpus, predicted, {false, false, true});
  double secs = seconds_since(start);
  if (f1.f1 != 100.0) o.fail("F1 " + std::to_string(f1.f1));
  if (f1.excluded() != 0) o.fail(std::to_string(f1.excluded()) + " sentences excluded");
  if (secs >= 10.0) o.fail("took " + std::to_string(secs) + "s (limit 10s)");
  if (o.pass) {
    o.detail = std::to_string(from_sample) + " sample + 10000 random trees identical, F1 " +
               std::to_string(f1.f1).substr(0, 5);
  }
  return o;
}

Outcome dp_optimality() {
  Outcome o;
  auto start = Clock::now();
  auto vocab = small_vocabulary();
  std::mt19937_64 rng(424242);
  std::uniform_real_distribution<double> uniform(-1.0, 1.0);
  std::size_t matrices = 0;
  for (std::size_t n = 2; n <= 10; ++n) {
    for (int trial = 0; trial < 1000; ++trial) {
      std::vector<double> grid(sequence_length(n) * vocab->size());
      for (double& g : grid) g = uniform(rng);
      ScoreMatrix m(vocab, n, std::move(grid), std::to_string(n) + "/" + std::to_string(trial));
      DecoderConfig config{8, TieBreak::kPreferShallow};
      DecodeResult dp = dp_decode(m, config);
      OracleResult oracle = oracle_decode(m, config);
      BruteForceResult reference = brute_force_decode(m, config.max_depth);
      ++matrices;
      if (dp.score != oracle.best.score || dp.score != reference.score) {
        o.fail("matrix " + m.id() + ": dp " + std::to_string(dp.score) + ", oracle " +
               std::to_string(oracle.best.score) + ", exhaustive " + std::to_string(reference.score));
      }
    }
  }
  double secs = seconds_since(start);
  if (secs >= 60.0) o.fail("took " + std::to_string(secs) + "s (limit 60s)");
  if (o.pass) o.detail = std::to_string(matrices) + " matrices, n = 2..10, scores equal exactly";
  return o;
}

Outcome bijection_counting() {
  Outcome o;
  auto start = Clock::now();
  std::ostringstream counts;
  for (std::size_t n = 1; n <= 8; ++n) {
    std::size_t valid = 0;
    for (const TagSequence& s : all_structural_sequences(n)) {
      if (check_validity(s)) continue;
      ++valid;
      // Every valid sequence names a distinct tree that encodes back to it.
      if (encode(decode(s, sentence_of(n))) != s) o.fail("sequence does not round trip at n=" + std::to_string(n));
    }
    counts << (n > 1 ? " " : "") << valid;
    if (valid != catalan(n - 1)) {
      o.fail("n=" + std::to_string(n) + ": " + std::to_string(valid) + " valid, Catalan " +
             std::to_string(catalan(n - 1)));
    }
    if (all_binary_trees(0, n, "").size() != valid) o.fail("tree count differs at n=" + std::to_string(n));
  }
  double secs = seconds_since(start);
  if (secs >= 5.0) o.fail("took " + std::to_string(secs) + "s (limit 5s)");
  if (o.pass) o.detail = "valid sequences for n=1..8: " + counts.str();
  return o;
}

Outcome worked_example() {
  Outcome o;
  // ((A (B (C D))) E)
  BinaryTree bt(node("", {node("", {leaf("A"), node("", {leaf("B"), node("", {leaf("C"), leaf("D")})})}),
                          leaf("E")}));
  TagSequence tags = encode(bt);
  if (format_tags(tags) != "l L l R l R r L r") o.fail("encoded as " + format_tags(tags));
  std::vector<int> want_depths = {1, 1, 2, 1, 2, 1, 1, 1, 1};
  if (depth_profile(tags) != want_depths) o.fail("depth profile differs");

  std::vector<DerivationStep> trace;
  BinaryTree back = decode_traced(tags, sentence_of(5), trace);
  std::vector<std::vector<std::string>> stacks = {
      {"A"},
      {"(A <>)"},
      {"(A <>)", "B"},
      {"(A (B <>))"},
      {"(A (B <>))", "C"},
      {"(A (B (C <>)))"},
      {"(A (B (C D)))"},
      {"((A (B (C D))) <>)"},
      {"((A (B (C D))) E)"}};
  if (trace.size() != 9) {
    o.fail("derivation has " + std::to_string(trace.size()) + " steps");
  } else {
    for (std::size_t i = 0; i < 9; ++i) {
      if (trace[i].stack != stacks[i]) o.fail("step " + std::to_string(i + 1) + " stack differs");
      if (static_cast<int>(trace[i].stack.size()) != want_depths[i]) {
        o.fail("step " + std::to_string(i + 1) + " depth differs");
      }
    }
  }
  if (!(back == bt)) o.fail("decoded tree differs");
  if (o.pass) o.detail = "l L l R l R r L r; 9 steps, depths 1 1 2 1 2 1 1 1 1";
  return o;
}

Outcome depth_properties() {
  Outcome o;
  std::vector<std::size_t> bad_right;
  for (std::size_t n = 2; n <= 200; ++n) {
    int left = max_depth(encode(BinaryTree(left_branching(n))));
    int right = max_depth(encode(BinaryTree(right_branching(n))));
    if (left != 1) o.fail("left-branching n=" + std::to_string(n) + " has depth " + std::to_string(left));
    if (right != 2) bad_right.push_back(n);
  }
  if (!bad_right.empty()) {
    std::string ns;
    for (std::size_t n : bad_right) ns += (ns.empty() ? "" : ",") + std::to_string(n);
    o.fail("right-branching max depth is not 2 for n=" + ns +
           " (with two words the right-branching tree is (A B), tags l L r, depth 1; n=3..200 give 2)");
  }

  std::vector<Tree> corpus = sample_corpus();
  std::vector<int> caps = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  CoverageReport cov = coverage_analysis(corpus, caps);
  for (std::size_t i = 1; i < cov.points.size(); ++i) {
    if (cov.points[i].representable_fraction < cov.points[i - 1].representable_fraction ||
        cov.points[i].f1_under_cap < cov.points[i - 1].f1_under_cap) {
      o.fail("coverage curve decreases at cap " + std::to_string(cov.points[i].cap));
    }
  }
  for (const CapPoint& p : cov.points) {
    if (p.cap >= cov.max_observed_depth && (p.f1_under_cap != 100.0 || p.representable_fraction != 1.0)) {
      o.fail("cap " + std::to_string(p.cap) + " gives F1 " + std::to_string(p.f1_under_cap));
    }
  }
  if (o.pass) o.detail = "left 1, right 2 for n=2..200; coverage monotone, F1 100 from cap " +
                         std::to_string(cov.max_observed_depth);
  return o;
}

Outcome linearity() {
  Outcome o;
  std::mt19937_64 rng(99);
  const std::vector<std::size_t> sizes = {10, 100, 1000, 10000};
  std::vector<std::string> labels = {"", "NP", "VP", "S", "PP"};
  DecoderConfig config{8, TieBreak::kPreferShallow};
  std::vector<double> per_sentence;
  for (std::size_t n : sizes) {
    const std::size_t batch = std::max<std::size_t>(1, 20000 / n);
    std::vector<TagSequence> gold;
    for (std::size_t i = 0; i < batch; ++i) {
      BinaryTree bt(random_binary_tree(rng, n, labels));
      gold.push_back(encode(bt));
    }
    auto vocab = std::make_shared<const TagVocabulary>(TagVocabulary::induce(gold));
    std::vector<ScoreMatrix> scores = synth_scores(gold, vocab, {1.0, n, 4.0});
    // Median of five timed passes over the batch; only decoding is timed.
    std::vector<double> runs;
    double sink = 0.0;
    for (int rep = 0; rep < 5; ++rep) {
      auto start = Clock::now();
      for (const ScoreMatrix& m : scores) sink += dp_decode(m, config).score;
      runs.push_back(seconds_since(start) / static_cast<double>(scores.size()));
    }
    volatile double keep = sink;
    (void)keep;
    std::sort(runs.begin(), runs.end());
    per_sentence.push_back(runs[2]);
  }
  double mx = 0, my = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    mx += static_cast<double>(sizes[i]);
    my += per_sentence[i];
  }
  mx /= static_cast<double>(sizes.size());
  my /= static_cast<double>(sizes.size());
  double sxx = 0, sxy = 0, syy = 0;
  for (std::size_t i = 0; i < sizes.size(); ++i) {
    double dx = static_cast<double>(sizes[i]) - mx;
    double dy = per_sentence[i] - my;
    sxx += dx * dx;
    sxy += dx * dy;
    syy += dy * dy;
  }
  double r2 = (sxy * sxy) / (sxx * syy);
  char buf[160];
  std::snprintf(buf, sizeof buf, "R^2 %.5f; sents/s at n=10,100,1000,10000: %.0f %.0f %.0f %.1f", r2,
                1 / per_sentence[0], 1 / per_sentence[1], 1 / per_sentence[2], 1 / per_sentence[3]);
  o.detail = buf;
  if (r2 < 0.99) o.fail(buf);
  return o;
}

Outcome stack_depth_claim() {
  Outcome o;
  std::vector<Tree> corpus = sample_corpus();
  CoverageReport cov = coverage_analysis(corpus, {8});
  std::string histogram;
  for (const auto& [d, count] : cov.depth_histogram) {
    histogram += (histogram.empty() ? "" : " ") + std::to_string(d) + ":" + std::to_string(count);
  }
  if (cov.trees != corpus.size() || cov.max_observed_depth < 1 ||
      cov.max_observed_depth > static_cast<int>(sequence_length(40))) {
    o.fail("max depth not computed");
  }
  o.detail = "sample max depth " + std::to_string(cov.max_observed_depth) + " over " +
             std::to_string(cov.trees) + " trees; histogram " + histogram;
  return o;
}

}  // namespace

int main() {
  report("round-trip-identity", round_trip);
  report("dp-optimality", dp_optimality);
  report("bijection-counting", bijection_counting);
  report("worked-derivation", worked_example);
  report("depth-properties", depth_properties);
  report("linearity", linearity);
  report("stack-depth-report", stack_depth_claim);
  std::printf("%d failed\n", failures);
  return failures == 0 ? 0 : 1;
}
