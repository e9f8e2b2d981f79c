#include "doctest.h"
#include "support/trees.hpp"
#include "tetratag/codec.hpp"
#include "tetratag/error.hpp"
#include "tetratag/metrics.hpp"
#include "tetratag/pipeline.hpp"
#include "tetratag/scores_io.hpp"

using namespace tetratag;
using namespace tetratag::testing;

namespace {

std::vector<Tree> sample_corpus() { return read_trees(read_file(TETRATAG_SAMPLE_TREEBANK)); }

}  // namespace

TEST_CASE("brackets: conventions") {
  Tree t = read_tree("(S (NP-SBJ (DT a) (NN b)) (VP (VB c) (NP (-NONE- *T*))))");
  std::vector<Bracket> b = brackets(strip_annotations(t));
  // S, NP, VP; the trace and its now-empty NP are gone, preterminals never count.
  std::vector<Bracket> want = {{"NP", 0, 2}, {"S", 0, 3}, {"VP", 2, 3}};
  CHECK(b == want);

  EvalOptions no_root;
  no_root.count_root = false;
  CHECK(brackets(read_tree("(S (NP (DT a) (NN b)) (VB c))"), no_root) ==
        std::vector<Bracket>{{"NP", 0, 2}});

  // Collapsed chains count once per original node.
  Tree collapsed = from_binary(to_binary(read_tree("(S (VP (VB Go)))")));
  CHECK(brackets(collapsed).size() == 2);
  CHECK(brackets(to_binary(read_tree("(S (VP (VB Go)))")).tree()).size() == 2);
}

TEST_CASE("bracket f1: worked numbers") {
  std::vector<Tree> gold = {read_tree("(S (NP (DT a) (NN b)) (VP (VB c)))")};
  std::vector<Tree> pred = {read_tree("(S (NP (DT a) (NN b)) (VB c))")};
  F1Report r = bracket_f1(gold, pred);
  CHECK(r.matched == 2);
  CHECK(r.gold_brackets == 3);
  CHECK(r.pred_brackets == 2);
  CHECK(r.precision == doctest::Approx(100.0));
  CHECK(r.recall == doctest::Approx(200.0 / 3.0));
  CHECK(r.f1 == doctest::Approx(80.0));

  F1Report swapped = bracket_f1(pred, gold);
  CHECK(swapped.precision == doctest::Approx(r.recall));
  CHECK(swapped.recall == doctest::Approx(r.precision));
}

TEST_CASE("bracket f1: identity and degenerate inputs") {
  std::vector<Tree> corpus = sample_corpus();
  F1Report same = bracket_f1(corpus, corpus);
  CHECK(same.f1 == doctest::Approx(100.0));
  CHECK(same.excluded() == 0);

  F1Report empty = bracket_f1({}, {});
  CHECK(empty.f1 == 0.0);
  CHECK(empty.precision == 0.0);

  std::vector<Tree> short_pred = {read_tree("(S (X a) (X b))")};
  std::vector<Tree> long_gold = {read_tree("(S (X a) (X b) (X c))")};
  F1Report mismatch = bracket_f1(long_gold, short_pred);
  CHECK(mismatch.excluded() == 1);
  REQUIRE(mismatch.sentences[0].error.has_value());
  CHECK(mismatch.sentences[0].error->find("leaf count") != std::string::npos);
  CHECK(mismatch.gold_brackets == 0);

  CHECK_THROWS_AS(bracket_f1(corpus, {}), Error);

  // Duplicate brackets are matched as a multiset.
  std::vector<Tree> g = {read_tree("(S (S (X a) (X b)))")};
  std::vector<Tree> p = {read_tree("(S (X a) (X b))")};
  F1Report multi = bracket_f1(g, p);
  CHECK(multi.matched == 1);
  CHECK(multi.gold_brackets == 2);
}

TEST_CASE("bracket f1: function tags") {
  std::vector<Tree> gold = {read_tree("(S (NP-SBJ (X a)) (VP (X b)))")};
  std::vector<Tree> pred = {read_tree("(S (NP (X a)) (VP (X b)))")};
  CHECK(bracket_f1(gold, pred).f1 == doctest::Approx(100.0));
  EvalOptions keep;
  keep.strip_function_tags = false;
  CHECK(bracket_f1(gold, pred, keep).matched == 2);
}

TEST_CASE("tag accuracy") {
  std::vector<TagSequence> gold = {parse_tags("l L/S l R l R r L r")};
  std::vector<TagSequence> pred = {parse_tags("l L l R l R r L l")};
  TagAccuracy acc = tag_accuracy(gold, pred);
  CHECK(acc.positions == 9);
  CHECK(acc.structural == doctest::Approx(8.0 / 9.0));
  CHECK(acc.labeled == doctest::Approx(7.0 / 9.0));
  CHECK(tag_accuracy(gold, gold).labeled == 1.0);
  CHECK_THROWS_AS(tag_accuracy(gold, {parse_tags("l")}), Error);
}

TEST_CASE("coverage on the sample corpus") {
  std::vector<Tree> corpus = sample_corpus();
  std::vector<int> caps = {1, 2, 3, 4, 5, 6, 8, 12};
  CoverageReport report = coverage_analysis(corpus, caps);
  CHECK(report.trees == corpus.size());
  CHECK(report.max_observed_depth >= 1);
  CHECK(report.max_observed_depth < 12);

  std::size_t histogram_total = 0;
  for (const auto& [depth, count] : report.depth_histogram) histogram_total += count;
  CHECK(histogram_total == corpus.size());

  REQUIRE(report.points.size() == caps.size());
  for (std::size_t i = 1; i < report.points.size(); ++i) {
    CHECK(report.points[i].representable_fraction >= report.points[i - 1].representable_fraction);
    CHECK(report.points[i].f1_under_cap >= report.points[i - 1].f1_under_cap);
  }
  for (const CapPoint& p : report.points) {
    CHECK(p.no_path == 0);
    if (p.cap >= report.max_observed_depth) {
      CHECK(p.representable_fraction == 1.0);
      CHECK(p.f1_under_cap == doctest::Approx(100.0));
    }
  }
}

TEST_CASE("coverage: a tight cap loses right-branching trees") {
  std::vector<Tree> corpus;
  for (std::size_t n = 3; n <= 12; ++n) corpus.push_back(from_binary(BinaryTree(right_branching(n))));
  CoverageReport report = coverage_analysis(corpus, {1, 2});
  CHECK(report.max_observed_depth == 2);
  CHECK(report.points[0].representable_fraction == 0.0);
  CHECK(report.points[0].f1_under_cap < 100.0);
  CHECK(report.points[1].representable_fraction == 1.0);
  CHECK(report.points[1].f1_under_cap == doctest::Approx(100.0));
}

TEST_CASE("decoding under a sufficient cap reproduces every sample tree") {
  for (const Tree& raw : sample_corpus()) {
    Tree t = strip_annotations(raw);
    TagSequence gold = tree_to_tags(t);
    auto vocab = std::make_shared<const TagVocabulary>(TagVocabulary::induce({gold}));
    DecodeResult r = dp_decode(one_hot_scores(gold, vocab), {max_depth(gold), TieBreak::kPreferShallow});
    CHECK(tags_to_tree(r.tags, leaves(t)) == t);
  }
}
