// tetratag: encode treebanks as tetra-tags, decode score files back to trees,
// evaluate, and measure.
#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <map>
#include <memory>
#include <optional>
#include <random>
#include <sstream>
#include <string>
#include <thread>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "tetratag/codec.hpp"
#include "tetratag/decoder.hpp"
#include "tetratag/error.hpp"
#include "tetratag/metrics.hpp"
#include "tetratag/pipeline.hpp"
#include "tetratag/scores_io.hpp"
#include "tetratag/tags.hpp"
#include "tetratag/transform.hpp"
#include "tetratag/tree.hpp"

using namespace tetratag;
using nlohmann::json;

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 1;
constexpr int kExitData = 2;

// Raised for bad input data; carries an already formatted message.
struct DataError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

// Writes to a file, or to stdout when the path is empty or "-".
class Output {
 public:
  explicit Output(const std::string& path) {
    if (!path.empty() && path != "-") {
      file_ = std::make_unique<std::ofstream>(path, std::ios::binary);
      if (!*file_) throw DataError("cannot write '" + path + "'");
    }
  }
  std::ostream& stream() { return file_ ? *file_ : std::cout; }

 private:
  std::unique_ptr<std::ofstream> file_;
};

std::string slurp(const std::string& path) {
  if (path == "-") {
    std::ostringstream ss;
    ss << std::cin.rdbuf();
    return ss.str();
  }
  try {
    return read_file(path);
  } catch (const Error& e) {
    throw DataError(e.what());
  }
}

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  return lines;
}

std::vector<LocatedTree> load_trees(const std::string& path) {
  try {
    return read_trees_located(slurp(path));
  } catch (const Error& e) {
    throw DataError(path + ": " + e.what());
  }
}

std::vector<Tree> load_plain_trees(const std::string& path) {
  std::vector<Tree> out;
  for (LocatedTree& t : load_trees(path)) out.push_back(std::move(t.tree));
  return out;
}

// ---------------------------------------------------------------- encode

struct EncodeArgs {
  std::string trees;
  std::string tags_out = "-";
  std::string vocab_out;
  std::string sentences_out;
  bool strip_function_tags = false;
  bool drop_traces = false;
};

int run_encode(const EncodeArgs& a) {
  std::vector<LocatedTree> trees = load_trees(a.trees);
  std::vector<TagSequence> sequences;
  std::vector<Sentence> sentences;
  StripOptions strip{a.strip_function_tags, a.drop_traces};
  for (std::size_t i = 0; i < trees.size(); ++i) {
    try {
      Tree t = strip.strip_function_tags || strip.drop_trace_subtrees
                   ? strip_annotations(trees[i].tree, strip)
                   : trees[i].tree;
      sequences.push_back(tree_to_tags(t));
      sentences.push_back(leaves(t));
    } catch (const Error& e) {
      throw DataError(a.trees + ":" + std::to_string(trees[i].line) + ": tree " +
                      std::to_string(i + 1) + ": " + e.what());
    }
  }

  Output tags(a.tags_out);
  for (const TagSequence& s : sequences) tags.stream() << format_tags(s) << '\n';
  if (!a.vocab_out.empty()) {
    Output vocab(a.vocab_out);
    vocab.stream() << write_vocabulary(TagVocabulary::induce(sequences));
  }
  if (!a.sentences_out.empty()) {
    Output sents(a.sentences_out);
    for (const Sentence& s : sentences) sents.stream() << write_sentence(s) << '\n';
  }

  std::map<int, std::size_t> depths;
  std::size_t words = 0;
  std::size_t longest = 0;
  std::size_t shortest = sequences.empty() ? 0 : SIZE_MAX;
  for (std::size_t i = 0; i < sequences.size(); ++i) {
    ++depths[max_depth(sequences[i])];
    words += sentences[i].size();
    longest = std::max(longest, sentences[i].size());
    shortest = std::min(shortest, sentences[i].size());
  }
  std::cerr << "trees\t" << sequences.size() << "\n";
  std::cerr << "words\t" << words << "\n";
  if (!sequences.empty()) {
    std::cerr << "length\tmin " << shortest << "\tmean "
              << static_cast<double>(words) / static_cast<double>(sequences.size()) << "\tmax "
              << longest << "\n";
    std::cerr << "max_depth\t" << depths.rbegin()->first << "\n";
    for (const auto& [d, count] : depths) std::cerr << "depth " << d << "\t" << count << "\n";
  }
  return kExitOk;
}

// ---------------------------------------------------------------- synth

struct SynthArgs {
  std::string tags;
  std::string vocab;
  std::string out = "-";
  double sigma = 0.0;
  std::uint64_t seed = 0;
  double margin = 4.0;
  std::string format = "text";
};

int run_synth(const SynthArgs& a) {
  std::vector<TagSequence> gold;
  std::vector<std::string> lines = split_lines(slurp(a.tags));
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      gold.push_back(parse_tags(lines[i]));
      if (gold.back().empty()) throw FormatError("empty tag line");
      if (auto v = check_validity(gold.back())) {
        throw ValidityError(v->position, v->reason);
      }
    } catch (const Error& e) {
      throw DataError(a.tags + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  std::shared_ptr<const TagVocabulary> vocab;
  try {
    vocab = a.vocab.empty() ? std::make_shared<const TagVocabulary>(TagVocabulary::induce(gold))
                            : std::make_shared<const TagVocabulary>(read_vocabulary(slurp(a.vocab)));
    SynthOptions options{a.sigma, a.seed, a.margin};
    std::vector<ScoreMatrix> scores = synth_scores(gold, vocab, options);
    Output out(a.out);
    out.stream() << (a.format == "binary" ? write_scores_binary(*vocab, scores)
                                          : write_scores_text(*vocab, scores));
  } catch (const Error& e) {
    throw DataError(e.what());
  }
  return kExitOk;
}

// ---------------------------------------------------------------- decode

struct DecodeArgs {
  std::string scores;
  std::string sentences;
  std::string out = "-";
  std::string tags_out;
  int max_depth = 8;
  std::string tie_break = "shallow";
  std::string fallback_root = std::string(kDefaultFallbackRoot);
  unsigned threads = 1;
};

struct DecodedSentence {
  std::string tree;
  std::string tags;
  std::optional<std::string> error;
};

int run_decode(const DecodeArgs& a) {
  ScoreFile file;
  try {
    file = read_scores(slurp(a.scores));
  } catch (const Error& e) {
    throw DataError(a.scores + ": " + e.what());
  }
  std::vector<Sentence> sentences;
  std::vector<std::string> lines = split_lines(slurp(a.sentences));
  while (!lines.empty() && lines.back().empty()) lines.pop_back();
  for (std::size_t i = 0; i < lines.size(); ++i) {
    try {
      sentences.push_back(read_sentence(lines[i]));
    } catch (const Error& e) {
      throw DataError(a.sentences + ":" + std::to_string(i + 1) + ": " + e.what());
    }
  }
  if (sentences.size() != file.records.size()) {
    std::string where = sentences.size() < file.records.size()
                            ? "record '" + file.records[sentences.size()].id() + "' has no sentence"
                            : "sentence " + std::to_string(file.records.size() + 1) +
                                  " has no score record";
    throw DataError("score file has " + std::to_string(file.records.size()) +
                    " records but sentence file has " + std::to_string(sentences.size()) +
                    " lines: " + where);
  }
  for (std::size_t i = 0; i < sentences.size(); ++i) {
    if (sentences[i].size() != file.records[i].n_words()) {
      throw DataError("record '" + file.records[i].id() + "' has n = " +
                      std::to_string(file.records[i].n_words()) + " but sentence " +
                      std::to_string(i + 1) + " has " + std::to_string(sentences[i].size()) +
                      " words");
    }
  }

  DecoderConfig config{a.max_depth, parse_tie_break(a.tie_break)};
  std::vector<DecodedSentence> results(sentences.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < results.size(); i = next++) {
      try {
        DecodeResult r = dp_decode(file.records[i], config);
        results[i].tags = format_tags(r.tags);
        results[i].tree = write_tree(tags_to_tree(r.tags, sentences[i], a.fallback_root));
      } catch (const Error& e) {
        results[i].error = e.what();
      }
    }
  };
  unsigned threads = std::max(1u, std::min<unsigned>(a.threads, static_cast<unsigned>(results.size())));
  std::vector<std::thread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  Output out(a.out);
  std::optional<Output> tags_out;
  if (!a.tags_out.empty()) tags_out.emplace(a.tags_out);
  std::size_t failed = 0;
  for (std::size_t i = 0; i < results.size(); ++i) {
    // Failed sentences leave an empty line so the output stays aligned.
    out.stream() << results[i].tree << '\n';
    if (tags_out) tags_out->stream() << results[i].tags << '\n';
    if (results[i].error) {
      ++failed;
      std::cerr << "record '" << file.records[i].id() << "': " << *results[i].error << "\n";
    }
  }
  if (failed > 0) {
    std::cerr << failed << " of " << results.size() << " sentences could not be decoded\n";
    return kExitData;
  }
  return kExitOk;
}

// ---------------------------------------------------------------- eval

struct EvalArgs {
  std::string gold;
  std::string pred;
  std::string records;
  bool strip_function_tags = true;
  bool keep_traces = false;
  bool no_root = false;

  EvalOptions options() const { return {strip_function_tags, !keep_traces, !no_root}; }
};

int run_eval(const EvalArgs& a) {
  std::vector<Tree> gold = load_plain_trees(a.gold);
  std::vector<Tree> pred = load_plain_trees(a.pred);
  F1Report r;
  try {
    r = bracket_f1(gold, pred, a.options());
  } catch (const Error& e) {
    throw DataError(e.what());
  }
  std::printf("sentences\t%zu\n", r.sentences.size());
  std::printf("excluded\t%zu\n", r.excluded());
  std::printf("matched\t%zu\n", r.matched);
  std::printf("gold\t%zu\n", r.gold_brackets);
  std::printf("predicted\t%zu\n", r.pred_brackets);
  std::printf("precision\t%.2f\n", r.precision);
  std::printf("recall\t%.2f\n", r.recall);
  std::printf("f1\t%.2f\n", r.f1);
  std::fflush(stdout);
  for (const SentenceScore& s : r.sentences) {
    if (s.error) std::cerr << "sentence " << s.index + 1 << " excluded: " << *s.error << "\n";
  }
  if (!a.records.empty()) {
    Output out(a.records);
    for (const SentenceScore& s : r.sentences) {
      json j = {{"type", "sentence"}, {"index", s.index}, {"matched", s.matched},
                {"gold", s.gold_brackets}, {"predicted", s.pred_brackets}};
      if (s.error) j["error"] = *s.error;
      out.stream() << j.dump() << '\n';
    }
    json total = {{"type", "total"},          {"precision", r.precision},
                  {"recall", r.recall},       {"f1", r.f1},
                  {"matched", r.matched},     {"gold", r.gold_brackets},
                  {"predicted", r.pred_brackets}, {"excluded", r.excluded()}};
    out.stream() << total.dump() << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- coverage

struct CoverageArgs {
  std::string trees;
  std::vector<int> caps = {1, 2, 3, 4, 5, 6, 7, 8, 9, 10};
  std::string records;
  bool strip_function_tags = true;
  bool keep_traces = false;
  bool no_root = false;
};

int run_coverage(const CoverageArgs& a) {
  std::vector<Tree> corpus = load_plain_trees(a.trees);
  std::vector<int> caps = a.caps;
  std::sort(caps.begin(), caps.end());
  caps.erase(std::unique(caps.begin(), caps.end()), caps.end());
  EvalOptions options{a.strip_function_tags, !a.keep_traces, !a.no_root};
  CoverageReport report;
  try {
    report = coverage_analysis(corpus, caps, options);
  } catch (const Error& e) {
    throw DataError(e.what());
  }
  // F1 comes from decoding gold one-hot scores under each cap.
  std::printf("trees\t%zu\n", report.trees);
  std::printf("max_depth\t%d\n", report.max_observed_depth);
  std::printf("cap\trepresentable\tf1_gold_one_hot\tno_path\n");
  for (const CapPoint& p : report.points) {
    std::printf("%d\t%.4f\t%.2f\t%zu\n", p.cap, p.representable_fraction, p.f1_under_cap,
                p.no_path);
  }
  std::printf("depth\ttrees\n");
  for (const auto& [d, count] : report.depth_histogram) std::printf("%d\t%zu\n", d, count);
  std::fflush(stdout);
  if (!a.records.empty()) {
    Output out(a.records);
    for (const CapPoint& p : report.points) {
      out.stream() << json{{"type", "cap"},
                           {"cap", p.cap},
                           {"representable_fraction", p.representable_fraction},
                           {"f1_under_cap", p.f1_under_cap},
                           {"no_path", p.no_path},
                           {"scores", "gold_one_hot"}}
                          .dump()
                   << '\n';
    }
    for (const auto& [d, count] : report.depth_histogram) {
      out.stream() << json{{"type", "depth"}, {"depth", d}, {"trees", count}}.dump() << '\n';
    }
    out.stream() << json{{"type", "summary"},
                         {"trees", report.trees},
                         {"max_observed_depth", report.max_observed_depth}}
                        .dump()
                 << '\n';
  }
  return kExitOk;
}

// ---------------------------------------------------------------- bench

struct BenchArgs {
  std::string trees;
  std::vector<std::size_t> sizes = {10, 100, 1000, 10000};
  int max_depth = 8;
  double sigma = 1.0;
  std::uint64_t seed = 0;
  double min_seconds = 0.2;
  std::string records;
};

// A uniformly chosen valid action at each position, keeping the final depth
// of one reachable and the stack within `cap`.
TagSequence random_sequence(std::mt19937_64& rng, std::size_t n, int cap,
                            const std::vector<std::string>& labels) {
  const std::size_t len = sequence_length(n);
  TagSequence out;
  out.reserve(len);
  int depth = 0;
  std::uniform_int_distribution<std::size_t> pick_label(0, labels.size() - 1);
  for (std::size_t i = 0; i < len; ++i) {
    const int fenceposts_left = static_cast<int>((len - 1 - i) / 2);
    auto feasible = [&](int after) { return after >= 1 && after <= cap && after - 1 <= fenceposts_left; };
    Action first = is_word_position(i) ? Action::kShiftLeft : Action::kCombineLeft;
    Action second = is_word_position(i) ? Action::kShiftRight : Action::kCombineRight;
    int after_first = is_word_position(i) ? depth + 1 : (depth >= 1 ? depth : -1);
    int after_second = is_word_position(i) ? (depth >= 1 ? depth : -1) : (depth >= 2 ? depth - 1 : -1);
    bool ok1 = feasible(after_first);
    bool ok2 = feasible(after_second);
    bool take_first = ok1 && (!ok2 || std::bernoulli_distribution(0.5)(rng));
    Action a = take_first ? first : second;
    depth = take_first ? after_first : after_second;
    std::string label = is_shift(a) ? "" : labels[pick_label(rng)];
    out.push_back({a, label});
  }
  return out;
}

int run_bench(const BenchArgs& a) {
  std::vector<std::string> labels = {"", "NP", "VP", "S", "PP"};
  if (!a.trees.empty()) {
    labels = {""};
    std::vector<TagSequence> seqs;
    for (const Tree& t : load_plain_trees(a.trees)) seqs.push_back(tree_to_tags(strip_annotations(t)));
    for (const TetraTag& t : TagVocabulary::induce(seqs).tags()) {
      if (!is_shift(t.action) && !t.label.empty()) labels.push_back(t.label);
    }
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
  }
  std::mt19937_64 rng(a.seed);
  DecoderConfig config{a.max_depth, TieBreak::kPreferShallow};

  struct Row {
    std::size_t n;
    std::size_t sentences;
    double seconds;
    double per_sentence;
    double agreement;
  };
  std::vector<Row> rows;
  for (std::size_t n : a.sizes) {
    if (n == 0) throw DataError("bench sizes must be positive");
    const std::size_t batch = std::max<std::size_t>(1, 20000 / n);
    std::vector<TagSequence> gold;
    for (std::size_t i = 0; i < batch; ++i) gold.push_back(random_sequence(rng, n, a.max_depth, labels));
    auto vocab = std::make_shared<const TagVocabulary>(TagVocabulary::induce(gold));
    std::vector<ScoreMatrix> scores = synth_scores(gold, vocab, {a.sigma, a.seed + n, 4.0});

    // Only decoding is timed; repeat the batch until enough time has passed.
    std::size_t decoded = 0;
    double checksum = 0.0;
    auto start = std::chrono::steady_clock::now();
    double elapsed = 0.0;
    do {
      for (const ScoreMatrix& m : scores) checksum += dp_decode(m, config).score;
      decoded += scores.size();
      elapsed = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    } while (elapsed < a.min_seconds);
    volatile double sink = checksum;
    (void)sink;

    std::size_t agree = 0;
    for (const ScoreMatrix& m : scores) {
      GreedyResult g = greedy_decode(m);
      if (g.valid() && g.argmax == dp_decode(m, config).tags) ++agree;
    }
    rows.push_back({n, decoded, elapsed, elapsed / static_cast<double>(decoded),
                    static_cast<double>(agree) / static_cast<double>(scores.size())});
  }

  // Least-squares fit of seconds per sentence against n.
  double r2 = 1.0;
  double slope = 0.0;
  double intercept = 0.0;
  if (rows.size() >= 2) {
    double mx = 0, my = 0;
    for (const Row& r : rows) {
      mx += static_cast<double>(r.n);
      my += r.per_sentence;
    }
    mx /= static_cast<double>(rows.size());
    my /= static_cast<double>(rows.size());
    double sxx = 0, sxy = 0, syy = 0;
    for (const Row& r : rows) {
      double dx = static_cast<double>(r.n) - mx;
      double dy = r.per_sentence - my;
      sxx += dx * dx;
      sxy += dx * dy;
      syy += dy * dy;
    }
    slope = sxx > 0 ? sxy / sxx : 0.0;
    intercept = my - slope * mx;
    r2 = syy > 0 && sxx > 0 ? (sxy * sxy) / (sxx * syy) : 1.0;
  }

  std::printf("n\tsentences\tseconds\tsents_per_s\tus_per_word\tgreedy_agreement\n");
  for (const Row& r : rows) {
    std::printf("%zu\t%zu\t%.4f\t%.1f\t%.4f\t%.3f\n", r.n, r.sentences, r.seconds,
                1.0 / r.per_sentence, 1e6 * r.per_sentence / static_cast<double>(r.n), r.agreement);
  }
  std::printf("linear_fit\tslope_us_per_word %.4f\tintercept_us %.3f\tr2 %.5f\n", slope * 1e6,
              intercept * 1e6, r2);
  std::fflush(stdout);
  if (!a.records.empty()) {
    Output out(a.records);
    for (const Row& r : rows) {
      out.stream() << json{{"type", "size"},
                           {"n", r.n},
                           {"sentences", r.sentences},
                           {"seconds", r.seconds},
                           {"sents_per_s", 1.0 / r.per_sentence},
                           {"greedy_agreement", r.agreement}}
                          .dump()
                   << '\n';
    }
    out.stream() << json{{"type", "fit"}, {"slope", slope}, {"intercept", intercept}, {"r2", r2}}.dump()
                 << '\n';
  }
  return kExitOk;
}

void add_evalb_flags(CLI::App* cmd, bool& strip, bool& keep_traces, bool& no_root) {
  cmd->add_flag("--strip-function-tags,!--no-strip-function-tags", strip,
                "Remove function tags and indices before scoring")
      ->capture_default_str();
  cmd->add_flag("--keep-traces", keep_traces, "Score -NONE- subtrees instead of deleting them");
  cmd->add_flag("--no-root-bracket", no_root, "Do not count the root bracket");
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Tetra-tagging constituency toolkit"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all", "Help for every subcommand");

  EncodeArgs enc;
  auto* encode = app.add_subcommand("encode", "Turn bracketed trees into tag sequences");
  encode->add_option("trees", enc.trees, "Bracketed trees, '-' for stdin")->required();
  encode->add_option("-o,--output", enc.tags_out, "Tag lines, one per tree")->capture_default_str();
  encode->add_option("--vocab", enc.vocab_out, "Write the induced tag vocabulary here");
  encode->add_option("--sentences", enc.sentences_out, "Write (POS word) sentence lines here");
  encode->add_flag("--strip-function-tags", enc.strip_function_tags,
                   "Remove function tags before encoding (default keeps them)");
  encode->add_flag("--drop-traces", enc.drop_traces, "Delete -NONE- subtrees before encoding");

  SynthArgs syn;
  auto* synth = app.add_subcommand("synth", "Make synthetic score files from gold tags");
  synth->add_option("tags", syn.tags, "Tag lines from encode")->required();
  synth->add_option("--vocab", syn.vocab, "Tag vocabulary (default: induced from the tags)");
  synth->add_option("-o,--output", syn.out, "Score file")->capture_default_str();
  synth->add_option("--sigma", syn.sigma, "Gaussian noise standard deviation")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  synth->add_option("--seed", syn.seed, "Seed for mt19937_64")->capture_default_str();
  synth->add_option("--margin", syn.margin, "Score gap between gold and other tags")
      ->capture_default_str();
  synth->add_option("--format", syn.format, "Score file encoding")
      ->check(CLI::IsMember({"text", "binary"}))
      ->capture_default_str();

  DecodeArgs dec;
  auto* decode = app.add_subcommand("decode", "Decode score files into trees");
  decode->add_option("scores", dec.scores, "Score file (text or binary)")->required();
  decode->add_option("--sentences", dec.sentences, "One sentence per line")->required();
  decode->add_option("-o,--output", dec.out, "Trees, one per line")->capture_default_str();
  decode->add_option("--tags", dec.tags_out, "Also write the decoded tag lines here");
  decode->add_option("--max-depth", dec.max_depth, "Stack depth cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  decode->add_option("--tie-break", dec.tie_break, "Order among equal-scoring sequences")
      ->check(CLI::IsMember({"shallow", "deep"}))
      ->capture_default_str();
  decode->add_option("--fallback-root", dec.fallback_root, "Label for a root that decodes unlabeled")
      ->capture_default_str();
  decode->add_option("--threads", dec.threads, "Decoding threads")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();

  EvalArgs ev;
  auto* eval = app.add_subcommand("eval", "Labeled bracket precision, recall and F1");
  eval->add_option("gold", ev.gold, "Gold trees")->required();
  eval->add_option("pred", ev.pred, "Predicted trees")->required();
  eval->add_option("--records", ev.records, "Write JSON lines per sentence ('-' for stdout)");
  add_evalb_flags(eval, ev.strip_function_tags, ev.keep_traces, ev.no_root);

  CoverageArgs cov;
  auto* coverage = app.add_subcommand("coverage", "Representable fraction and F1 per depth cap");
  coverage->add_option("trees", cov.trees, "Bracketed trees")->required();
  coverage->add_option("--caps", cov.caps, "Depth caps")
      ->delimiter(',')
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  coverage->add_option("--records", cov.records, "Write JSON lines per cap ('-' for stdout)");
  add_evalb_flags(coverage, cov.strip_function_tags, cov.keep_traces, cov.no_root);

  BenchArgs ben;
  auto* bench = app.add_subcommand("bench", "Decode-only throughput on synthetic sentences");
  bench->add_option("trees", ben.trees, "Optional treebank supplying the label set");
  bench->add_option("--sizes", ben.sizes, "Sentence lengths")->delimiter(',')->capture_default_str();
  bench->add_option("--max-depth", ben.max_depth, "Stack depth cap")
      ->check(CLI::PositiveNumber)
      ->capture_default_str();
  bench->add_option("--sigma", ben.sigma, "Noise on the synthetic scores")
      ->check(CLI::NonNegativeNumber)
      ->capture_default_str();
  bench->add_option("--seed", ben.seed, "Seed for sentences and noise")->capture_default_str();
  bench->add_option("--min-seconds", ben.min_seconds, "Minimum timed interval per size")
      ->capture_default_str();
  bench->add_option("--records", ben.records, "Write JSON lines per size ('-' for stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (*encode) return run_encode(enc);
    if (*synth) return run_synth(syn);
    if (*decode) return run_decode(dec);
    if (*eval) return run_eval(ev);
    if (*coverage) return run_coverage(cov);
    if (*bench) return run_bench(ben);
  } catch (const DataError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitData;
  }
  return kExitUsage;
}
