#include "tetratag/decoder.hpp"

#include <cmath>
#include <limits>
#include <tuple>
#include <utility>

#include "tetratag/error.hpp"

namespace tetratag {

ScoreMatrix::ScoreMatrix(std::shared_ptr<const TagVocabulary> vocab, std::size_t n_words,
                         std::vector<double> grid, std::string id)
    : vocab_(std::move(vocab)), n_words_(n_words), grid_(std::move(grid)), id_(std::move(id)) {
  if (!vocab_) throw FormatError("score matrix without vocabulary");
  if (n_words_ == 0) throw FormatError("score matrix '" + id_ + "' has no words");
  if (grid_.size() != rows() * cols()) {
    throw FormatError("score matrix '" + id_ + "' has " + std::to_string(grid_.size()) +
                      " cells, expected " + std::to_string(rows()) + " x " +
                      std::to_string(cols()));
  }
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!std::isfinite(grid_[i])) {
      throw FormatError("score matrix '" + id_ + "' has a non-finite score at row " +
                        std::to_string(i / cols()) + ", column " +
                        std::to_string(i % cols()));
    }
  }
}

double ScoreMatrix::score_of(std::size_t row, const TetraTag& tag) const {
  std::optional<std::size_t> col = vocab_->index_of(tag);
  if (!col) throw FormatError("tag '" + tag.str() + "' is not in the vocabulary");
  return at(row, *col);
}

std::string_view tie_break_name(TieBreak t) noexcept {
  return t == TieBreak::kPreferShallow ? "shallow" : "deep";
}

TieBreak parse_tie_break(std::string_view name) {
  if (name == "shallow") return TieBreak::kPreferShallow;
  if (name == "deep") return TieBreak::kPreferDeep;
  throw Error("unknown tie-break rule '" + std::string(name) +
              "' (expected shallow or deep)");
}

namespace {

constexpr double kNegInf = -std::numeric_limits<double>::infinity();

// The two actions available at a row: (l, r) on words, (L, R) on fenceposts.
std::pair<Action, Action> row_actions(std::size_t row) {
  return is_word_position(row) ? std::pair{Action::kShiftLeft, Action::kShiftRight}
                               : std::pair{Action::kCombineLeft, Action::kCombineRight};
}

// Best label variant of each of the row's two actions: highest score, ties to
// the lexicographically smallest label.
std::pair<std::optional<std::size_t>, std::optional<std::size_t>> best_columns(
    const ScoreMatrix& scores, std::size_t row) {
  auto [first, second] = row_actions(row);
  const double* cells = scores.row(row).data();
  auto best = [&](Action a) -> std::optional<std::size_t> {
    std::span<const std::size_t> cols = scores.vocabulary().columns(a);
    if (cols.empty()) return std::nullopt;
    std::size_t b = cols[0];
    for (std::size_t c : cols.subspan(1)) {
      if (cells[c] > cells[b]) b = c;
    }
    return b;
  };
  return {best(first), best(second)};
}

// Whether `a` should win an exact tie against the other action of its row.
bool preferred(Action a, TieBreak rule) {
  bool first = a == Action::kShiftLeft || a == Action::kCombineLeft;
  return rule == TieBreak::kPreferShallow ? first : !first;
}

// Depth before an action, given the depth after it.
int depth_before(Action a, int after) {
  switch (a) {
    case Action::kShiftLeft:
      return after - 1;
    case Action::kCombineRight:
      return after + 1;
    default:
      return after;
  }
}

std::vector<std::optional<std::size_t>> factor_labels(const ScoreMatrix& scores) {
  std::vector<std::optional<std::size_t>> out(2 * scores.rows());
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    std::tie(out[2 * r], out[2 * r + 1]) = best_columns(scores, r);
  }
  return out;
}

}  // namespace

Lattice build_lattice(const ScoreMatrix& scores, const DecoderConfig& config) {
  if (config.max_depth < 1) throw Error("max depth must be at least 1");
  Lattice lat;
  lat.steps = scores.rows();
  lat.max_depth = config.max_depth;
  const int d = config.max_depth;
  const std::size_t cells = (lat.steps + 1) * static_cast<std::size_t>(d + 1);
  lat.best.assign(cells, kNegInf);
  lat.reachable.assign(cells, 0);
  lat.via.assign(cells, Action::kShiftLeft);
  lat.label_choice = factor_labels(scores);

  lat.best[lat.cell(0, 0)] = 0.0;
  lat.reachable[lat.cell(0, 0)] = 1;

  for (std::size_t t = 0; t < lat.steps; ++t) {
    auto [first, second] = row_actions(t);
    const auto& col_first = lat.label_choice[2 * t];
    const auto& col_second = lat.label_choice[2 * t + 1];
    const double s_first = col_first ? scores.at(t, *col_first) : 0.0;
    const double s_second = col_second ? scores.at(t, *col_second) : 0.0;

    for (int k = 1; k <= d; ++k) {
      bool have1 = false;
      bool have2 = false;
      double v1 = kNegInf;
      double v2 = kNegInf;
      int from1 = depth_before(first, k);
      int from2 = depth_before(second, k);
      if (col_first && from1 >= 0 && from1 <= d && lat.reachable[lat.cell(t, from1)]) {
        have1 = true;
        v1 = lat.best[lat.cell(t, from1)] + s_first;
      }
      // r and L leave the depth unchanged but need a non-empty stack; R needs
      // two elements, which from2 = k + 1 >= 2 already implies.
      if (col_second && from2 >= 1 && from2 <= d && lat.reachable[lat.cell(t, from2)]) {
        have2 = true;
        v2 = lat.best[lat.cell(t, from2)] + s_second;
      }
      if (!have1 && !have2) continue;

      bool take_first;
      if (have1 && have2) {
        take_first = v1 > v2 || (v1 == v2 && preferred(first, config.tie_break));
      } else {
        take_first = have1;
      }
      std::size_t c = lat.cell(t + 1, k);
      lat.reachable[c] = 1;
      lat.best[c] = take_first ? v1 : v2;
      lat.via[c] = take_first ? first : second;
    }
  }
  return lat;
}

DecodeResult dp_decode(const ScoreMatrix& scores, const DecoderConfig& config) {
  Lattice lat = build_lattice(scores, config);
  if (!lat.reachable[lat.cell(lat.steps, 1)]) {
    throw NoPathError("no valid tag sequence for '" + scores.id() + "' (" +
                      std::to_string(scores.n_words()) +
                      " words) with maximum stack depth " +
                      std::to_string(config.max_depth));
  }
  DecodeResult out;
  out.score = lat.at(lat.steps, 1);
  out.tags.resize(lat.steps);
  const TagVocabulary& vocab = scores.vocabulary();
  int k = 1;
  for (std::size_t t = lat.steps; t > 0; --t) {
    Action a = lat.via[lat.cell(t, k)];
    bool first = a == Action::kShiftLeft || a == Action::kCombineLeft;
    std::size_t col = *lat.label_choice[2 * (t - 1) + (first ? 0 : 1)];
    out.tags[t - 1] = vocab[col];
    k = depth_before(a, k);
  }
  return out;
}

namespace {

class Enumerator {
 public:
  Enumerator(const ScoreMatrix& scores, const DecoderConfig& config)
      : scores_(scores),
        config_(config),
        len_(scores.rows()),
        labels_(factor_labels(scores)),
        current_(len_),
        best_(len_) {}

  OracleResult run() {
    visit(0, 0, 0.0);
    OracleResult out;
    out.candidates = candidates_;
    out.valid = valid_;
    if (found_) {
      out.best.score = best_score_;
      out.best.tags.reserve(len_);
      for (std::size_t i = 0; i < len_; ++i) {
        bool first = best_[i] == Action::kShiftLeft || best_[i] == Action::kCombineLeft;
        out.best.tags.push_back(scores_.vocabulary()[*labels_[2 * i + (first ? 0 : 1)]]);
      }
    }
    return out;
  }

  bool found() const noexcept { return found_; }

 private:
  // Depth after applying `a` at `depth`, or -1 when the action is not allowed.
  int step(Action a, int depth) const {
    int next = depth;
    switch (a) {
      case Action::kShiftLeft:
        next = depth + 1;
        break;
      case Action::kShiftRight:
      case Action::kCombineLeft:
        if (depth < 1) return -1;
        break;
      case Action::kCombineRight:
        if (depth < 2) return -1;
        next = depth - 1;
        break;
    }
    return next > config_.max_depth ? -1 : next;
  }

  void visit(std::size_t i, int depth, double prefix) {
    if (i == len_) {
      ++candidates_;
      if (depth != 1) return;
      ++valid_;
      consider(prefix);
      return;
    }
    auto [first, second] = row_actions(i);
    for (int which = 0; which < 2; ++which) {
      Action a = which == 0 ? first : second;
      const auto& col = labels_[2 * i + static_cast<std::size_t>(which)];
      int next = col ? step(a, depth) : -1;
      if (next < 0) {
        candidates_ += std::uint64_t{1} << (len_ - 1 - i);
        continue;
      }
      current_[i] = a;
      visit(i + 1, next, prefix + scores_.at(i, *col));
    }
  }

  void consider(double score) {
    if (!found_ || score > best_score_) {
      found_ = true;
      best_score_ = score;
      best_ = current_;
      return;
    }
    if (score < best_score_) return;
    for (std::size_t i = len_; i > 0; --i) {
      if (current_[i - 1] != best_[i - 1]) {
        if (preferred(current_[i - 1], config_.tie_break)) best_ = current_;
        return;
      }
    }
  }

  const ScoreMatrix& scores_;
  const DecoderConfig& config_;
  std::size_t len_;
  std::vector<std::optional<std::size_t>> labels_;
  std::vector<Action> current_;
  std::vector<Action> best_;
  double best_score_ = kNegInf;
  bool found_ = false;
  std::uint64_t candidates_ = 0;
  std::uint64_t valid_ = 0;
};

}  // namespace

OracleResult oracle_decode(const ScoreMatrix& scores, const DecoderConfig& config,
                           std::size_t guard) {
  if (scores.n_words() > guard) {
    throw Error("oracle refuses sentences longer than " + std::to_string(guard) +
                " words (got " + std::to_string(scores.n_words()) + ")");
  }
  if (config.max_depth < 1) throw Error("max depth must be at least 1");
  Enumerator e(scores, config);
  OracleResult out = e.run();
  if (!e.found()) {
    throw NoPathError("no valid tag sequence for '" + scores.id() + "' with maximum stack depth " +
                      std::to_string(config.max_depth));
  }
  return out;
}

GreedyResult greedy_decode(const ScoreMatrix& scores, TieBreak tie_break) {
  GreedyResult out;
  std::vector<std::optional<std::size_t>> labels = factor_labels(scores);
  const TagVocabulary& vocab = scores.vocabulary();
  for (std::size_t r = 0; r < scores.rows(); ++r) {
    const auto& c1 = labels[2 * r];
    const auto& c2 = labels[2 * r + 1];
    if (!c1 && !c2) {
      throw FormatError("vocabulary has no tag usable at position " + std::to_string(r));
    }
    std::size_t col;
    if (c1 && c2) {
      double s1 = scores.at(r, *c1);
      double s2 = scores.at(r, *c2);
      bool take_first = s1 > s2 || (s1 == s2 && preferred(vocab[*c1].action, tie_break));
      col = take_first ? *c1 : *c2;
    } else {
      col = c1 ? *c1 : *c2;
    }
    out.argmax.push_back(vocab[col]);
    out.score += scores.at(r, col);
  }
  out.violation = check_validity(out.argmax);
  return out;
}

}  // namespace tetratag
