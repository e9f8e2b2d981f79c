// Python view of the core: encode trees, decode tags or score grids.
#include <pybind11/numpy.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "tetratag/codec.hpp"
#include "tetratag/decoder.hpp"
#include "tetratag/error.hpp"
#include "tetratag/pipeline.hpp"
#include "tetratag/scores_io.hpp"

namespace py = pybind11;
using namespace tetratag;

namespace {

using Grid = py::array_t<double, py::array::c_style | py::array::forcecast>;

std::vector<std::string> tag_strings(const TagSequence& tags) {
  std::vector<std::string> out;
  out.reserve(tags.size());
  for (const TetraTag& t : tags) out.push_back(t.str());
  return out;
}

TagSequence to_tags(const std::vector<std::string>& tags) {
  TagSequence out;
  out.reserve(tags.size());
  for (const std::string& s : tags) out.push_back(TetraTag::parse(s));
  return out;
}

Tree prepare(const std::string& tree, bool strip) {
  Tree t = read_tree(tree);
  return strip ? strip_annotations(t) : t;
}

// Holds a vocabulary and decoder settings across calls.
class Session {
 public:
  Session(std::vector<std::string> vocab, int max_depth, const std::string& tie_break,
          std::string fallback_root)
      : vocab_(std::make_shared<const TagVocabulary>(to_tags(vocab))),
        config_{max_depth, parse_tie_break(tie_break)},
        fallback_root_(std::move(fallback_root)) {
    if (max_depth < 1) throw Error("max_depth must be at least 1");
  }

  std::vector<std::string> vocab() const {
    std::vector<std::string> out;
    for (const TetraTag& t : vocab_->tags()) out.push_back(t.str());
    return out;
  }

  ScoreMatrix matrix(const Grid& grid, std::size_t n) const {
    if (grid.ndim() != 2) throw FormatError("score grid must be two-dimensional");
    if (static_cast<std::size_t>(grid.shape(1)) != vocab_->size()) {
      throw FormatError("score grid has " + std::to_string(grid.shape(1)) +
                        " columns, vocabulary has " + std::to_string(vocab_->size()));
    }
    if (static_cast<std::size_t>(grid.shape(0)) != sequence_length(n)) {
      throw FormatError("score grid has " + std::to_string(grid.shape(0)) + " rows, expected 2n-1 = " +
                        std::to_string(sequence_length(n)));
    }
    return ScoreMatrix(vocab_, n, std::vector<double>(grid.data(), grid.data() + grid.size()));
  }

  py::tuple dp_decode(const Grid& grid) const {
    std::size_t rows = grid.ndim() == 2 ? static_cast<std::size_t>(grid.shape(0)) : 0;
    DecodeResult r = tetratag::dp_decode(matrix(grid, (rows + 1) / 2), config_);
    return py::make_tuple(tag_strings(r.tags), r.score);
  }

  std::string parse(const Grid& grid, const std::string& sentence) const {
    Sentence s = read_sentence(sentence);
    DecodeResult r = tetratag::dp_decode(matrix(grid, s.size()), config_);
    return write_tree(tags_to_tree(r.tags, s, fallback_root_));
  }

  int max_depth() const { return config_.max_depth; }
  std::string tie_break() const { return std::string(tie_break_name(config_.tie_break)); }

 private:
  std::shared_ptr<const TagVocabulary> vocab_;
  DecoderConfig config_;
  std::string fallback_root_;
};

}  // namespace

PYBIND11_MODULE(_core, m) {
  m.doc() = "Tetra-tag encoding and depth-bounded decoding.";

  auto base = py::register_exception<Error>(m, "TetratagError", PyExc_ValueError);
  py::register_exception<ParseError>(m, "ParseError", base);
  py::register_exception<StructureError>(m, "StructureError", base);
  py::register_exception<ValidityError>(m, "ValidityError", base);
  py::register_exception<NoPathError>(m, "NoPathError", base);
  py::register_exception<FormatError>(m, "FormatError", base);

  m.def(
      "encode",
      [](const std::string& tree, bool strip) { return tag_strings(tree_to_tags(prepare(tree, strip))); },
      py::arg("tree"), py::arg("strip") = false,
      "Tags for one bracketed tree. strip drops function tags and traces first.");

  m.def(
      "decode",
      [](const std::vector<std::string>& tags, const std::string& sentence,
         const std::string& fallback_root) {
        return write_tree(tags_to_tree(to_tags(tags), read_sentence(sentence), fallback_root));
      },
      py::arg("tags"), py::arg("sentence"), py::arg("fallback_root") = std::string(kDefaultFallbackRoot),
      "Bracketed tree for a valid tag sequence over a sentence line.");

  m.def(
      "leaves",
      [](const std::string& tree, bool strip) { return write_sentence(leaves(prepare(tree, strip))); },
      py::arg("tree"), py::arg("strip") = false);

  m.def(
      "normalize", [](const std::string& tree, bool strip) { return write_tree(prepare(tree, strip)); },
      py::arg("tree"), py::arg("strip") = false);

  m.def(
      "validate",
      [](const std::vector<std::string>& tags) -> std::optional<std::pair<std::size_t, std::string>> {
        auto v = check_validity(to_tags(tags));
        if (!v) return std::nullopt;
        return std::make_pair(v->position, v->reason);
      },
      py::arg("tags"), "None when valid, else (position, reason).");

  m.def(
      "depths", [](const std::vector<std::string>& tags) { return depth_profile(to_tags(tags)); },
      py::arg("tags"));

  m.def(
      "vocab",
      [](const std::vector<std::vector<std::string>>& sequences) {
        std::vector<TagSequence> seqs;
        for (const auto& s : sequences) seqs.push_back(to_tags(s));
        TagVocabulary v = TagVocabulary::induce(seqs);
        std::vector<std::string> out;
        for (const TetraTag& t : v.tags()) out.push_back(t.str());
        return out;
      },
      py::arg("sequences"), "Column order induced from tag sequences.");

  m.def(
      "one_hot",
      [](const std::vector<std::string>& gold, const std::vector<std::string>& vocab, double margin) {
        auto v = std::make_shared<const TagVocabulary>(to_tags(vocab));
        ScoreMatrix s = one_hot_scores(to_tags(gold), v, margin);
        Grid out({s.rows(), s.cols()});
        std::copy(s.grid().begin(), s.grid().end(), out.mutable_data());
        return out;
      },
      py::arg("tags"), py::arg("vocab"), py::arg("margin") = 4.0);

  py::class_<Session>(m, "Session")
      .def(py::init<std::vector<std::string>, int, const std::string&, std::string>(),
           py::arg("vocab"), py::arg("max_depth") = 8, py::arg("tie_break") = "shallow",
           py::arg("fallback_root") = std::string(kDefaultFallbackRoot))
      .def_property_readonly("vocab", &Session::vocab)
      .def_property_readonly("max_depth", &Session::max_depth)
      .def_property_readonly("tie_break", &Session::tie_break)
      .def("dp_decode", &Session::dp_decode, py::arg("scores"),
           "Best valid (tags, score) for a (2n-1) x |vocab| grid.")
      .def("parse", &Session::parse, py::arg("scores"), py::arg("sentence"),
           "Decode a grid and build the tree over the sentence line.");
}
