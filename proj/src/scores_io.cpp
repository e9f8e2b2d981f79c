#include "tetratag/scores_io.hpp"

#include <bit>
#include <cerrno>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <random>
#include <sstream>

#include "tetratag/error.hpp"

namespace tetratag {

namespace {

void check_records(const TagVocabulary& vocab, const std::vector<ScoreMatrix>& records) {
  for (const ScoreMatrix& m : records) {
    if (!(m.vocabulary() == vocab)) {
      throw FormatError("record '" + m.id() + "' uses a different vocabulary");
    }
    if (m.id().empty() || m.id().find_first_of(" \t\r\n") != std::string::npos) {
      throw FormatError("record id '" + m.id() + "' must be non-empty and contain no whitespace");
    }
  }
}

std::vector<std::string_view> split(std::string_view s, char sep) {
  std::vector<std::string_view> out;
  std::size_t pos = 0;
  for (;;) {
    std::size_t cut = s.find(sep, pos);
    out.push_back(s.substr(pos, cut - pos));
    if (cut == std::string_view::npos) break;
    pos = cut + 1;
  }
  return out;
}

std::string_view trim_eol(std::string_view line) {
  while (!line.empty() && (line.back() == '\r' || line.back() == ' ')) line.remove_suffix(1);
  return line;
}

double parse_score(std::string_view field, const std::string& id, std::size_t row) {
  std::string buf(field);
  char* end = nullptr;
  errno = 0;
  double v = std::strtod(buf.c_str(), &end);
  if (buf.empty() || end != buf.c_str() + buf.size()) {
    throw FormatError("record '" + id + "' row " + std::to_string(row) +
                      ": malformed score '" + buf + "'");
  }
  if (!std::isfinite(v)) {
    throw FormatError("record '" + id + "' row " + std::to_string(row) +
                      ": non-finite score '" + buf + "'");
  }
  return v;
}

std::size_t parse_count(std::string_view field, const std::string& what) {
  std::string buf(field);
  char* end = nullptr;
  unsigned long long v = std::strtoull(buf.c_str(), &end, 10);
  if (buf.empty() || end != buf.c_str() + buf.size() || buf.front() == '-') {
    throw FormatError("malformed " + what + " '" + buf + "'");
  }
  return static_cast<std::size_t>(v);
}

std::shared_ptr<const TagVocabulary> vocab_from_strings(const std::vector<std::string_view>& tags) {
  std::vector<TetraTag> parsed;
  parsed.reserve(tags.size());
  for (std::string_view t : tags) parsed.push_back(TetraTag::parse(t));
  return std::make_shared<const TagVocabulary>(std::move(parsed));
}

// Little-endian primitives for the binary layout.
void put_u32(std::string& out, std::uint32_t v) {
  for (int i = 0; i < 4; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

void put_u64(std::string& out, std::uint64_t v) {
  for (int i = 0; i < 8; ++i) out += static_cast<char>((v >> (8 * i)) & 0xFF);
}

void put_bytes(std::string& out, std::string_view s) {
  put_u32(out, static_cast<std::uint32_t>(s.size()));
  out += s;
}

class ByteReader {
 public:
  explicit ByteReader(std::string_view data) : data_(data) {}

  std::uint64_t uint(int width, const char* what) {
    need(static_cast<std::size_t>(width), what);
    std::uint64_t v = 0;
    for (int i = 0; i < width; ++i) {
      v |= static_cast<std::uint64_t>(static_cast<unsigned char>(data_[pos_ + i])) << (8 * i);
    }
    pos_ += static_cast<std::size_t>(width);
    return v;
  }
  std::uint32_t u32(const char* what) { return static_cast<std::uint32_t>(uint(4, what)); }
  std::uint64_t u64(const char* what) { return uint(8, what); }
  double f64(const char* what) { return std::bit_cast<double>(u64(what)); }

  std::string_view bytes(std::size_t n, const char* what) {
    need(n, what);
    std::string_view s = data_.substr(pos_, n);
    pos_ += n;
    return s;
  }
  std::string_view string(const char* what) { return bytes(u32(what), what); }

  std::size_t offset() const noexcept { return pos_; }
  bool at_end() const noexcept { return pos_ == data_.size(); }

 private:
  void need(std::size_t n, const char* what) const {
    if (data_.size() - pos_ < n) {
      throw FormatError(std::string("truncated score file while reading ") + what +
                        " at byte " + std::to_string(pos_));
    }
  }

  std::string_view data_;
  std::size_t pos_ = 0;
};

// Box-Muller over a 53-bit uniform stream; caches the sine branch.
class GaussianStream {
 public:
  explicit GaussianStream(std::uint64_t seed) : engine_(seed) {}

  double next() {
    if (has_spare_) {
      has_spare_ = false;
      return spare_;
    }
    double u1 = 1.0 - uniform();  // (0, 1]
    double u2 = uniform();
    double radius = std::sqrt(-2.0 * std::log(u1));
    double angle = 2.0 * std::numbers::pi * u2;
    spare_ = radius * std::sin(angle);
    has_spare_ = true;
    return radius * std::cos(angle);
  }

 private:
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  std::mt19937_64 engine_;
  double spare_ = 0.0;
  bool has_spare_ = false;
};

}  // namespace

std::string write_scores_text(const TagVocabulary& vocab,
                              const std::vector<ScoreMatrix>& records) {
  check_records(vocab, records);
  std::string out;
  out += kTextMagic;
  out += " v" + std::to_string(kScoreFormatVersion) + "\n";
  out += "vocab";
  for (const TetraTag& t : vocab.tags()) {
    out += '\t';
    out += t.str();
  }
  out += '\n';
  char buf[64];
  for (const ScoreMatrix& m : records) {
    out += "id " + m.id() + " n " + std::to_string(m.n_words()) + "\n";
    for (std::size_t r = 0; r < m.rows(); ++r) {
      for (std::size_t c = 0; c < m.cols(); ++c) {
        if (c > 0) out += '\t';
        std::snprintf(buf, sizeof buf, "%.9g", m.at(r, c));
        out += buf;
      }
      out += '\n';
    }
  }
  return out;
}

ScoreFile read_scores_text(std::string_view data) {
  std::vector<std::string_view> lines = split(data, '\n');
  if (!lines.empty() && trim_eol(lines.back()).empty()) lines.pop_back();
  if (lines.size() < 2) throw FormatError("score file is missing its header");

  std::string_view header = trim_eol(lines[0]);
  std::string expected = std::string(kTextMagic) + " v" + std::to_string(kScoreFormatVersion);
  if (header != expected) {
    if (header.substr(0, kTextMagic.size() + 2) == std::string(kTextMagic) + " v") {
      throw FormatError("unsupported score format version '" + std::string(header) +
                        "', expected '" + expected + "'");
    }
    throw FormatError("not a tetratag score file");
  }

  std::vector<std::string_view> vocab_fields = split(trim_eol(lines[1]), '\t');
  if (vocab_fields.empty() || vocab_fields[0] != "vocab") {
    throw FormatError("second line must start with 'vocab'");
  }
  vocab_fields.erase(vocab_fields.begin());
  ScoreFile file;
  file.vocab = vocab_from_strings(vocab_fields);
  const std::size_t width = file.vocab->size();

  std::size_t i = 2;
  while (i < lines.size()) {
    std::string_view head = trim_eol(lines[i]);
    std::vector<std::string_view> f = split(head, ' ');
    if (f.size() != 4 || f[0] != "id" || f[2] != "n") {
      throw FormatError("line " + std::to_string(i + 1) + ": expected 'id <id> n <n>'");
    }
    std::string id(f[1]);
    std::size_t n = parse_count(f[3], "word count for record '" + id + "'");
    if (n == 0) throw FormatError("record '" + id + "' has no words");
    ++i;
    std::vector<double> grid;
    std::size_t rows = 0;
    while (i < lines.size() && trim_eol(lines[i]).substr(0, 3) != "id ") {
      std::vector<std::string_view> cells = split(trim_eol(lines[i]), '\t');
      if (cells.size() != width) {
        throw FormatError("record '" + id + "' row " + std::to_string(rows) + " has " +
                          std::to_string(cells.size()) + " scores, vocabulary has " +
                          std::to_string(width));
      }
      for (std::string_view c : cells) grid.push_back(parse_score(c, id, rows));
      ++rows;
      ++i;
    }
    if (rows != sequence_length(n)) {
      throw FormatError("record '" + id + "' has " + std::to_string(rows) +
                        " score rows, expected 2n-1 = " + std::to_string(sequence_length(n)));
    }
    file.records.emplace_back(file.vocab, n, std::move(grid), std::move(id));
  }
  return file;
}

std::string write_scores_binary(const TagVocabulary& vocab,
                                const std::vector<ScoreMatrix>& records) {
  check_records(vocab, records);
  std::string out(kBinaryMagic);
  put_u32(out, kScoreFormatVersion);
  put_u32(out, static_cast<std::uint32_t>(vocab.size()));
  for (const TetraTag& t : vocab.tags()) put_bytes(out, t.str());
  put_u64(out, records.size());
  for (const ScoreMatrix& m : records) {
    std::string payload;
    put_bytes(payload, m.id());
    put_u32(payload, static_cast<std::uint32_t>(m.n_words()));
    for (double v : m.grid()) put_u64(payload, std::bit_cast<std::uint64_t>(v));
    put_u64(out, payload.size());
    out += payload;
  }
  return out;
}

ScoreFile read_scores_binary(std::string_view data) {
  ByteReader in(data);
  if (in.bytes(4, "magic") != kBinaryMagic) throw FormatError("not a binary tetratag score file");
  std::uint32_t version = in.u32("version");
  if (version != kScoreFormatVersion) {
    throw FormatError("unsupported score format version " + std::to_string(version) +
                      ", expected " + std::to_string(kScoreFormatVersion));
  }
  std::uint32_t vocab_size = in.u32("vocabulary size");
  std::vector<std::string_view> tags;
  for (std::uint32_t i = 0; i < vocab_size; ++i) tags.push_back(in.string("vocabulary tag"));
  ScoreFile file;
  file.vocab = vocab_from_strings(tags);
  const std::size_t width = file.vocab->size();

  std::uint64_t count = in.u64("record count");
  for (std::uint64_t r = 0; r < count; ++r) {
    std::uint64_t payload = in.u64("record length");
    std::size_t start = in.offset();
    std::string id(in.string("record id"));
    std::size_t n = in.u32("word count");
    if (n == 0) throw FormatError("record '" + id + "' has no words");
    std::size_t cells = sequence_length(n) * width;
    if (payload != (in.offset() - start) + 8 * cells) {
      throw FormatError("record '" + id + "' length does not match 2n-1 = " +
                        std::to_string(sequence_length(n)) + " rows");
    }
    std::vector<double> grid(cells);
    for (double& v : grid) v = in.f64("scores");
    file.records.emplace_back(file.vocab, n, std::move(grid), std::move(id));
  }
  if (!in.at_end()) throw FormatError("trailing bytes after the last record");
  return file;
}

ScoreFile read_scores(std::string_view data) {
  if (data.substr(0, kBinaryMagic.size()) == kBinaryMagic) return read_scores_binary(data);
  return read_scores_text(data);
}

void save_scores(const std::filesystem::path& path, const TagVocabulary& vocab,
                 const std::vector<ScoreMatrix>& records, ScoreFormat format) {
  write_file(path, format == ScoreFormat::kBinary ? write_scores_binary(vocab, records)
                                                  : write_scores_text(vocab, records));
}

ScoreFile load_scores(const std::filesystem::path& path) { return read_scores(read_file(path)); }

std::vector<ScoreMatrix> synth_scores(const std::vector<TagSequence>& gold,
                                      std::shared_ptr<const TagVocabulary> vocab,
                                      const SynthOptions& options) {
  if (options.noise_sigma < 0.0) throw Error("noise sigma must be non-negative");
  GaussianStream noise(options.seed);
  std::vector<ScoreMatrix> out;
  out.reserve(gold.size());
  const std::size_t width = vocab->size();
  // Word rows, then fencepost rows; each in column order so the noise stream
  // is consumed row-major.
  std::vector<std::size_t> in_position[2];
  for (std::size_t c = 0; c < width; ++c) in_position[is_shift((*vocab)[c].action) ? 0 : 1].push_back(c);
  for (std::size_t s = 0; s < gold.size(); ++s) {
    const TagSequence& tags = gold[s];
    std::vector<double> grid(tags.size() * width, kOutOfPositionScore);
    for (std::size_t r = 0; r < tags.size(); ++r) {
      std::optional<std::size_t> gold_col = vocab->index_of(tags[r]);
      if (!gold_col) {
        throw FormatError("gold tag '" + tags[r].str() + "' of sentence " + std::to_string(s) +
                          " is not in the vocabulary");
      }
      for (std::size_t c : in_position[r % 2]) {
        double v = c == *gold_col ? 0.0 : -options.margin;
        if (options.noise_sigma > 0.0) v += options.noise_sigma * noise.next();
        grid[r * width + c] = v;
      }
    }
    std::size_t n = (tags.size() + 1) / 2;
    out.emplace_back(vocab, n, std::move(grid), std::to_string(s));
  }
  return out;
}

ScoreMatrix one_hot_scores(const TagSequence& gold, std::shared_ptr<const TagVocabulary> vocab,
                           double margin) {
  SynthOptions options;
  options.margin = margin;
  return std::move(synth_scores({gold}, std::move(vocab), options).front());
}

std::string read_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

void write_file(const std::filesystem::path& path, std::string_view data) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path.string() + "'");
  out.write(data.data(), static_cast<std::streamsize>(data.size()));
  if (!out) throw Error("failed writing '" + path.string() + "'");
}

}  // namespace tetratag
