#pragma once

#include <cstdint>
#include <filesystem>
#include <limits>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "tetratag/decoder.hpp"
#include "tetratag/tags.hpp"

namespace tetratag {

// Written into cells whose tag cannot occur at that position (a shift on a
// fencepost row and so on). The decoders never read these cells.
inline constexpr double kOutOfPositionScore = std::numeric_limits<double>::lowest();

inline constexpr std::uint32_t kScoreFormatVersion = 1;
inline constexpr std::string_view kTextMagic = "tetratag-scores";
inline constexpr std::string_view kBinaryMagic = "TTSC";

enum class ScoreFormat { kText, kBinary };

struct ScoreFile {
  std::shared_ptr<const TagVocabulary> vocab;
  std::vector<ScoreMatrix> records;
};

// Every record must share `vocab` (compared by value).
std::string write_scores_text(const TagVocabulary& vocab,
                              const std::vector<ScoreMatrix>& records);
std::string write_scores_binary(const TagVocabulary& vocab,
                                const std::vector<ScoreMatrix>& records);

ScoreFile read_scores_text(std::string_view data);
ScoreFile read_scores_binary(std::string_view data);
// Dispatches on the leading magic bytes.
ScoreFile read_scores(std::string_view data);

void save_scores(const std::filesystem::path& path, const TagVocabulary& vocab,
                 const std::vector<ScoreMatrix>& records, ScoreFormat format);
ScoreFile load_scores(const std::filesystem::path& path);

struct SynthOptions {
  double noise_sigma = 0.0;
  std::uint64_t seed = 0;
  double margin = 4.0;
};

// Gold tags score 0 and every other in-position tag -margin, then N(0, sigma^2)
// noise is added to each in-position cell. Noise comes from a single
// std::mt19937_64 stream seeded with `seed`, consumed sentence by sentence in
// row-major order over in-position cells; uniforms take the top 53 bits of each
// draw and normals use the Box-Muller transform (cosine then sine branch).
// Records are named "0", "1", ... Throws FormatError when a gold tag is not in
// the vocabulary.
std::vector<ScoreMatrix> synth_scores(const std::vector<TagSequence>& gold,
                                      std::shared_ptr<const TagVocabulary> vocab,
                                      const SynthOptions& options = {});

// synth_scores with no noise for a single sentence.
ScoreMatrix one_hot_scores(const TagSequence& gold,
                           std::shared_ptr<const TagVocabulary> vocab,
                           double margin = 4.0);

std::string read_file(const std::filesystem::path& path);
void write_file(const std::filesystem::path& path, std::string_view data);

}  // namespace tetratag
