#pragma once

#include <cstdint>
#include <filesystem>
#include <memory>
#include <string>
#include <string_view>
#include <unordered_map>
#include <utility>
#include <vector>

#include "reqlint/text/token.h"

namespace reqlint::text {

struct TaggedSentence {
  std::vector<std::string> words;
  std::vector<std::string> tags;
};

// "word<TAB>tag" lines, a blank line between sentences; "#" lines without
// a tab are comments. Joint tags such as
// "NN|CD" keep their first member.
std::vector<TaggedSentence> parse_tagged_corpus(std::string_view text);

struct TaggerTrainingOptions {
  int iterations = 5;
  std::uint64_t seed = 1;
  // Words seen at least this often with one dominant tag skip the model.
  int tagdict_min_count = 20;
  double tagdict_min_share = 0.97;
  // Averaged weights smaller than this in magnitude are dropped on save.
  float prune_below = 1e-3f;
};

// Averaged perceptron over the usual local window features (word, affixes,
// neighbouring words and the two previous predicted tags). Weights are
// keyed by a 64-bit hash of the feature string.
//
// Weight file ("RQLT1"), little-endian:
//   magic[5] u32 version
//   u32 n_classes   { u16 len, bytes }
//   u32 n_tagdict   { u16 len, bytes, u16 class }
//   u32 n_features  { u64 hash, u16 n, n x { u16 class, f32 weight } }
class PerceptronTagger {
 public:
  static constexpr std::uint32_t kFormatVersion = 1;

  static PerceptronTagger train(const std::vector<TaggedSentence>& sentences,
                                const TaggerTrainingOptions& options = {});

  static PerceptronTagger deserialize(std::string_view bytes);
  static std::shared_ptr<const PerceptronTagger> load(const std::filesystem::path& path);
  // data/tagger/en-perceptron.bin, loaded once.
  static std::shared_ptr<const PerceptronTagger> default_instance();

  std::string serialize() const;
  void save(const std::filesystem::path& path) const;

  // One tag per word; the sequence is treated as one sentence.
  std::vector<std::string> tag(const std::vector<std::string>& words) const;
  // Tags tokens[first, last) in place.
  void tag(std::vector<Token>& tokens, std::size_t first, std::size_t last) const;

  const std::vector<std::string>& classes() const { return classes_; }
  std::size_t feature_count() const { return weights_.size(); }

 private:
  using Weights = std::vector<std::pair<std::uint16_t, float>>;

  std::uint16_t predict(const std::vector<std::uint64_t>& features) const;

  std::vector<std::string> classes_;
  std::unordered_map<std::string, std::uint16_t> tagdict_;
  std::unordered_map<std::uint64_t, Weights> weights_;
};

}  // namespace reqlint::text
