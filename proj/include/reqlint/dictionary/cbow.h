#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace reqlint::dictionary {

// CBOW with negative sampling. Defaults beyond dim/min_count/window follow
// the reference word2vec tool: 5 negatives, 5 epochs, rate 0.025 decaying
// linearly, no subsampling.
struct TrainerConfig {
  int dim = 50;
  int min_count = 5;
  int window = 10;
  int epochs = 5;
  int negative_samples = 5;
  double learning_rate = 0.025;
  std::uint64_t seed = 1;
};

class EmbeddingModel {
 public:
  EmbeddingModel() = default;
  EmbeddingModel(TrainerConfig config, std::vector<std::string> words, std::vector<std::uint64_t> counts,
                 std::vector<float> vectors);

  const TrainerConfig& config() const { return config_; }
  std::size_t dim() const { return static_cast<std::size_t>(config_.dim); }
  std::size_t size() const { return words_.size(); }
  const std::vector<std::string>& words() const { return words_; }  // by descending count
  std::uint64_t count(std::size_t index) const { return counts_[index]; }

  std::optional<std::size_t> index(std::string_view word) const;
  bool contains(std::string_view word) const { return index(word).has_value(); }
  std::span<const float> vector(std::size_t index) const;
  // Throws Error(kInvalidArgs) for a word outside the vocabulary.
  std::span<const float> vector(std::string_view word) const;

  // Little-endian binary dump; identical models give identical bytes.
  std::string serialize() const;

 private:
  TrainerConfig config_;
  std::vector<std::string> words_;
  std::vector<std::uint64_t> counts_;
  std::vector<float> vectors_;
  std::unordered_map<std::string, std::size_t> index_;
};

// Trains on the documents (each one a window boundary). Deterministic for a
// given seed and input. Throws Error(kInvalidArgs) for a bad config and
// Error(kCorpusTooSmall) when the corpus has fewer than 10 * dim tokens or
// no word reaches min_count.
EmbeddingModel train_cbow(const std::vector<std::vector<std::string>>& documents, const TrainerConfig& config);

// Throws Error(kDimensionMismatch) or Error(kZeroVector).
double cosine_similarity(std::span<const float> a, std::span<const float> b);
double cosine_similarity(std::span<const double> a, std::span<const double> b);

}  // namespace reqlint::dictionary
