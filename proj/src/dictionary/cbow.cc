#include "reqlint/dictionary/cbow.h"

#include <algorithm>
#include <cmath>
#include <cstring>

#include "reqlint/common/error.h"
#include "reqlint/common/random.h"

namespace reqlint::dictionary {
namespace {

void check_config(const TrainerConfig& c) {
  if (c.dim < 2) raise(ErrorCode::kInvalidArgs, "dim must be at least 2");
  if (c.min_count < 1) raise(ErrorCode::kInvalidArgs, "min_count must be at least 1");
  if (c.window < 1) raise(ErrorCode::kInvalidArgs, "window must be at least 1");
  if (c.epochs < 1) raise(ErrorCode::kInvalidArgs, "epochs must be at least 1");
  if (c.negative_samples < 1) raise(ErrorCode::kInvalidArgs, "negative_samples must be at least 1");
  if (!(c.learning_rate > 0)) raise(ErrorCode::kInvalidArgs, "learning_rate must be positive");
}

template <typename T>
void put(std::string& out, T value) {
  char buf[sizeof(T)];
  std::memcpy(buf, &value, sizeof(T));
  out.append(buf, sizeof(T));  // the supported targets are little-endian
}

double sigmoid(double x) {
  if (x > 30) return 1.0;
  if (x < -30) return 0.0;
  return 1.0 / (1.0 + std::exp(-x));
}

template <typename T>
double cosine(std::span<const T> a, std::span<const T> b) {
  if (a.size() != b.size()) raise(ErrorCode::kDimensionMismatch, "vectors differ in length");
  if (a.empty()) raise(ErrorCode::kZeroVector, "empty vector");
  double dot = 0, na = 0, nb = 0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    dot += double(a[i]) * double(b[i]);
    na += double(a[i]) * double(a[i]);
    nb += double(b[i]) * double(b[i]);
  }
  if (na == 0 || nb == 0) raise(ErrorCode::kZeroVector, "zero vector");
  return std::clamp(dot / (std::sqrt(na) * std::sqrt(nb)), -1.0, 1.0);
}

}  // namespace

EmbeddingModel::EmbeddingModel(TrainerConfig config, std::vector<std::string> words,
                               std::vector<std::uint64_t> counts, std::vector<float> vectors)
    : config_(config), words_(std::move(words)), counts_(std::move(counts)), vectors_(std::move(vectors)) {
  for (std::size_t i = 0; i < words_.size(); ++i) index_.emplace(words_[i], i);
}

std::optional<std::size_t> EmbeddingModel::index(std::string_view word) const {
  auto it = index_.find(std::string(word));
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::span<const float> EmbeddingModel::vector(std::size_t i) const {
  return {vectors_.data() + i * dim(), dim()};
}

std::span<const float> EmbeddingModel::vector(std::string_view word) const {
  const auto i = index(word);
  if (!i) raise(ErrorCode::kInvalidArgs, "'" + std::string(word) + "' is not in the vocabulary");
  return vector(*i);
}

std::string EmbeddingModel::serialize() const {
  std::string out = "RQLV1";
  put<std::uint32_t>(out, static_cast<std::uint32_t>(config_.dim));
  put<std::uint64_t>(out, words_.size());
  for (std::size_t i = 0; i < words_.size(); ++i) {
    put<std::uint32_t>(out, static_cast<std::uint32_t>(words_[i].size()));
    out += words_[i];
    put<std::uint64_t>(out, counts_[i]);
  }
  for (float v : vectors_) put<float>(out, v);
  return out;
}

EmbeddingModel train_cbow(const std::vector<std::vector<std::string>>& documents, const TrainerConfig& config) {
  check_config(config);
  std::unordered_map<std::string, std::uint64_t> freq;
  std::uint64_t total_tokens = 0;
  for (const auto& doc : documents) {
    for (const auto& w : doc) ++freq[w];
    total_tokens += doc.size();
  }
  const auto dim = static_cast<std::size_t>(config.dim);
  if (total_tokens < 10 * dim) {
    raise(ErrorCode::kCorpusTooSmall,
          "corpus has " + std::to_string(total_tokens) + " tokens, need " + std::to_string(10 * dim));
  }

  std::vector<std::pair<std::string, std::uint64_t>> vocab;
  for (auto& [w, c] : freq) {
    if (c >= static_cast<std::uint64_t>(config.min_count)) vocab.emplace_back(w, c);
  }
  if (vocab.empty()) raise(ErrorCode::kCorpusTooSmall, "no word reaches min_count");
  std::sort(vocab.begin(), vocab.end(),
            [](const auto& a, const auto& b) { return a.second != b.second ? a.second > b.second : a.first < b.first; });
  std::unordered_map<std::string, std::uint32_t> id;
  std::vector<std::string> words;
  std::vector<std::uint64_t> counts;
  for (std::uint32_t i = 0; i < vocab.size(); ++i) {
    id.emplace(vocab[i].first, i);
    words.push_back(vocab[i].first);
    counts.push_back(vocab[i].second);
  }
  const std::size_t n_vocab = words.size();

  // Documents as id streams with out-of-vocabulary words dropped.
  std::vector<std::vector<std::uint32_t>> streams;
  std::uint64_t train_words = 0;
  for (const auto& doc : documents) {
    std::vector<std::uint32_t> s;
    for (const auto& w : doc) {
      auto it = id.find(w);
      if (it != id.end()) s.push_back(it->second);
    }
    train_words += s.size();
    if (!s.empty()) streams.push_back(std::move(s));
  }

  // Noise distribution: unigram counts to the 3/4 power, sampled by
  // binary search over the cumulative weights.
  std::vector<double> cumulative(n_vocab);
  double acc = 0;
  for (std::size_t i = 0; i < n_vocab; ++i) {
    acc += std::pow(static_cast<double>(counts[i]), 0.75);
    cumulative[i] = acc;
  }

  Rng rng(config.seed);
  std::vector<float> syn0(n_vocab * dim), syn1(n_vocab * dim, 0.0f);
  for (auto& v : syn0) v = static_cast<float>((rng.uniform() - 0.5) / static_cast<double>(dim));

  std::vector<double> neu1(dim), neu1e(dim);
  const std::uint64_t total_steps = static_cast<std::uint64_t>(config.epochs) * train_words + 1;
  std::uint64_t step = 0;
  for (int epoch = 0; epoch < config.epochs; ++epoch) {
    for (const auto& s : streams) {
      for (std::size_t pos = 0; pos < s.size(); ++pos, ++step) {
        const double alpha =
            config.learning_rate * std::max(1.0 - static_cast<double>(step) / static_cast<double>(total_steps), 1e-4);
        // Reference CBOW shrinks the window by a random amount per position.
        const auto shrink = static_cast<std::size_t>(rng.below(static_cast<std::uint64_t>(config.window)));
        const std::size_t half = static_cast<std::size_t>(config.window) - shrink;
        const std::size_t lo = pos >= half ? pos - half : 0;
        const std::size_t hi = std::min(s.size() - 1, pos + half);

        std::fill(neu1.begin(), neu1.end(), 0.0);
        std::fill(neu1e.begin(), neu1e.end(), 0.0);
        std::size_t n_context = 0;
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          const float* v = &syn0[s[c] * dim];
          for (std::size_t d = 0; d < dim; ++d) neu1[d] += v[d];
          ++n_context;
        }
        if (n_context == 0) continue;
        for (auto& x : neu1) x /= static_cast<double>(n_context);

        const std::uint32_t center = s[pos];
        for (int k = 0; k <= config.negative_samples; ++k) {
          std::uint32_t target;
          double label;
          if (k == 0) {
            target = center;
            label = 1;
          } else {
            const double r = rng.uniform() * acc;
            target = static_cast<std::uint32_t>(std::upper_bound(cumulative.begin(), cumulative.end(), r) -
                                                cumulative.begin());
            if (target >= n_vocab) target = static_cast<std::uint32_t>(n_vocab - 1);
            if (target == center) continue;
            label = 0;
          }
          float* out = &syn1[target * dim];
          double f = 0;
          for (std::size_t d = 0; d < dim; ++d) f += neu1[d] * out[d];
          const double g = (label - sigmoid(f)) * alpha;
          for (std::size_t d = 0; d < dim; ++d) {
            neu1e[d] += g * out[d];
            out[d] += static_cast<float>(g * neu1[d]);
          }
        }
        for (std::size_t c = lo; c <= hi; ++c) {
          if (c == pos) continue;
          float* v = &syn0[s[c] * dim];
          for (std::size_t d = 0; d < dim; ++d) v[d] += static_cast<float>(neu1e[d]);
        }
      }
    }
  }
  return EmbeddingModel(config, std::move(words), std::move(counts), std::move(syn0));
}

double cosine_similarity(std::span<const float> a, std::span<const float> b) { return cosine(a, b); }
double cosine_similarity(std::span<const double> a, std::span<const double> b) { return cosine(a, b); }

}  // namespace reqlint::dictionary
