#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace reqlint::evaluation {

inline constexpr std::uint64_t kPermutationSeed = 20200401;

// 1-based ranks; tied values share the mean of their positions.
std::vector<double> average_ranks(std::span<const double> values);

struct SpearmanResult {
  double rho = 0;
  // Two-sided permutation estimate (hits + 1) / (permutations + 1);
  // absent when no permutations were requested.
  std::optional<double> p_value;
  std::size_t n = 0;
  std::size_t permutations = 0;
};

// Pearson correlation of the average ranks.
// Throws Error(kLengthMismatch), Error(kTooFewSamples) below 3 values and
// Error(kConstantInput) when either side has a single distinct value.
SpearmanResult spearman(std::span<const double> x, std::span<const double> y, std::size_t permutations = 10000,
                        std::uint64_t seed = kPermutationSeed);

}  // namespace reqlint::evaluation
