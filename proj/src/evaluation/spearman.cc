#include "reqlint/evaluation/spearman.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include "reqlint/common/error.h"
#include "reqlint/common/random.h"

namespace reqlint::evaluation {

std::vector<double> average_ranks(std::span<const double> values) {
  std::vector<std::size_t> order(values.size());
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) { return values[a] < values[b]; });
  std::vector<double> ranks(values.size());
  for (std::size_t i = 0; i < order.size();) {
    std::size_t j = i;
    while (j + 1 < order.size() && values[order[j + 1]] == values[order[i]]) ++j;
    // Positions i..j (0-based) share rank mean(i+1..j+1).
    const double r = static_cast<double>(i + j) / 2 + 1;
    for (std::size_t k = i; k <= j; ++k) ranks[order[k]] = r;
    i = j + 1;
  }
  return ranks;
}

namespace {

// Pearson correlation of centered vectors with precomputed norms.
double centered_dot(const std::vector<double>& a, const std::vector<double>& b) {
  double s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

std::vector<double> centered(std::vector<double> v) {
  const double mean = std::accumulate(v.begin(), v.end(), 0.0) / static_cast<double>(v.size());
  for (double& x : v) x -= mean;
  return v;
}

}  // namespace

SpearmanResult spearman(std::span<const double> x, std::span<const double> y, std::size_t permutations,
                        std::uint64_t seed) {
  if (x.size() != y.size()) {
    raise(ErrorCode::kLengthMismatch,
          "spearman over " + std::to_string(x.size()) + " and " + std::to_string(y.size()) + " values");
  }
  if (x.size() < 3) raise(ErrorCode::kTooFewSamples, "spearman needs at least 3 pairs");
  const auto rx = centered(average_ranks(x));
  auto ry = centered(average_ranks(y));
  const double nx = std::sqrt(centered_dot(rx, rx));
  const double ny = std::sqrt(centered_dot(ry, ry));
  if (nx == 0 || ny == 0) raise(ErrorCode::kConstantInput, "spearman correlation is undefined for constant input");

  SpearmanResult r;
  r.n = x.size();
  r.permutations = permutations;
  r.rho = std::clamp(centered_dot(rx, ry) / (nx * ny), -1.0, 1.0);
  if (permutations == 0) return r;

  // Shuffling ranks keeps the norms, so only the dot product is recomputed.
  const double observed = std::abs(centered_dot(rx, ry));
  const double tolerance = 1e-12 * nx * ny;
  Rng rng(seed);
  std::size_t hits = 0;
  for (std::size_t p = 0; p < permutations; ++p) {
    rng.shuffle(ry);
    if (std::abs(centered_dot(rx, ry)) >= observed - tolerance) ++hits;
  }
  r.p_value = static_cast<double>(hits + 1) / static_cast<double>(permutations + 1);
  return r;
}

}  // namespace reqlint::evaluation
