#include "reqlint/evaluation/metrics.h"

#include <algorithm>
#include <cmath>

#include "reqlint/common/error.h"

namespace reqlint::evaluation {

PrfScores precision_recall_f1(const ConfusionCounts& c) {
  PrfScores s;
  const auto tp = static_cast<double>(c.tp);
  if (c.tp + c.fp > 0) {
    s.precision = tp / static_cast<double>(c.tp + c.fp);
  } else {
    s.degenerate = true;
  }
  if (c.tp + c.fn > 0) {
    s.recall = tp / static_cast<double>(c.tp + c.fn);
  } else {
    s.degenerate = true;
  }
  if (s.precision + s.recall > 0) {
    s.f1 = 2 * s.precision * s.recall / (s.precision + s.recall);
  } else {
    s.degenerate = true;
  }
  return s;
}

double median(std::vector<double> values) {
  if (values.empty()) raise(ErrorCode::kInvalidArgs, "median of nothing");
  const std::size_t mid = values.size() / 2;
  std::nth_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid), values.end());
  const double upper = values[mid];
  if (values.size() % 2 == 1) return upper;
  const double lower = *std::max_element(values.begin(), values.begin() + static_cast<std::ptrdiff_t>(mid));
  return (lower + upper) / 2;
}

ErrorMetrics error_metrics(std::span<const double> truth, std::span<const double> predicted) {
  if (truth.size() != predicted.size()) {
    raise(ErrorCode::kLengthMismatch, "error metrics over " + std::to_string(truth.size()) + " and " +
                                          std::to_string(predicted.size()) + " values");
  }
  if (truth.empty()) raise(ErrorCode::kInvalidArgs, "error metrics need at least one value");
  const auto bad = [](double v) { return !std::isfinite(v) || v < 0; };
  if (std::any_of(truth.begin(), truth.end(), bad) || std::any_of(predicted.begin(), predicted.end(), bad)) {
    raise(ErrorCode::kInvalidArgs, "error metrics need finite non-negative values");
  }
  ErrorMetrics m;
  std::vector<double> abs_err(truth.size());
  for (std::size_t i = 0; i < truth.size(); ++i) {
    const double d = truth[i] - predicted[i];
    const double dl = std::log1p(truth[i]) - std::log1p(predicted[i]);
    abs_err[i] = std::abs(d);
    m.mae += abs_err[i];
    m.mse += d * d;
    m.mslne += dl * dl;
  }
  const auto n = static_cast<double>(truth.size());
  m.mae /= n;
  m.mse /= n;
  m.mslne /= n;
  m.rmse = std::sqrt(m.mse);
  m.mdae = median(std::move(abs_err));
  return m;
}

}  // namespace reqlint::evaluation
