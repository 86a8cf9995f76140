#pragma once

#include <span>

#include "reqlint/evaluation/ground_truth.h"

namespace reqlint::evaluation {

struct PrfScores {
  double precision = 0;
  double recall = 0;
  double f1 = 0;
  // Set when any of the three had a zero denominator and was taken as 0.
  bool degenerate = false;
};

PrfScores precision_recall_f1(const ConfusionCounts& c);

struct ErrorMetrics {
  double mae = 0;
  double mse = 0;
  double rmse = 0;
  double mslne = 0;  // mean squared error of ln(1 + y)
  double mdae = 0;   // median absolute error
};

// Throws Error(kLengthMismatch) for different lengths, Error(kInvalidArgs)
// for empty input or values that are negative or not finite.
ErrorMetrics error_metrics(std::span<const double> truth, std::span<const double> predicted);

// Median, mean of the middle pair for even sizes. Throws kInvalidArgs when empty.
double median(std::vector<double> values);

}  // namespace reqlint::evaluation
