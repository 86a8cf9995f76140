#pragma once

#include <cstddef>
#include <string>
#include <vector>

namespace reqlint::evaluation {

struct TreeNode {
  int depth = 0;
  // Split feature, or -1 for a leaf. Samples with x[feature] <= cutoff go left.
  int feature = -1;
  double cutoff = 0;
  double mse = 0;       // of the targets reaching the node
  double fraction = 0;  // share of all samples reaching the node
  double value = 0;     // mean target
  int left = -1;
  int right = -1;
  std::vector<std::size_t> samples;
};

struct TreeSummary {
  std::vector<TreeNode> nodes;     // nodes[0] is the root, children follow parents
  std::vector<double> importances;  // sum to 1, or all 0 for a single leaf
  std::vector<std::string> feature_names;
};

struct TreeOptions {
  int max_depth = 3;
  std::size_t min_samples_split = 2;
  std::vector<std::string> feature_names;  // optional, one per feature
};

// Weighted decrease n*mse(node) - nl*mse(left) - nr*mse(right) for splitting
// `samples` at x[feature] <= cutoff, divided by the total sample count.
double split_gain(const std::vector<std::vector<double>>& features, const std::vector<double>& target,
                  const std::vector<std::size_t>& samples, std::size_t feature, double cutoff);

// CART regression tree. Every node takes the (feature, midpoint) with the
// largest MSE decrease; ties keep the lower feature, then the lower cutoff.
// Throws Error(kTooFewSamples) below 10 samples and Error(kInvalidArgs)
// for ragged or mismatched input.
TreeSummary tree_importance(const std::vector<std::vector<double>>& features, const std::vector<double>& target,
                            const TreeOptions& options = {});

}  // namespace reqlint::evaluation
