#include "reqlint/evaluation/regression_tree.h"

#include <algorithm>
#include <deque>
#include <numeric>

#include "reqlint/common/error.h"

namespace reqlint::evaluation {

namespace {

struct Moments {
  double n = 0, sum = 0, sq = 0;
  void add(double y) {
    n += 1;
    sum += y;
    sq += y * y;
  }
  // Sum of squared deviations from the mean.
  double sse() const { return n == 0 ? 0 : std::max(0.0, sq - sum * sum / n); }
};

Moments moments(const std::vector<double>& target, const std::vector<std::size_t>& samples) {
  Moments m;
  for (auto i : samples) m.add(target[i]);
  return m;
}

struct Split {
  int feature = -1;
  double cutoff = 0;
  double gain = 0;
};

Split best_split(const std::vector<std::vector<double>>& x, const std::vector<double>& y,
                 const std::vector<std::size_t>& samples, double total) {
  const double node_sse = moments(y, samples).sse();
  Split best;
  std::vector<std::size_t> order = samples;
  const std::size_t features = x.front().size();
  for (std::size_t f = 0; f < features; ++f) {
    std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
      return x[a][f] < x[b][f] || (x[a][f] == x[b][f] && a < b);
    });
    Moments left;
    Moments right = moments(y, order);
    for (std::size_t k = 0; k + 1 < order.size(); ++k) {
      const double v = y[order[k]];
      left.add(v);
      right.n -= 1;
      right.sum -= v;
      right.sq -= v * v;
      const double a = x[order[k]][f];
      const double b = x[order[k + 1]][f];
      if (a == b) continue;
      const double gain = (node_sse - left.sse() - right.sse()) / total;
      if (gain > best.gain + 1e-15) best = {static_cast<int>(f), a + (b - a) / 2, gain};
    }
  }
  return best;
}

}  // namespace

double split_gain(const std::vector<std::vector<double>>& features, const std::vector<double>& target,
                  const std::vector<std::size_t>& samples, std::size_t feature, double cutoff) {
  std::vector<std::size_t> l, r;
  for (auto i : samples) (features[i][feature] <= cutoff ? l : r).push_back(i);
  const double parent = moments(target, samples).sse();
  return (parent - moments(target, l).sse() - moments(target, r).sse()) / static_cast<double>(target.size());
}

TreeSummary tree_importance(const std::vector<std::vector<double>>& features, const std::vector<double>& target,
                            const TreeOptions& options) {
  if (features.size() != target.size()) raise(ErrorCode::kInvalidArgs, "one feature row per target value");
  if (target.size() < 10) {
    raise(ErrorCode::kTooFewSamples, "tree needs at least 10 samples, got " + std::to_string(target.size()));
  }
  const std::size_t width = features.front().size();
  if (width == 0) raise(ErrorCode::kInvalidArgs, "no features");
  for (const auto& row : features) {
    if (row.size() != width) raise(ErrorCode::kInvalidArgs, "ragged feature rows");
  }
  if (options.max_depth < 0) raise(ErrorCode::kInvalidArgs, "negative depth");
  if (!options.feature_names.empty() && options.feature_names.size() != width) {
    raise(ErrorCode::kInvalidArgs, "one name per feature");
  }

  TreeSummary tree;
  tree.importances.assign(width, 0);
  tree.feature_names = options.feature_names;
  if (tree.feature_names.empty()) {
    for (std::size_t f = 0; f < width; ++f) tree.feature_names.push_back("f" + std::to_string(f));
  }
  const auto total = static_cast<double>(target.size());

  TreeNode root;
  root.samples.resize(target.size());
  std::iota(root.samples.begin(), root.samples.end(), 0);
  tree.nodes.push_back(std::move(root));
  std::deque<std::size_t> queue{0};
  while (!queue.empty()) {
    const std::size_t id = queue.front();
    queue.pop_front();
    {
      TreeNode& node = tree.nodes[id];
      const Moments m = moments(target, node.samples);
      node.value = m.sum / m.n;
      node.mse = m.sse() / m.n;
      node.fraction = m.n / total;
      if (node.depth >= options.max_depth || node.samples.size() < options.min_samples_split || node.mse == 0) continue;
    }
    const Split s = best_split(features, target, tree.nodes[id].samples, total);
    if (s.feature < 0) continue;
    TreeNode l, r;
    l.depth = r.depth = tree.nodes[id].depth + 1;
    for (auto i : tree.nodes[id].samples) {
      (features[i][static_cast<std::size_t>(s.feature)] <= s.cutoff ? l.samples : r.samples).push_back(i);
    }
    tree.importances[static_cast<std::size_t>(s.feature)] += s.gain;
    tree.nodes[id].feature = s.feature;
    tree.nodes[id].cutoff = s.cutoff;
    tree.nodes[id].left = static_cast<int>(tree.nodes.size());
    tree.nodes[id].right = static_cast<int>(tree.nodes.size() + 1);
    tree.nodes.push_back(std::move(l));
    tree.nodes.push_back(std::move(r));
    queue.push_back(tree.nodes.size() - 2);
    queue.push_back(tree.nodes.size() - 1);
  }
  const double sum = std::accumulate(tree.importances.begin(), tree.importances.end(), 0.0);
  if (sum > 0) {
    for (double& v : tree.importances) v /= sum;
  }
  return tree;
}

}  // namespace reqlint::evaluation
