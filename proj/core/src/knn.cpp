#include "lshc/knn.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace lshc {
namespace {

// Squared l2 or plain l1; both order distances monotonically.
double comparable_distance(std::span<const double> a, std::span<const double> b, int p) {
  double acc = 0.0;
  if (p == 2) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double diff = a[i] - b[i];
      acc += diff * diff;
    }
  } else {
    for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  }
  return acc;
}

}  // namespace

KnnModel knn_train(std::span<const LabeledExample> sample, std::size_t k, int norm_p,
                   bool allow_even_k) {
  if (sample.empty()) throw std::invalid_argument("knn_train: empty sample");
  if (k < 1 || k > sample.size())
    throw std::invalid_argument("knn_train: k must satisfy 1 <= k <= n");
  if (k % 2 == 0 && !allow_even_k)
    throw std::invalid_argument("knn_train: even k rejected (pass allow_even_k to override)");
  if (norm_p != 1 && norm_p != 2)
    throw std::invalid_argument("knn_train: norm exponent must be 1 or 2");
  const std::size_t d = sample[0].point.size();
  for (const auto& ex : sample)
    if (ex.point.size() != d)
      throw std::invalid_argument("knn_train: inconsistent point dimensions");

  KnnModel model;
  model.examples_.assign(sample.begin(), sample.end());
  model.k_ = k;
  model.norm_p_ = norm_p;
  model.evals_ = std::make_shared<std::atomic<std::uint64_t>>(0);
  return model;
}

std::size_t default_knn_k(std::size_t n) {
  auto k = static_cast<std::size_t>(std::ceil(std::sqrt(static_cast<double>(n))));
  if (k % 2 == 0) ++k;
  if (k > n) k = (n % 2 == 0) ? n - 1 : n;  // clamp for tiny n, keeping k odd
  return std::max<std::size_t>(k, 1);
}

double KnnModel::risk_estimate(std::span<const LabeledExample> test) const {
  if (test.empty()) throw std::invalid_argument("risk_estimate: empty test set");
  std::size_t wrong = 0;
  for (const auto& ex : test)
    if (predict(ex.point) != ex.label) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(test.size());
}

int KnnModel::predict(std::span<const double> x) const {
  if (x.size() != examples_[0].point.size())
    throw std::invalid_argument("knn predict: dimension mismatch");

  std::vector<std::pair<double, std::size_t>> dist(examples_.size());
  for (std::size_t i = 0; i < examples_.size(); ++i)
    dist[i] = {comparable_distance(x, examples_[i].point, norm_p_), i};
  evals_->fetch_add(examples_.size(), std::memory_order_relaxed);

  std::partial_sort(dist.begin(), dist.begin() + k_, dist.end());  // (distance, index)

  std::size_t ones = 0;
  for (std::size_t i = 0; i < k_; ++i)
    ones += static_cast<std::size_t>(examples_[dist[i].second].label);
  return 2 * ones > k_ ? 1 : 0;
}

}  // namespace lshc
