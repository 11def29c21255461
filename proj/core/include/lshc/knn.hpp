#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <vector>

#include "lshc/classifier.hpp"

namespace lshc {

// Brute-force k-nearest-neighbor majority classifier. The training set is
// stored verbatim; every query scans all n points (exactly n distance
// evaluations, tracked by an instrumentation counter).
class KnnModel {
 public:
  // Distance ties at the k-th slot resolve to the lower training index;
  // label ties resolve to 0.
  int predict(std::span<const double> x) const;

  // Fraction of mispredicted examples.
  double risk_estimate(std::span<const LabeledExample> test) const;

  std::size_t k() const { return k_; }
  int norm_exponent() const { return norm_p_; }
  std::size_t size() const { return examples_.size(); }
  const std::vector<LabeledExample>& examples() const { return examples_; }

  std::uint64_t distance_evaluations() const { return evals_->load(); }
  void reset_distance_evaluations() const { evals_->store(0); }

 private:
  friend KnnModel knn_train(std::span<const LabeledExample>, std::size_t, int, bool);

  std::vector<LabeledExample> examples_;
  std::size_t k_ = 1;
  int norm_p_ = 2;
  std::shared_ptr<std::atomic<std::uint64_t>> evals_;
};

// Requires 1 <= k <= n. Even k is rejected unless allow_even_k is set, since
// odd k avoids vote ties.
KnnModel knn_train(std::span<const LabeledExample> sample, std::size_t k, int norm_p = 2,
                   bool allow_even_k = false);

// ceil(sqrt(n)) rounded up to odd; the consistency-regime default.
std::size_t default_knn_k(std::size_t n);

}  // namespace lshc
