#include "lshc/classifier.hpp"

#include <cmath>
#include <iostream>
#include <stdexcept>

namespace lshc {
namespace {

double distance(std::span<const double> a, std::span<const double> b, int p) {
  double acc = 0.0;
  if (p == 2) {
    for (std::size_t i = 0; i < a.size(); ++i) {
      const double diff = a[i] - b[i];
      acc += diff * diff;
    }
    return std::sqrt(acc);
  }
  for (std::size_t i = 0; i < a.size(); ++i) acc += std::abs(a[i] - b[i]);
  return acc;
}

int majority_label(const Bucket& bucket) {
  std::size_t ones = 0;
  for (const auto& ex : bucket) ones += static_cast<std::size_t>(ex.label);
  // Strict majority test; an exact tie yields the default label 0.
  return 2 * ones > bucket.size() ? 1 : 0;
}

}  // namespace

std::size_t member_count_for(std::size_t n, double p1) {
  if (n == 0) throw std::invalid_argument("member_count_for: n must be >= 1");
  if (!(p1 > 0.0 && p1 < 1.0))
    throw std::invalid_argument("member_count_for: p1 must lie in (0, 1)");
  const double m = std::floor(std::log(static_cast<double>(n)) / (2.0 * std::log(1.0 / p1)));
  return m < 1.0 ? 1 : static_cast<std::size_t>(m);
}

ClassifierModel train(std::span<const LabeledExample> sample, StableFamilyKind kind,
                      Rng& rng, const TrainOptions& options) {
  if (sample.empty()) throw std::invalid_argument("train: empty sample");
  const int d = static_cast<int>(sample[0].point.size());
  if (d == 0) throw std::invalid_argument("train: zero-dimensional points");

  std::size_t outside = 0;
  for (const auto& ex : sample) {
    if (static_cast<int>(ex.point.size()) != d)
      throw std::invalid_argument("train: inconsistent point dimensions");
    if (ex.label != 0 && ex.label != 1)
      throw std::invalid_argument("train: labels must be 0 or 1");
    for (double v : ex.point)
      if (!(v >= 0.0 && v <= 1.0)) {
        ++outside;
        break;
      }
  }
  if (outside > 0)
    std::cerr << "lshc: warning: " << outside << " of " << sample.size()
              << " training points have coordinates outside [0,1]^d\n";

  ClassifierModel model;
  model.kind_ = kind;
  model.d_ = d;
  model.params_ = sensitivity_for(sample.size(), d, kind, options.c);
  model.m_ = member_count_for(sample.size(), model.params_.p1);

  std::vector<StableHashFunction> members;
  members.reserve(model.m_);
  for (std::size_t i = 0; i < model.m_; ++i)
    members.push_back(sample_hash(kind, d, model.params_.radius, rng));
  model.composite_ = CompositeHash(std::move(members));

  BucketTable table;
  table.reserve(sample.size());
  for (const auto& ex : sample)
    table[model.composite_.apply(ex.point)].push_back(ex);

  model.labels_.reserve(table.size());
  for (const auto& [key, bucket] : table) {
    const int label = majority_label(bucket);
    // First pair in insertion order that agrees with the majority vote.
    for (const auto& ex : bucket)
      if (ex.label == label) {
        model.labels_.emplace(key, ex);
        break;
      }
  }

  if (options.keep_table) model.retained_table_ = std::move(table);
  return model;
}

ClassifierModel assemble_model(
    StableFamilyKind kind, int d, SensitivityParams params,
    std::vector<StableHashFunction> members,
    std::unordered_map<BucketKey, LabeledExample, BucketKeyHash> labels) {
  ClassifierModel model;
  model.kind_ = kind;
  model.d_ = d;
  model.params_ = params;
  model.m_ = members.size();
  model.composite_ = CompositeHash(std::move(members));
  model.labels_ = std::move(labels);
  return model;
}

int ClassifierModel::predict(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != d_)
    throw std::invalid_argument("predict: dimension mismatch");
  const auto it = labels_.find(composite_.apply(x));
  return it == labels_.end() ? 0 : it->second.label;
}

double ClassifierModel::risk_estimate(std::span<const LabeledExample> test) const {
  if (test.empty()) throw std::invalid_argument("risk_estimate: empty test set");
  std::size_t wrong = 0;
  for (const auto& ex : test)
    if (predict(ex.point) != ex.label) ++wrong;
  return static_cast<double>(wrong) / static_cast<double>(test.size());
}

BucketDiagnostics ClassifierModel::diagnose(std::span<const double> x) const {
  if (!retained_table_)
    throw std::logic_error("diagnose: model was trained without keep_table");
  if (static_cast<int>(x.size()) != d_)
    throw std::invalid_argument("diagnose: dimension mismatch");

  BucketDiagnostics diag;
  const auto it = retained_table_->find(composite_.apply(x));
  if (it == retained_table_->end()) return diag;

  const double threshold = params_.c * params_.radius;
  const int p = stable_exponent(kind_);
  for (const auto& ex : it->second) {
    if (distance(x, ex.point, p) < threshold)
      ++diag.close;
    else
      ++diag.far;
  }
  diag.total = it->second.size();
  diag.far_fraction =
      diag.total == 0 ? 0.0 : static_cast<double>(diag.far) / static_cast<double>(diag.total);
  return diag;
}

}  // namespace lshc
