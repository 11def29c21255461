#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "lshc/rng.hpp"
#include "lshc/sensitivity.hpp"
#include "lshc/stable_hash.hpp"

namespace lshc {

struct LabeledExample {
  std::vector<double> point;
  int label = 0;  // 0 or 1
};

// Per-bucket contents in insertion order.
using Bucket = std::vector<LabeledExample>;
using BucketTable = std::unordered_map<BucketKey, Bucket, BucketKeyHash>;

// Bucket composition around a query point: members within distance c*r of
// the query count as close, the rest as far.
struct BucketDiagnostics {
  std::size_t total = 0;
  std::size_t close = 0;
  std::size_t far = 0;
  double far_fraction = 0.0;  // far / total, 0 when the bucket is empty
};

struct TrainOptions {
  double c = 3.0;           // separation factor of the sensitivity params
  bool keep_table = false;  // retain the full bucket table for diagnostics
};

// Trained model: the composite hash and the condensed table mapping each
// nonempty bucket key to one representative example carrying the bucket's
// majority label. Immutable after training; safe for concurrent queries.
class ClassifierModel {
 public:
  // Majority label of the bucket containing x, or the default label 0 when
  // the bucket is empty. Costs exactly m hash evaluations plus one lookup.
  int predict(std::span<const double> x) const;

  // Fraction of mispredicted examples.
  double risk_estimate(std::span<const LabeledExample> test) const;

  // Close/far composition of the query's bucket; requires a retained table.
  BucketDiagnostics diagnose(std::span<const double> x) const;

  int dim() const { return d_; }
  std::size_t member_count() const { return m_; }  // m = number of hash functions
  StableFamilyKind kind() const { return kind_; }
  const SensitivityParams& params() const { return params_; }
  const CompositeHash& composite() const { return composite_; }
  const std::unordered_map<BucketKey, LabeledExample, BucketKeyHash>& labels() const {
    return labels_;
  }
  const std::optional<BucketTable>& retained_table() const { return retained_table_; }

  std::uint64_t hash_evaluations() const { return composite_.hash_evaluations(); }
  void reset_hash_evaluations() const { composite_.reset_hash_evaluations(); }

 private:
  friend ClassifierModel train(std::span<const LabeledExample>, StableFamilyKind, Rng&,
                               const TrainOptions&);
  friend ClassifierModel assemble_model(StableFamilyKind, int, SensitivityParams,
                                        std::vector<StableHashFunction>,
                                        std::unordered_map<BucketKey, LabeledExample,
                                                           BucketKeyHash>);

  StableFamilyKind kind_ = StableFamilyKind::gaussian;
  int d_ = 0;
  std::size_t m_ = 0;
  SensitivityParams params_{};
  CompositeHash composite_;
  std::unordered_map<BucketKey, LabeledExample, BucketKeyHash> labels_;  // T'
  std::optional<BucketTable> retained_table_;                           // T
};

// Number of member hashes for a sample of size n: floor(ln n / (2 ln(1/p1))),
// clamped to at least 1.
std::size_t member_count_for(std::size_t n, double p1);

// Trains on the sample: draws m member hashes, buckets every example, and
// condenses each nonempty bucket to one representative whose label is the
// bucket majority (exact ties resolve to 0). Touches each example once, for
// a total of exactly n*m single-hash evaluations.
ClassifierModel train(std::span<const LabeledExample> sample, StableFamilyKind kind,
                      Rng& rng, const TrainOptions& options = {});

// Rebuilds a model from parts (used by deserialization).
ClassifierModel assemble_model(
    StableFamilyKind kind, int d, SensitivityParams params,
    std::vector<StableHashFunction> members,
    std::unordered_map<BucketKey, LabeledExample, BucketKeyHash> labels);

}  // namespace lshc
