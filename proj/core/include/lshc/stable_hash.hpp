#pragma once

#include <atomic>
#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "lshc/rng.hpp"

namespace lshc {

// Which p-stable law drives the random projections: Gaussian for the l2
// metric (p = 2), Cauchy for l1 (p = 1).
enum class StableFamilyKind { gaussian, cauchy };

int stable_exponent(StableFamilyKind kind);  // 2 or 1
std::string to_string(StableFamilyKind kind);
StableFamilyKind family_from_string(const std::string& name);

// One projection-and-quantize hash: x -> floor((<projection, x> + offset) / width).
struct StableHashFunction {
  std::vector<double> projection;  // d entries, iid from the standard stable law
  double offset = 0.0;             // uniform on [0, width)
  double width = 1.0;

  std::int64_t operator()(std::span<const double> x) const;
  int dim() const { return static_cast<int>(projection.size()); }
};

// Draws a hash function with iid stable projection entries and a uniform
// offset. Consumes exactly d + 1 variates in a fixed order, so a fixed seed
// reproduces the same function.
StableHashFunction sample_hash(StableFamilyKind kind, int d, double width, Rng& rng);

// Composite key g(x) = (h_1(x), ..., h_m(x)); equality is component-wise.
struct BucketKey {
  std::vector<std::int64_t> codes;
  bool operator==(const BucketKey&) const = default;
  bool operator<(const BucketKey& o) const { return codes < o.codes; }
};

struct BucketKeyHash {
  std::size_t operator()(const BucketKey& key) const {
    std::size_t h = key.codes.size();
    for (std::int64_t c : key.codes)
      h ^= std::hash<std::int64_t>{}(c) + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
  }
};

// Concatenation of m member hashes sharing dimension and width. apply() is
// pure; an instrumentation counter tracks the number of single-hash
// evaluations (m per apply) and is shared across copies.
class CompositeHash {
 public:
  CompositeHash() : evals_(std::make_shared<std::atomic<std::uint64_t>>(0)) {}
  explicit CompositeHash(std::vector<StableHashFunction> members);

  BucketKey apply(std::span<const double> x) const;

  std::size_t size() const { return members_.size(); }
  int dim() const { return members_.empty() ? 0 : members_[0].dim(); }
  double width() const { return members_.empty() ? 0.0 : members_[0].width; }
  const std::vector<StableHashFunction>& members() const { return members_; }

  std::uint64_t hash_evaluations() const { return evals_->load(); }
  void reset_hash_evaluations() const { evals_->store(0); }

 private:
  std::vector<StableHashFunction> members_;
  std::shared_ptr<std::atomic<std::uint64_t>> evals_;
};

}  // namespace lshc
