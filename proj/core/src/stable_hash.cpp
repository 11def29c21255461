#include "lshc/stable_hash.hpp"

#include <cmath>
#include <stdexcept>

namespace lshc {

int stable_exponent(StableFamilyKind kind) {
  return kind == StableFamilyKind::gaussian ? 2 : 1;
}

std::string to_string(StableFamilyKind kind) {
  return kind == StableFamilyKind::gaussian ? "gaussian" : "cauchy";
}

StableFamilyKind family_from_string(const std::string& name) {
  if (name == "gaussian") return StableFamilyKind::gaussian;
  if (name == "cauchy") return StableFamilyKind::cauchy;
  throw std::invalid_argument("unknown stable family: " + name);
}

std::int64_t StableHashFunction::operator()(std::span<const double> x) const {
  if (x.size() != projection.size())
    throw std::invalid_argument("hash: point dimension " + std::to_string(x.size()) +
                                " != projection dimension " + std::to_string(projection.size()));
  double dot = 0.0;
  for (std::size_t i = 0; i < projection.size(); ++i) dot += projection[i] * x[i];
  return static_cast<std::int64_t>(std::floor((dot + offset) / width));
}

StableHashFunction sample_hash(StableFamilyKind kind, int d, double width, Rng& rng) {
  if (d < 1) throw std::invalid_argument("sample_hash: d must be >= 1");
  if (!(width > 0.0)) throw std::invalid_argument("sample_hash: width must be positive");

  StableHashFunction h;
  h.width = width;
  h.projection.resize(d);
  for (int i = 0; i < d; ++i)
    h.projection[i] = (kind == StableFamilyKind::gaussian) ? rng.gaussian() : rng.cauchy();
  h.offset = rng.uniform(0.0, width);
  return h;
}

CompositeHash::CompositeHash(std::vector<StableHashFunction> members)
    : members_(std::move(members)),
      evals_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (members_.empty()) throw std::invalid_argument("CompositeHash: no member hashes");
  for (const auto& h : members_)
    if (h.dim() != members_[0].dim() || h.width != members_[0].width)
      throw std::invalid_argument("CompositeHash: members must share dimension and width");
}

BucketKey CompositeHash::apply(std::span<const double> x) const {
  BucketKey key;
  key.codes.reserve(members_.size());
  for (const auto& h : members_) key.codes.push_back(h(x));
  evals_->fetch_add(members_.size(), std::memory_order_relaxed);
  return key;
}

}  // namespace lshc
