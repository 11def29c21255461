#pragma once

#include <cmath>
#include <cstdint>
#include <random>

namespace lshc {

// SplitMix64 step; used to whiten seeds and derive substreams.
inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Seeded random source. All sampling transforms are implemented explicitly
// (not via std::*_distribution) so that a given seed produces the same
// stream on every platform. Substreams derived from the same base seed are
// independent and may be consumed in parallel.
class Rng {
 public:
  explicit Rng(std::uint64_t seed)
      : seed_(seed), engine_(splitmix64(seed)) {}

  std::uint64_t seed() const { return seed_; }

  std::uint64_t next_u64() { return engine_(); }

  // Uniform on [0, 1), 53-bit resolution.
  double uniform01() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform01(); }

  // Standard normal via Box-Muller; consumes two uniforms per draw.
  double gaussian() {
    double u1 = 1.0 - uniform01();  // (0, 1]
    double u2 = uniform01();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * PI * u2);
  }

  // Standard Cauchy via inverse CDF of a uniform.
  double cauchy() {
    double u = uniform01();
    return std::tan(PI * (u - 0.5));
  }

  // Independent child stream; deterministic in (seed, stream) and
  // independent of this stream's current position.
  Rng substream(std::uint64_t stream) const {
    return Rng(splitmix64(seed_ ^ splitmix64(stream + 0x6a09e667f3bcc909ULL)));
  }

 private:
  static constexpr double PI = 3.14159265358979323846;

  std::uint64_t seed_;
  std::mt19937_64 engine_;
};

}  // namespace lshc
