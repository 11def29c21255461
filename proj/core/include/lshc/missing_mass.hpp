#pragma once

#include <cstdint>
#include <vector>

#include "lshc/rng.hpp"

namespace lshc {

// Probability vector over finitely many atoms. Entries must be nonnegative
// and sum to 1 within 1e-12.
class DiscreteDistribution {
 public:
  explicit DiscreteDistribution(std::vector<double> probs);

  std::size_t atom_count() const { return probs_.size(); }
  std::size_t support_size() const { return support_; }  // #{j : p_j > 0}
  double prob(std::size_t j) const { return probs_[j]; }
  const std::vector<double>& probs() const { return probs_; }

  // Occurrence counts of n iid draws; consumes exactly n variates.
  struct Sample;
  Sample sample_counts(std::uint64_t n, Rng& rng) const;

 private:
  std::vector<double> probs_;
  std::vector<double> cumulative_;
  std::size_t support_ = 0;
};

struct DiscreteDistribution::Sample {
  std::vector<std::uint64_t> counts;  // one entry per atom
  std::uint64_t n = 0;
};

using MissingMassSample = DiscreteDistribution::Sample;

// k-missing mass of a realized sample: the total probability of atoms seen
// fewer than k times,  U = sum_j p_j * 1[count_j < k].
double realized_missing_mass(const DiscreteDistribution& dist,
                             const MissingMassSample& sample, std::uint64_t k);

// P(Bin(n, p) <= x), computed from log-space mass terms summed
// smallest-first. Accurate to ~1e-12 relative for n up to 1e4.
double binomial_cdf(std::int64_t x, std::uint64_t n, double p);

// E[U] = sum_j p_j * P(Bin(n, p_j) < k), exact to floating precision.
double exact_expected_missing_mass(const DiscreteDistribution& dist, std::uint64_t n,
                                   std::uint64_t k);

// v[k-1] = E[U_n^(k)] for every k = 1..n in one pass over the per-atom
// binomial mass tables; used by exhaustive bound sweeps.
std::vector<double> exact_expected_missing_mass_all_k(const DiscreteDistribution& dist,
                                                      std::uint64_t n);

// E[U] against the bound constant * support * k / n. The default constant
// 1.6 must hold for every valid input; a different constant can be injected
// to exercise failure reporting.
struct ExpectationBound {
  double lhs;  // E[U]
  double rhs;
  bool holds;
};
ExpectationBound check_expectation_bound(const DiscreteDistribution& dist, std::uint64_t n,
                                         std::uint64_t k, double constant = 1.6);

// Fraction of `trials` independent n-samples whose realized U exceeds
// E[U] + epsilon. Trials run on pre-split substreams of the seed, so the
// result is deterministic in (dist, n, k, epsilon, trials, seed) regardless
// of thread count (0 threads = hardware concurrency).
double concentration_trial(const DiscreteDistribution& dist, std::uint64_t n,
                           std::uint64_t k, double epsilon, std::uint64_t trials,
                           const Rng& rng, unsigned threads = 0);

// Tail bound of the concentration theorem: 2 exp(-0.09 n eps^2 / k).
double concentration_bound(std::uint64_t n, std::uint64_t k, double epsilon);

}  // namespace lshc
