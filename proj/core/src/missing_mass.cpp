#include "lshc/missing_mass.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <thread>

namespace lshc {
namespace {

void require_k_in_range(std::uint64_t k, std::uint64_t n) {
  if (k < 1 || k > n)
    throw std::invalid_argument("k must satisfy 1 <= k <= n (k = " + std::to_string(k) +
                                ", n = " + std::to_string(n) + ")");
}

}  // namespace

DiscreteDistribution::DiscreteDistribution(std::vector<double> probs)
    : probs_(std::move(probs)) {
  if (probs_.empty()) throw std::invalid_argument("DiscreteDistribution: no atoms");
  double sum = 0.0;
  for (double p : probs_) {
    if (!(p >= 0.0)) throw std::invalid_argument("DiscreteDistribution: negative probability");
    sum += p;
    if (p > 0.0) ++support_;
  }
  if (std::abs(sum - 1.0) > 1e-12)
    throw std::invalid_argument("DiscreteDistribution: probabilities sum to " +
                                std::to_string(sum) + ", not 1");
  cumulative_.resize(probs_.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < probs_.size(); ++j) {
    acc += probs_[j];
    cumulative_[j] = acc;
  }
  cumulative_.back() = 1.0;
}

DiscreteDistribution::Sample DiscreteDistribution::sample_counts(std::uint64_t n,
                                                                 Rng& rng) const {
  Sample sample;
  sample.n = n;
  sample.counts.assign(probs_.size(), 0);
  for (std::uint64_t i = 0; i < n; ++i) {
    const double u = rng.uniform01();
    const auto it = std::upper_bound(cumulative_.begin(), cumulative_.end(), u);
    const std::size_t j = std::min<std::size_t>(it - cumulative_.begin(), probs_.size() - 1);
    ++sample.counts[j];
  }
  return sample;
}

double realized_missing_mass(const DiscreteDistribution& dist,
                             const MissingMassSample& sample, std::uint64_t k) {
  require_k_in_range(k, sample.n);
  if (sample.counts.size() != dist.atom_count())
    throw std::invalid_argument("realized_missing_mass: counts/probs size mismatch");
  double mass = 0.0;
  for (std::size_t j = 0; j < dist.atom_count(); ++j)
    if (sample.counts[j] < k) mass += dist.prob(j);
  return mass;
}

double binomial_cdf(std::int64_t x, std::uint64_t n, double p) {
  if (x < 0) return 0.0;
  if (static_cast<std::uint64_t>(x) >= n) return 1.0;
  if (p <= 0.0) return 1.0;
  if (p >= 1.0) return 0.0;

  // log C(n, l) + l log p + (n - l) log(1 - p) for l = 0..x, then the terms
  // are summed smallest-first relative to the largest to control roundoff.
  const double log_p = std::log(p);
  const double log_q = std::log1p(-p);
  const double lg_n1 = std::lgamma(static_cast<double>(n) + 1.0);
  std::vector<double> log_terms(static_cast<std::size_t>(x) + 1);
  for (std::int64_t l = 0; l <= x; ++l) {
    const double dl = static_cast<double>(l);
    log_terms[static_cast<std::size_t>(l)] =
        lg_n1 - std::lgamma(dl + 1.0) - std::lgamma(static_cast<double>(n) - dl + 1.0) +
        dl * log_p + (static_cast<double>(n) - dl) * log_q;
  }
  const double log_max = *std::max_element(log_terms.begin(), log_terms.end());
  std::vector<double> scaled(log_terms.size());
  for (std::size_t i = 0; i < log_terms.size(); ++i)
    scaled[i] = std::exp(log_terms[i] - log_max);
  std::sort(scaled.begin(), scaled.end());
  double sum = 0.0;
  for (double s : scaled) sum += s;
  return std::min(1.0, std::exp(log_max) * sum);
}

double exact_expected_missing_mass(const DiscreteDistribution& dist, std::uint64_t n,
                                   std::uint64_t k) {
  require_k_in_range(k, n);
  double expectation = 0.0;
  for (std::size_t j = 0; j < dist.atom_count(); ++j) {
    const double p = dist.prob(j);
    if (p > 0.0) expectation += p * binomial_cdf(static_cast<std::int64_t>(k) - 1, n, p);
  }
  return expectation;
}

std::vector<double> exact_expected_missing_mass_all_k(const DiscreteDistribution& dist,
                                                      std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("exact_expected_missing_mass_all_k: n must be >= 1");
  // lgfact[i] = lgamma(i + 1) = log(i!)
  std::vector<double> lgfact(n + 1);
  for (std::uint64_t i = 0; i <= n; ++i) lgfact[i] = std::lgamma(static_cast<double>(i) + 1.0);

  std::vector<double> expectation(n, 0.0);
  for (std::size_t j = 0; j < dist.atom_count(); ++j) {
    const double p = dist.prob(j);
    if (p <= 0.0 || p >= 1.0) continue;  // p = 1 atoms contribute 0 for every k <= n
    const double log_p = std::log(p);
    const double log_q = std::log1p(-p);
    double cdf = 0.0;
    for (std::uint64_t l = 0; l < n; ++l) {
      const double dl = static_cast<double>(l);
      cdf += std::exp(lgfact[n] - lgfact[l] - lgfact[n - l] + dl * log_p +
                      (static_cast<double>(n) - dl) * log_q);
      expectation[l] += p * std::min(cdf, 1.0);  // k = l + 1 uses P(Bin <= l)
    }
  }
  return expectation;
}

ExpectationBound check_expectation_bound(const DiscreteDistribution& dist, std::uint64_t n,
                                         std::uint64_t k, double constant) {
  ExpectationBound result;
  result.lhs = exact_expected_missing_mass(dist, n, k);
  result.rhs = constant * static_cast<double>(dist.support_size()) *
               static_cast<double>(k) / static_cast<double>(n);
  result.holds = result.lhs < result.rhs;
  return result;
}

double concentration_bound(std::uint64_t n, std::uint64_t k, double epsilon) {
  return 2.0 * std::exp(-0.09 * static_cast<double>(n) * epsilon * epsilon /
                        static_cast<double>(k));
}

double concentration_trial(const DiscreteDistribution& dist, std::uint64_t n,
                           std::uint64_t k, double epsilon, std::uint64_t trials,
                           const Rng& rng, unsigned threads) {
  require_k_in_range(k, n);
  if (!(epsilon > 0.0)) throw std::invalid_argument("concentration_trial: epsilon must be positive");
  if (trials == 0) throw std::invalid_argument("concentration_trial: trials must be >= 1");

  const double threshold = exact_expected_missing_mass(dist, n, k) + epsilon;
  if (threads == 0) threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(std::min<std::uint64_t>(threads, trials));

  // Each trial runs on its own substream; exceedances are summed per worker,
  // so the result does not depend on scheduling.
  std::vector<std::uint64_t> exceed(threads, 0);
  auto worker = [&](unsigned w) {
    std::uint64_t local = 0;
    for (std::uint64_t t = w; t < trials; t += threads) {
      Rng trial_rng = rng.substream(t);
      const auto sample = dist.sample_counts(n, trial_rng);
      if (realized_missing_mass(dist, sample, k) > threshold) ++local;
    }
    exceed[w] = local;
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  std::uint64_t total = 0;
  for (std::uint64_t e : exceed) total += e;
  return static_cast<double>(total) / static_cast<double>(trials);
}

}  // namespace lshc
