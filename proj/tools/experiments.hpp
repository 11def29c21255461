#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "lshc/classifier.hpp"
#include "lshc/missing_mass.hpp"
#include "lshc/stable_hash.hpp"

namespace lshc::bench {

// One convergence experiment: for every (n, seed) cell, draw a fresh sample
// and a fresh test set from the task, train, and record risks plus
// structural diagnostics.
struct ExperimentConfig {
  std::string task = "smooth-sine";
  int d = 2;
  double task_param = 1.0;  // alpha for holder-power, eta value for constant
  std::vector<std::size_t> n_list = {1000, 10000, 100000};
  std::vector<std::uint64_t> seeds = {1, 2, 3, 4, 5};
  StableFamilyKind kind = StableFamilyKind::gaussian;
  double c = 3.0;
  bool baseline = false;     // also train/evaluate the brute-force k-NN
  bool diagnostics = true;   // retain the bucket table, record far fractions
  std::size_t test_size = 20000;
  std::size_t diag_queries = 1000;
};

struct OccupancySummary {
  std::size_t buckets = 0;
  std::size_t min = 0;
  std::size_t max = 0;
  double mean = 0.0;
};

struct ResultRecord {
  std::size_t n = 0;
  std::uint64_t seed = 0;
  std::size_t m = 0;
  double width = 0.0;
  double bayes_risk = 0.0;
  double risk_lsh = 0.0;
  double excess_lsh = 0.0;
  std::optional<double> risk_knn;
  std::optional<double> excess_knn;
  std::optional<std::size_t> knn_k;
  std::uint64_t train_hash_evals = 0;
  std::uint64_t query_hash_evals = 0;  // total over the test set
  double train_seconds = 0.0;
  double query_seconds = 0.0;
  std::optional<double> mean_far_fraction;
  OccupancySummary occupancy;
};

std::vector<ResultRecord> run_convergence(
    const ExperimentConfig& cfg,
    const std::function<void(const ResultRecord&)>& on_record = {});

// Theorem-check suite: the exact expectation-bound sweep, the Monte Carlo
// concentration check, and the S1-S3 family properties.
struct TheoremCheckConfig {
  std::size_t sweep_dists = 500;
  std::size_t sweep_max_n = 200;
  std::size_t sweep_support = 50;
  std::size_t mc_configs = 20;
  std::uint64_t mc_trials = 100000;
  std::size_t mc_max_n = 500;
  std::uint64_t seed = 1;
  double bound_constant = 1.6;  // injectable for failure-path testing
  StableFamilyKind kind = StableFamilyKind::gaussian;
  double c = 3.0;
  bool run_mc = true;
};

struct CheckLine {
  std::string name;
  bool pass = false;
  std::string detail;
};

struct TheoremReport {
  std::vector<CheckLine> lines;
  bool all_pass() const {
    for (const auto& line : lines)
      if (!line.pass) return false;
    return true;
  }
};

TheoremReport run_theorem_checks(const TheoremCheckConfig& cfg);

// Pieces of the suite, individually runnable.
struct SweepViolation {
  std::size_t dist_index;
  std::uint64_t n, k;
  double lhs, rhs;
};
struct SweepResult {
  std::vector<SweepViolation> violations;
  std::uint64_t checks = 0;
};
SweepResult run_expectation_sweep(const TheoremCheckConfig& cfg);

struct ConcentrationCheck {
  std::uint64_t n, k;
  std::size_t support;
  double epsilon, frequency, bound, limit;  // limit = bound + 4 * binomial SE
  bool pass;
};
std::vector<ConcentrationCheck> run_concentration_checks(const TheoremCheckConfig& cfg);

// Random finite distribution with 1..max_support atoms (Dirichlet(1,..,1)
// weights); shared by the sweep and the Monte Carlo configs.
DiscreteDistribution random_distribution(std::size_t max_support, Rng& rng);

}  // namespace lshc::bench
