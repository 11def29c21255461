#include "experiments.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <sstream>
#include <thread>

#include "lshc/knn.hpp"
#include "lshc/sensitivity.hpp"
#include "lshc/synthetic.hpp"

namespace lshc::bench {
namespace {

double seconds_since(std::chrono::steady_clock::time_point t0) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

std::string fmt(double v) {
  std::ostringstream out;
  out.precision(6);
  out << v;
  return out.str();
}

}  // namespace

std::vector<ResultRecord> run_convergence(
    const ExperimentConfig& cfg, const std::function<void(const ResultRecord&)>& on_record) {
  const SyntheticTask task = SyntheticTask::make(cfg.task, cfg.d, cfg.task_param);

  std::vector<ResultRecord> records;
  for (std::size_t n : cfg.n_list) {
    for (std::uint64_t seed : cfg.seeds) {
      // Every (n, seed) cell draws from its own substream, so cells are
      // independent and the full run is reproducible from the seed list.
      Rng cell = Rng(seed).substream(n);

      auto train_start = std::chrono::steady_clock::now();
      const auto sample = task.sample(n, cell);
      ClassifierModel model =
          train(sample, cfg.kind, cell, TrainOptions{cfg.c, cfg.diagnostics});
      ResultRecord rec;
      rec.train_seconds = seconds_since(train_start);
      rec.n = n;
      rec.seed = seed;
      rec.m = model.member_count();
      rec.width = model.params().radius;
      rec.bayes_risk = task.bayes_risk();
      rec.train_hash_evals = model.hash_evaluations();

      const auto test = task.sample(cfg.test_size, cell);
      model.reset_hash_evaluations();
      const auto query_start = std::chrono::steady_clock::now();
      rec.risk_lsh = model.risk_estimate(test);
      rec.query_seconds = seconds_since(query_start);
      rec.query_hash_evals = model.hash_evaluations();
      rec.excess_lsh = rec.risk_lsh - rec.bayes_risk;

      if (cfg.baseline) {
        const std::size_t k = default_knn_k(n);
        const KnnModel knn = knn_train(sample, k);
        rec.knn_k = k;
        rec.risk_knn = knn.risk_estimate(test);
        rec.excess_knn = *rec.risk_knn - rec.bayes_risk;
      }

      if (cfg.diagnostics) {
        const std::size_t q = std::min(cfg.diag_queries, test.size());
        double far_sum = 0.0;
        for (std::size_t i = 0; i < q; ++i)
          far_sum += model.diagnose(test[i].point).far_fraction;
        rec.mean_far_fraction = q == 0 ? 0.0 : far_sum / static_cast<double>(q);

        const BucketTable& table = *model.retained_table();
        OccupancySummary occ;
        occ.buckets = table.size();
        occ.min = n;
        for (const auto& [key, bucket] : table) {
          occ.min = std::min(occ.min, bucket.size());
          occ.max = std::max(occ.max, bucket.size());
        }
        occ.mean = table.empty() ? 0.0
                                 : static_cast<double>(n) / static_cast<double>(table.size());
        rec.occupancy = occ;
      } else {
        rec.occupancy.buckets = model.labels().size();
      }

      if (on_record) on_record(rec);
      records.push_back(std::move(rec));
    }
  }
  return records;
}

DiscreteDistribution random_distribution(std::size_t max_support, Rng& rng) {
  const auto support =
      1 + static_cast<std::size_t>(rng.uniform01() * static_cast<double>(max_support));
  std::vector<double> probs(std::min(support, max_support));
  double total = 0.0;
  for (double& p : probs) {
    p = -std::log(1.0 - rng.uniform01());  // Exp(1), Dirichlet(1,...,1) after scaling
    total += p;
  }
  for (double& p : probs) p /= total;
  return DiscreteDistribution(std::move(probs));
}

// Exact expectation-bound sweep: E[U] < constant * support * k / n for all
// k <= n <= max_n over randomly drawn finite distributions. Distributions
// come from per-index substreams and are split across worker threads, so the
// outcome is independent of scheduling.
SweepResult run_expectation_sweep(const TheoremCheckConfig& cfg) {
  const Rng base(cfg.seed);
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  threads = static_cast<unsigned>(
      std::min<std::size_t>(threads, std::max<std::size_t>(cfg.sweep_dists, 1)));

  std::vector<std::vector<SweepViolation>> found(threads);
  std::vector<std::uint64_t> counts(threads, 0);

  auto worker = [&](unsigned w) {
    for (std::size_t i = w; i < cfg.sweep_dists; i += threads) {
      Rng dist_rng = base.substream(i);
      const DiscreteDistribution dist = random_distribution(cfg.sweep_support, dist_rng);
      const double support = static_cast<double>(dist.support_size());
      for (std::uint64_t n = 1; n <= cfg.sweep_max_n; ++n) {
        const auto expectations = exact_expected_missing_mass_all_k(dist, n);
        for (std::uint64_t k = 1; k <= n; ++k) {
          const double lhs = expectations[k - 1];
          const double rhs =
              cfg.bound_constant * support * static_cast<double>(k) / static_cast<double>(n);
          ++counts[w];
          if (!(lhs < rhs)) found[w].push_back({i, n, k, lhs, rhs});
        }
      }
    }
  };

  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::thread> pool;
    for (unsigned w = 0; w < threads; ++w) pool.emplace_back(worker, w);
    for (auto& th : pool) th.join();
  }

  SweepResult result;
  for (unsigned w = 0; w < threads; ++w) {
    result.checks += counts[w];
    result.violations.insert(result.violations.end(), found[w].begin(), found[w].end());
  }
  std::sort(result.violations.begin(), result.violations.end(),
            [](const SweepViolation& a, const SweepViolation& b) {
              return std::tie(a.dist_index, a.n, a.k) < std::tie(b.dist_index, b.n, b.k);
            });
  return result;
}

// Monte Carlo tail checks with informative (non-vacuous) bounds: epsilon is
// solved so the bound lands in (0.05, 0.8).
std::vector<ConcentrationCheck> run_concentration_checks(const TheoremCheckConfig& cfg) {
  std::vector<ConcentrationCheck> checks;
  Rng gen = Rng(cfg.seed).substream(1);
  while (checks.size() < cfg.mc_configs) {
    const DiscreteDistribution dist = random_distribution(cfg.sweep_support, gen);
    const auto n = static_cast<std::uint64_t>(
        50 + gen.uniform01() * static_cast<double>(cfg.mc_max_n - 50));
    auto k = static_cast<std::uint64_t>(1 + gen.uniform01() * 9.0);
    k = std::min<std::uint64_t>(k, n);
    const double target = 0.05 + 0.75 * gen.uniform01();
    const double epsilon =
        std::sqrt(std::log(2.0 / target) * static_cast<double>(k) /
                  (0.09 * static_cast<double>(n)));
    if (epsilon > 1.2) continue;  // exceedance nearly impossible, redraw

    ConcentrationCheck check;
    check.n = n;
    check.k = k;
    check.support = dist.support_size();
    check.epsilon = epsilon;
    check.bound = concentration_bound(n, k, epsilon);
    check.frequency = concentration_trial(dist, n, k, epsilon, cfg.mc_trials,
                                          gen.substream(1000 + checks.size()));
    const double se =
        std::sqrt(check.bound * (1.0 - check.bound) / static_cast<double>(cfg.mc_trials));
    check.limit = check.bound + 4.0 * se;
    check.pass = check.frequency <= check.limit;
    checks.push_back(check);
  }
  return checks;
}

TheoremReport run_theorem_checks(const TheoremCheckConfig& cfg) {
  TheoremReport report;

  {  // Expectation bound sweep (exact, no sampling).
    const SweepResult sweep = run_expectation_sweep(cfg);
    CheckLine line;
    line.name = "expectation-bound-sweep";
    line.pass = sweep.violations.empty();
    std::ostringstream detail;
    detail << cfg.sweep_dists << " distributions, n <= " << cfg.sweep_max_n << ", "
           << sweep.checks << " (n,k) checks, constant " << cfg.bound_constant;
    if (!sweep.violations.empty()) {
      const auto& v = sweep.violations.front();
      detail << "; FIRST VIOLATION dist#" << v.dist_index << " n=" << v.n << " k=" << v.k
             << " E[U]=" << fmt(v.lhs) << " bound=" << fmt(v.rhs) << " ("
             << sweep.violations.size() << " total)";
    }
    line.detail = detail.str();
    report.lines.push_back(std::move(line));
  }

  if (cfg.run_mc) {  // Concentration tail checks (Monte Carlo).
    const auto checks = run_concentration_checks(cfg);
    for (std::size_t i = 0; i < checks.size(); ++i) {
      const auto& c = checks[i];
      CheckLine line;
      line.name = "concentration-mc-" + std::to_string(i);
      line.pass = c.pass;
      std::ostringstream detail;
      detail << "n=" << c.n << " k=" << c.k << " support=" << c.support
             << " eps=" << fmt(c.epsilon) << " freq=" << fmt(c.frequency)
             << " bound=" << fmt(c.bound) << " (+4se=" << fmt(c.limit) << ")";
      line.detail = detail.str();
      report.lines.push_back(std::move(line));
    }
  }

  {  // S1: p1^2 > p2 for the configured family.
    const double r = width_schedule(10000, 3);
    const double p1 = collision_probability(r, r, cfg.kind);
    const double p2 = collision_probability(cfg.c * r, r, cfg.kind);
    CheckLine line;
    line.name = "family-S1";
    line.pass = p1 * p1 > p2;
    line.detail = "p1=" + fmt(p1) + " p1^2=" + fmt(p1 * p1) + " p2=" + fmt(p2) +
                  " (family " + to_string(cfg.kind) + ", c=" + fmt(cfg.c) + ")";
    report.lines.push_back(std::move(line));
  }

  {  // S2 and S3 on a logarithmic n grid across dimensions.
    bool s2 = true, s3 = true;
    for (int d = 1; d <= 10; ++d) {
      double prev_r = -1.0, prev_rs = -1.0;
      for (std::size_t n : {100UL, 1000UL, 10000UL, 100000UL, 1000000UL}) {
        const double r = width_schedule(n, d);
        const double rs = r * std::sqrt(static_cast<double>(n));
        if (prev_r >= 0.0 && !(r < prev_r)) s2 = false;
        if (prev_rs >= 0.0 && !(rs > prev_rs)) s3 = false;
        prev_r = r;
        prev_rs = rs;
      }
    }
    report.lines.push_back({"family-S2", s2, "r_n decreasing on n in {1e2..1e6}, d in 1..10"});
    report.lines.push_back(
        {"family-S3", s3, "r_n*sqrt(n) increasing on n in {1e2..1e6}, d in 1..10"});
  }

  return report;
}

}  // namespace lshc::bench
