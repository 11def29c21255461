#include "lshc/synthetic.hpp"

#include <cmath>
#include <stdexcept>

#include "lshc/quadrature.hpp"

namespace lshc {
namespace {

constexpr double kPi = 3.14159265358979323846;

// Radical-inverse Halton point in the given prime base.
double halton(std::uint64_t index, std::uint64_t base) {
  double result = 0.0;
  double f = 1.0;
  while (index > 0) {
    f /= static_cast<double>(base);
    result += f * static_cast<double>(index % base);
    index /= base;
  }
  return result;
}

constexpr std::uint64_t kPrimes[] = {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37};

}  // namespace

SyntheticTask SyntheticTask::smooth_sine(int d) {
  return SyntheticTask(Family::smooth_sine_f, "smooth-sine", d, 0.0);
}

SyntheticTask SyntheticTask::holder_power(int d, double alpha) {
  if (!(alpha > 0.0 && alpha <= 1.0))
    throw std::invalid_argument("holder_power: alpha must lie in (0, 1]");
  return SyntheticTask(Family::holder_power_f, "holder-power", d, alpha);
}

SyntheticTask SyntheticTask::constant(int d, double value) {
  if (!(value >= 0.0 && value <= 1.0))
    throw std::invalid_argument("constant task: value must lie in [0, 1]");
  return SyntheticTask(Family::constant_f, "constant", d, value);
}

SyntheticTask SyntheticTask::make(const std::string& name, int d, double param) {
  if (name == "smooth-sine") return smooth_sine(d);
  if (name == "holder-power") return holder_power(d, param);
  if (name == "constant") return constant(d, param);
  throw std::invalid_argument("unknown synthetic task: " + name);
}

SyntheticTask::SyntheticTask(Family family, std::string name, int d, double param)
    : family_(family), name_(std::move(name)), d_(d), param_(param) {
  if (d_ < 1) throw std::invalid_argument("SyntheticTask: d must be >= 1");
  switch (family_) {
    case Family::smooth_sine_f:
      alpha_ = 1.0;
      holder_L_ = kPi;
      break;
    case Family::holder_power_f:
      alpha_ = param_;
      holder_L_ = 1.0;
      break;
    case Family::constant_f:
      alpha_ = 1.0;
      holder_L_ = 0.0;
      break;
  }
  compute_bayes_risk();
}

double SyntheticTask::eta(std::span<const double> x) const {
  if (static_cast<int>(x.size()) != d_)
    throw std::invalid_argument("eta: dimension mismatch");
  switch (family_) {
    case Family::smooth_sine_f:
      return 0.5 * (1.0 + std::sin(2.0 * kPi * x[0]));
    case Family::holder_power_f: {
      const double u = 2.0 * x[0] - 1.0;
      const double s = u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
      return 0.5 + 0.5 * s * std::pow(std::abs(u), param_);
    }
    case Family::constant_f:
      return param_;
  }
  return 0.0;  // unreachable
}

int SyntheticTask::bayes_predict(std::span<const double> x) const {
  return eta(x) > 0.5 ? 1 : 0;
}

void SyntheticTask::compute_bayes_risk() {
  auto integrand1d = [this](double t) {
    const double e = eta(std::span<const double>(&t, 1));
    return std::min(e, 1.0 - e);
  };

  // All built-in regression functions depend on x_1 only, but the d <= 2
  // path integrates the cube honestly via nested quadrature.
  if (d_ == 1) {
    bayes_risk_ = integrate(integrand1d, 0.0, 1.0, 1e-7);
    bayes_err_ = 1e-6;
    return;
  }
  if (d_ == 2) {
    auto inner = [this](double x1, double x2) {
      const double p[2] = {x1, x2};
      const double e = eta(p);
      return std::min(e, 1.0 - e);
    };
    bayes_risk_ = integrate(
        [&](double x1) {
          return integrate([&](double x2) { return inner(x1, x2); }, 0.0, 1.0, 1e-9);
        },
        0.0, 1.0, 1e-7);
    bayes_err_ = 1e-6;
    return;
  }

  // Quasi-random integration for d > 2, with the difference between the
  // half-sample and full-sample estimates as the error report.
  if (d_ > static_cast<int>(std::size(kPrimes)))
    throw std::invalid_argument("SyntheticTask: d too large for quasi-random integration");
  const std::uint64_t N = 1 << 17;
  std::vector<double> x(d_);
  double sum = 0.0;
  double half_sum = 0.0;
  for (std::uint64_t i = 1; i <= N; ++i) {
    for (int j = 0; j < d_; ++j) x[j] = halton(i, kPrimes[j]);
    const double e = eta(x);
    const double v = std::min(e, 1.0 - e);
    sum += v;
    if (i <= N / 2) half_sum += v;
  }
  bayes_risk_ = sum / static_cast<double>(N);
  bayes_err_ = std::abs(bayes_risk_ - half_sum / static_cast<double>(N / 2)) + 1e-9;
}

std::vector<LabeledExample> SyntheticTask::sample(std::size_t n, Rng& rng) const {
  std::vector<LabeledExample> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    LabeledExample ex;
    ex.point.resize(d_);
    for (int j = 0; j < d_; ++j) ex.point[j] = rng.uniform01();
    ex.label = rng.uniform01() < eta(ex.point) ? 1 : 0;
    out.push_back(std::move(ex));
  }
  return out;
}

}  // namespace lshc
