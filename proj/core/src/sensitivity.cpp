#include "lshc/sensitivity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

#include "lshc/quadrature.hpp"

namespace lshc {
namespace {

constexpr double kTwoOverSqrtTwoPi = 0.7978845608028654;  // 2/sqrt(2*pi)
constexpr double kTwoOverPi = 0.6366197723675814;

// Density of |X| for the standard stable law.
double abs_density(StableFamilyKind kind, double t) {
  if (kind == StableFamilyKind::gaussian)
    return kTwoOverSqrtTwoPi * std::exp(-0.5 * t * t);
  return kTwoOverPi / (1.0 + t * t);
}

}  // namespace

double width_schedule(std::size_t n, int d) {
  if (n == 0) throw std::invalid_argument("width_schedule: n must be >= 1");
  if (d < 1) throw std::invalid_argument("width_schedule: d must be >= 1");
  const double dd = static_cast<double>(d);
  const double log_num = std::log(1.6) + 0.5 * (dd + 2.0) * std::log(dd);
  const double log_den = (dd + 1.0) / (2.0 * dd + 6.0) * std::log(static_cast<double>(n));
  return std::exp((log_num - log_den) / (dd + 1.0));
}

double collision_probability(double z, double w, StableFamilyKind kind) {
  if (!(z > 0.0)) throw std::invalid_argument("collision_probability: z must be positive");
  if (!(w > 0.0)) throw std::invalid_argument("collision_probability: w must be positive");

  const double s = w / z;  // upper integration limit
  constexpr double tol = 1e-9;

  // Head on [0, min(s, 1)]. For s > 1 the remaining range [1, s] is folded
  // with t = 1/u onto u in [1/s, 1], which keeps the Cauchy tail integrable
  // to fixed absolute tolerance even for huge s.
  double value = integrate(
      [&](double t) { return abs_density(kind, t) * (1.0 - t / s); }, 0.0,
      std::min(s, 1.0), s > 1.0 ? 0.5 * tol : tol);
  if (s > 1.0) {
    value += integrate(
        [&](double u) {
          const double t = 1.0 / u;
          return abs_density(kind, t) * (1.0 - t / s) / (u * u);
        },
        1.0 / s, 1.0, 0.5 * tol);
  }
  return value;
}

SensitivityParams sensitivity_for(std::size_t n, int d, StableFamilyKind kind, double c) {
  if (!(c > 1.0)) throw std::invalid_argument("sensitivity_for: c must exceed 1");
  SensitivityParams params;
  params.radius = width_schedule(n, d);
  params.c = c;
  params.p1 = collision_probability(params.radius, params.radius, kind);
  params.p2 = collision_probability(c * params.radius, params.radius, kind);
  if (!(params.p1 * params.p1 > params.p2))
    throw std::domain_error(
        "sensitivity_for: p1^2 > p2 violated for family " + to_string(kind) +
        " at c = " + std::to_string(c) + " (p1 = " + std::to_string(params.p1) +
        ", p2 = " + std::to_string(params.p2) + "); increase c");
  return params;
}

}  // namespace lshc
