#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "lshc/stable_hash.hpp"

namespace lshc::test {

// One-sample Kolmogorov-Smirnov statistic against U[0,1]; inputs must
// already be mapped through the hypothesized CDF.
inline double ks_statistic(std::vector<double> u) {
  std::sort(u.begin(), u.end());
  const double n = static_cast<double>(u.size());
  double d = 0.0;
  for (std::size_t i = 0; i < u.size(); ++i) {
    const double lo = static_cast<double>(i) / n;
    const double hi = static_cast<double>(i + 1) / n;
    d = std::max({d, u[i] - lo, hi - u[i]});
  }
  return d;
}

// Critical value at significance 0.001: sqrt(-ln(alpha/2)/2) / sqrt(n).
inline double ks_critical_001(std::size_t n) {
  return 1.9494896225 / std::sqrt(static_cast<double>(n));
}

// Closed-form collision probability, the independent oracle for the
// quadrature path. With s = w/z:
//   gaussian: erf(s/sqrt(2)) - sqrt(2/pi) (1 - exp(-s^2/2)) / s
//   cauchy:   (2/pi) (atan(s) - ln(1 + s^2) / (2s))
inline double collision_closed_form(double z, double w, lshc::StableFamilyKind kind) {
  const double s = w / z;
  if (kind == lshc::StableFamilyKind::gaussian)
    return std::erf(s / std::sqrt(2.0)) -
           std::sqrt(2.0 / M_PI) * (1.0 - std::exp(-0.5 * s * s)) / s;
  return (2.0 / M_PI) * (std::atan(s) - std::log1p(s * s) / (2.0 * s));
}

}  // namespace lshc::test
