#pragma once

#include <cstddef>

#include "lshc/stable_hash.hpp"

namespace lshc {

// Parameters of an (r, cr, p1, p2)-sensitive family: pairs within distance r
// collide with probability >= p1 under a random member hash, pairs beyond
// c*r with probability <= p2. Useful families need p1 > p2 and c > 1; the
// classifier additionally needs p1^2 > p2.
struct SensitivityParams {
  double radius;  // r
  double c;       // separation factor
  double p1;
  double p2;
};

// Bucket width for a sample of size n in dimension d,
//   w = (1.6 * d^((d+2)/2) / n^((d+1)/(2d+6)))^(1/(d+1)),
// evaluated in log space. The radius r equals w.
double width_schedule(std::size_t n, int d);

// Probability that two points at distance z collide under a random hash of
// width w:  P(z) = integral_0^{w/z} phi_p(t) (1 - t z / w) dt, where phi_p is
// the density of the absolute value of the standard stable law. Computed by
// adaptive quadrature to absolute tolerance 1e-9; monotonically decreasing
// in z for fixed w.
double collision_probability(double z, double w, StableFamilyKind kind);

// Family parameters for a sample of size n in dimension d: r = w from the
// width schedule, p1 = P(r), p2 = P(c*r). Throws std::domain_error if the
// resulting constants violate p1^2 > p2 (the Gaussian family satisfies it at
// the default c = 3; the Cauchy family needs c >= 4.1).
SensitivityParams sensitivity_for(std::size_t n, int d, StableFamilyKind kind,
                                  double c = 3.0);

}  // namespace lshc
