#pragma once

#include <functional>

namespace lshc {

// Adaptive Gauss-Kronrod (G7/K15) integration of f over [a, b] to the given
// absolute tolerance. Subintervals are bisected until the local error
// estimate fits within the tolerance share proportional to their length.
// Throws std::runtime_error if the interval budget is exhausted.
double integrate(const std::function<double(double)>& f, double a, double b,
                 double abs_tol = 1e-9);

}  // namespace lshc
