#include <doctest.h>

#include <cmath>

#include "lshc/quadrature.hpp"

using lshc::integrate;

TEST_CASE("polynomials and trig integrate to closed forms") {
  CHECK(integrate([](double x) { return x * x; }, 0.0, 1.0) == doctest::Approx(1.0 / 3.0).epsilon(1e-12));
  CHECK(integrate([](double x) { return std::sin(x); }, 0.0, M_PI) == doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("gaussian mass over a wide interval") {
  const double v = integrate([](double t) { return std::exp(-0.5 * t * t); }, 0.0, 40.0);
  CHECK(std::abs(v - std::sqrt(M_PI / 2.0)) < 1e-9);
}

TEST_CASE("kinked integrand is refined across the kink") {
  const double v = integrate([](double x) { return std::abs(x - 1.0 / 3.0); }, 0.0, 1.0);
  CHECK(std::abs(v - 5.0 / 18.0) < 1e-9);
}

TEST_CASE("degenerate and invalid inputs") {
  CHECK(integrate([](double) { return 1.0; }, 2.0, 2.0) == 0.0);
  CHECK_THROWS_AS(integrate([](double) { return 1.0; }, 0.0, 1.0, 0.0), std::invalid_argument);
}

TEST_CASE("reversed limits flip the sign") {
  const double fwd = integrate([](double x) { return x; }, 0.0, 2.0);
  const double rev = integrate([](double x) { return x; }, 2.0, 0.0);
  CHECK(fwd == doctest::Approx(2.0).epsilon(1e-12));
  CHECK(rev == doctest::Approx(-2.0).epsilon(1e-12));
}
