#include <doctest.h>

#include "lshc/rng.hpp"
#include "test_util.hpp"

using lshc::Rng;

TEST_CASE("fixed seed reproduces the stream") {
  Rng a(123), b(123);
  for (int i = 0; i < 100; ++i) CHECK(a.next_u64() == b.next_u64());
}

TEST_CASE("substreams are deterministic and distinct") {
  const Rng base(7);
  Rng s0 = base.substream(0);
  Rng s0_again = base.substream(0);
  Rng s1 = base.substream(1);
  CHECK(s0.next_u64() == s0_again.next_u64());
  CHECK(Rng(7).substream(0).next_u64() != s1.next_u64());
}

TEST_CASE("uniform01 stays in [0,1)") {
  Rng rng(5);
  for (int i = 0; i < 10000; ++i) {
    const double u = rng.uniform01();
    CHECK(u >= 0.0);
    CHECK(u < 1.0);
  }
}

TEST_CASE("gaussian draws pass a KS test at 0.001") {
  Rng rng(11);
  const std::size_t n = 100000;
  std::vector<double> u(n);
  for (auto& v : u) v = 0.5 * (1.0 + std::erf(rng.gaussian() / std::sqrt(2.0)));
  CHECK(lshc::test::ks_statistic(std::move(u)) < lshc::test::ks_critical_001(n));
}

TEST_CASE("cauchy draws pass a KS test at 0.001") {
  Rng rng(13);
  const std::size_t n = 100000;
  std::vector<double> u(n);
  for (auto& v : u) v = 0.5 + std::atan(rng.cauchy()) / M_PI;
  CHECK(lshc::test::ks_statistic(std::move(u)) < lshc::test::ks_critical_001(n));
}
