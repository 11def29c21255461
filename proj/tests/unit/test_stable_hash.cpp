#include <doctest.h>

#include <cmath>

#include "lshc/sensitivity.hpp"
#include "lshc/stable_hash.hpp"
#include "test_util.hpp"

using lshc::BucketKey;
using lshc::CompositeHash;
using lshc::Rng;
using lshc::sample_hash;
using lshc::StableFamilyKind;
using lshc::StableHashFunction;

TEST_CASE("sample_hash is deterministic in the seed") {
  Rng a(42), b(42);
  const auto h1 = sample_hash(StableFamilyKind::gaussian, 4, 0.5, a);
  const auto h2 = sample_hash(StableFamilyKind::gaussian, 4, 0.5, b);
  CHECK(h1.projection == h2.projection);
  CHECK(h1.offset == h2.offset);
}

TEST_CASE("gaussian projection moments over many draws") {
  const int d = 3;
  const std::size_t n = 100000;
  Rng rng(8);
  std::vector<double> sum(d, 0.0), sumsq(d, 0.0);
  for (std::size_t i = 0; i < n; ++i) {
    const auto h = sample_hash(StableFamilyKind::gaussian, d, 1.0, rng);
    for (int j = 0; j < d; ++j) {
      sum[j] += h.projection[j];
      sumsq[j] += h.projection[j] * h.projection[j];
    }
  }
  for (int j = 0; j < d; ++j) {
    const double mean = sum[j] / static_cast<double>(n);
    const double var = sumsq[j] / static_cast<double>(n) - mean * mean;
    CHECK(std::abs(mean) < 0.02);
    CHECK(std::abs(var - 1.0) < 0.03);
  }
}

TEST_CASE("offsets are uniform on [0, w)") {
  const double w = 0.37;
  const std::size_t n = 100000;
  Rng rng(9);
  std::vector<double> u(n);
  for (auto& v : u) {
    const auto h = sample_hash(StableFamilyKind::gaussian, 1, w, rng);
    CHECK(h.offset >= 0.0);
    CHECK(h.offset < w);
    v = h.offset / w;
  }
  CHECK(lshc::test::ks_statistic(std::move(u)) < lshc::test::ks_critical_001(n));
}

TEST_CASE("hash_point arithmetic") {
  SUBCASE("all-zero projection maps everything to code 0") {
    StableHashFunction h{{0.0, 0.0, 0.0}, 0.61, 0.9};
    CHECK(h(std::vector<double>{12.0, -3.0, 0.25}) == 0);
  }
  SUBCASE("axis projection") {
    StableHashFunction h{{1.0, 0.0}, 0.0, 1.0};
    CHECK(h(std::vector<double>{2.5, 99.0}) == 2);
    CHECK(h(std::vector<double>{-0.5, 0.0}) == -1);
  }
  SUBCASE("shift along the projection by k*w moves the code by exactly k") {
    // Dyadic values keep every product and sum exact.
    StableHashFunction h{{1.0, 0.0}, 0.25, 0.5};
    const std::vector<double> x{0.5, 7.0};
    const std::vector<double> x_plus{0.5 + 3 * 0.5, 7.0};
    const std::vector<double> x_minus{0.5 - 2 * 0.5, 7.0};
    CHECK(h(x_plus) == h(x) + 3);
    CHECK(h(x_minus) == h(x) - 2);
  }
  SUBCASE("dimension mismatch throws") {
    StableHashFunction h{{1.0, 2.0}, 0.0, 1.0};
    CHECK_THROWS_AS(h(std::vector<double>{1.0}), std::invalid_argument);
  }
}

TEST_CASE("composite of one hash reduces to the member") {
  Rng rng(3);
  auto h = sample_hash(StableFamilyKind::gaussian, 3, 0.8, rng);
  const CompositeHash g({h});
  const std::vector<double> x{0.1, 0.2, 0.3};
  CHECK(g.apply(x).codes == std::vector<std::int64_t>{h(x)});
}

TEST_CASE("key equality is component-wise") {
  CHECK(BucketKey{{1, 2, 3}} == BucketKey{{1, 2, 3}});
  CHECK(BucketKey{{1, 2, 3}} != BucketKey{{1, 2, 4}});
  CHECK(BucketKey{{1, 2}} != BucketKey{{1, 2, 3}});
}

TEST_CASE("composite members must agree on dimension and width") {
  Rng rng(4);
  auto a = sample_hash(StableFamilyKind::gaussian, 3, 0.8, rng);
  auto b = sample_hash(StableFamilyKind::gaussian, 3, 0.4, rng);
  CHECK_THROWS_AS(CompositeHash({a, b}), std::invalid_argument);
}

TEST_CASE("far pairs collide under the composite at most p2^m plus noise") {
  const int d = 5, m = 2;
  const std::size_t trials = 10000;
  const auto params = lshc::sensitivity_for(10000, d, StableFamilyKind::gaussian);
  Rng rng(77);
  std::size_t collisions = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    std::vector<double> x(d), dir(d);
    double norm = 0.0;
    for (int j = 0; j < d; ++j) {
      x[j] = rng.uniform01();
      dir[j] = rng.gaussian();
      norm += dir[j] * dir[j];
    }
    norm = std::sqrt(norm);
    std::vector<double> y(d);
    for (int j = 0; j < d; ++j)
      y[j] = x[j] + params.c * params.radius * dir[j] / norm;

    std::vector<StableHashFunction> members;
    for (int i = 0; i < m; ++i)
      members.push_back(sample_hash(StableFamilyKind::gaussian, d, params.radius, rng));
    const CompositeHash g(std::move(members));
    collisions += g.apply(x) == g.apply(y) ? 1 : 0;
  }
  const double freq = static_cast<double>(collisions) / static_cast<double>(trials);
  const double p2m = std::pow(params.p2, m);
  CHECK(freq <= p2m + 4.0 * std::sqrt(p2m * (1.0 - p2m) / trials));
}

TEST_CASE("evaluation counter advances by m per apply") {
  Rng rng(5);
  std::vector<StableHashFunction> members;
  for (int i = 0; i < 3; ++i)
    members.push_back(sample_hash(StableFamilyKind::gaussian, 2, 1.0, rng));
  const CompositeHash g(std::move(members));
  CHECK(g.hash_evaluations() == 0);
  const std::vector<double> x{0.4, 0.6};
  g.apply(x);
  g.apply(x);
  CHECK(g.hash_evaluations() == 6);
  g.reset_hash_evaluations();
  CHECK(g.hash_evaluations() == 0);
}
