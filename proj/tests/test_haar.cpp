#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wcga/haar.hpp"
#include "wcga/rng.hpp"

using namespace wcga;

namespace {

StepFunction random_step(int d, int level, RngStream& rng) {
  std::size_t total = 1;
  for (int a = 0; a < d; ++a) total <<= level;
  std::vector<double> v(total);
  for (auto& x : v) x = rng.sign() * rng.log_uniform(1e-2, 1e2);
  return StepFunction(d, level, std::move(v));
}

bool is_all_zero_rect(const Rectangle& r) {
  for (const auto& a : r.axes()) {
    if (!a.is_zero()) return false;
  }
  return true;
}

}  // namespace

TEST_CASE("constant function has a single coefficient") {
  for (int d : {1, 2, 3}) {
    std::size_t total = 1;
    for (int a = 0; a < d; ++a) total <<= 2;
    StepFunction f(d, 2, std::vector<double>(total, 1.0));
    auto e = haar_coefficients(f, 1.7);
    REQUIRE(e.coeffs.support_size() == 1);
    const auto& [I, v] = *e.coeffs.entries().begin();
    CHECK(is_all_zero_rect(I));
    CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
  }
}

TEST_CASE("univariate step picks out one coefficient") {
  // +1 on [0,1/2), -1 on [1/2,1): the level-0 element, orthonormal at p = 2
  StepFunction f(1, 2, {1.0, 1.0, -1.0, -1.0});
  auto e = haar_coefficients(f, 2.0);
  REQUIRE(e.coeffs.support_size() == 1);
  const auto& [I, v] = *e.coeffs.entries().begin();
  CHECK(I.axis(0).level() == 0);
  CHECK(I.axis(0).offset() == 0);
  CHECK_FALSE(I.axis(0).is_zero());
  CHECK(v == doctest::Approx(1.0).epsilon(1e-14));
}

TEST_CASE("round trip is exact on grid cells") {
  int id = 0;
  for (double p : {1.5, 2.0, 3.0}) {
    for (int d : {1, 2}) {
      const int level = d == 1 ? 6 : 3;
      for (int trial = 0; trial < 25; ++trial, ++id) {
        RngStream rng(53, static_cast<std::uint64_t>(id));
        StepFunction f = random_step(d, level, rng);
        auto e = haar_coefficients(f, p);
        StepFunction g = haar_reconstruct(e, level);
        double scale = 0.0;
        for (double v : f.values) scale = std::max(scale, std::abs(v));
        CHECK(f.max_abs_diff(g) <= 1e-10 * scale);
      }
    }
  }
}

TEST_CASE("p = 2 norm equals the L2 norm") {
  for (int d : {1, 2}) {
    const int level = d == 1 ? 6 : 3;
    for (int trial = 0; trial < 30; ++trial) {
      RngStream rng(59, static_cast<std::uint64_t>(trial + 100 * d));
      StepFunction f = random_step(d, level, rng);
      auto e = haar_coefficients(f, 2.0);
      CHECK(haar_lp_norm(e) == doctest::Approx(f.l2_norm()).epsilon(1e-12));
    }
  }
}

TEST_CASE("basis elements have norm one") {
  for (double p : {1.5, 2.0, 2.5}) {
    HaarExpansion e;
    e.p = p;
    e.d = 2;
    e.coeffs = FpqVector(FpqParams(p, 2.0, 2));
    e.coeffs.set(Rectangle({DyadicAxisIndex::interval(2, 1), DyadicAxisIndex::zero()}), 1.0);
    CHECK(haar_lp_norm(e) == doctest::Approx(1.0).epsilon(1e-13));

    // reconstruct and re-analyze: the single coefficient comes back
    StepFunction g = haar_reconstruct(e, 4);
    auto back = haar_coefficients(g, p);
    REQUIRE(back.coeffs.support_size() == 1);
    CHECK(back.coeffs.entries().begin()->second == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("the norm is definitionally the f_{p,2} norm of the coefficients") {
  RngStream rng(61, 0);
  StepFunction f = random_step(2, 3, rng);
  auto e = haar_coefficients(f, 1.5);
  CHECK(haar_lp_norm(e) == doctest::Approx(fpq_norm(e.coeffs)).epsilon(1e-15));
}

TEST_CASE("shape validation") {
  CHECK_THROWS_AS(StepFunction(1, 2, {1.0, 2.0}), ParamError);
  HaarExpansion e;
  e.p = 2.0;
  e.d = 1;
  e.coeffs = FpqVector(FpqParams(2.0, 2.0, 1));
  e.coeffs.set(Rectangle({DyadicAxisIndex::interval(3, 0)}), 1.0);
  CHECK(e.min_grid_level() == 4);
  CHECK_THROWS_AS(haar_reconstruct(e, 2), ParamError);
}
