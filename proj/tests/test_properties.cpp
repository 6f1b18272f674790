#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wcga/properties.hpp"
#include "wcga/rng.hpp"

using namespace wcga;

TEST_CASE("coordinate sub-sums never exceed the full norm") {
  for (double p : {1.25, 2.0, 3.0}) {
    for (double q : {1.5, 2.0, 3.0}) {
      auto rep = check_a2_lpq(LpqParams(p, q), 8, 200, 0);
      CHECK(rep.pass());
      CHECK(rep.max_violation_ratio <= 1.0 + 1e-10);
    }
  }
  auto repf = check_a2_fpq(FpqParams(1.5, 2.0, 2), 6, 120, 0);
  CHECK(repf.pass());
}

TEST_CASE("l1 domination holds with V = 1 in l^p(l^q)") {
  for (double p : {1.25, 1.5, 2.0, 3.0}) {
    for (double q : {1.25, 1.5, 2.0, 3.0}) {
      auto rep = check_a3_lpq(LpqParams(p, q), 8, 300, 0);
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("l1 domination in f_{p,q} with frozen constants") {
  for (auto [p, q] : {std::pair{1.5, 2.0}, std::pair{2.0, 1.5}, std::pair{2.0, 2.0}}) {
    for (int d : {1, 2}) {
      auto rep = check_a3_fpq(FpqParams(p, q, d), 8, 150, 1, frozen_a3_fpq_c(p, q, d));
      CHECK(rep.pass());
    }
  }
}

TEST_CASE("dual norms of indicator functionals") {
  LpqParams params(1.5, 3.0);
  CHECK(a3_dual_norm_lpq(params, {{1, 1}}) == doctest::Approx(1.0));

  // one index per row: m^{1/p'}
  LpqIndexSet rows;
  for (int j = 1; j <= 6; ++j) rows.insert({j, 1});
  CHECK(a3_dual_norm_lpq(params, rows) ==
        doctest::Approx(std::pow(6.0, 1.0 / params.p_conj)).epsilon(1e-13));

  FpqParams fparams(1.5, 2.0, 1);
  RectangleSet single{Rectangle({DyadicAxisIndex::interval(2, 1)})};
  CHECK(a3_dual_norm_fpq(fparams, single) == doctest::Approx(1.0).epsilon(1e-12));
}

TEST_CASE("direct l1 sums are dominated through the dual norm") {
  LpqParams params(2.5, 1.5);
  RngStream rng(1, 0);
  for (int trial = 0; trial < 50; ++trial) {
    LpqVector x(params);
    LpqIndexSet A;
    while (static_cast<int>(x.support_size()) < 8) {
      const int j = static_cast<int>(rng.uniform_int(1, 5));
      const int k = static_cast<int>(rng.uniform_int(1, 5));
      x.set(j, k, rng.sign() * rng.log_uniform(1e-2, 1e2));
    }
    for (const auto& [i, v] : x.entries()) {
      if (rng.bernoulli(0.5)) A.insert(i);
    }
    if (A.empty()) A.insert(x.entries().begin()->first);
    double l1 = 0.0;
    for (const auto& i : A) l1 += std::abs(x.at(i));
    CHECK(l1 <= a3_dual_norm_lpq(params, A) * lpq_norm(x) * (1.0 + 1e-10));
    // and the dual norm itself is below |A|^r with V = 1
    CHECK(a3_dual_norm_lpq(params, A) <=
          std::pow(static_cast<double>(A.size()), params.r) * (1.0 + 1e-10));
  }
}

TEST_CASE("distance decrease checker passes with the space parameters") {
  auto rep = check_d_lpq(LpqParams(3.0, 1.5), 500, 0);
  CHECK(rep.pass());
  CHECK(rep.params.at("s") == doctest::Approx(3.0));   // max(p',q') = max(1.5, 3)
  CHECK(rep.params.at("c1") == doctest::Approx(1.0 / 3.0));

  auto repf = check_d_fpq(FpqParams(2.0, 1.5, 2), 200, 0);
  CHECK(repf.pass());
}

TEST_CASE("the distance exponent is sharp: s - 0.25 fails at p = q = 4") {
  // one-row two-coordinate vectors x = (1, t): dropping the small coordinate
  // costs 1 while the weakened bound dips below 1 for small t
  LpqParams params(4.0, 4.0);
  const double weakened_s = params.s - 0.25;
  bool violated = false;
  for (double t = 1e-3; t < 0.5; t *= 1.6) {
    LpqVector x(params);
    x.set(1, 1, 1.0);
    x.set(1, 2, t);
    const double F = lpq_norming_coeff(x, 1, 2);
    const double dist = lpq_dist_to_coord_span(x, LpqIndexSet{{1, 2}});
    const double bound = lpq_norm(x) * (1.0 - params.c1 * std::pow(F, weakened_s));
    if (dist > bound + 1e-10) violated = true;
  }
  CHECK(violated);

  // sanity: the true exponent passes on the same family
  for (double t = 1e-3; t < 0.5; t *= 1.6) {
    LpqVector x(params);
    x.set(1, 1, 1.0);
    x.set(1, 2, t);
    const double F = lpq_norming_coeff(x, 1, 2);
    const double dist = lpq_dist_to_coord_span(x, LpqIndexSet{{1, 2}});
    CHECK(dist <= lpq_norm(x) * (1.0 - params.c1 * std::pow(F, params.s)) + 1e-10);
  }
}

TEST_CASE("modulus of smoothness estimate in the Hilbert case") {
  LpqParams params(2.0, 2.0);
  const std::vector<double> t_grid = {0.1, 0.5, 1.0};
  auto est = estimate_rho_lpq(params, t_grid, 4000, 0);
  for (const auto& [t, v] : est.curve) {
    const double closed = std::sqrt(1.0 + t * t) - 1.0;
    CHECK(v <= closed + 1e-12);  // estimator is a lower bound
    CHECK(v >= closed - 1e-2);   // and tight at this sample count
  }

  // monotone under sample extension with a fixed seed
  auto less = estimate_rho_lpq(params, t_grid, 500, 7);
  auto more = estimate_rho_lpq(params, t_grid, 1000, 7);
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    CHECK(less.curve[i].second <= more.curve[i].second + 1e-15);
  }
}

TEST_CASE("smoothness exponent stays bounded for (1.5, 3)") {
  LpqParams params(1.5, 3.0);
  std::vector<double> t_grid;
  for (double t = 1e-3; t <= 1.0; t *= 3.0) t_grid.push_back(t);
  auto est = estimate_rho_lpq(params, t_grid, 500, 0);
  CHECK(est.sigma_exponent == doctest::Approx(1.5));
  CHECK(est.gamma_hat > 0.0);
  CHECK(est.gamma_hat < 10.0);  // empirical: the ratio 2 rho(t)/t^1.5 is O(1)
}

TEST_CASE("smoothness bound gives a distance-decrease constant") {
  // Hilbert space: 2 rho(t) <= t^2, so c1 = 1/(2' (1*2)^{2'-1}) = 1/4
  CHECK(c1_from_gamma(1.0, 2.0) == doctest::Approx(0.25));
}

TEST_CASE("disjoint q-triangle checker") {
  auto rep = check_disjoint_q_fpq(FpqParams(3.0, 1.5, 1), 200, 0);
  CHECK(rep.pass());
  auto rep2 = check_disjoint_q_fpq(FpqParams(2.0, 2.0, 2), 100, 0);
  CHECK(rep2.pass());
  CHECK_THROWS_AS(check_disjoint_q_fpq(FpqParams(1.5, 2.0, 1), 10, 0), ParamError);
}

TEST_CASE("lorentz sandwich checker with frozen constants") {
  for (auto [p, q] : {std::pair{2.0, 1.5}, std::pair{3.0, 2.0}, std::pair{4.0, 3.0}}) {
    auto rep = check_lorentz_sandwich(FpqParams(p, q, 1), 200, 1, frozen_lorentz_c(p, q));
    CHECK(rep.pass());
  }
  CHECK_THROWS_AS(check_lorentz_sandwich(FpqParams(1.5, 2.0, 1), 10, 0, 2.0), ParamError);
}

TEST_CASE("democracy upper bound with frozen constants") {
  for (auto [p, q, d] : {std::tuple{2.0, 1.5, 2}, std::tuple{2.0, 2.0, 1}, std::tuple{1.5, 2.0, 2}}) {
    auto rep = check_democracy_fpq(FpqParams(p, q, d), 60, 1, frozen_democracy_c(p, q, d));
    CHECK(rep.pass());
  }
}

TEST_CASE("d = 1 log bound with frozen constants") {
  for (auto [p, q] : {std::pair{2.0, 1.5}, std::pair{3.0, 2.0}}) {
    auto rep = check_d1log_fpq(FpqParams(p, q, 1), 40, 1, frozen_d1log_c(p, q));
    CHECK(rep.pass());
  }
  CHECK_THROWS_AS(check_d1log_fpq(FpqParams(2.0, 2.0, 1), 10, 0, 2.0), ParamError);
}

TEST_CASE("reports are reproducible bit for bit") {
  auto a = check_d_lpq(LpqParams(2.5, 1.5), 100, 42);
  auto b = check_d_lpq(LpqParams(2.5, 1.5), 100, 42);
  CHECK(a.max_violation_ratio == b.max_violation_ratio);
  CHECK(a.witness_json == b.witness_json);

  auto c = check_a3_lpq(LpqParams(2.0, 3.0), 8, 100, 11);
  auto d = check_a3_lpq(LpqParams(2.0, 3.0), 8, 100, 11);
  CHECK(c.max_violation_ratio == d.max_violation_ratio);
  CHECK(c.witness_json == d.witness_json);
}

TEST_CASE("report serialization carries the verdict") {
  auto rep = check_a2_lpq(LpqParams(2.0, 2.0), 6, 50, 3);
  const std::string js = report_to_json(rep);
  CHECK(js.find("\"pass\": true") != std::string::npos);
  CHECK(js.find("max_violation_ratio") != std::string::npos);
}
