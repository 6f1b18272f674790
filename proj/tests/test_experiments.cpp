#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <sstream>

#include "wcga/experiments.hpp"

using namespace wcga;

TEST_CASE("log-log fit recovers exact power laws") {
  std::vector<std::pair<double, double>> pts;
  for (int n = 2; n <= 40; ++n) {
    pts.emplace_back(static_cast<double>(n), 3.0 * std::pow(n, 2.0));
  }
  auto fit = fit_loglog(pts);
  CHECK(fit.slope == doctest::Approx(2.0).epsilon(1e-10));
  CHECK(std::exp(fit.intercept) == doctest::Approx(3.0).epsilon(1e-8));
  CHECK(fit.r_squared == doctest::Approx(1.0));
  CHECK(fit.points.size() >= 4);
}

TEST_CASE("adversarial counts in the Hilbert case grow linearly") {
  auto r = exp_lpq_lower(LpqParams(2.0, 2.0), 4, 16);
  CHECK(r.fit.slope > 0.85);
  CHECK(r.fit.slope < 1.15);
  for (const auto& row : r.rows) {
    CHECK(row.psi >= 1);
    CHECK(static_cast<double>(row.m) + 1e-9 >=
          std::pow(static_cast<double>(row.n), r.params.p_conj / r.params.q_conj));
  }
}

TEST_CASE("adversarial counts for p < q follow the spread-block threshold") {
  LpqParams params(1.5, 3.0);  // p'/q' = 2
  auto r = exp_lpq_lower(params, 4, 12);
  for (const auto& row : r.rows) {
    const double threshold = std::pow(static_cast<double>(row.n), params.p_conj / params.q_conj);
    CHECK(static_cast<double>(row.m) + 1e-9 >= threshold);
    // recovery happens exactly when the spread deficit crosses the threshold
    CHECK(row.psi == static_cast<long long>(std::ceil(threshold - 1e-9)));
  }
  CHECK(r.fit.slope == doctest::Approx(2.0).epsilon(0.12));
}

TEST_CASE("adversarial counts for (4, 4/3) reach the cubic exponent") {
  LpqParams params(4.0, 4.0 / 3.0);
  auto r = exp_lpq_lower(params, 4, 14);
  for (const auto& row : r.rows) {
    CHECK(static_cast<double>(row.m) + 1e-9 >=
          std::pow(static_cast<double>(row.n), params.p_conj / params.q_conj));
    CHECK(row.psi >= 1);
  }
  // full-range slope is checked in the acceptance suite; here the short range
  // must already be clearly super-quadratic
  CHECK(r.fit.slope > 2.3);
}

TEST_CASE("structured family: closed form matches the measured run") {
  FpqParams params(1.5, 2.0, 2);
  for (int n : {4, 5, 6}) {
    BlockFamily fam = make_balanced_block_family(params, n);
    const long long closed = fam.closed_form_steps(1.0);
    const long long measured = block_family_steps_measured(fam, 1.0);
    CHECK(closed == measured);
  }
}

TEST_CASE("structured family norms agree with the direct evaluator") {
  FpqParams params(1.5, 2.0, 2);
  BlockFamily fam = make_balanced_block_family(params, 5);
  FpqVector x(params);
  for (const auto& I : block_a_rectangles(2, fam.n)) x.set(I, fam.a);
  CHECK(fam.norm_a() == doctest::Approx(fpq_norm(x)).epsilon(1e-11));
  FpqVector y(params);
  for (const auto& I : block_b_rectangles(2, fam.m_vec)) y.set(I, fam.b);
  CHECK(fam.norm_b() == doctest::Approx(fpq_norm(y)).epsilon(1e-11));
}

TEST_CASE("fpq lower bound: no log factor in one dimension") {
  auto r = exp_fpq_lower(FpqParams(1.5, 2.0, 1), 2, 16);
  CHECK(std::abs(r.fit.slope) <= 0.1);
  CHECK(r.target_exponent == doctest::Approx(0.0));
}

TEST_CASE("fpq lower bound: d = 2 log exponent near one half") {
  auto r = exp_fpq_lower(FpqParams(1.5, 2.0, 2), 6, 20);
  CHECK(r.target_exponent == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(std::abs(r.fit.slope - 0.5) <= 0.2);
  for (const auto& row : r.rows) {
    CHECK(row.psi >= 1);
    CHECK(row.ratio >= 1.0 - 1e-9);  // never fewer steps than sparsity here
  }
}

TEST_CASE("fpq lower bound rejects p > q") {
  CHECK_THROWS_AS(exp_fpq_lower(FpqParams(2.0, 1.5, 2), 4, 8), ParamError);
}

TEST_CASE("regime map analytic columns") {
  auto rows = exp_tga_vs_wcga({4.0}, {3.0}, 24);
  REQUIRE(rows.size() == 1);
  CHECK(rows[0].beta == doctest::Approx(9.0 / 8.0));
  CHECK(rows[0].b == doctest::Approx(4.0 / 3.0));
  CHECK(rows[0].wcga_analytic);  // q = 3 >= p' = 4/3

  auto rows2 = exp_tga_vs_wcga({3.0}, {1.2}, 24);
  CHECK_FALSE(rows2[0].wcga_analytic);  // q = 1.2 < p' = 1.5

  auto rows3 = exp_tga_vs_wcga({2.0}, {2.0}, 24);
  CHECK(rows3[0].beta == doctest::Approx(1.0));
  CHECK(rows3[0].b == doctest::Approx(1.0));
  CHECK(rows3[0].wcga_analytic);
}

TEST_CASE("regime map: measured winners match the analytic rule when separated") {
  const std::vector<double> grid = {1.5, 5.0 / 3.0, 2.0, 2.5, 3.0};
  auto rows = exp_tga_vs_wcga(grid, grid, 48);
  for (const auto& row : rows) {
    if (row.measured_winner == 1) CHECK(row.wcga_analytic);
    if (row.measured_winner == -1) CHECK_FALSE(row.wcga_analytic);
  }
}

TEST_CASE("noiseless sweeps recover in exactly N steps") {
  auto r = exp_lebesgue_sweep(LpqParams(2.0, 2.0), 2, 8, 0.0, 1.0, 0, 3.0);
  CHECK(r.violations == 0);
  for (const auto& row : r.rows) CHECK(row.steps == row.N);
}

TEST_CASE("noisy sweeps stay within the frozen Lebesgue budget") {
  auto r = exp_lebesgue_sweep(LpqParams(2.0, 2.0), 2, 8, 0.01, 1.0, 0, 3.0);
  CHECK(r.violations == 0);

  auto r2 = exp_lebesgue_sweep(LpqParams(3.0, 1.5), 2, 8, 0.01, 1.0, 0, 3.0);
  CHECK(r2.params.beta == doctest::Approx(2.0));
  CHECK(r2.violations == 0);
}

TEST_CASE("iteration decay: negative slopes, flattening with K") {
  auto r = exp_iteration_decay(LpqParams(2.0, 2.0), {1, 4, 8, 12}, 6, 0);
  REQUIRE(r.rows.size() == 4);
  CHECK(r.rows[0].steps == 1);  // K = 1 recovers immediately
  for (const auto& row : r.rows) {
    if (row.K >= 4) CHECK(row.mean_slope < 0.0);
  }
  // decay rate magnitude shrinks as the target gets harder
  CHECK(std::abs(r.rows[1].mean_slope) + 0.5 >= std::abs(r.rows[3].mean_slope));
}

TEST_CASE("CSV output is deterministic and self-describing") {
  auto r = exp_lpq_lower(LpqParams(2.0, 2.0), 4, 8);
  std::ostringstream a, b;
  write_csv(a, r);
  write_csv(b, r);
  CHECK(a.str() == b.str());
  CHECK(a.str().find("# version=") == 0);
  CHECK(a.str().find("n,m,psi,sigma,beta_target") != std::string::npos);
  CHECK(a.str().find("p=2") != std::string::npos);
}
