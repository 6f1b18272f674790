#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "wcga/fpq.hpp"
#include "wcga/lpq.hpp"

namespace wcga {

// Outcome of a sampled inequality check.  A ratio of measured/bound at most
// 1 + tolerance on every sample is a PASS; the witness is the sample
// achieving the maximum, serialized in the shared vector JSON schema so runs
// are reproducible from (seed, sample index).
struct PropertyReport {
  std::string property;
  std::map<std::string, double> params;
  double max_violation_ratio = 0.0;
  std::string witness_json;
  int samples = 0;
  std::uint64_t seed = 0;
  double tolerance = 0.0;

  bool pass() const { return max_violation_ratio <= 1.0 + tolerance; }
};

// --- coordinate sub-sum boundedness (suppression unconditionality, U = 1) ---
PropertyReport check_a2_lpq(const LpqParams& params, int N, int samples, std::uint64_t seed);
PropertyReport check_a2_fpq(const FpqParams& params, int N, int samples, std::uint64_t seed);

// --- l^1-to-norm domination: sum_A |x_i| <= V |A|^r ||x_B|| ---
// l^p(l^q): r = max(1/p',1/q'), V = 1.
PropertyReport check_a3_lpq(const LpqParams& params, int N, int samples, std::uint64_t seed);
// f_{p,q}: r = 1/p' with a (1+log|A|)^{(d-1)(1/p-1/q)_+} factor and frozen c.
PropertyReport check_a3_fpq(const FpqParams& params, int N, int samples, std::uint64_t seed,
                            double frozen_c);

// dual-space norm of sum_{i in A} e*_i; closed form for l^p(l^q), exact
// integration in f_{p',q'} for the rectangle space
double a3_dual_norm_lpq(const LpqParams& params, const LpqIndexSet& A);
double a3_dual_norm_fpq(const FpqParams& params, const RectangleSet& A);

// --- one-step distance decrease: dist(x,[e_i]) <= ||x||(1 - c1 |F_x(e_i)|^s) ---
PropertyReport check_d_lpq(const LpqParams& params, int samples, std::uint64_t seed,
                           std::optional<double> s_override = std::nullopt,
                           std::optional<double> c1_override = std::nullopt);
PropertyReport check_d_fpq(const FpqParams& params, int samples, std::uint64_t seed,
                           std::optional<double> s_override = std::nullopt,
                           std::optional<double> c1_override = std::nullopt);

// --- modulus of smoothness, Monte Carlo lower estimate ---
// curve: (t, estimate); gamma_hat is the empirical constant for
// 2 rho(t) <= gamma t^sigma with sigma = min(p,q,2).
struct RhoEstimate {
  std::vector<std::pair<double, double>> curve;
  double gamma_hat = 0.0;
  double sigma_exponent = 2.0;
};
RhoEstimate estimate_rho_lpq(const LpqParams& params, const std::vector<double>& t_grid,
                             int samples, std::uint64_t seed);
RhoEstimate estimate_rho_fpq(const FpqParams& params, const std::vector<double>& t_grid,
                             int samples, std::uint64_t seed);

// D(q', c1) constant implied by a power-type modulus bound 2 rho(t) <= gamma t^q
double c1_from_gamma(double gamma, double q);

// --- disjoint-support q-triangle inequality in f_{p,q}, p >= q ---
PropertyReport check_disjoint_q_fpq(const FpqParams& params, int samples, std::uint64_t seed);

// --- l^p <= f_{p,q} <= c l^{p,q} sandwich, d = 1, q <= p ---
PropertyReport check_lorentz_sandwich(const FpqParams& params, int samples, std::uint64_t seed,
                                      double frozen_c);

// --- democracy upper bound: ||1_A|| <= c |A|^{1/p} (1+log|A|)^{(d-1)(1/q-1/p)_+} ---
PropertyReport check_democracy_fpq(const FpqParams& params, int samples, std::uint64_t seed,
                                   double frozen_c);

// --- d = 1 log bound: ||sum_A x_I e_I|| <= c (1+log|A|)^{1/q-1/p} (sum |x_I|^p)^{1/p} ---
PropertyReport check_d1log_fpq(const FpqParams& params, int samples, std::uint64_t seed,
                               double frozen_c);

// Frozen constants calibrated once on the seed-0 corpus (1.05 headroom).
// Unknown parameter combinations throw ParamError.
double frozen_lorentz_c(double p, double q);
double frozen_d1log_c(double p, double q);
double frozen_a3_fpq_c(double p, double q, int d);
double frozen_democracy_c(double p, double q, int d);

std::string report_to_json(const PropertyReport& r);

}  // namespace wcga
