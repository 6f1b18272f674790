#pragma once

#include <cstdint>
#include <iosfwd>
#include <vector>

#include "wcga/fit.hpp"
#include "wcga/fpq.hpp"
#include "wcga/greedy.hpp"
#include "wcga/lpq.hpp"

namespace wcga {

// ---- adversarial recovery counts in l^p(l^q) --------------------------------
// For each sparsity n an equal-functional two-block vector is built and the
// WCGA is driven through the block the tie policy prefers; psi is the number
// of steps until the residual reaches C times the closed-form best-n-term
// bound sigma.  m is the spread-block size, which dominates n^{p'/q'} row by
// row; the fitted slope of psi against n estimates beta = max(p'/q', q'/p').
struct LpqLowerRow {
  int n = 0;
  long long m = 0;
  long long psi = 0;
  double sigma = 0.0;
  double beta_target = 0.0;
};
struct LpqLowerResult {
  LpqParams params;
  double C = 1.0;
  std::vector<LpqLowerRow> rows;
  FitResult fit;  // log psi vs log n
};
LpqLowerResult exp_lpq_lower(const LpqParams& params, int n_lo, int n_hi, double C = 1.0);

// ---- structured lower-bound family in f_{p,q} -------------------------------
// Balanced two-family vector a 1_A + b 1_B with b chosen so every norming
// coefficient ties; closed forms for both block norms and for the number of
// spike picks until recovery, valid because S_q is constant on each half-cube.
struct BlockFamily {
  FpqParams params;
  int n = 0;                // block A: all rectangles of measure 2^{-n} in [0,1/2]^d
  std::vector<int> m_vec;   // block B: per-axis levels on [1/2,1]^d
  double a = 1.0;
  double b = 1.0;

  double norm_a() const;      // ||a 1_A||
  double norm_b() const;      // ||b 1_B||
  double sigma_hat() const { return norm_b(); }
  std::uint64_t block_b_size() const;
  long long closed_form_steps(double C = 1.0) const;  // spike picks to reach C sigma_hat
};
// b balanced to a^{p-1} comps^{(p-q)/q} = b^{p-1}; m_total sized so recovery
// happens inside the spike phase
BlockFamily make_balanced_block_family(const FpqParams& params, int n);

// measured counterpart on the materialized family (small n only)
long long block_family_steps_measured(const BlockFamily& fam, double C = 1.0);

struct FpqLowerRow {
  int n = 0;
  double bigN = 0.0;   // |A_n|
  long long psi = 0;   // recovery steps
  int m_total = 0;
  double ratio = 0.0;  // psi / N
  double sigma = 0.0;
};
struct FpqLowerResult {
  FpqParams params;
  std::vector<FpqLowerRow> rows;
  FitResult fit;                // log(psi/N) vs log(log N)
  double target_exponent = 0.0; // p'(d-1)(1/p - 1/q)
};
FpqLowerResult exp_fpq_lower(const FpqParams& params, int n_lo, int n_hi);

// ---- TGA vs WCGA regime map --------------------------------------------------
// Each algorithm is measured at its worst case over a family of two-block
// vectors at sparsity N (the adversarial balances for either algorithm), and
// the measured winner is compared with the analytic rule: the WCGA exponent
// beta = max(p'/q', q'/p') beats the TGA exponent b = max(p/q, q/p) exactly
// when q >= p' (or q = p).
struct RegimeRow {
  double p = 0, q = 0;
  double beta = 0, b = 0;
  bool wcga_analytic = false;
  long long wcga_steps = 0;
  long long tga_steps = 0;
  int measured_winner = 0;  // +1 WCGA, -1 TGA, 0 within a factor of 2
};
std::vector<RegimeRow> exp_tga_vs_wcga(const std::vector<double>& ps, const std::vector<double>& qs,
                                       int N);

// ---- Lebesgue sweep: sparse + noise recovery counts ---------------------------
struct LebesgueRow {
  int N = 0;
  int steps = -1;
  double sigma = 0.0;
  long long bound = 0;  // ceil(c_fit N^beta)
  bool ok = false;
};
struct LebesgueResult {
  LpqParams params;
  double eps = 0.0, C = 1.0, c_fit = 1.0;
  std::vector<LebesgueRow> rows;
  int violations = 0;
};
LebesgueResult exp_lebesgue_sweep(const LpqParams& params, int n_lo, int n_hi, double eps,
                                  double C, std::uint64_t seed, double c_fit);

// ---- per-iteration decay on sparse targets ------------------------------------
struct DecayRow {
  int K = 0;
  double mean_slope = 0.0;  // least-squares slope of log ||f_m|| over the pre-recovery window
  double k_rs = 0.0;        // K^{rs}, the predicted decay-scale denominator
  int steps = 0;
};
struct DecayResult {
  LpqParams params;
  std::vector<DecayRow> rows;
};
DecayResult exp_iteration_decay(const LpqParams& params, const std::vector<int>& Ks,
                                int runs_per_k, std::uint64_t seed);

// ---- CSV emission --------------------------------------------------------------
// First line: "# key=value ..." metadata including the library version;
// second line: column header; '.' decimal, comma separator.
void write_csv(std::ostream& os, const LpqLowerResult& r);
void write_csv(std::ostream& os, const FpqLowerResult& r);
void write_csv(std::ostream& os, const std::vector<RegimeRow>& rows, int N);
void write_csv(std::ostream& os, const LebesgueResult& r);
void write_csv(std::ostream& os, const DecayResult& r, std::uint64_t seed);

}  // namespace wcga
