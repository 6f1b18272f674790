#pragma once

#include <cstdint>
#include <map>
#include <set>
#include <vector>

#include "wcga/dyadic.hpp"
#include "wcga/errors.hpp"

namespace wcga {

// Exponents for the sequence space f_{p,q} over dyadic rectangles of [0,1]^d;
// the norm is the L^p norm of the l^q-valued square-function analogue S_q.
struct FpqParams {
  double p = 2.0;
  double q = 2.0;
  int d = 1;
  double p_conj = 2.0;
  double q_conj = 2.0;
  double s = 2.0;         // max(p', q')
  double c_pq = 0.5;      // min(1/p, 1/q)
  double h = 0.0;         // (d-1)(1/p - 1/q)_+
  double alpha_pq = 1.0;  // 1 if p <= q, else q'/p'

  FpqParams() = default;
  FpqParams(double p_in, double q_in, int d_in);

  bool same_as(const FpqParams& o) const { return p == o.p && q == o.q && d == o.d; }
};

using RectangleSet = std::set<Rectangle>;

// Finitely supported coefficient sequence indexed by dyadic rectangles.
class FpqVector {
 public:
  using Index = Rectangle;
  using Params = FpqParams;

  FpqVector() = default;
  explicit FpqVector(FpqParams params) : params_(params) {}

  const FpqParams& params() const { return params_; }
  const std::map<Rectangle, double>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void set(const Rectangle& I, double v);
  double at(const Rectangle& I) const;

  FpqVector restricted(const RectangleSet& S) const;
  FpqVector zeroed_on(const RectangleSet& S) const;
  void zero_entry(const Rectangle& I) { entries_.erase(I); }

  FpqVector& add_scaled(const FpqVector& other, double c);
  FpqVector& scale(double c);

 private:
  FpqParams params_;
  std::map<Rectangle, double> entries_;
};

// Exact piecewise-constant integration of everything built from S_q(x).
// S_q^q is constant on each cell of the common refinement of the support
// rectangles, so norms, norming functionals and distances are evaluated
// cell-by-cell without quadrature error beyond double rounding.
class FpqEvaluator {
 public:
  explicit FpqEvaluator(const FpqVector& x);

  double norm() const { return norm_; }
  // |F_x(e_I)|
  double norming_coeff(const Rectangle& I) const;
  // F_x(y), real scalars
  double norming_apply(const FpqVector& y) const;
  // one grid pass for all support rectangles
  std::map<Rectangle, double> all_norming_coeffs() const;

 private:
  double integral_pmq_over(const Rectangle& I) const;  // int_I (S_q x)^{p-q}

  const FpqVector* x_;
  FpqParams params_;
  RefinementGrid grid_;
  std::vector<double> cell_sq_;  // S_q^q per cell, in units of scale_
  double scale_ = 1.0;           // max rectangle weight |x_I|^q |I|^{-q/p}
  double norm_ = 0.0;
};

double fpq_norm(const FpqVector& x);
double fpq_norming_coeff(const FpqVector& x, const Rectangle& I);
double fpq_norming_apply(const FpqVector& x, const FpqVector& y);
double fpq_dist_to_coord_span(const FpqVector& x, const RectangleSet& S);

// ||sum_{I in A} e_I||_{f_{p,q}}
double democracy_sum(const FpqParams& params, const RectangleSet& A);

// Block A: all rectangles of measure 2^{-n} inside [0,1/2]^d (each axis level
// >= 1, levels summing to n).  Block B: congruent rectangles tiling [1/2,1]^d
// with per-axis levels m_i >= 1.  These are the two halves of the structured
// lower-bound family.
std::vector<Rectangle> block_a_rectangles(int d, int n);
std::vector<Rectangle> block_b_rectangles(int d, std::span<const int> m_vec);
std::uint64_t block_a_cardinality(int d, int n);  // binom(n-1,d-1) * 2^{n-d}
std::uint64_t block_b_cardinality(int d, std::span<const int> m_vec);
std::uint64_t compositions(int n, int d);  // binom(n-1, d-1)

// Closed-form norm of a*1_{blockA(n)} + b*1_{blockB(m_vec)}: S_q is constant
// on (0,1/2)^d and on (1/2,1)^d, so the integral reduces to two terms.  Used
// where the explicit family would not fit in the cell budget.
double block_family_norm(const FpqParams& params, double a, int n, double b,
                         std::span<const int> m_vec);

// Discrete Lorentz quasi-norm (sum_j |2^{j/p} x*_{2^j}|^q)^{1/q} over the
// decreasing rearrangement, dyadic positions within range.
double lorentz_quasinorm(std::vector<double> coeffs, double p, double q);

// ADL hooks shared with the solver/greedy templates
inline double norm(const FpqVector& x) { return fpq_norm(x); }
inline double norming_coeff(const FpqVector& x, const Rectangle& I) {
  return fpq_norming_coeff(x, I);
}
inline double norming_apply(const FpqVector& x, const FpqVector& y) {
  return fpq_norming_apply(x, y);
}
inline std::map<Rectangle, double> all_norming_coeffs(const FpqVector& x) {
  return FpqEvaluator(x).all_norming_coeffs();
}
inline double dist_to_coord_span(const FpqVector& x, const RectangleSet& S) {
  return fpq_dist_to_coord_span(x, S);
}
inline FpqVector canonical_element(const FpqVector& like, const Rectangle& I) {
  FpqVector e(like.params());
  e.set(I, 1.0);
  return e;
}

}  // namespace wcga
