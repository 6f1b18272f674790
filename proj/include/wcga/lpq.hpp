#pragma once

#include <compare>
#include <map>
#include <set>
#include <vector>

#include "wcga/errors.hpp"

namespace wcga {

// Exponent pair for the mixed-norm sequence space l^p(l^q): rows measured in
// l^q, the row norms stacked in l^p.  Derived quantities are the ones that
// drive the greedy analysis of this space.
struct LpqParams {
  double p = 2.0;
  double q = 2.0;
  double p_conj = 2.0;   // p' = p/(p-1)
  double q_conj = 2.0;   // q' = q/(q-1)
  double r = 0.5;        // max(1/p', 1/q')
  double s = 2.0;        // max(p', q')
  double c1 = 0.5;       // min(1/p, 1/q)
  double beta = 1.0;     // max(p'/q', q'/p')
  double b = 1.0;        // max(p/q, q/p)
  double alpha_psi = 0;  // p'(1/q' - 1/p')

  LpqParams() = default;
  LpqParams(double p_in, double q_in);

  bool same_as(const LpqParams& o) const { return p == o.p && q == o.q; }
};

struct LpqIndex {
  int j = 1;  // row
  int k = 1;  // column
  auto operator<=>(const LpqIndex&) const = default;
};

using LpqIndexSet = std::set<LpqIndex>;

// Finitely supported element of l^p(l^q).  No explicit zeros are stored;
// magnitudes below 1e-300 are treated as structural zeros so |x|^(q-2)
// factors cannot underflow.
class LpqVector {
 public:
  using Index = LpqIndex;
  using Params = LpqParams;

  LpqVector() = default;
  explicit LpqVector(LpqParams params) : params_(params) {}

  const LpqParams& params() const { return params_; }
  const std::map<LpqIndex, double>& entries() const { return entries_; }
  std::size_t support_size() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  void set(int j, int k, double v);
  void set(const LpqIndex& i, double v) { set(i.j, i.k, v); }
  double at(int j, int k) const;
  double at(const LpqIndex& i) const { return at(i.j, i.k); }

  // coefficients on S kept, all others dropped
  LpqVector restricted(const LpqIndexSet& S) const;
  // coefficients on S dropped, all others kept
  LpqVector zeroed_on(const LpqIndexSet& S) const;
  void zero_entry(const LpqIndex& i) { entries_.erase(i); }

  LpqVector& add_scaled(const LpqVector& other, double c);
  LpqVector& scale(double c);

 private:
  LpqParams params_;
  std::map<LpqIndex, double> entries_;
};

// [sum_j (sum_k |x_{j,k}|^q)^{p/q}]^{1/p}; 0 for empty support
double lpq_norm(const LpqVector& x);

// row norm (sum_k |x_{j,k}|^q)^{1/q}
double lpq_row_norm(const LpqVector& x, int j);

// |F_x(e_{j,k})| for the norming functional F_x; 0 when x_{j,k} = 0
double lpq_norming_coeff(const LpqVector& x, int j, int k);
inline double lpq_norming_coeff(const LpqVector& x, const LpqIndex& i) {
  return lpq_norming_coeff(x, i.j, i.k);
}

// F_x(y) over real scalars; F_x(x) = ||x|| and |F_x(y)| <= ||y||
double lpq_norming_apply(const LpqVector& x, const LpqVector& y);

// |F_x(e_i)| for every i in supp(x), one pass over the entries
std::map<LpqIndex, double> lpq_all_norming_coeffs(const LpqVector& x);

// distance to span{e_i : i in S}; exact coordinate zeroing (the norm is
// absolute and coordinatewise monotone, so restriction is the minimizer)
double lpq_dist_to_coord_span(const LpqVector& x, const LpqIndexSet& S);

// Two-block test vector: a "spread" block (one entry per row, coefficient
// spread_coeff) plus a "spike" block (a single row, coefficient spike_coeff).
// These drive the adversarial lower-bound runs and the regime comparison.
struct LpqTwoBlock {
  LpqVector vec;
  LpqIndexSet spread;  // {(j,1) : 1 <= j <= m}
  LpqIndexSet spike;   // {(m+1,k) : 1 <= k <= n_spike}
};
LpqTwoBlock make_two_block_vector(const LpqParams& params, int m_spread, int n_spike,
                                  double spread_coeff, double spike_coeff);

enum class TwoBlockForm { single, doubled };

// Equal-functional two-block vector: spread coefficients 1, spike coefficients
// n^alpha with alpha = p'(1/q' - 1/p'), spike size n (single) or 2n (doubled).
// Every index in either block then carries the same norming coefficient
// ||x||^{-(p-1)}.
LpqTwoBlock make_equal_functional_vector(const LpqParams& params, int m_spread, int n,
                                         TwoBlockForm form);

// ADL hooks shared with the solver/greedy templates
inline double norm(const LpqVector& x) { return lpq_norm(x); }
inline double norming_coeff(const LpqVector& x, const LpqIndex& i) {
  return lpq_norming_coeff(x, i);
}
inline double norming_apply(const LpqVector& x, const LpqVector& y) {
  return lpq_norming_apply(x, y);
}
inline std::map<LpqIndex, double> all_norming_coeffs(const LpqVector& x) {
  return lpq_all_norming_coeffs(x);
}
inline double dist_to_coord_span(const LpqVector& x, const LpqIndexSet& S) {
  return lpq_dist_to_coord_span(x, S);
}
inline LpqVector canonical_element(const LpqVector& like, const LpqIndex& i) {
  LpqVector e(like.params());
  e.set(i, 1.0);
  return e;
}

}  // namespace wcga
