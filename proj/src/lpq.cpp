#include "wcga/lpq.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

namespace wcga {

namespace {
constexpr double kStructuralZero = 1e-300;

double conjugate(double e) { return e / (e - 1.0); }
}  // namespace

LpqParams::LpqParams(double p_in, double q_in) : p(p_in), q(q_in) {
  if (!(p > 1.0) || !std::isfinite(p) || !(q > 1.0) || !std::isfinite(q)) {
    throw ParamError("l^p(l^q) requires 1 < p,q < inf");
  }
  p_conj = conjugate(p);
  q_conj = conjugate(q);
  r = std::max(1.0 / p_conj, 1.0 / q_conj);
  s = std::max(p_conj, q_conj);
  c1 = std::min(1.0 / p, 1.0 / q);
  beta = std::max(p_conj / q_conj, q_conj / p_conj);
  b = std::max(p / q, q / p);
  alpha_psi = p_conj * (1.0 / q_conj - 1.0 / p_conj);
}

void LpqVector::set(int j, int k, double v) {
  if (j < 1 || k < 1) throw ParamError("l^p(l^q) indices start at 1");
  const LpqIndex i{j, k};
  if (std::abs(v) < kStructuralZero) {
    entries_.erase(i);
  } else {
    entries_[i] = v;
  }
}

double LpqVector::at(int j, int k) const {
  const auto it = entries_.find(LpqIndex{j, k});
  return it == entries_.end() ? 0.0 : it->second;
}

LpqVector LpqVector::restricted(const LpqIndexSet& S) const {
  LpqVector out(params_);
  for (const auto& [i, v] : entries_) {
    if (S.count(i)) out.entries_[i] = v;
  }
  return out;
}

LpqVector LpqVector::zeroed_on(const LpqIndexSet& S) const {
  LpqVector out(params_);
  for (const auto& [i, v] : entries_) {
    if (!S.count(i)) out.entries_[i] = v;
  }
  return out;
}

LpqVector& LpqVector::add_scaled(const LpqVector& other, double c) {
  if (!params_.same_as(other.params_)) throw ParamMismatchError("mixing l^p(l^q) parameters");
  for (const auto& [i, v] : other.entries_) {
    const double w = at(i) + c * v;
    set(i, w);
  }
  return *this;
}

LpqVector& LpqVector::scale(double c) {
  if (c == 0.0) {
    entries_.clear();
    return *this;
  }
  for (auto& [i, v] : entries_) v *= c;
  return *this;
}

double lpq_norm(const LpqVector& x) {
  if (x.is_zero()) return 0.0;
  const auto& e = x.entries();
  const double p = x.params().p;
  const double q = x.params().q;

  // row pass with per-row scaling, then the outer l^p with global scaling
  std::vector<double> row_norms;
  auto it = e.begin();
  while (it != e.end()) {
    const int j = it->first.j;
    double row_max = 0.0;
    auto row_end = it;
    while (row_end != e.end() && row_end->first.j == j) {
      row_max = std::max(row_max, std::abs(row_end->second));
      ++row_end;
    }
    double acc = 0.0;
    for (auto jt = it; jt != row_end; ++jt) {
      acc += std::pow(std::abs(jt->second) / row_max, q);
    }
    row_norms.push_back(row_max * std::pow(acc, 1.0 / q));
    it = row_end;
  }

  double dmax = 0.0;
  for (double d : row_norms) dmax = std::max(dmax, d);
  double acc = 0.0;
  for (double d : row_norms) acc += std::pow(d / dmax, p);
  return dmax * std::pow(acc, 1.0 / p);
}

double lpq_row_norm(const LpqVector& x, int j) {
  const auto& e = x.entries();
  auto it = e.lower_bound(LpqIndex{j, 1});
  if (it == e.end() || it->first.j != j) return 0.0;
  double row_max = 0.0;
  for (auto jt = it; jt != e.end() && jt->first.j == j; ++jt) {
    row_max = std::max(row_max, std::abs(jt->second));
  }
  double acc = 0.0;
  for (auto jt = it; jt != e.end() && jt->first.j == j; ++jt) {
    acc += std::pow(std::abs(jt->second) / row_max, x.params().q);
  }
  return row_max * std::pow(acc, 1.0 / x.params().q);
}

double lpq_norming_coeff(const LpqVector& x, int j, int k) {
  if (x.is_zero()) throw ZeroVectorError();
  const double v = std::abs(x.at(j, k));
  if (v == 0.0) return 0.0;
  const double dj = lpq_row_norm(x, j);
  const double nx = lpq_norm(x);
  // Delta_j^{p-q} |x|^{q-1} / ||x||^{p-1}, grouped so every ratio is <= 1
  const double& p = x.params().p;
  const double& q = x.params().q;
  return std::pow(dj / nx, p - 1.0) * std::pow(v / dj, q - 1.0);
}

double lpq_norming_apply(const LpqVector& x, const LpqVector& y) {
  if (x.is_zero()) throw ZeroVectorError();
  if (!x.params().same_as(y.params())) throw ParamMismatchError("mixing l^p(l^q) parameters");
  const double nx = lpq_norm(x);
  const double p = x.params().p;
  const double q = x.params().q;

  double acc = 0.0;
  const auto& xe = x.entries();
  auto it = xe.begin();
  while (it != xe.end()) {
    const int j = it->first.j;
    const double dj = lpq_row_norm(x, j);
    const double row_factor = std::pow(dj / nx, p - 1.0);
    for (; it != xe.end() && it->first.j == j; ++it) {
      const double yv = y.at(it->first);
      if (yv == 0.0) continue;
      const double xv = it->second;
      const double sgn = xv > 0 ? 1.0 : -1.0;
      acc += sgn * row_factor * std::pow(std::abs(xv) / dj, q - 1.0) * yv;
    }
  }
  return acc;
}

std::map<LpqIndex, double> lpq_all_norming_coeffs(const LpqVector& x) {
  if (x.is_zero()) throw ZeroVectorError();
  const double nx = lpq_norm(x);
  const double p = x.params().p;
  const double q = x.params().q;
  std::map<LpqIndex, double> out;
  const auto& xe = x.entries();
  auto it = xe.begin();
  while (it != xe.end()) {
    const int j = it->first.j;
    const double dj = lpq_row_norm(x, j);
    const double row_factor = std::pow(dj / nx, p - 1.0);
    for (; it != xe.end() && it->first.j == j; ++it) {
      out[it->first] = row_factor * std::pow(std::abs(it->second) / dj, q - 1.0);
    }
  }
  return out;
}

double lpq_dist_to_coord_span(const LpqVector& x, const LpqIndexSet& S) {
  return lpq_norm(x.zeroed_on(S));
}

LpqTwoBlock make_two_block_vector(const LpqParams& params, int m_spread, int n_spike,
                                  double spread_coeff, double spike_coeff) {
  if (m_spread < 0 || n_spike < 0) throw ParamError("block sizes must be nonnegative");
  LpqTwoBlock out;
  out.vec = LpqVector(params);
  for (int j = 1; j <= m_spread; ++j) {
    out.vec.set(j, 1, spread_coeff);
    out.spread.insert(LpqIndex{j, 1});
  }
  for (int k = 1; k <= n_spike; ++k) {
    out.vec.set(m_spread + 1, k, spike_coeff);
    out.spike.insert(LpqIndex{m_spread + 1, k});
  }
  return out;
}

LpqTwoBlock make_equal_functional_vector(const LpqParams& params, int m_spread, int n,
                                         TwoBlockForm form) {
  if (m_spread < 1 || n < 1) throw ParamError("block sizes must be positive");
  const int n_spike = form == TwoBlockForm::doubled ? 2 * n : n;
  const double spike_coeff = std::pow(static_cast<double>(n), params.alpha_psi);
  return make_two_block_vector(params, m_spread, n_spike, 1.0, spike_coeff);
}

}  // namespace wcga
