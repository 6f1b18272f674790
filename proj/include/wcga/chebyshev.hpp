#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <set>
#include <vector>

#include "wcga/errors.hpp"

namespace wcga {

template <class V>
concept SpaceVector = requires(const V& x, const V& y, const typename V::Index& i) {
  { norm(x) } -> std::convertible_to<double>;
  { norming_apply(x, y) } -> std::convertible_to<double>;
  { norming_coeff(x, i) } -> std::convertible_to<double>;
  { canonical_element(x, i) } -> std::convertible_to<V>;
};

// Unit-norm element of a dictionary; normalized at construction.
template <SpaceVector V>
class DictionaryElement {
 public:
  explicit DictionaryElement(V v) : vec_(std::move(v)) {
    const double n = norm(vec_);
    if (n == 0.0) throw ZeroVectorError();
    if (std::abs(n - 1.0) > 1e-10) vec_.scale(1.0 / n);
  }
  const V& vec() const { return vec_; }

 private:
  V vec_;
};

enum class SolveStatus { converged, exact, max_iter, zero_input };

template <SpaceVector V>
struct ChebyshevResult {
  std::vector<double> coefficients;
  V residual;
  double residual_norm = 0.0;
  double grad_sup = 0.0;
  int iterations = 0;
  SolveStatus status = SolveStatus::converged;
};

struct ChebyshevOptions {
  double tol = 1e-10;
  int max_iter = 20000;
};

// F_f(g): the one-sided derivative of t -> ||f + t g|| at t = 0
template <SpaceVector V>
double norm_directional_derivative(const V& f, const V& g) {
  if (f.is_zero()) throw ZeroVectorError();
  return norming_apply(f, g);
}

// Best approximation of f from span{elements} by gradient descent with
// Armijo backtracking (shrink 0.5, sufficient decrease 1e-4).  The norm is
// smooth for 1 < p,q < inf and strictly convex, so the minimizer is unique;
// gradient component j is -F_residual(phi_j).  The problem is solved on
// f/||f|| (coefficients scale back linearly), the trial step is the
// spectral (Barzilai-Borwein) quotient when history exists and 1/||gradient||
// on the first pass.  Terminates when the residual's norming functional
// nearly annihilates the span (grad_sup <= tol * max(1, residual_norm)), when
// f is represented exactly, or at max_iter.
template <SpaceVector V>
ChebyshevResult<V> chebyshev_project(const V& f, const std::vector<DictionaryElement<V>>& elements,
                                     ChebyshevOptions opt = {},
                                     const std::vector<double>* warm_start = nullptr,
                                     std::vector<double>* iterate_norms = nullptr) {
  const std::size_t k = elements.size();
  ChebyshevResult<V> res;
  res.coefficients.assign(k, 0.0);
  res.residual = f;

  const double fnorm = norm(f);
  if (fnorm == 0.0) {
    res.status = SolveStatus::zero_input;
    return res;
  }
  V fs = f;
  fs.scale(1.0 / fnorm);
  std::vector<double> c(k, 0.0);
  if (warm_start) {
    for (std::size_t j = 0; j < std::min(k, warm_start->size()); ++j) {
      c[j] = (*warm_start)[j] / fnorm;
    }
  }

  auto rebuild = [&](const std::vector<double>& cc) {
    V r = fs;
    for (std::size_t j = 0; j < k; ++j) {
      if (cc[j] != 0.0) r.add_scaled(elements[j].vec(), -cc[j]);
    }
    return r;
  };

  V r = rebuild(c);
  double rn = norm(r);
  std::vector<double> grad(k, 0.0), prev_grad(k, 0.0), trial(k, 0.0), prev_c(k, 0.0);
  bool have_prev = false;

  auto eval_gradient = [&](double& gsup, double& gnorm2) {
    gsup = 0.0;
    gnorm2 = 0.0;
    for (std::size_t j = 0; j < k; ++j) {
      grad[j] = norming_apply(r, elements[j].vec());
      gsup = std::max(gsup, std::abs(grad[j]));
      gnorm2 += grad[j] * grad[j];
    }
  };

  // Phase 1: descent along the full gradient.  Fast when min(p,q) >= 2; with
  // coefficients whose residual coordinate vanishes at the optimum and an
  // exponent below 2 the local curvature is unbounded and the global step
  // collapses, so the budget here is limited and phase 2 finishes the job.
  const int gd_budget = std::min(opt.max_iter, 500);
  int it = 0;
  bool done = false;
  for (; it < gd_budget; ++it) {
    if (iterate_norms) iterate_norms->push_back(rn * fnorm);
    if (rn <= opt.tol) {
      res.status = SolveStatus::exact;
      res.grad_sup = 0.0;
      done = true;
      break;
    }
    double gsup = 0.0, gnorm2 = 0.0;
    eval_gradient(gsup, gnorm2);
    res.grad_sup = gsup;
    if (gsup <= opt.tol * std::max(1.0, rn)) {
      res.status = SolveStatus::converged;
      done = true;
      break;
    }

    // trial step: spectral quotient s.s/s.y, objective gradient being -grad
    double alpha = 1.0 / std::sqrt(gnorm2);
    if (have_prev) {
      double ss = 0.0, sy = 0.0;
      for (std::size_t j = 0; j < k; ++j) {
        const double s = c[j] - prev_c[j];
        ss += s * s;
        sy += s * (prev_grad[j] - grad[j]);
      }
      if (sy > 0.0 && std::isfinite(ss / sy)) alpha = ss / sy;
    }

    // move c along +grad: d/dc_j ||f - sum c phi|| = -grad_j
    const double alpha_floor = alpha * 0x1.0p-60;
    double new_rn = rn;
    while (alpha > alpha_floor) {
      for (std::size_t j = 0; j < k; ++j) trial[j] = c[j] + alpha * grad[j];
      new_rn = norm(rebuild(trial));
      if (new_rn <= rn - 1e-4 * alpha * gnorm2) break;
      alpha *= 0.5;
    }
    if (alpha <= alpha_floor) break;  // stalled at fp resolution; polish below
    prev_c = c;
    prev_grad = grad;
    have_prev = true;
    c = trial;
    r = rebuild(c);
    rn = new_rn;
  }

  // Phase 2: cyclic coordinate polish with exact 1-D minimization.  The map
  // t -> ||r - t phi_j|| is strictly convex with increasing one-sided
  // derivative -F_{r - t phi_j}(phi_j), so bisection pins the minimizer to
  // machine resolution regardless of the curvature blow-up.
  if (!done) {
    res.status = SolveStatus::max_iter;
    const int max_sweeps = 120;
    for (int sweep = 0; sweep < max_sweeps && it < opt.max_iter; ++sweep, ++it) {
      if (iterate_norms) iterate_norms->push_back(rn * fnorm);
      if (rn <= opt.tol) {
        res.status = SolveStatus::exact;
        res.grad_sup = 0.0;
        break;
      }
      double gsup = 0.0, gnorm2 = 0.0;
      eval_gradient(gsup, gnorm2);
      res.grad_sup = gsup;
      if (gsup <= opt.tol * std::max(1.0, rn)) {
        res.status = SolveStatus::converged;
        break;
      }

      for (std::size_t j = 0; j < k; ++j) {
        const double g = norming_apply(r, elements[j].vec());
        if (g == 0.0) continue;
        const double dir = g > 0 ? 1.0 : -1.0;
        // minimizer lies within 2 ||r|| of the current point
        double lo = 0.0, hi = 2.0 * rn;
        bool hit_zero = false;
        for (int step = 0; step < 110 && !hit_zero; ++step) {
          const double mid = 0.5 * (lo + hi);
          V rt = r;
          rt.add_scaled(elements[j].vec(), -dir * mid);
          if (norm(rt) == 0.0) {
            lo = hi = mid;
            hit_zero = true;
            break;
          }
          const double deriv = -dir * norming_apply(rt, elements[j].vec());
          if (deriv < 0.0) {
            lo = mid;
          } else {
            hi = mid;
          }
          if (hi - lo <= 1e-18 * std::max(1.0, hi)) break;
        }
        const double t = dir * 0.5 * (lo + hi);
        c[j] += t;
        r = rebuild(c);
        rn = norm(r);
      }
    }
  }

  for (std::size_t j = 0; j < k; ++j) res.coefficients[j] = c[j] * fnorm;
  res.residual = rebuild(c);
  res.residual.scale(fnorm);
  res.residual_norm = rn * fnorm;
  res.iterations = it;
  return res;
}

// Exact projection onto a canonical coordinate subspace: the norm is absolute
// and coordinatewise monotone, so the minimizer is coordinate restriction.
template <SpaceVector V>
ChebyshevResult<V> canonical_project(const V& f, const std::set<typename V::Index>& S) {
  ChebyshevResult<V> res;
  res.residual = f.zeroed_on(S);
  res.residual_norm = norm(res.residual);
  res.coefficients.reserve(S.size());
  for (const auto& i : S) res.coefficients.push_back(f.at(i));
  res.status = SolveStatus::converged;
  res.grad_sup = 0.0;
  if (!res.residual.is_zero()) {
    for (const auto& i : S) {
      res.grad_sup = std::max(res.grad_sup, norming_coeff(res.residual, i));
    }
  }
  return res;
}

}  // namespace wcga
