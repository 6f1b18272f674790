#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "wcga/chebyshev.hpp"
#include "wcga/errors.hpp"

namespace wcga {

enum class TieBreak { lexicographic, prefer_block_a, prefer_block_b };
enum class ChebyshevMode { lattice_exact, iterative };
enum class StopReason { zero_residual, max_steps, target_met };

inline std::string to_string(TieBreak t) {
  switch (t) {
    case TieBreak::prefer_block_a: return "prefer_block_A";
    case TieBreak::prefer_block_b: return "prefer_block_B";
    default: return "lexicographic";
  }
}
inline std::string to_string(StopReason r) {
  switch (r) {
    case StopReason::zero_residual: return "zero_residual";
    case StopReason::max_steps: return "max_steps";
    default: return "target_met";
  }
}

struct GreedyConfig {
  double tau = 1.0;  // weakness parameter in (0,1]
  double tol = 1e-10;
  int max_steps = 10000;
  TieBreak tie_break = TieBreak::lexicographic;
  ChebyshevMode chebyshev_mode = ChebyshevMode::lattice_exact;
  bool store_approximants = false;

  void validate() const {
    if (!(tau > 0.0) || tau > 1.0) throw ParamError("weakness parameter must lie in (0,1]");
  }
};

template <class Index>
struct GreedyTrace {
  std::vector<Index> selected;          // in selection order
  std::vector<double> residual_norms;   // residual_norms[0] = ||f||
  std::vector<std::vector<std::pair<Index, double>>> approximants;  // optional per step
  StopReason terminated_reason = StopReason::max_steps;

  // smallest m with ||f_m|| <= thr (tiny relative slack for fp ties); -1 if never
  int steps_to_threshold(double thr) const {
    for (std::size_t m = 0; m < residual_norms.size(); ++m) {
      if (residual_norms[m] <= thr * (1.0 + 1e-12) + 1e-300) return static_cast<int>(m);
    }
    return -1;
  }
};

// Candidate selection: among indices whose functional value reaches
// tau * max, the tie policy picks the lexicographically first, preferring the
// named block when asked.  For tau = 1 only near-maximizers (relative 1e-12)
// are eligible, so the policy resolves exact ties.  Values iterate in index
// order, already filtered to unselected candidates.
template <class Index>
const Index* select_candidate(const std::vector<std::pair<const Index*, double>>& values,
                              double tau, TieBreak tie, const std::set<Index>* block_a,
                              const std::set<Index>* block_b) {
  double vmax = 0.0;
  for (const auto& [i, v] : values) vmax = std::max(vmax, v);
  if (vmax <= 0.0) return nullptr;
  const double thr = tau * vmax * (1.0 - 1e-12);

  const std::set<Index>* preferred =
      tie == TieBreak::prefer_block_a ? block_a : (tie == TieBreak::prefer_block_b ? block_b : nullptr);
  const Index* fallback = nullptr;
  for (const auto& [i, v] : values) {
    if (v < thr) continue;
    if (preferred && preferred->count(*i)) return i;
    if (!fallback) fallback = i;
    if (!preferred) break;  // lexicographic: first eligible wins
  }
  return fallback;
}

template <SpaceVector V>
struct GreedyRunInput {
  const std::vector<typename V::Index>* candidates = nullptr;  // default: supp(f)
  const std::set<typename V::Index>* block_a = nullptr;
  const std::set<typename V::Index>* block_b = nullptr;
};

// Weak Chebyshev Greedy Algorithm over the canonical dictionary: pick an
// index whose norming-functional value reaches tau times the best, then take
// the best approximation from the span of everything selected so far.  In
// lattice_exact mode that projection is coordinate zeroing (exact); the
// iterative mode runs the descent solver for cross-validation.
template <SpaceVector V>
GreedyTrace<typename V::Index> wcga_run(const V& f, const GreedyConfig& config,
                                        GreedyRunInput<V> input = {}) {
  using Index = typename V::Index;
  config.validate();
  GreedyTrace<Index> trace;
  const double fnorm = norm(f);
  if (fnorm == 0.0) {
    trace.terminated_reason = StopReason::zero_residual;
    return trace;
  }
  trace.residual_norms.push_back(fnorm);

  // candidate filter is only needed when the caller restricts the set; the
  // functional vanishes off supp(residual), so that is the natural scan order
  std::set<Index> candidate_set;
  if (input.candidates) candidate_set.insert(input.candidates->begin(), input.candidates->end());

  V residual = f;
  std::set<Index> selected;
  std::vector<double> warm;

  for (int step = 0; step < config.max_steps; ++step) {
    double rn = trace.residual_norms.back();
    if (rn == 0.0) {
      trace.terminated_reason = StopReason::zero_residual;
      return trace;
    }
    if (rn <= config.tol * fnorm) {
      trace.terminated_reason = StopReason::target_met;
      return trace;
    }

    const auto coeffs = all_norming_coeffs(residual);
    std::vector<std::pair<const Index*, double>> values;
    values.reserve(coeffs.size());
    for (const auto& [i, v] : coeffs) {
      if (input.candidates && !candidate_set.count(i)) continue;
      if (selected.count(i)) continue;
      values.emplace_back(&i, v);
    }
    const Index* pick = select_candidate(values, config.tau, config.tie_break, input.block_a,
                                         input.block_b);
    if (!pick) {  // functional vanishes on every remaining candidate
      trace.terminated_reason = residual.is_zero() ? StopReason::zero_residual : StopReason::max_steps;
      return trace;
    }
    double vmax = 0.0, vpick = 0.0;
    for (const auto& [i, v] : values) {
      vmax = std::max(vmax, v);
      if (*i == *pick) vpick = v;
    }
    if (vpick < config.tau * vmax * (1.0 - 1e-12) - 1e-300) {
      throw std::logic_error("weak selection rule violated");
    }

    selected.insert(*pick);
    trace.selected.push_back(*pick);

    if (config.chebyshev_mode == ChebyshevMode::lattice_exact) {
      residual.zero_entry(*pick);
      trace.residual_norms.push_back(norm(residual));
    } else {
      std::vector<DictionaryElement<V>> elements;
      elements.reserve(selected.size());
      std::set<Index> sel_sorted(selected.begin(), selected.end());
      for (const auto& i : sel_sorted) elements.push_back(DictionaryElement<V>(canonical_element(f, i)));
      ChebyshevOptions opt;
      opt.tol = config.tol;
      auto proj = chebyshev_project(f, elements, opt, warm.empty() ? nullptr : &warm);
      warm = proj.coefficients;
      residual = proj.residual;
      trace.residual_norms.push_back(proj.residual_norm);
    }

    if (config.store_approximants) {
      std::vector<std::pair<Index, double>> approx;
      for (const auto& i : selected) approx.emplace_back(i, f.at(i) - residual.at(i));
      trace.approximants.push_back(std::move(approx));
    }
  }
  trace.terminated_reason = StopReason::max_steps;
  return trace;
}

// Thresholding Greedy Algorithm: keep the N largest-modulus coefficients
// (lexicographic tie-break); the trace records one removal per step.
template <SpaceVector V>
GreedyTrace<typename V::Index> tga_run(const V& f, int N) {
  using Index = typename V::Index;
  GreedyTrace<Index> trace;
  const double fnorm = norm(f);
  trace.residual_norms.push_back(fnorm);
  if (fnorm == 0.0) {
    trace.terminated_reason = StopReason::zero_residual;
    return trace;
  }

  std::vector<std::pair<Index, double>> order(f.entries().begin(), f.entries().end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    return std::abs(a.second) > std::abs(b.second);
  });

  V residual = f;
  const int take = static_cast<int>(
      std::min<std::size_t>(static_cast<std::size_t>(std::max(N, 0)), order.size()));
  for (int t = 0; t < take; ++t) {
    residual.zero_entry(order[static_cast<std::size_t>(t)].first);
    trace.selected.push_back(order[static_cast<std::size_t>(t)].first);
    trace.residual_norms.push_back(norm(residual));
  }
  trace.terminated_reason = residual.is_zero() ? StopReason::zero_residual : StopReason::target_met;
  return trace;
}

// Exact best-N-term error by exhausting kept supports; the monotone lattice
// structure makes f|_S the best approximant with support S.
template <SpaceVector V>
struct SigmaResult {
  double value = 0.0;
  std::set<typename V::Index> witness;
};

inline constexpr std::size_t kSigmaSupportGuard = 22;

template <SpaceVector V>
SigmaResult<V> sigma_n_bruteforce(const V& f, int N) {
  using Index = typename V::Index;
  SigmaResult<V> res;
  std::vector<Index> supp;
  for (const auto& [i, v] : f.entries()) supp.push_back(i);
  const std::size_t s = supp.size();
  if (s > kSigmaSupportGuard) throw SupportTooLargeError(s);
  const std::size_t keep = std::min<std::size_t>(static_cast<std::size_t>(std::max(N, 0)), s);
  if (keep == s) {
    res.value = 0.0;
    res.witness.insert(supp.begin(), supp.end());
    return res;
  }

  std::vector<std::size_t> comb(keep);
  for (std::size_t i = 0; i < keep; ++i) comb[i] = i;
  res.value = std::numeric_limits<double>::infinity();
  while (true) {
    std::set<Index> S;
    for (std::size_t pos : comb) S.insert(supp[pos]);
    const double err = norm(f.zeroed_on(S));
    if (err < res.value) {
      res.value = err;
      res.witness = S;
    }
    // next combination
    std::size_t i = keep;
    while (i > 0) {
      --i;
      if (comb[i] != i + s - keep) {
        ++comb[i];
        for (std::size_t j = i + 1; j < keep; ++j) comb[j] = comb[j - 1] + 1;
        break;
      }
      if (i == 0) return res;
    }
    if (keep == 0) return res;
  }
}

// Upper bound on sigma_N: drop the N largest-modulus coefficients.
template <SpaceVector V>
double sigma_n_greedy_upper(const V& f, int N) {
  auto trace = tga_run(f, N);
  return trace.residual_norms.back();
}

enum class SigmaMethod { bruteforce, greedy_upper, override_value };

struct RecoveryMeasurement {
  int N = 0;
  double C = 1.0;
  double sigma_N = 0.0;
  int steps_needed = -1;  // -1: threshold never met within max_steps
  SigmaMethod sigma_method = SigmaMethod::bruteforce;
};

// Smallest m with ||f_m|| <= C * sigma_N(f) under the given WCGA policy.
template <SpaceVector V>
RecoveryMeasurement recovery_steps(const V& f, int N, double C, const GreedyConfig& config,
                                   GreedyRunInput<V> input = {},
                                   std::optional<double> sigma_override = std::nullopt) {
  RecoveryMeasurement m;
  m.N = N;
  m.C = C;
  if (sigma_override) {
    m.sigma_N = *sigma_override;
    m.sigma_method = SigmaMethod::override_value;
  } else {
    m.sigma_N = sigma_n_bruteforce(f, N).value;
    m.sigma_method = SigmaMethod::bruteforce;
  }
  auto trace = wcga_run(f, config, input);
  m.steps_needed = trace.steps_to_threshold(C * m.sigma_N);
  return m;
}

}  // namespace wcga
