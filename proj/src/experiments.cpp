#include "wcga/experiments.hpp"

#include <cmath>
#include <ostream>
#include <sstream>

#include "wcga/rng.hpp"
#include "wcga/version.hpp"

namespace wcga {

namespace {

long long ceil_ll(double v) { return static_cast<long long>(std::ceil(v - 1e-9)); }

void write_meta(std::ostream& os, const std::vector<std::pair<std::string, std::string>>& kv) {
  os << "# version=" << kVersion;
  for (const auto& [k, v] : kv) os << ' ' << k << '=' << v;
  os << '\n';
}

std::string fmt(double v) {
  std::ostringstream ss;
  ss.precision(12);
  ss << v;
  return ss.str();
}

}  // namespace

// ---- lpq lower bound ----------------------------------------------------------

LpqLowerResult exp_lpq_lower(const LpqParams& params, int n_lo, int n_hi, double C) {
  if (n_lo < 1 || n_hi < n_lo) throw ParamError("bad sparsity range");
  LpqLowerResult out;
  out.params = params;
  out.C = C;

  const bool spread_drain = params.p <= params.q;  // p' >= q'
  for (int n = n_lo; n <= n_hi; ++n) {
    LpqLowerRow row;
    row.n = n;
    row.beta_target = params.beta;

    GreedyConfig config;
    config.tau = 1.0;
    config.chebyshev_mode = ChebyshevMode::lattice_exact;

    if (spread_drain) {
      // adversary exhausts the spread block; recovery threshold is the norm
      // of the spread block left after dropping the n-term spike part
      const long long m = std::max<long long>(1, ceil_ll(std::pow(n, params.p_conj / params.q_conj)));
      auto blk = make_equal_functional_vector(params, static_cast<int>(m), n, TwoBlockForm::single);
      row.m = m;
      row.sigma = std::pow(static_cast<double>(m), 1.0 / params.p);
      config.tie_break = TieBreak::prefer_block_a;
      config.max_steps = static_cast<int>(blk.vec.support_size()) + 1;
      GreedyRunInput<LpqVector> input;
      input.block_a = &blk.spread;
      auto trace = wcga_run(blk.vec, config, input);
      row.psi = trace.steps_to_threshold(C * row.sigma);
    } else {
      // spike-drain variant: the double-width spike block keeps strictly
      // larger functional values until half of it is gone
      const long long K = std::max<long long>(1, ceil_ll(std::pow(n, params.q_conj / params.p_conj)));
      auto blk = make_equal_functional_vector(params, n, static_cast<int>(K), TwoBlockForm::doubled);
      row.m = n;
      row.sigma = std::pow(static_cast<double>(K), params.alpha_psi) *
                  std::pow(2.0 * static_cast<double>(K), 1.0 / params.q);
      config.tie_break = TieBreak::prefer_block_b;
      config.max_steps = static_cast<int>(blk.vec.support_size()) + 1;
      GreedyRunInput<LpqVector> input;
      input.block_b = &blk.spike;
      auto trace = wcga_run(blk.vec, config, input);
      row.psi = trace.steps_to_threshold(C * row.sigma);
    }
    out.rows.push_back(row);
  }

  std::vector<std::pair<double, double>> pts;
  for (const auto& r : out.rows) {
    if (r.psi > 0) pts.emplace_back(static_cast<double>(r.n), static_cast<double>(r.psi));
  }
  out.fit = fit_loglog(pts);
  return out;
}

// ---- fpq structured family ------------------------------------------------------

double BlockFamily::norm_a() const {
  std::vector<int> none;
  return block_family_norm(params, a, n, 0.0, none);
}

double BlockFamily::norm_b() const { return block_family_norm(params, 0.0, 0, b, m_vec); }

std::uint64_t BlockFamily::block_b_size() const { return block_b_cardinality(params.d, m_vec); }

long long BlockFamily::closed_form_steps(double C) const {
  // residual after k spike picks: (norm_a^p + b^p (|B| - k))^{1/p};
  // threshold C ||b 1_B|| with ||b 1_B||^p = b^p |B|
  const double p = params.p;
  const double na_p = std::pow(norm_a(), p);
  const double bp = std::pow(std::abs(b), p);
  const double Bsz = static_cast<double>(block_b_size());
  const double kstar = Bsz * (1.0 - std::pow(C, p)) + na_p / bp;
  if (kstar <= 0) return 0;
  if (kstar > Bsz) return -1;  // never met inside the spike phase
  return ceil_ll(kstar);
}

BlockFamily make_balanced_block_family(const FpqParams& params, int n) {
  if (n < params.d) throw ParamError("block A needs n >= d");
  BlockFamily fam;
  fam.params = params;
  fam.n = n;
  fam.a = 1.0;
  const double comps = static_cast<double>(compositions(n, params.d));
  // tie the norming coefficients: b^{p-1} = a^{p-1} comps^{(p-q)/q}
  fam.b = std::pow(comps, (params.p - params.q) / (params.q * (params.p - 1.0)));

  // size the spike block so recovery happens inside the spike phase:
  // steps needed = ||a 1_A||^p / b^p at C = 1
  const double na_p = std::exp2(static_cast<double>(-params.d)) * std::pow(comps, params.p / params.q) *
                      std::exp2(static_cast<double>(n));
  const double kstar = na_p / std::pow(fam.b, params.p);
  int extra = 0;
  while ((std::uint64_t{1} << extra) < static_cast<std::uint64_t>(std::ceil(kstar))) ++extra;
  const int m_total = params.d + extra;
  fam.m_vec.assign(static_cast<std::size_t>(params.d), m_total / params.d);
  for (int i = 0; i < m_total % params.d; ++i) fam.m_vec[static_cast<std::size_t>(i)] += 1;
  return fam;
}

long long block_family_steps_measured(const BlockFamily& fam, double C) {
  FpqVector x(fam.params);
  RectangleSet spike;
  for (const auto& I : block_a_rectangles(fam.params.d, fam.n)) x.set(I, fam.a);
  for (const auto& I : block_b_rectangles(fam.params.d, fam.m_vec)) {
    x.set(I, fam.b);
    spike.insert(I);
  }
  GreedyConfig config;
  config.tau = 1.0;
  config.tie_break = TieBreak::prefer_block_b;
  config.max_steps = static_cast<int>(x.support_size()) + 1;
  GreedyRunInput<FpqVector> input;
  input.block_b = &spike;
  auto trace = wcga_run(x, config, input);
  return trace.steps_to_threshold(C * fam.sigma_hat());
}

FpqLowerResult exp_fpq_lower(const FpqParams& params, int n_lo, int n_hi) {
  if (params.p > params.q) throw ParamError("the structured lower bound needs p <= q");
  if (n_lo < params.d + 1 || n_hi < n_lo) throw ParamError("bad level range");
  FpqLowerResult out;
  out.params = params;
  out.target_exponent = params.p_conj * (params.d - 1) * (1.0 / params.p - 1.0 / params.q);

  for (int n = n_lo; n <= n_hi; ++n) {
    BlockFamily fam = make_balanced_block_family(params, n);
    FpqLowerRow row;
    row.n = n;
    row.bigN = static_cast<double>(block_a_cardinality(params.d, n));
    row.psi = fam.closed_form_steps(1.0);
    row.m_total = 0;
    for (int mi : fam.m_vec) row.m_total += mi;
    row.sigma = fam.sigma_hat();
    row.ratio = static_cast<double>(row.psi) / row.bigN;
    out.rows.push_back(row);
  }

  // slope of log(psi/N) against log(log N)
  std::vector<std::pair<double, double>> pts;
  for (const auto& r : out.rows) {
    pts.emplace_back(std::log(r.bigN), r.ratio);
  }
  out.fit = fit_loglog(pts);
  return out;
}

// ---- regime map -------------------------------------------------------------------

namespace {

struct FamilyVector {
  LpqTwoBlock blk;
  double sigma = 0.0;
  TieBreak wcga_tie = TieBreak::lexicographic;
};

std::vector<FamilyVector> regime_family(const LpqParams& params, int N) {
  std::vector<FamilyVector> fam;

  // equal-functional vectors, both balances
  {
    FamilyVector f;
    const long long m = std::max<long long>(1, ceil_ll(std::pow(N, params.p_conj / params.q_conj)));
    f.blk = make_equal_functional_vector(params, static_cast<int>(m), N, TwoBlockForm::single);
    f.sigma = std::pow(static_cast<double>(m), 1.0 / params.p);
    f.wcga_tie = TieBreak::prefer_block_a;
    fam.push_back(std::move(f));
  }
  {
    FamilyVector f;
    const long long K = std::max<long long>(1, ceil_ll(std::pow(N, params.q_conj / params.p_conj)));
    f.blk = make_equal_functional_vector(params, N, static_cast<int>(K), TwoBlockForm::doubled);
    f.sigma = std::pow(static_cast<double>(K), params.alpha_psi) *
              std::pow(2.0 * static_cast<double>(K), 1.0 / params.q);
    f.wcga_tie = TieBreak::prefer_block_b;
    fam.push_back(std::move(f));
  }
  // thresholding-adversarial balances: slightly larger moduli sit in the
  // block whose removal is wasteful
  {
    FamilyVector f;  // spread slightly dominant, spike is the good approximant
    const double delta = 0.02;
    const long long m =
        std::max<long long>(1, ceil_ll(std::pow(1.0 - delta, params.p) * std::pow(N, params.p / params.q)) + 1);
    f.blk = make_two_block_vector(params, static_cast<int>(m), N, 1.0, 1.0 - delta);
    f.sigma = std::pow(static_cast<double>(m), 1.0 / params.p);
    fam.push_back(std::move(f));
  }
  {
    FamilyVector f;  // spike slightly dominant, spread is the good approximant
    const double delta = 1.0;
    const long long nb = std::max<long long>(1, ceil_ll(std::pow(N, params.q / params.p)));
    f.blk = make_two_block_vector(params, N, static_cast<int>(nb), 1.0, 1.0 + delta);
    f.sigma = (1.0 + delta) * std::pow(static_cast<double>(nb), 1.0 / params.q);
    fam.push_back(std::move(f));
  }
  return fam;
}

}  // namespace

std::vector<RegimeRow> exp_tga_vs_wcga(const std::vector<double>& ps, const std::vector<double>& qs,
                                       int N) {
  std::vector<RegimeRow> rows;
  for (double p : ps) {
    for (double q : qs) {
      const LpqParams params(p, q);
      RegimeRow row;
      row.p = p;
      row.q = q;
      row.beta = params.beta;
      row.b = params.b;
      row.wcga_analytic = (q >= params.p_conj - 1e-12) || std::abs(p - q) < 1e-12;

      long long wcga_worst = 0, tga_worst = 0;
      for (const auto& f : regime_family(params, N)) {
        GreedyConfig config;
        config.tau = 1.0;
        config.tie_break = f.wcga_tie;
        config.max_steps = static_cast<int>(f.blk.vec.support_size()) + 1;
        GreedyRunInput<LpqVector> input;
        input.block_a = &f.blk.spread;
        input.block_b = &f.blk.spike;
        auto wt = wcga_run(f.blk.vec, config, input);
        const long long ws = wt.steps_to_threshold(f.sigma);
        wcga_worst = std::max(wcga_worst, ws);

        auto tt = tga_run(f.blk.vec, static_cast<int>(f.blk.vec.support_size()));
        const long long ts = tt.steps_to_threshold(f.sigma);
        tga_worst = std::max(tga_worst, ts);
      }
      row.wcga_steps = wcga_worst;
      row.tga_steps = tga_worst;
      if (tga_worst >= 2 * wcga_worst) {
        row.measured_winner = 1;
      } else if (wcga_worst >= 2 * tga_worst) {
        row.measured_winner = -1;
      } else {
        row.measured_winner = 0;
      }
      rows.push_back(row);
    }
  }
  return rows;
}

// ---- Lebesgue sweep ------------------------------------------------------------------

LebesgueResult exp_lebesgue_sweep(const LpqParams& params, int n_lo, int n_hi, double eps,
                                  double C, std::uint64_t seed, double c_fit) {
  if (n_lo < 1 || n_hi < n_lo) throw ParamError("bad sparsity range");
  LebesgueResult out;
  out.params = params;
  out.eps = eps;
  out.C = C;
  out.c_fit = c_fit;

  constexpr int kNoiseSize = 6;
  for (int N = n_lo; N <= n_hi; ++N) {
    RngStream rng(seed, static_cast<std::uint64_t>(N));
    LpqVector sparse(params);
    while (static_cast<int>(sparse.support_size()) < N) {
      sparse.set(static_cast<int>(rng.uniform_int(1, 8)), static_cast<int>(rng.uniform_int(1, 8)),
                 rng.sign() * rng.log_uniform(0.1, 10.0));
    }
    LpqVector f = sparse;
    if (eps > 0) {
      LpqVector noise(params);
      while (static_cast<int>(noise.support_size()) < kNoiseSize) {
        const int j = 9 + static_cast<int>(rng.uniform_int(0, 5));  // rows disjoint from the sparse part
        const int k = 1 + static_cast<int>(rng.uniform_int(0, 5));
        noise.set(j, k, rng.normal());
      }
      const double scale = eps * lpq_norm(sparse) / lpq_norm(noise);
      f.add_scaled(noise, scale);
    }

    LebesgueRow row;
    row.N = N;
    GreedyConfig config;
    config.tau = 1.0;
    config.max_steps = static_cast<int>(f.support_size()) + 1;
    auto m = recovery_steps(f, N, C, config);
    row.steps = m.steps_needed;
    row.sigma = m.sigma_N;
    row.bound = ceil_ll(c_fit * std::pow(static_cast<double>(N), params.beta));
    row.ok = row.steps >= 0 && row.steps <= row.bound;
    if (!row.ok) out.violations += 1;
    out.rows.push_back(row);
  }
  return out;
}

// ---- iteration decay --------------------------------------------------------------------

DecayResult exp_iteration_decay(const LpqParams& params, const std::vector<int>& Ks,
                                int runs_per_k, std::uint64_t seed) {
  DecayResult out;
  out.params = params;
  for (int K : Ks) {
    double slope_acc = 0.0;
    int slope_count = 0;
    int steps_acc = 0;
    for (int run = 0; run < runs_per_k; ++run) {
      RngStream rng(seed, static_cast<std::uint64_t>(K) * 1000 + static_cast<std::uint64_t>(run));
      LpqVector f(params);
      while (static_cast<int>(f.support_size()) < K) {
        f.set(static_cast<int>(rng.uniform_int(1, 10)), static_cast<int>(rng.uniform_int(1, 10)),
              rng.sign() * rng.log_uniform(0.5, 2.0));
      }
      GreedyConfig config;
      config.tau = 1.0;
      config.max_steps = K + 1;
      auto trace = wcga_run(f, config);
      steps_acc += static_cast<int>(trace.selected.size());
      if (K >= 3) {
        std::vector<std::pair<double, double>> pts;
        for (int k = 0; k < K && k < static_cast<int>(trace.residual_norms.size()); ++k) {
          if (trace.residual_norms[static_cast<std::size_t>(k)] > 0) {
            pts.emplace_back(static_cast<double>(k),
                             std::log(trace.residual_norms[static_cast<std::size_t>(k)]));
          }
        }
        if (pts.size() >= 2) {
          slope_acc += fit_linear(pts).slope;
          slope_count += 1;
        }
      }
    }
    DecayRow row;
    row.K = K;
    row.mean_slope = slope_count ? slope_acc / slope_count : 0.0;
    row.k_rs = std::pow(static_cast<double>(K), params.r * params.s);
    row.steps = runs_per_k ? steps_acc / runs_per_k : 0;
    out.rows.push_back(row);
  }
  return out;
}

// ---- CSV ------------------------------------------------------------------------------

void write_csv(std::ostream& os, const LpqLowerResult& r) {
  write_meta(os, {{"experiment", "lpq-lower"},
                  {"p", fmt(r.params.p)},
                  {"q", fmt(r.params.q)},
                  {"C", fmt(r.C)},
                  {"beta", fmt(r.params.beta)},
                  {"fit_slope", fmt(r.fit.slope)}});
  os << "n,m,psi,sigma,beta_target\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << row.m << ',' << row.psi << ',' << fmt(row.sigma) << ','
       << fmt(row.beta_target) << '\n';
  }
}

void write_csv(std::ostream& os, const FpqLowerResult& r) {
  write_meta(os, {{"experiment", "fpq-lower"},
                  {"p", fmt(r.params.p)},
                  {"q", fmt(r.params.q)},
                  {"d", std::to_string(r.params.d)},
                  {"target_exponent", fmt(r.target_exponent)},
                  {"fit_slope", fmt(r.fit.slope)}});
  os << "n,N,psi,m_total,ratio,sigma\n";
  for (const auto& row : r.rows) {
    os << row.n << ',' << fmt(row.bigN) << ',' << row.psi << ',' << row.m_total << ','
       << fmt(row.ratio) << ',' << fmt(row.sigma) << '\n';
  }
}

void write_csv(std::ostream& os, const std::vector<RegimeRow>& rows, int N) {
  write_meta(os, {{"experiment", "tga-vs-wcga"}, {"N", std::to_string(N)}});
  os << "p,q,beta,b,winner_analytic,wcga_steps,tga_steps,winner_measured\n";
  for (const auto& r : rows) {
    os << fmt(r.p) << ',' << fmt(r.q) << ',' << fmt(r.beta) << ',' << fmt(r.b) << ','
       << (r.wcga_analytic ? "wcga" : "tga") << ',' << r.wcga_steps << ',' << r.tga_steps << ','
       << (r.measured_winner > 0 ? "wcga" : (r.measured_winner < 0 ? "tga" : "close")) << '\n';
  }
}

void write_csv(std::ostream& os, const LebesgueResult& r) {
  write_meta(os, {{"experiment", "lebesgue"},
                  {"p", fmt(r.params.p)},
                  {"q", fmt(r.params.q)},
                  {"eps", fmt(r.eps)},
                  {"C", fmt(r.C)},
                  {"c_fit", fmt(r.c_fit)}});
  os << "N,steps,sigma,bound,ok\n";
  for (const auto& row : r.rows) {
    os << row.N << ',' << row.steps << ',' << fmt(row.sigma) << ',' << row.bound << ','
       << (row.ok ? 1 : 0) << '\n';
  }
}

void write_csv(std::ostream& os, const DecayResult& r, std::uint64_t seed) {
  write_meta(os, {{"experiment", "iteration-decay"},
                  {"p", fmt(r.params.p)},
                  {"q", fmt(r.params.q)},
                  {"seed", std::to_string(seed)}});
  os << "K,mean_slope,k_rs,steps\n";
  for (const auto& row : r.rows) {
    os << row.K << ',' << fmt(row.mean_slope) << ',' << fmt(row.k_rs) << ',' << row.steps << '\n';
  }
}

}  // namespace wcga
