#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>

#include "wcga/experiments.hpp"
#include "wcga/fit.hpp"
#include "wcga/fpq.hpp"
#include "wcga/greedy.hpp"
#include "wcga/lpq.hpp"
#include "wcga/rng.hpp"

using namespace wcga;

namespace {

LpqVector random_sparse(const LpqParams& params, RngStream& rng, int size) {
  LpqVector x(params);
  while (static_cast<int>(x.support_size()) < size) {
    x.set(static_cast<int>(rng.uniform_int(1, 8)), static_cast<int>(rng.uniform_int(1, 8)),
          rng.sign() * rng.log_uniform(1e-2, 1e2));
  }
  return x;
}

Rectangle rect1(int level, std::int64_t offset) {
  return Rectangle({DyadicAxisIndex::interval(level, offset)});
}

}  // namespace

TEST_CASE("single-coordinate targets recover in one step") {
  LpqParams params(2.5, 1.25);
  LpqVector f(params);
  f.set(3, 2, -7.0);
  GreedyConfig config;
  auto trace = wcga_run(f, config);
  CHECK(trace.selected.size() == 1);
  CHECK(trace.residual_norms.back() == 0.0);
  CHECK(trace.terminated_reason == StopReason::zero_residual);

  FpqVector g(FpqParams(1.5, 2.0, 1));
  g.set(rect1(2, 1), 4.0);
  auto trace2 = wcga_run(g, GreedyConfig{});
  CHECK(trace2.selected.size() == 1);
  CHECK(trace2.residual_norms.back() == 0.0);
}

TEST_CASE("sparse targets recover in exactly N steps at full strength") {
  int id = 0;
  for (double p : {1.25, 2.0, 3.0}) {
    for (double q : {1.5, 2.0}) {
      LpqParams params(p, q);
      for (int trial = 0; trial < 10; ++trial, ++id) {
        RngStream rng(101, static_cast<std::uint64_t>(id));
        const int N = 1 + static_cast<int>(rng.uniform_int(1, 11));
        LpqVector f = random_sparse(params, rng, N);
        GreedyConfig config;
        config.max_steps = N + 5;
        auto trace = wcga_run(f, config);
        CHECK(static_cast<int>(trace.selected.size()) == N);
        CHECK(trace.residual_norms.back() <= 1e-10 * lpq_norm(f));
      }
    }
  }
}

TEST_CASE("selected indices are distinct and residuals decrease") {
  RngStream rng(103, 7);
  LpqParams params(1.5, 3.0);
  LpqVector f = random_sparse(params, rng, 12);
  GreedyConfig config;
  auto trace = wcga_run(f, config);
  std::set<LpqIndex> seen(trace.selected.begin(), trace.selected.end());
  CHECK(seen.size() == trace.selected.size());
  for (std::size_t t = 1; t < trace.residual_norms.size(); ++t) {
    CHECK(trace.residual_norms[t] <= trace.residual_norms[t - 1] + 1e-12);
  }
  CHECK(trace.residual_norms[0] == doctest::Approx(lpq_norm(f)));
}

TEST_CASE("weak selection stays sound for tau < 1") {
  RngStream rng(107, 1);
  LpqParams params(2.0, 1.5);
  LpqVector f = random_sparse(params, rng, 10);
  GreedyConfig config;
  config.tau = 0.7;
  config.max_steps = 20;
  auto trace = wcga_run(f, config);  // per-step soundness asserted inside
  CHECK(trace.residual_norms.back() <= 1e-10 * lpq_norm(f));
}

TEST_CASE("the equal-functional vector is drained through the preferred block") {
  LpqParams params(1.5, 3.0);  // p <= q
  auto blk = make_equal_functional_vector(params, 5, 4, TwoBlockForm::single);
  GreedyConfig config;
  config.tie_break = TieBreak::prefer_block_a;
  config.max_steps = static_cast<int>(blk.vec.support_size());
  GreedyRunInput<LpqVector> input;
  input.block_a = &blk.spread;
  auto trace = wcga_run(blk.vec, config, input);
  for (int t = 0; t < 5; ++t) {
    CHECK(blk.spread.count(trace.selected[static_cast<std::size_t>(t)]) == 1);
  }
  for (std::size_t t = 5; t < trace.selected.size(); ++t) {
    CHECK(blk.spike.count(trace.selected[t]) == 1);
  }
}

TEST_CASE("TGA keeps the largest moduli and matches WCGA on disjoint rows") {
  LpqParams params(2.5, 1.5);
  LpqVector f(params);
  f.set(1, 1, 5.0);
  f.set(2, 1, -3.0);
  f.set(3, 1, 2.0);
  f.set(4, 1, -1.0);
  auto tga = tga_run(f, 2);
  REQUIRE(tga.selected.size() == 2);
  CHECK(tga.selected[0] == LpqIndex{1, 1});
  CHECK(tga.selected[1] == LpqIndex{2, 1});

  auto wcga = wcga_run(f, GreedyConfig{});
  auto tga_full = tga_run(f, 4);
  REQUIRE(wcga.selected.size() == tga_full.selected.size());
  for (std::size_t t = 0; t < wcga.selected.size(); ++t) {
    CHECK(wcga.selected[t] == tga_full.selected[t]);
    CHECK(wcga.residual_norms[t + 1] == doctest::Approx(tga_full.residual_norms[t + 1]));
  }

  // ties resolve lexicographically in both algorithms
  LpqVector g(params);
  g.set(1, 1, 1.0);
  g.set(2, 1, -1.0);
  g.set(3, 1, 1.0);
  auto wt = wcga_run(g, GreedyConfig{});
  auto tt = tga_run(g, 3);
  for (std::size_t t = 0; t < 3; ++t) CHECK(wt.selected[t] == tt.selected[t]);
}

TEST_CASE("TGA with N covering the support zeroes the vector") {
  RngStream rng(109, 2);
  LpqVector f = random_sparse(LpqParams(3.0, 1.5), rng, 7);
  auto trace = tga_run(f, 50);
  CHECK(trace.residual_norms.back() == 0.0);
}

TEST_CASE("best-N-term search: guard, trivial cases, documented witness") {
  LpqParams params(1.1, 2.0);
  LpqVector f(params);
  f.set(1, 1, 1.0);
  f.set(1, 2, 1.0);
  f.set(2, 1, 1.0);

  auto res = sigma_n_bruteforce(f, 1);
  CHECK(res.value == doctest::Approx(std::sqrt(2.0)).epsilon(1e-12));
  REQUIRE(res.witness.size() == 1);
  CHECK(*res.witness.begin() == LpqIndex{2, 1});  // not a largest-coefficient choice

  // the greedy upper bound keeps (1,1) instead and pays 2^{1/1.1}
  const double upper = sigma_n_greedy_upper(f, 1);
  CHECK(upper == doctest::Approx(std::pow(2.0, 1.0 / 1.1)).epsilon(1e-12));
  CHECK(upper >= res.value);

  CHECK(sigma_n_bruteforce(f, 3).value == 0.0);
  CHECK(sigma_n_bruteforce(f, 5).value == 0.0);

  LpqVector big(params);
  for (int k = 1; k <= 23; ++k) big.set(1, k, 1.0);
  CHECK_THROWS_AS(sigma_n_bruteforce(big, 3), SupportTooLargeError);
}

TEST_CASE("greedy upper bound dominates the exact error on random vectors") {
  for (int trial = 0; trial < 25; ++trial) {
    RngStream rng(113, static_cast<std::uint64_t>(trial));
    LpqParams params(trial % 2 ? 1.5 : 3.0, 2.0);
    LpqVector f = random_sparse(params, rng, 3 + trial % 10);
    const int N = 1 + trial % 4;
    CHECK(sigma_n_greedy_upper(f, N) >= sigma_n_bruteforce(f, N).value - 1e-12);
  }
}

TEST_CASE("sigma of the equal-functional vector is at most the spread norm") {
  LpqParams params(1.5, 3.0);
  const int m = 5, n = 3;
  auto blk = make_equal_functional_vector(params, m, n, TwoBlockForm::single);
  auto sig = sigma_n_bruteforce(blk.vec, n);
  CHECK(sig.value <= std::pow(static_cast<double>(m), 1.0 / params.p) + 1e-12);
}

TEST_CASE("recovery step counts") {
  // exact recovery within N steps for sparse targets
  RngStream rng(127, 5);
  LpqParams params(2.0, 2.0);
  const int N = 6;
  LpqVector f = random_sparse(params, rng, N);
  GreedyConfig config;
  config.max_steps = 10;
  auto m = recovery_steps(f, N, 1.0, config);
  CHECK(m.steps_needed >= 0);
  CHECK(m.steps_needed <= N);
  CHECK(m.sigma_N == 0.0);

  // spike-drain run on the doubled two-block vector: the count grows like
  // n^{q'/p'} while the spread size n dominates n^{p'/q'}
  LpqParams pq(4.0, 4.0 / 3.0);
  const int n = 6;
  const long long K =
      static_cast<long long>(std::ceil(std::pow(n, pq.q_conj / pq.p_conj) - 1e-9));
  auto blk = make_equal_functional_vector(pq, n, static_cast<int>(K), TwoBlockForm::doubled);
  const double sigma = std::pow(static_cast<double>(K), pq.alpha_psi) *
                       std::pow(2.0 * static_cast<double>(K), 1.0 / pq.q);
  GreedyConfig cfg;
  cfg.tie_break = TieBreak::prefer_block_b;
  cfg.max_steps = static_cast<int>(blk.vec.support_size()) + 1;
  GreedyRunInput<LpqVector> input;
  input.block_b = &blk.spike;
  auto meas = recovery_steps(blk.vec, n, 1.0, cfg, input, sigma);
  CHECK(meas.steps_needed >= 1);
  // drained only through the spike block before recovery
  auto trace = wcga_run(blk.vec, cfg, input);
  for (int t = 0; t < meas.steps_needed; ++t) {
    CHECK(blk.spike.count(trace.selected[static_cast<std::size_t>(t)]) == 1);
  }
}

TEST_CASE("structured fpq family is drained through the spike block first") {
  FpqParams params(1.5, 2.0, 2);
  BlockFamily fam = make_balanced_block_family(params, 4);
  FpqVector x(params);
  RectangleSet spike, spread;
  for (const auto& I : block_a_rectangles(2, fam.n)) {
    x.set(I, fam.a);
    spread.insert(I);
  }
  for (const auto& I : block_b_rectangles(2, fam.m_vec)) {
    x.set(I, fam.b);
    spike.insert(I);
  }
  GreedyConfig config;
  config.tie_break = TieBreak::prefer_block_b;
  config.max_steps = static_cast<int>(x.support_size());
  GreedyRunInput<FpqVector> input;
  input.block_b = &spike;
  auto trace = wcga_run(x, config, input);
  const std::size_t bsz = spike.size();
  REQUIRE(trace.selected.size() >= bsz);
  for (std::size_t t = 0; t < bsz; ++t) {
    CHECK(spike.count(trace.selected[t]) == 1);
  }
}

TEST_CASE("residual decay on sparse targets is geometric in shape") {
  RngStream rng(131, 9);
  LpqParams params(2.0, 2.0);
  LpqVector f = random_sparse(params, rng, 8);
  // small perturbation off the sparse support
  LpqVector noise(params);
  noise.set(9, 1, 0.01);
  noise.set(9, 2, -0.01);
  LpqVector g = f;
  g.add_scaled(noise, 1.0);

  GreedyConfig config;
  config.max_steps = 8;
  auto trace = wcga_run(g, config);
  std::vector<std::pair<double, double>> pts;
  for (std::size_t t = 0; t < trace.residual_norms.size(); ++t) {
    if (trace.residual_norms[t] > 0) {
      pts.emplace_back(static_cast<double>(t), std::log(trace.residual_norms[t]));
    }
  }
  CHECK(fit_linear(pts).slope < 0.0);
}

TEST_CASE("zero input gives an empty trace") {
  LpqVector f(LpqParams(2.0, 2.0));
  auto trace = wcga_run(f, GreedyConfig{});
  CHECK(trace.selected.empty());
  CHECK(trace.terminated_reason == StopReason::zero_residual);
}
