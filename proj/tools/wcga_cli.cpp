#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "wcga/experiments.hpp"
#include "wcga/greedy.hpp"
#include "wcga/haar.hpp"
#include "wcga/json_io.hpp"
#include "wcga/properties.hpp"
#include "wcga/version.hpp"

using nlohmann::json;

namespace {

struct Options {
  std::string space = "lpq";
  double p = 2.0, q = 2.0;
  int d = 1;
  double tau = 1.0;
  double tol = 1e-10;
  int max_steps = 10000;
  std::uint64_t seed = 0;
  int samples = 500;
  std::string tie_break = "lexicographic";
  double C = 1.0;
  double eps = 0.01;
  int N = 1;
  int n_lo = 4, n_hi = 24;
  double frozen_c = 0.0;  // 0: use the calibrated table
  std::string input, apply, output;
  std::string format = "csv";
  std::string method = "bruteforce";
};

json load_json(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw wcga::ParamError("cannot open input file: " + path);
  json j;
  in >> j;
  return j;
}

void emit(const std::string& output, const std::string& text) {
  if (output.empty()) {
    std::cout << text;
    if (text.empty() || text.back() != '\n') std::cout << '\n';
  } else {
    std::ofstream out(output);
    if (!out) throw wcga::ParamError("cannot open output file: " + output);
    out << text;
  }
}

wcga::TieBreak parse_tie(const std::string& s) {
  if (s == "lexicographic") return wcga::TieBreak::lexicographic;
  if (s == "prefer_block_A" || s == "prefer_block_a") return wcga::TieBreak::prefer_block_a;
  if (s == "prefer_block_B" || s == "prefer_block_b") return wcga::TieBreak::prefer_block_b;
  throw wcga::ParamError("unknown tie break: " + s);
}

// flags must agree with parameters embedded in the vector file when both given
void check_param_agreement(double flag, double from_json, const char* name, bool flag_set) {
  if (flag_set && std::abs(flag - from_json) > 1e-12) {
    throw wcga::ParamError(std::string("flag --") + name + " disagrees with the input file");
  }
}

int cmd_norm(const Options& opt, bool p_set, bool q_set) {
  const json j = load_json(opt.input);
  std::ostringstream out;
  out.precision(15);
  const std::string space = j.value("space", opt.space);
  if (space == "lpq") {
    auto x = wcga::lpq_from_json(j);
    check_param_agreement(opt.p, x.params().p, "p", p_set);
    check_param_agreement(opt.q, x.params().q, "q", q_set);
    out << wcga::lpq_norm(x);
  } else if (space == "fpq") {
    auto x = wcga::fpq_from_json(j);
    check_param_agreement(opt.p, x.params().p, "p", p_set);
    check_param_agreement(opt.q, x.params().q, "q", q_set);
    out << wcga::fpq_norm(x);
  } else if (space == "haar" || opt.space == "haar") {
    auto f = wcga::step_from_json(j, opt.d);
    auto e = wcga::haar_coefficients(f, opt.p);
    out << wcga::haar_lp_norm(e);
  } else {
    throw wcga::ParamError("unknown space: " + space);
  }
  emit(opt.output, out.str());
  return 0;
}

int cmd_functional(const Options& opt) {
  const json j = load_json(opt.input);
  const std::string space = j.value("space", opt.space);
  std::ostringstream out;
  out.precision(15);
  if (space == "lpq") {
    auto x = wcga::lpq_from_json(j);
    if (!opt.apply.empty()) {
      out << wcga::lpq_norming_apply(x, wcga::lpq_from_json(load_json(opt.apply)));
    } else {
      json arr = json::array();
      for (const auto& [i, v] : x.entries()) {
        arr.push_back({{"j", i.j}, {"k", i.k}, {"coeff", wcga::lpq_norming_coeff(x, i)}});
      }
      out << arr.dump(2);
    }
  } else if (space == "fpq") {
    auto x = wcga::fpq_from_json(j);
    if (!opt.apply.empty()) {
      out << wcga::fpq_norming_apply(x, wcga::fpq_from_json(load_json(opt.apply)));
    } else {
      json arr = json::array();
      wcga::FpqEvaluator ev(x);
      for (const auto& [I, c] : ev.all_norming_coeffs()) {
        arr.push_back({{"rect", wcga::rect_to_json(I)}, {"coeff", c}});
      }
      out << arr.dump(2);
    }
  } else {
    throw wcga::ParamError("unknown space: " + space);
  }
  emit(opt.output, out.str());
  return 0;
}

template <class Vec>
int run_greedy(const Vec& x, const Options& opt, bool is_tga) {
  wcga::GreedyTrace<typename Vec::Index> trace;
  if (is_tga) {
    trace = wcga::tga_run(x, opt.N);
  } else {
    wcga::GreedyConfig config;
    config.tau = opt.tau;
    config.tol = opt.tol;
    config.max_steps = opt.max_steps;
    config.tie_break = parse_tie(opt.tie_break);
    trace = wcga::wcga_run(x, config);
  }
  const json out = wcga::trace_to_json(trace);
  emit(opt.output, out.dump(2));
  std::cerr << "steps=" << trace.selected.size()
            << " final_residual=" << trace.residual_norms.back()
            << " terminated=" << wcga::to_string(trace.terminated_reason) << '\n';
  return 0;
}

int cmd_greedy(const Options& opt, bool is_tga) {
  const json j = load_json(opt.input);
  const std::string space = j.value("space", opt.space);
  if (space == "lpq") return run_greedy(wcga::lpq_from_json(j), opt, is_tga);
  if (space == "fpq") return run_greedy(wcga::fpq_from_json(j), opt, is_tga);
  throw wcga::ParamError("unknown space: " + space);
}

template <class Vec>
int run_sigma(const Vec& x, const Options& opt) {
  std::ostringstream out;
  out.precision(15);
  if (opt.method == "greedy") {
    out << wcga::sigma_n_greedy_upper(x, opt.N);
  } else {
    auto res = wcga::sigma_n_bruteforce(x, opt.N);
    json witness = json::array();
    for (const auto& i : res.witness) {
      if constexpr (std::is_same_v<Vec, wcga::LpqVector>) {
        witness.push_back({{"j", i.j}, {"k", i.k}});
      } else {
        witness.push_back(wcga::rect_to_json(i));
      }
    }
    out << json{{"sigma", res.value}, {"witness", witness}}.dump(2);
  }
  emit(opt.output, out.str());
  return 0;
}

int cmd_sigma(const Options& opt) {
  const json j = load_json(opt.input);
  const std::string space = j.value("space", opt.space);
  if (space == "lpq") return run_sigma(wcga::lpq_from_json(j), opt);
  if (space == "fpq") return run_sigma(wcga::fpq_from_json(j), opt);
  throw wcga::ParamError("unknown space: " + space);
}

int cmd_check(const Options& opt, const std::string& which) {
  wcga::PropertyReport rep;
  const bool lpq = opt.space == "lpq";
  if (which == "a2") {
    rep = lpq ? wcga::check_a2_lpq(wcga::LpqParams(opt.p, opt.q), opt.N > 1 ? opt.N : 8,
                                   opt.samples, opt.seed)
              : wcga::check_a2_fpq(wcga::FpqParams(opt.p, opt.q, opt.d), opt.N > 1 ? opt.N : 8,
                                   opt.samples, opt.seed);
  } else if (which == "a3") {
    if (lpq) {
      rep = wcga::check_a3_lpq(wcga::LpqParams(opt.p, opt.q), opt.N > 1 ? opt.N : 8, opt.samples,
                               opt.seed);
    } else {
      const double c = opt.frozen_c > 0 ? opt.frozen_c : wcga::frozen_a3_fpq_c(opt.p, opt.q, opt.d);
      rep = wcga::check_a3_fpq(wcga::FpqParams(opt.p, opt.q, opt.d), opt.N > 1 ? opt.N : 8,
                               opt.samples, opt.seed, c);
    }
  } else if (which == "d") {
    rep = lpq ? wcga::check_d_lpq(wcga::LpqParams(opt.p, opt.q), opt.samples, opt.seed)
              : wcga::check_d_fpq(wcga::FpqParams(opt.p, opt.q, opt.d), opt.samples, opt.seed);
  } else if (which == "rho") {
    const std::vector<double> t_grid = {0.001, 0.01, 0.1, 0.5, 1.0};
    auto est = lpq ? wcga::estimate_rho_lpq(wcga::LpqParams(opt.p, opt.q), t_grid, opt.samples,
                                            opt.seed)
                   : wcga::estimate_rho_fpq(wcga::FpqParams(opt.p, opt.q, opt.d), t_grid,
                                            opt.samples, opt.seed);
    json curve = json::array();
    for (const auto& [t, v] : est.curve) curve.push_back({{"t", t}, {"rho", v}});
    emit(opt.output, json{{"curve", curve},
                          {"gamma_hat", est.gamma_hat},
                          {"sigma_exponent", est.sigma_exponent}}
                         .dump(2));
    return 0;
  } else if (which == "disjoint") {
    rep = wcga::check_disjoint_q_fpq(wcga::FpqParams(opt.p, opt.q, opt.d), opt.samples, opt.seed);
  } else if (which == "lorentz") {
    const double c = opt.frozen_c > 0 ? opt.frozen_c : wcga::frozen_lorentz_c(opt.p, opt.q);
    rep = wcga::check_lorentz_sandwich(wcga::FpqParams(opt.p, opt.q, 1), opt.samples, opt.seed, c);
  } else if (which == "democracy") {
    const double c = opt.frozen_c > 0 ? opt.frozen_c : wcga::frozen_democracy_c(opt.p, opt.q, opt.d);
    rep = wcga::check_democracy_fpq(wcga::FpqParams(opt.p, opt.q, opt.d), opt.samples, opt.seed, c);
  } else if (which == "d1log") {
    const double c = opt.frozen_c > 0 ? opt.frozen_c : wcga::frozen_d1log_c(opt.p, opt.q);
    rep = wcga::check_d1log_fpq(wcga::FpqParams(opt.p, opt.q, 1), opt.samples, opt.seed, c);
  } else {
    throw wcga::ParamError("unknown check: " + which);
  }
  emit(opt.output, wcga::report_to_json(rep));
  return rep.pass() ? 0 : 1;
}

int cmd_exp(const Options& opt, const std::string& which) {
  std::ostringstream os;
  if (which == "lpq-lower") {
    auto r = wcga::exp_lpq_lower(wcga::LpqParams(opt.p, opt.q), opt.n_lo, opt.n_hi, opt.C);
    wcga::write_csv(os, r);
  } else if (which == "fpq-lower") {
    auto r = wcga::exp_fpq_lower(wcga::FpqParams(opt.p, opt.q, opt.d),
                                 std::max(opt.n_lo, opt.d + 1), opt.n_hi);
    wcga::write_csv(os, r);
  } else if (which == "tga-vs-wcga") {
    const std::vector<double> grid = {1.5, 5.0 / 3.0, 2.0, 2.5, 3.0};
    auto rows = wcga::exp_tga_vs_wcga(grid, grid, opt.N > 1 ? opt.N : 64);
    wcga::write_csv(os, rows, opt.N > 1 ? opt.N : 64);
  } else if (which == "lebesgue") {
    auto r = wcga::exp_lebesgue_sweep(wcga::LpqParams(opt.p, opt.q), opt.n_lo,
                                      std::min(opt.n_hi, 10), opt.eps, opt.C, opt.seed,
                                      opt.frozen_c > 0 ? opt.frozen_c : 3.0);
    wcga::write_csv(os, r);
  } else if (which == "iteration-decay") {
    auto r = wcga::exp_iteration_decay(wcga::LpqParams(opt.p, opt.q), {1, 2, 4, 8, 12}, 5, opt.seed);
    wcga::write_csv(os, r, opt.seed);
  } else {
    throw wcga::ParamError("unknown experiment: " + which);
  }

  if (opt.format == "json") {
    // same rows, JSON framing: one object per CSV line
    std::istringstream is(os.str());
    std::string line, header;
    json rows = json::array();
    json meta;
    while (std::getline(is, line)) {
      if (line.empty()) continue;
      if (line[0] == '#') {
        meta["comment"] = line;
      } else if (header.empty()) {
        header = line;
      } else {
        json row;
        std::istringstream hs(header), ls(line);
        std::string h, v;
        while (std::getline(hs, h, ',') && std::getline(ls, v, ',')) row[h] = v;
        rows.push_back(row);
      }
    }
    emit(opt.output, json{{"meta", meta}, {"rows", rows}}.dump(2));
  } else {
    emit(opt.output, os.str());
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"greedy sparse approximation in mixed-norm sequence spaces"};
  app.set_version_flag("--version", wcga::kVersion);
  Options opt;

  app.add_option("--space", opt.space, "lpq | fpq | haar")->capture_default_str();
  auto* p_opt = app.add_option("--p", opt.p, "outer exponent")->capture_default_str();
  auto* q_opt = app.add_option("--q", opt.q, "inner exponent")->capture_default_str();
  app.add_option("--d", opt.d, "dimension (fpq/haar)")->capture_default_str();
  app.add_option("--tau", opt.tau, "weakness parameter")->capture_default_str();
  app.add_option("--tol", opt.tol, "relative residual tolerance")->capture_default_str();
  app.add_option("--max-steps", opt.max_steps)->capture_default_str();
  app.add_option("--seed", opt.seed)->capture_default_str();
  app.add_option("--samples", opt.samples)->capture_default_str();
  app.add_option("--tie-break", opt.tie_break, "lexicographic | prefer_block_A | prefer_block_B")
      ->capture_default_str();
  app.add_option("--c", opt.C, "Lebesgue constant C")->capture_default_str();
  app.add_option("--eps", opt.eps, "noise level for the lebesgue sweep")->capture_default_str();
  app.add_option("--N", opt.N, "term count / set-size cap")->capture_default_str();
  app.add_option("--n-lo", opt.n_lo)->capture_default_str();
  app.add_option("--n-hi", opt.n_hi)->capture_default_str();
  app.add_option("--const", opt.frozen_c, "override a frozen calibration constant");
  app.add_option("--input", opt.input, "vector JSON file");
  app.add_option("--apply", opt.apply, "second vector JSON file (functional)");
  app.add_option("--output", opt.output, "output path (default stdout)");
  app.add_option("--format", opt.format, "csv | json")->capture_default_str();
  app.add_option("--method", opt.method, "bruteforce | greedy (sigma)")->capture_default_str();

  auto* norm_cmd = app.add_subcommand("norm", "norm of a vector");
  auto* fun_cmd = app.add_subcommand("functional", "norming-functional coefficients or F_x(y)");
  auto* wcga_cmd = app.add_subcommand("wcga", "run the weak Chebyshev greedy algorithm");
  auto* tga_cmd = app.add_subcommand("tga", "run the thresholding greedy algorithm");
  auto* sigma_cmd = app.add_subcommand("sigma", "best N-term error");
  std::string check_which, exp_which;
  auto* check_cmd = app.add_subcommand("check", "property checks");
  check_cmd->add_option("which", check_which, "a2|a3|d|rho|disjoint|lorentz|democracy|d1log")
      ->required();
  auto* exp_cmd = app.add_subcommand("exp", "experiments");
  exp_cmd->add_option("which", exp_which, "lpq-lower|fpq-lower|tga-vs-wcga|lebesgue|iteration-decay")
      ->required();
  app.require_subcommand(1);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << '\n';
    return 2;
  }

  try {
    if (norm_cmd->parsed()) return cmd_norm(opt, p_opt->count() > 0, q_opt->count() > 0);
    if (fun_cmd->parsed()) return cmd_functional(opt);
    if (wcga_cmd->parsed()) return cmd_greedy(opt, false);
    if (tga_cmd->parsed()) return cmd_greedy(opt, true);
    if (sigma_cmd->parsed()) return cmd_sigma(opt);
    if (check_cmd->parsed()) return cmd_check(opt, check_which);
    if (exp_cmd->parsed()) return cmd_exp(opt, exp_which);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 2;
}
