#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "wcga/json_io.hpp"

using nlohmann::json;
using namespace wcga;

namespace {

std::string cli_path() {
  const char* p = std::getenv("WCGA_CLI");
  REQUIRE_MESSAGE(p != nullptr, "WCGA_CLI must point at the CLI binary");
  return p;
}

int run(const std::string& args, std::string* out = nullptr) {
  const std::string out_file = "cli_test_stdout.tmp";
  const std::string cmd = cli_path() + " " + args + " > " + out_file + " 2> cli_test_stderr.tmp";
  const int rc = std::system(cmd.c_str());
  if (out) {
    std::ifstream in(out_file);
    std::ostringstream ss;
    ss << in.rdbuf();
    *out = ss.str();
  }
  return WEXITSTATUS(rc);
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  out << text;
}

}  // namespace

TEST_CASE("vector JSON round trip and duplicate rejection") {
  LpqVector x(LpqParams(2.0, 3.0));
  x.set(1, 1, 1.5);
  x.set(2, 4, -0.25);
  auto j = lpq_to_json(x);
  auto back = lpq_from_json(j);
  CHECK(back.entries() == x.entries());
  CHECK(back.params().p == 2.0);

  json dup = j;
  dup["entries"].push_back({{"j", 1}, {"k", 1}, {"v", 2.0}});
  CHECK_THROWS_AS(lpq_from_json(dup), ParamError);

  FpqVector y(FpqParams(1.5, 2.0, 2));
  y.set(Rectangle({DyadicAxisIndex::interval(1, 1), DyadicAxisIndex::zero()}), 0.5);
  auto jy = fpq_to_json(y);
  auto back_y = fpq_from_json(jy);
  CHECK(back_y.entries() == y.entries());
  CHECK(jy["entries"][0]["rect"][1] == "zero");
}

TEST_CASE("step function schema") {
  StepFunction f(1, 2, {1.0, 2.0, 3.0, 4.0});
  auto j = step_to_json(f);
  auto back = step_from_json(j);
  CHECK(back.values == f.values);
  CHECK(back.level == 2);
}

TEST_CASE("trace serialization") {
  LpqVector f(LpqParams(2.0, 2.0));
  f.set(1, 1, 2.0);
  f.set(2, 2, 1.0);
  auto trace = wcga_run(f, GreedyConfig{});
  auto j = trace_to_json(trace);
  CHECK(j["selected"].size() == 2);
  CHECK(j["residual_norms"].size() == 3);
  CHECK(j["terminated"] == "zero_residual");
}

TEST_CASE("cli: norm of the unit vector prints 1") {
  write_file("unit.json",
             R"({"space":"lpq","p":2,"q":2,"entries":[{"j":1,"k":1,"v":1.0}]})");
  std::string out;
  const int rc = run("norm --space lpq --p 2 --q 2 --input unit.json", &out);
  CHECK(rc == 0);
  CHECK(std::stod(out) == doctest::Approx(1.0));
}

TEST_CASE("cli: disagreeing flags are a usage error") {
  write_file("unit2.json",
             R"({"space":"lpq","p":2,"q":2,"entries":[{"j":1,"k":1,"v":1.0}]})");
  CHECK(run("norm --space lpq --p 3 --q 2 --input unit2.json") == 2);
}

TEST_CASE("cli: unknown flag exits with 2") {
  CHECK(run("norm --space lpq --such-flag 1") == 2);
  CHECK(run("definitely-not-a-command") == 2);
}

TEST_CASE("cli: experiment CSV has the documented header") {
  const int rc = run("exp lpq-lower --p 4 --q 1.3333333333 --n-lo 4 --n-hi 10 --output out_cli.csv");
  CHECK(rc == 0);
  std::ifstream in("out_cli.csv");
  std::string meta, header;
  std::getline(in, meta);
  std::getline(in, header);
  CHECK(meta.rfind("# version=", 0) == 0);
  CHECK(header == "n,m,psi,sigma,beta_target");
}

TEST_CASE("cli: checks report pass/fail through the exit code") {
  CHECK(run("check a3 --space lpq --p 2 --q 3 --samples 100") == 0);
  // an impossible frozen constant forces a violation and exit code 1
  CHECK(run("check lorentz --space fpq --p 3 --q 2 --samples 50 --const 1e-6") == 1);
}

TEST_CASE("cli: sigma with witness") {
  write_file("sig.json",
             R"({"space":"lpq","p":1.1,"q":2,"entries":[
                 {"j":1,"k":1,"v":1.0},{"j":1,"k":2,"v":1.0},{"j":2,"k":1,"v":1.0}]})");
  std::string out;
  const int rc = run("sigma --input sig.json --N 1", &out);
  CHECK(rc == 0);
  auto j = json::parse(out);
  CHECK(j["sigma"].get<double>() == doctest::Approx(std::sqrt(2.0)));
  CHECK(j["witness"][0]["j"] == 2);

  // the greedy upper bound keeps a largest coefficient instead
  std::string out2;
  CHECK(run("sigma --input sig.json --N 1 --method greedy", &out2) == 0);
  CHECK(std::stod(out2) == doctest::Approx(std::pow(2.0, 1.0 / 1.1)));
}

TEST_CASE("cli: wcga trace export") {
  write_file("run.json",
             R"({"space":"lpq","p":2,"q":2,"entries":[
                 {"j":1,"k":1,"v":3.0},{"j":1,"k":2,"v":1.0}]})");
  std::string out;
  const int rc = run("wcga --input run.json --output trace.json", &out);
  CHECK(rc == 0);
  std::ifstream in("trace.json");
  json t;
  in >> t;
  CHECK(t["selected"].size() == 2);
  CHECK(t["selected"][0]["j"] == 1);
  CHECK(t["selected"][0]["k"] == 1);
  CHECK(t["terminated"] == "zero_residual");
}

TEST_CASE("cli: haar norm of a step function") {
  write_file("step.json", R"({"d":1,"grid_level":1,"values":[1.0,1.0]})");
  std::string out;
  const int rc = run("norm --space haar --p 2 --input step.json", &out);
  CHECK(rc == 0);
  CHECK(std::stod(out) == doctest::Approx(1.0));
}
