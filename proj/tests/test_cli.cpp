#include <doctest.h>

#include <cmath>
#include <fstream>
#include <sstream>

#include "unineq/cli.hpp"
#include "unineq/inequalities.hpp"
#include "unineq/json_io.hpp"

using unineq::io::json;

namespace {

struct Run {
  int code;
  std::string out;
  std::string err;
};

Run run(std::vector<std::string> args) {
  args.insert(args.begin(), "unineq");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  const int code = unineq::cli::dispatch(static_cast<int>(argv.size()), argv.data(), out, err);
  return {code, out.str(), err.str()};
}

std::string data(const std::string& name) { return std::string(UNINEQ_TEST_DATA) + "/" + name; }

std::vector<json> lines(const std::string& text) {
  std::vector<json> out;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) out.push_back(json::parse(line));
  return out;
}

void check_error(const Run& r) {
  CHECK(r.code == 2);
  CHECK(r.out.empty());
  const auto j = json::parse(r.err);
  CHECK(j.contains("error"));
  CHECK(j.contains("message"));
}

}  // namespace

TEST_CASE("integrate") {
  auto r = run({"integrate", "--instance", data("lebesgue_sqrt.json"), "--integral", "sugeno"});
  REQUIRE(r.code == 0);
  CHECK(r.err.empty());
  auto j = json::parse(r.out);
  CHECK(std::abs(j["value"].get<double>() - 0.6180339887) <= 1e-10);
  CHECK(j.contains("tol"));
  CHECK(j.contains("candidates"));

  r = run({"integrate", "--instance", data("const_pair.json"), "--integral", "universal", "--op",
           R"({"kind":"prod"})"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == 0.6);

  r = run({"integrate", "--instance", data("const_pair.json"), "--integral", "smallest-e", "--e", "1"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == 0.6);

  r = run({"integrate", "--instance", data("const_pair.json"), "--integral", "semiconormed", "--op",
           R"({"kind":"max","cap":1})"});
  REQUIRE(r.code == 0);
  CHECK(json::parse(r.out)["value"].get<double>() == 0.6);

  check_error(run({"integrate", "--instance", data("lebesgue_sqrt.json"), "--integral", "riemann"}));
  check_error(run({"integrate", "--instance", data("lebesgue_sqrt.json"), "--integral", "universal"}));
  check_error(run({"integrate", "--instance", data("lebesgue_sqrt.json"), "--integral", "smallest-e"}));
}

TEST_CASE("verify") {
  auto r = run({"verify", "--theorem", "chebyshev", "--instance", data("const_pair.json")});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["holds"] == true);
  CHECK(j["margin"].get<double>() == 0.0);
  CHECK(j["direction"] == ">=");

  r = run({"verify", "--theorem", "thm32", "--instance", data("example_thm32.json")});
  CHECK(r.code == 1);
  CHECK(r.err.empty());
  j = json::parse(r.out);
  CHECK(j["holds"] == false);
  CHECK(std::abs(j["margin"].get<double>() + 0.11803399) <= 1e-8);
  CHECK(j["hypotheses_met"] == false);

  // the same instance under a looser tolerance
  r = run({"verify", "--theorem", "thm32", "--instance", data("example_thm32.json"), "--tol", "0.2"});
  CHECK(r.code == 0);

  r = run({"verify", "--theorem", "thm32", "--instance", data("example_thm32.json"), "--skip-hypotheses"});
  j = json::parse(r.out);
  CHECK(j["hypotheses_checked"] == false);
  CHECK(j["hypotheses"]["certificate"] == "skipped");

  check_error(run({"verify", "--theorem", "thm99", "--instance", data("const_pair.json")}));
  check_error(run({"verify", "--theorem", "holder", "--instance", data("const_pair.json")}));
  check_error(run({"verify", "--theorem", "chebyshev", "--instance", data("missing.json")}));
  check_error(run({"verify", "--theorem", "chebyshev", "--instance", "{\"theorem\": "}));
  check_error(run({"verify", "--theorem", "chebyshev", "--instance", R"({"measure":{"type":"finite","n":1}})"}));
  check_error(run({"verify", "--instance", data("const_pair.json")}));
}

TEST_CASE("falsify") {
  auto r = run({"falsify", "--theorem", "chebyshev", "--config", data("cheb_min_1e4.json"), "--trials", "200"});
  REQUIRE(r.code == 0);
  auto recs = lines(r.out);
  REQUIRE(recs.size() == 2);
  CHECK(recs[0]["record"] == "header");
  CHECK(recs[0]["trials"] == 200);
  CHECK(recs[1]["violations"] == 0);
  CHECK(r.out == run({"falsify", "--theorem", "chebyshev", "--config", data("cheb_min_1e4.json"), "--trials", "200"}).out);

  r = run({"falsify", "--theorem", "thm32", "--config", data("thm32_inverted.json"), "--trials", "100"});
  CHECK(r.code == 1);
  recs = lines(r.out);
  REQUIRE(recs.size() >= 3);
  CHECK(recs[1]["record"] == "violation");
  CHECK(recs[1]["reverified"] == true);
  CHECK(recs.back()["record"] == "summary");
  CHECK(recs.back()["status"] == "violation");

  check_error(run({"falsify", "--theorem", "chebyshev", "--config", R"({"trials": 5, "colour": 1})"}));
}

TEST_CASE("check-op") {
  auto r = run({"check-op", "--op", R"({"kind":"prod"})", "--properties", "nondecreasing,neutral,commutative",
                "--grid", "21"});
  REQUIRE(r.code == 0);
  auto j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(j["certificate"] == "grid-verified");
  CHECK(j["checks"].size() == 3);

  r = run({"check-op", "--op", R"({"kind":"drastic"})", "--properties", "neutral(0.5)", "--grid", "11"});
  CHECK(r.code == 1);
  j = json::parse(r.out);
  CHECK(j["passed"] == false);
  CHECK(j["checks"][0].contains("witness"));

  check_error(run({"check-op", "--op", R"({"kind":"drastic"})", "--properties", "shiny"}));
  check_error(run({"check-op", "--op", R"({"kind":"prod"})", "--grid", "1"}));
}

TEST_CASE("reproduce-paper and usage") {
  auto r = run({"reproduce-paper"});
  REQUIRE(r.code == 0);
  const auto j = json::parse(r.out);
  CHECK(j["passed"] == true);
  CHECK(r.out == run({"reproduce-paper"}).out);

  r = run({"--help"});
  CHECK(r.code == 0);
  for (auto id : unineq::theorem_catalog()) CHECK(r.out.find("\n  " + std::string(unineq::theorem_name(id)) + "\n") != std::string::npos);

  check_error(run({}));
  check_error(run({"frobnicate"}));
  check_error(run({"integrate", "--integral", "sugeno"}));
}
