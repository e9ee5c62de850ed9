// Copyright 2026 The ppfix Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <gtest/gtest.h>

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "ppfix/cli/run.hpp"
#include "ppfix/cli/scenario.hpp"
#include "ppfix/error.hpp"

namespace ppfix::cli {
namespace {

using nlohmann::json;

const std::string kDir = PPFIX_SCENARIO_DIR;

std::string scenario(const std::string& name) { return kDir + "/" + name; }

struct Outcome {
  int code;
  std::string out;
  std::string err;
  json report() const { return json::parse(out); }
};

Outcome invoke(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int code = run(args, out, err);
  return {code, out.str(), err.str()};
}

std::string temp_path(const std::string& name) {
  return (std::filesystem::temp_directory_path() / ("ppfix_cli_" + name)).string();
}

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

void expect_report_keys(const json& r) {
  for (const char* key :
       {"mode", "status", "iterations", "solution", "residual", "certificates", "notes"}) {
    EXPECT_TRUE(r.contains(key)) << key;
  }
  for (const json& c : r.at("certificates")) {
    for (const char* key : {"name", "n", "lhs", "rhs", "pass"}) EXPECT_TRUE(c.contains(key));
  }
}

TEST(CliTest, PpfConstantWeightedMean) {
  const Outcome o = invoke({"solve", "ppf-constant", "--op", scenario("weighted_mean.json"),
                            "--interval", "0,1,101", "--c", "1.0", "--start", "0", "--tol",
                            "1e-10"});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = o.report();
  expect_report_keys(r);
  EXPECT_EQ(r["status"], "converged");
  EXPECT_NEAR(r["solution"][0].get<double>(), 2.0, 1e-9);
  EXPECT_TRUE(r["solution_in_constant_class"].get<bool>());
}

TEST(CliTest, RazumikhinRampOffAnchor) {
  const Outcome o = invoke({"check", "razumikhin", "--fn", scenario("ramp.json"), "--c", "0.5"});
  EXPECT_EQ(o.code, 2);
  const json r = o.report();
  expect_report_keys(r);
  EXPECT_DOUBLE_EQ(r["verdict"]["gap"].get<double>(), 0.5);
  EXPECT_FALSE(r["verdict"]["is_member"].get<bool>());
  EXPECT_EQ(invoke({"check", "razumikhin", "--fn", scenario("ramp.json"), "--c", "1"}).code, 0);
}

TEST(CliTest, BanachIdentityIsNotAContraction) {
  const Outcome o = invoke({"solve", "banach", "--op", scenario("identity.json"), "--start", "3"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("(a01)"), std::string::npos);
  EXPECT_DOUBLE_EQ(o.report()["modulus_estimate"].get<double>(), 1.0);
}

TEST(CliTest, BanachAffineAndCsv) {
  const std::string csv = temp_path("trace.csv");
  const Outcome o = invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start",
                            "0", "--csv", csv});
  ASSERT_EQ(o.code, 0) << o.err;
  const std::string table = slurp(csv);
  EXPECT_EQ(table.substr(0, table.find('\n')), "n,x1,step_distance,bound_rhs,pass");
  EXPECT_NE(table.find("\n0,0,1,1,true\n"), std::string::npos);
  std::filesystem::remove(csv);
}

TEST(CliTest, SvvStartingConditionKeepsCertificates) {
  const Outcome o = invoke({"solve", "svv", "--op", scenario("linear_third.json"), "--alpha",
                            scenario("cone_nonneg.json"), "--start", "-1"});
  EXPECT_EQ(o.code, 4);
  EXPECT_NE(o.err.find("(c04) starting condition"), std::string::npos);
  const json r = o.report();
  expect_report_keys(r);
  ASSERT_EQ(r["certificates"].size(), 1u);
  EXPECT_EQ(r["certificates"][0]["name"], "alpha_start");
  EXPECT_FALSE(r["certificates"][0]["pass"].get<bool>());
}

TEST(CliTest, SvvNeedsAlpha) {
  EXPECT_EQ(invoke({"solve", "svv", "--op", scenario("affine_half.json"), "--start", "0"}).code,
            4);
}

TEST(CliTest, MaxIterExit) {
  const Outcome o = invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start",
                            "0", "--max-iter", "3"});
  EXPECT_EQ(o.code, 3);
  EXPECT_EQ(o.report()["status"], "max_iter");
}

TEST(CliTest, InvalidInputs) {
  EXPECT_EQ(invoke({"solve", "banach", "--bogus"}).code, 4);
  EXPECT_EQ(invoke({"solve"}).code, 4);
  EXPECT_EQ(invoke({"solve", "banach", "--op", scenario("affine_half.json")}).code, 4);
  EXPECT_EQ(invoke({"solve", "ppf-constant", "--op", scenario("weighted_mean.json"),
                    "--interval", "0,1,101", "--c", "0.505", "--start", "0"})
                .code,
            4);
  EXPECT_EQ(invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start", "0",
                    "--k", "1.5"})
                .code,
            4);
  EXPECT_EQ(invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start", "0",
                    "--norm", "lp"})
                .code,
            4);
  EXPECT_EQ(invoke({"solve", "ppf-existential", "--op", scenario("weighted_mean.json"),
                    "--interval", "0,1,11", "--c", "0"})
                .code,
            4);
}

TEST(CliTest, DeclaredKBelowModulusIsAViolation) {
  const Outcome o = invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start",
                            "0", "--k", "0.3"});
  EXPECT_EQ(o.code, 2);
  EXPECT_EQ(o.report()["status"], "contraction_violated");
}

TEST(CliTest, IoErrors) {
  EXPECT_EQ(invoke({"solve", "banach", "--op", "/nonexistent/op.json", "--start", "0"}).code, 5);
  EXPECT_EQ(invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start", "0",
                    "--out", "/nonexistent/dir/report.json"})
                .code,
            5);
  EXPECT_EQ(invoke({"run", "/nonexistent/scenario.json"}).code, 5);
}

TEST(CliTest, ExistentialAndBlr) {
  const Outcome e = invoke({"solve", "ppf-existential", "--op", scenario("weighted_mean.json"),
                            "--interval", "0,1,11", "--c", "0", "--assert-aclosed"});
  ASSERT_EQ(e.code, 0) << e.err;
  EXPECT_EQ(e.report()["notes"].size(), 1u);
  const Outcome b = invoke({"solve", "blr-bounds", "--op", scenario("weighted_mean.json"),
                            "--interval", "0,1,101", "--c", "1", "--start", "0", "--start2", "4",
                            "--steps", "50"});
  ASSERT_EQ(b.code, 0) << b.err;
  EXPECT_EQ(b.report()["rows"].size(), 51u);
}

TEST(CliTest, AksFromFunctionStart) {
  const Outcome o = invoke({"solve", "aks", "--op", scenario("weighted_mean.json"), "--alpha",
                            scenario("cone_nonneg.json"), "--interval", "0,1,11", "--c", "1",
                            "--start", scenario("ramp.json")});
  ASSERT_EQ(o.code, 0) << o.err;
  const json r = o.report();
  EXPECT_DOUBLE_EQ(r["start"][0].get<double>(), 1.25);
  EXPECT_NEAR(r["solution"][0].get<double>(), 2.0, 1e-9);
}

TEST(CliTest, AclosedWitness) {
  const Outcome o =
      invoke({"check", "aclosed-witness", "--fn", scenario("vee.json"), "--c", "0"});
  ASSERT_EQ(o.code, 0) << o.err;
  EXPECT_EQ(o.report()["status"], "witness");
  EXPECT_FALSE(o.report()["delta_verdict"]["is_member"].get<bool>());
  EXPECT_EQ(invoke({"check", "aclosed-witness", "--fn", scenario("ramp.json"), "--c", "0.5"}).code,
            4);
}

TEST(CliTest, AnchorEvalHasNoContraction) {
  const std::string op = temp_path("anchor_eval.json");
  std::ofstream(op) << R"({"kind":"nonself_anchor_eval"})";
  const Outcome o = invoke({"solve", "ppf-constant", "--op", op, "--interval", "0,1,11", "--c",
                            "0", "--start", "1"});
  EXPECT_EQ(o.code, 2);
  EXPECT_NE(o.err.find("(b03)"), std::string::npos);
  std::filesystem::remove(op);
}

TEST(CliTest, ReportsAreByteIdentical) {
  const std::vector<std::string> args = {"solve", "blr-bounds", "--op",
                                         scenario("weighted_mean.json"), "--interval", "0,1,101",
                                         "--c", "1", "--start", "0", "--start2", "4"};
  const Outcome a = invoke(args), b = invoke(args);
  EXPECT_EQ(a.out, b.out);
  const std::vector<std::string> banach = {"solve", "banach", "--op",
                                           scenario("affine_half.json"), "--start", "0"};
  EXPECT_EQ(invoke(banach).out, invoke(banach).out);
}

TEST(CliTest, DefaultTolFromEnvironment) {
  ::setenv("PPF_DEFAULT_TOL", "1e-4", 1);
  const Outcome loose = invoke({"solve", "banach", "--op", scenario("affine_half.json"),
                                "--start", "0"});
  ::setenv("PPF_DEFAULT_TOL", "junk", 1);
  const Outcome bad = invoke({"solve", "banach", "--op", scenario("affine_half.json"),
                              "--start", "0"});
  ::unsetenv("PPF_DEFAULT_TOL");
  const Outcome strict = invoke({"solve", "banach", "--op", scenario("affine_half.json"),
                                 "--start", "0"});
  EXPECT_EQ(loose.report()["tol"].get<double>(), 1e-4);
  EXPECT_EQ(strict.report()["tol"].get<double>(), 1e-10);
  EXPECT_LT(loose.report()["iterations"].get<int>(), strict.report()["iterations"].get<int>());
  EXPECT_EQ(bad.code, 4);
}

TEST(CliTest, RunScenariosConcurrently) {
  const std::vector<std::string> files = {
      scenario("ppf_constant.json"), scenario("svv_cone.json"), scenario("aks_ramp.json"),
      scenario("blr_pair.json"), scenario("razumikhin_ramp.json")};
  std::vector<std::string> serial = {"run"};
  serial.insert(serial.end(), files.begin(), files.end());
  std::vector<std::string> parallel = serial;
  parallel.push_back("--jobs");
  parallel.push_back("4");
  const Outcome a = invoke(serial), b = invoke(parallel);
  EXPECT_EQ(a.code, 2);  // the Razumikhin check fails by design
  EXPECT_EQ(a.code, b.code);
  EXPECT_EQ(a.out, b.out);
}

TEST(CliTest, OutFileIsWritten) {
  const std::string out = temp_path("report.json");
  const Outcome o = invoke({"solve", "banach", "--op", scenario("affine_half.json"), "--start",
                            "0", "--out", out});
  ASSERT_EQ(o.code, 0);
  EXPECT_TRUE(o.out.empty());
  EXPECT_EQ(json::parse(slurp(out))["status"], "converged");
  std::filesystem::remove(out);
}

TEST(ScenarioTest, ParsesAndRejects) {
  const ScenarioConfig cfg = scenario_from_json(
      json::parse(R"({"mode":"blr-bounds","op":"w.json","interval":{"a":0,"b":1,"n":11},
                      "c":1,"start":[0],"start2":"4","steps":7,"norm":"supremum"})"),
      "/base");
  EXPECT_EQ(cfg.mode, Mode::blr_bounds);
  EXPECT_EQ(*cfg.op_path, "/base/w.json");
  EXPECT_EQ(*cfg.interval, "0,1,11");
  EXPECT_EQ(*cfg.start, "0");
  EXPECT_EQ(*cfg.start2, "4");
  EXPECT_EQ(cfg.steps, 7u);
  EXPECT_EQ(cfg.norm, Norm::supremum);
  EXPECT_THROW(scenario_from_json(json::parse(R"({"mode":"banach","colour":1})")), ParseError);
  EXPECT_THROW(scenario_from_json(json::parse(R"({"mode":"warp"})")), ParseError);
  EXPECT_THROW(scenario_from_json(json::parse(R"({"op":"x"})")), ParseError);
  EXPECT_THROW(validate(ScenarioConfig{}), InvalidInput);
}

TEST(ScenarioTest, ModeNamesRoundTrip) {
  for (Mode m : {Mode::banach, Mode::svv, Mode::ppf_constant, Mode::ppf_existential, Mode::aks,
                 Mode::check_razumikhin, Mode::aclosed_witness, Mode::blr_bounds}) {
    EXPECT_EQ(parse_mode(to_string(m)), m);
  }
}

}  // namespace
}  // namespace ppfix::cli
