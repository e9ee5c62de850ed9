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

#include "ppfix/cli/run.hpp"

#include <algorithm>
#include <atomic>
#include <filesystem>
#include <fstream>
#include <ostream>
#include <thread>

#include "CLI11.hpp"
#include "ppfix/cli/report_json.hpp"
#include "ppfix/cli/scenario.hpp"
#include "ppfix/error.hpp"

namespace ppfix::cli {

namespace {

struct RawOptions {
  std::string op, alpha, interval, start, start2, fn, norm = "euclidean", out, csv;
  double c = 0.0, k = 0.0, tol = 0.0;
  std::size_t max_iter = 1000, steps = 50;
  std::uint64_t seed = 0;
  bool assert_aclosed = false;
};

struct Leaf {
  CLI::App* app;
  Mode mode;
};

bool given(const CLI::App* app, const char* name) {
  const CLI::Option* opt = app->get_option_no_throw(name);
  return opt && opt->count() > 0;
}

void add_options(CLI::App* sub, RawOptions& raw, Mode mode) {
  const bool check = mode == Mode::check_razumikhin || mode == Mode::aclosed_witness;
  const bool functional = mode == Mode::ppf_constant || mode == Mode::ppf_existential ||
                          mode == Mode::aks || mode == Mode::blr_bounds;
  if (!check) sub->add_option("--op", raw.op, "Operator JSON file");
  if (mode == Mode::svv || mode == Mode::aks) {
    sub->add_option("--alpha", raw.alpha, "Alpha map JSON file");
  }
  if (functional) sub->add_option("--interval", raw.interval, "Grid as a,b,n");
  if (functional || check) sub->add_option("--c", raw.c, "Anchor point c in [a, b]");
  if (!check && mode != Mode::ppf_existential) {
    sub->add_option("--start", raw.start, "Start coordinates x1,...,xm or a function file");
  }
  if (mode == Mode::blr_bounds) {
    sub->add_option("--start2", raw.start2, "Second start coordinates");
    sub->add_option("--steps", raw.steps, "Number of paired steps");
  }
  if (check) sub->add_option("--fn", raw.fn, "Function file (JSON or CSV)");
  if (!check) sub->add_option("--k", raw.k, "Declared contraction modulus in [0, 1)");
  sub->add_option("--tol", raw.tol, "Tolerance");
  if (!check && mode != Mode::blr_bounds) {
    sub->add_option("--max-iter", raw.max_iter, "Iteration cap");
  }
  sub->add_option("--norm", raw.norm, "euclidean, supremum or one");
  sub->add_option("--out", raw.out, "Write the JSON report here instead of stdout");
  if (!check) sub->add_option("--csv", raw.csv, "Write the trace as CSV");
  sub->add_option("--seed", raw.seed, "Seed for sampled estimates");
  if (mode == Mode::ppf_existential) {
    sub->add_flag("--assert-aclosed", raw.assert_aclosed,
                  "Assert that the Razumikhin class is algebraically closed");
  }
}

ScenarioConfig config_from(const CLI::App* app, const RawOptions& raw, Mode mode) {
  ScenarioConfig cfg;
  cfg.mode = mode;
  if (given(app, "--op")) cfg.op_path = raw.op;
  if (given(app, "--alpha")) cfg.alpha_path = raw.alpha;
  if (given(app, "--interval")) cfg.interval = raw.interval;
  if (given(app, "--c")) cfg.c = raw.c;
  if (given(app, "--start")) cfg.start = raw.start;
  if (given(app, "--start2")) cfg.start2 = raw.start2;
  if (given(app, "--fn")) cfg.fn_path = raw.fn;
  if (given(app, "--k")) cfg.k = raw.k;
  if (given(app, "--tol")) cfg.tol = raw.tol;
  if (given(app, "--out")) cfg.out_path = raw.out;
  if (given(app, "--csv")) cfg.csv_path = raw.csv;
  cfg.max_iter = raw.max_iter;
  cfg.steps = raw.steps;
  cfg.seed = raw.seed;
  cfg.norm = parse_norm(raw.norm);
  cfg.assert_aclosed = raw.assert_aclosed;
  return cfg;
}

int emit(const ScenarioConfig& cfg, const RunResult& result, std::ostream& out,
         std::ostream& err) {
  int code = result.exit_code;
  const std::string report = result.report.dump(2) + "\n";
  try {
    if (cfg.out_path) {
      write_file_atomically(*cfg.out_path, report);
    } else {
      out << report;
    }
    if (cfg.csv_path && !result.csv.empty()) {
      write_file_atomically(*cfg.csv_path, result.csv);
    }
  } catch (const IoError& e) {
    err << "ppfix: " << e.what() << "\n";
    return kExitIo;
  }
  if (!result.message.empty()) err << "ppfix: " << result.message << "\n";
  return code;
}

struct Job {
  std::string path;
  ScenarioConfig config;
  RunResult result;
};

int run_scenarios(const std::vector<std::string>& paths, std::size_t jobs,
                  std::ostream& out, std::ostream& err) {
  std::vector<Job> work(paths.size());
  for (std::size_t i = 0; i < paths.size(); ++i) work[i].path = paths[i];

  std::atomic<std::size_t> next{0};
  auto worker = [&work, &next] {
    for (std::size_t i = next++; i < work.size(); i = next++) {
      Job& job = work[i];
      try {
        job.config = load_scenario(job.path);
      } catch (const Error& e) {
        job.result.report = empty_report("unknown");
        job.result.report["status"] = "invalid_input";
        job.result.report["error"] = e.what();
        job.result.report["scenario"] = job.path;
        job.result.exit_code =
            dynamic_cast<const IoError*>(&e) ? kExitIo : kExitInvalidInput;
        job.result.message = job.path + ": " + e.what();
        job.config.out_path.reset();
        continue;
      }
      job.result = execute(job.config);
      if (!job.result.message.empty()) job.result.message = job.path + ": " + job.result.message;
    }
  };

  const std::size_t threads = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(work.size(), 1));
  std::vector<std::thread> pool;
  for (std::size_t t = 1; t < threads; ++t) pool.emplace_back(worker);
  worker();
  for (std::thread& t : pool) t.join();

  int worst = kExitOk;
  for (const Job& job : work) worst = std::max(worst, emit(job.config, job.result, out, err));
  return worst;
}

}  // namespace

void write_file_atomically(const std::string& path, const std::string& contents) {
  const std::string tmp =
      path + ".tmp." + std::to_string(std::hash<std::thread::id>{}(std::this_thread::get_id()));
  {
    std::ofstream file(tmp, std::ios::binary | std::ios::trunc);
    if (!file) throw IoError("cannot write '" + path + "'");
    file << contents;
    file.flush();
    if (!file) {
      std::error_code ignored;
      std::filesystem::remove(tmp, ignored);
      throw IoError("cannot write '" + path + "'");
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::error_code ignored;
    std::filesystem::remove(tmp, ignored);
    throw IoError("cannot write '" + path + "': " + ec.message());
  }
}

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Fixed points of contractions and of nonself operators on C([a,b], R^m)",
               "ppfix"};
  app.require_subcommand(1);
  app.set_version_flag("--version", "ppfix 1.0.0");

  RawOptions raw;
  std::vector<Leaf> leaves;

  CLI::App* solve = app.add_subcommand("solve", "Run a fixed-point solver");
  solve->require_subcommand(1);
  const std::pair<Mode, const char*> solve_modes[] = {
      {Mode::banach, "Picard iteration of a contraction"},
      {Mode::svv, "Alpha-admissible contraction"},
      {Mode::ppf_constant, "PPF dependent fixed point from a constant start"},
      {Mode::ppf_existential, "PPF dependent fixed point under algebraic closure"},
      {Mode::aks, "Alpha-admissible PPF dependent fixed point"},
      {Mode::blr_bounds, "Paired iteration bounds"},
  };
  for (const auto& [mode, help] : solve_modes) {
    CLI::App* sub = solve->add_subcommand(to_string(mode), help);
    add_options(sub, raw, mode);
    leaves.push_back({sub, mode});
  }

  CLI::App* check = app.add_subcommand("check", "Check a function against the Razumikhin class");
  check->require_subcommand(1);
  {
    CLI::App* sub = check->add_subcommand("razumikhin", "Membership test");
    add_options(sub, raw, Mode::check_razumikhin);
    leaves.push_back({sub, Mode::check_razumikhin});
    sub = check->add_subcommand("aclosed-witness", "Search for a closure witness");
    add_options(sub, raw, Mode::aclosed_witness);
    leaves.push_back({sub, Mode::aclosed_witness});
  }

  std::vector<std::string> scenario_files;
  std::size_t jobs = 1;
  CLI::App* batch = app.add_subcommand("run", "Run scenario files");
  batch->add_option("scenarios", scenario_files, "Scenario JSON files")->required();
  batch->add_option("--jobs,-j", jobs, "Scenarios to run concurrently");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitInvalidInput;
  }

  if (batch->parsed()) return run_scenarios(scenario_files, jobs, out, err);

  for (const Leaf& leaf : leaves) {
    if (!leaf.app->parsed()) continue;
    ScenarioConfig cfg;
    try {
      cfg = config_from(leaf.app, raw, leaf.mode);
    } catch (const Error& e) {
      err << "ppfix: " << e.what() << "\n";
      return kExitInvalidInput;
    }
    return emit(cfg, execute(cfg), out, err);
  }
  return kExitInvalidInput;
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  std::vector<const char*> argv{"ppfix"};
  for (const std::string& a : args) argv.push_back(a.c_str());
  return run(static_cast<int>(argv.size()), argv.data(), out, err);
}

}  // namespace ppfix::cli
