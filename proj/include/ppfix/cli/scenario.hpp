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

#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"
#include "ppfix/core/point.hpp"

namespace ppfix::cli {

enum class Mode {
  banach,
  svv,
  ppf_constant,
  ppf_existential,
  aks,
  check_razumikhin,
  aclosed_witness,
  blr_bounds,
};

std::string to_string(Mode mode);
Mode parse_mode(std::string_view name);

/// Exit codes of the command-line tool.
enum ExitCode : int {
  kExitOk = 0,
  kExitViolated = 2,
  kExitMaxIter = 3,
  kExitInvalidInput = 4,
  kExitIo = 5,
};

inline constexpr double kDefaultSolverTol = 1e-10;
inline constexpr double kDefaultCheckTol = 1e-9;

/// Default solver tolerance, overridable through PPF_DEFAULT_TOL.
double default_solver_tol();

/// One run of the tool, from flags or from a scenario file.
///
/// `start` and `start2` hold either comma-separated coordinates ("0", "1,2")
/// or the path of a function file.
struct ScenarioConfig {
  Mode mode = Mode::banach;
  std::optional<std::string> op_path;
  std::optional<std::string> alpha_path;
  std::optional<std::string> interval;  // "a,b,n"
  std::optional<double> c;
  std::optional<std::string> start;
  std::optional<std::string> start2;
  std::optional<std::string> fn_path;
  std::optional<double> k;
  std::optional<double> tol;
  std::size_t max_iter = 1000;
  std::size_t steps = 50;
  Norm norm = Norm::euclidean;
  std::optional<std::string> out_path;
  std::optional<std::string> csv_path;
  std::uint64_t seed = 0;
  bool assert_aclosed = false;

  double effective_tol() const;
};

/// Throws InvalidInput naming the first missing mode-required field.
void validate(const ScenarioConfig& config);

/// Reads a scenario document. Relative paths resolve against `base_dir`.
ScenarioConfig scenario_from_json(const nlohmann::json& doc,
                                  const std::string& base_dir = "");
ScenarioConfig load_scenario(const std::string& path);

struct RunResult {
  int exit_code = kExitOk;
  nlohmann::json report;
  std::string csv;      // empty when the mode has no trace
  std::string message;  // human-readable diagnostic, empty on success
};

/// Run one scenario. Never throws; failures become exit codes, and the
/// report carries every certificate produced before the failure.
RunResult execute(const ScenarioConfig& config);

}  // namespace ppfix::cli
