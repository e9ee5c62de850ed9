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

// Report serialization. Every report has the keys
//   mode, status, iterations, solution, residual, certificates, notes
// and certificates are [{name, n, lhs, rhs, pass}, ...].

#pragma once

#include <string>

#include "json.hpp"
#include "ppfix/core/solvers.hpp"
#include "ppfix/fspace/razumikhin.hpp"
#include "ppfix/ppf/solvers.hpp"

namespace ppfix::cli {

nlohmann::json to_json(const Certificate& certificate);
nlohmann::json to_json(const CertificateList& certificates);
nlohmann::json to_json(const fspace::RazumikhinVerdict& verdict);

/// Skeleton with every required key present and empty.
nlohmann::json empty_report(const std::string& mode);

nlohmann::json to_json(const FixedPointReport& report, const std::string& mode);
nlohmann::json to_json(const ppf::PPFReport& report, const std::string& mode);
nlohmann::json to_json(const ppf::BLRPairReport& report, const std::string& mode);

/// Columns: n, x1..xm, step_distance, bound_rhs, pass. bound_rhs is the
/// a-priori bound k^n d(x0, x1); empty cells where a value does not apply.
std::string trace_csv(const FixedPointReport& report);

/// Columns: n, x1..xm, y1..ym, step_distance, bound_rhs, pass, where
/// step_distance holds D(phi_n, xi_n) and bound_rhs its pair bound.
std::string blr_csv(const ppf::BLRPairReport& report);

}  // namespace ppfix::cli
