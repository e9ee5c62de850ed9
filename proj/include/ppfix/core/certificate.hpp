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
#include <string>
#include <vector>

namespace ppfix {

/// One checked inequality `lhs <= rhs`, tagged with the bound it instantiates
/// and the iteration index it refers to.
struct Certificate {
  std::string name;
  std::size_t n = 0;
  double lhs = 0.0;
  double rhs = 0.0;
  bool pass = false;

  friend bool operator==(const Certificate&, const Certificate&) = default;
};

using CertificateList = std::vector<Certificate>;

/// Absolute slack for comparing `lhs <= rhs`:
/// 1e-12 * max(|lhs|, |rhs|, scale) + 1e-300.
///
/// `scale` lets orbit certificates account for the magnitude of the iterates
/// themselves; step distances near convergence are far smaller than the
/// rounding error of the points they are computed from.
double certificate_slack(double lhs, double rhs, double scale = 0.0);

Certificate certify(std::string name, std::size_t n, double lhs, double rhs,
                    double scale = 0.0);

bool all_pass(const CertificateList& certificates);

}  // namespace ppfix
