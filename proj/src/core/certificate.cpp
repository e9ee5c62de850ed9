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

#include "ppfix/core/certificate.hpp"

#include <algorithm>
#include <cmath>

namespace ppfix {

double certificate_slack(double lhs, double rhs, double scale) {
  const double magnitude =
      std::max({std::abs(lhs), std::abs(rhs), std::abs(scale)});
  return 1e-12 * magnitude + 1e-300;
}

Certificate certify(std::string name, std::size_t n, double lhs, double rhs,
                    double scale) {
  const bool pass = lhs <= rhs + certificate_slack(lhs, rhs, scale);
  return Certificate{std::move(name), n, lhs, rhs, pass};
}

bool all_pass(const CertificateList& certificates) {
  return std::all_of(certificates.begin(), certificates.end(),
                     [](const Certificate& c) { return c.pass; });
}

}  // namespace ppfix
