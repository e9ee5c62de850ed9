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

// PPF dependent fixed points, computed in the constant class K = {H[u]}.
//
// Every solver here reduces the nonself problem op(phi) = phi(c) to the
// ordinary fixed-point problem of the associated selfmap T u = op(H[u]) and
// lifts the answer back with H. Iterative sequences are only ever built in K,
// where they are unique and given by phi_n = H[T^n u0].

#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "ppfix/core/alpha.hpp"
#include "ppfix/core/solvers.hpp"
#include "ppfix/ppf/nonself.hpp"

namespace ppfix::ppf {

struct PPFReport {
  Status status = Status::max_iter;
  std::optional<GridFunction> solution;  // H[point]
  std::optional<Point> point;
  double residual = 0.0;  // d(op(solution), solution(c))
  EvalAnchor anchor;
  std::optional<Point> start;  // constant-class start u0, after any lift
  FixedPointReport inner;      // run of the associated selfmap
  CertificateList certificates;
  std::vector<std::string> notes;
};

/// Iterates of two constant-class sequences and the distance bounds between
/// them.
struct BLRRow {
  std::size_t n = 0;
  double distance = 0.0;  // D(phi_n, xi_n)
  double bound = 0.0;     // (D(phi0,phi1) + D(xi0,xi1)) / (1-k) + D(phi0,xi0)
  bool pass = false;
  std::optional<double> same_start_bound;  // 2 D(phi0,phi1) / (1-k)
  std::optional<bool> same_start_pass;
};

struct BLRPairReport {
  GridFunction phi0;
  GridFunction xi0;
  std::vector<Point> phi_points;  // phi_n = H[phi_points[n]]
  std::vector<Point> xi_points;
  double k = 0.0;
  std::vector<BLRRow> rows;
  CertificateList certificates;  // step decay, nabla relation, pair contraction

  bool all_pass() const;
};

/// Solve op(phi) = phi(c) in K by Picard iteration of the associated selfmap
/// from u0. Requires op.k. Certifies both directions of the reduction: the
/// lifted solution is a PPF fixed point and the point is a fixed point of T.
PPFReport constant_blr_solve(const NonselfMapHandle& op, const Point& u0,
                             const EvalAnchor& anchor,
                             const IterationControl& control = {});

/// Runs the constant-class sequences from u0 and v0 for `steps` steps and
/// records D(phi_n, xi_n) against its a-priori bound for every n <= steps.
BLRPairReport blr_pair_bounds(const NonselfMapHandle& op, const Point& u0,
                              const Point& v0, const EvalAnchor& anchor,
                              std::size_t steps, Norm norm = Norm::euclidean);

/// The existence statement under an algebraically closed Razumikhin class.
/// That hypothesis forces the class down to K, so this is constant_blr_solve
/// from u0 = 0. Throws InvalidInput unless `aclosed_asserted`.
PPFReport existential_blr_solve(const NonselfMapHandle& op,
                                const EvalAnchor& anchor,
                                const IterationControl& control,
                                bool aclosed_asserted);

struct StartingLift {
  GridFunction lifted;  // H[op(phi0)]
  CertificateList certificates;
};

/// Turn a start phi0 with alpha(phi0(c), op(phi0)) >= 1 into a constant start
/// with the same property.
StartingLift k_starting_lift(const NonselfMapHandle& op, const AlphaMap& alpha,
                             const GridFunction& phi0, const EvalAnchor& anchor);

using AksStart = std::variant<Point, GridFunction>;

/// alpha-weighted solve in K. A non-constant start function is lifted first.
PPFReport aks_solve(const NonselfMapHandle& op, const AlphaMap& alpha,
                    const AksStart& start, const EvalAnchor& anchor,
                    const IterationControl& control = {});

}  // namespace ppfix::ppf
