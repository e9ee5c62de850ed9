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

#include <functional>
#include <variant>

#include "ppfix/fspace/grid_function.hpp"

namespace ppfix::fspace {

inline constexpr double kDefaultMembershipTol = 1e-9;

struct RazumikhinVerdict {
  bool is_member = false;
  double sup_norm = 0.0;
  double anchor_norm = 0.0;
  double gap = 0.0;  // sup_norm - anchor_norm
};

/// Membership in the Razumikhin class at c: the sup norm is attained at c,
/// up to `tol`.
RazumikhinVerdict razumikhin_member(const GridFunction& phi,
                                    const EvalAnchor& anchor,
                                    Norm norm = Norm::euclidean,
                                    double tol = kDefaultMembershipTol);

/// Whether membership of phi and of lambda * phi agree. The scaled function
/// is judged against |lambda| * tol, so the answer does not depend on where
/// the gap falls relative to an absolute threshold.
bool homogeneity_check(const GridFunction& phi, const EvalAnchor& anchor,
                       double lambda, Norm norm = Norm::euclidean,
                       double tol = kDefaultMembershipTol);

/// delta = phi - H[phi(c)] for a non-constant member phi, with its verdict.
struct CollapseWitness {
  GridFunction delta;
  RazumikhinVerdict verdict;
};

struct ConstantFlag {};

using WitnessResult = std::variant<CollapseWitness, ConstantFlag>;

/// For a member phi that is not constant within `tol`, returns the difference
/// of two members that fails membership; for a constant phi, ConstantFlag.
/// Throws InvalidInput when phi is not a member.
WitnessResult aclosed_witness(const GridFunction& phi, const EvalAnchor& anchor,
                              Norm norm = Norm::euclidean,
                              double tol = kDefaultMembershipTol);

using NonselfMap = std::function<Point(const GridFunction&)>;

/// phi nabla xi: T phi = xi(c) within `tol` and phi - xi is a member.
bool nabla_related(const GridFunction& phi, const GridFunction& xi,
                   const NonselfMap& op, const EvalAnchor& anchor,
                   Norm norm = Norm::euclidean,
                   double tol = kDefaultMembershipTol);

}  // namespace ppfix::fspace
