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

#include "ppfix/fspace/razumikhin.hpp"

#include <cmath>

#include "ppfix/error.hpp"

namespace ppfix::fspace {

RazumikhinVerdict razumikhin_member(const GridFunction& phi,
                                    const EvalAnchor& anchor, Norm norm_kind,
                                    double tol) {
  RazumikhinVerdict v;
  v.sup_norm = sup_norm(phi, norm_kind);
  v.anchor_norm = norm(phi.at(anchor), norm_kind);
  v.gap = v.sup_norm - v.anchor_norm;
  v.is_member = v.gap <= tol;
  return v;
}

bool homogeneity_check(const GridFunction& phi, const EvalAnchor& anchor,
                       double lambda, Norm norm_kind, double tol) {
  if (lambda == 0.0 || !std::isfinite(lambda)) {
    throw InvalidInput("homogeneity check needs a finite nonzero lambda");
  }
  const bool before = razumikhin_member(phi, anchor, norm_kind, tol).is_member;
  const bool after = razumikhin_member(lambda * phi, anchor, norm_kind,
                                       std::abs(lambda) * tol)
                         .is_member;
  return before == after;
}

WitnessResult aclosed_witness(const GridFunction& phi, const EvalAnchor& anchor,
                              Norm norm_kind, double tol) {
  const RazumikhinVerdict own = razumikhin_member(phi, anchor, norm_kind, tol);
  if (!own.is_member) {
    throw InvalidInput(
        "(b01) function is not in the Razumikhin class at c (gap " +
        std::to_string(own.gap) + ")");
  }
  const Point& at_c = phi.at(anchor);
  bool varies = false;
  for (const Point& v : phi.values()) {
    if (metric_d(v, at_c, norm_kind) > tol) {
      varies = true;
      break;
    }
  }
  if (!varies) return ConstantFlag{};

  GridFunction delta = phi - embed_constant(at_c, phi.interval());
  RazumikhinVerdict verdict = razumikhin_member(delta, anchor, norm_kind, tol);
  return CollapseWitness{std::move(delta), verdict};
}

bool nabla_related(const GridFunction& phi, const GridFunction& xi,
                   const NonselfMap& op, const EvalAnchor& anchor,
                   Norm norm_kind, double tol) {
  require_compatible(phi, xi);
  Point image = [&] {
    try {
      return op(phi);
    } catch (const NumericError&) {
      throw NumericError("nonself operator produced a non-finite value");
    }
  }();
  if (metric_d(image, xi.at(anchor), norm_kind) > tol) return false;
  return razumikhin_member(phi - xi, anchor, norm_kind, tol).is_member;
}

}  // namespace ppfix::fspace
