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
#include <optional>

#include "ppfix/core/solvers.hpp"
#include "ppfix/fspace/grid_function.hpp"
#include "ppfix/fspace/razumikhin.hpp"

namespace ppfix::ppf {

using fspace::EvalAnchor;
using fspace::GridFunction;
using fspace::Interval;
using fspace::NonselfMap;

/// A nonself operator C(I, E) -> E together with the grid it acts on and an
/// optional declared contraction modulus.
struct NonselfMapHandle {
  NonselfMap evaluator;
  std::optional<double> k;
  Interval interval;
  std::size_t dim = 1;

  /// Evaluate with shape checks; throws InvalidInput on a grid or dimension
  /// mismatch.
  Point operator()(const GridFunction& phi) const;
};

/// T u = op(H[u]).
Selfmap associated_selfmap(const NonselfMapHandle& op);

/// d(op(phi), phi(c)); phi is a PPF dependent fixed point when this is <= tol.
double ppf_fix_check(const GridFunction& phi, const NonselfMapHandle& op,
                     const EvalAnchor& anchor, Norm norm = Norm::euclidean);

}  // namespace ppfix::ppf
