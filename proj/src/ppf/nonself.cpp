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

#include "ppfix/ppf/nonself.hpp"

#include "ppfix/error.hpp"

namespace ppfix::ppf {

Point NonselfMapHandle::operator()(const GridFunction& phi) const {
  if (!(phi.interval() == interval)) {
    throw InvalidInput("function grid does not match the operator's interval");
  }
  if (phi.dim() != dim) {
    throw InvalidInput("function dimension " + std::to_string(phi.dim()) +
                       " does not match operator dimension " +
                       std::to_string(dim));
  }
  Point image = evaluator(phi);
  if (image.dim() != dim) {
    throw InvalidInput("nonself operator returned dimension " +
                       std::to_string(image.dim()));
  }
  return image;
}

Selfmap associated_selfmap(const NonselfMapHandle& op) {
  return [op](const Point& u) { return op(fspace::embed_constant(u, op.interval)); };
}

double ppf_fix_check(const GridFunction& phi, const NonselfMapHandle& op,
                     const EvalAnchor& anchor, Norm norm) {
  return metric_d(op(phi), phi.at(anchor), norm);
}

}  // namespace ppfix::ppf
