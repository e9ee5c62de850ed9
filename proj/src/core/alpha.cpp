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

#include "ppfix/core/alpha.hpp"

#include <algorithm>
#include <cmath>

#include "ppfix/error.hpp"

namespace ppfix {

namespace {

void require_finite(const std::vector<double>& values, const char* what) {
  for (double v : values) {
    if (!std::isfinite(v)) {
      throw InvalidInput(std::string("alpha ") + what + " must be finite");
    }
  }
}

}  // namespace

AlphaMap::AlphaMap(Kind kind, std::vector<double> axis,
                   std::vector<double> offset, double off_value)
    : kind_(kind),
      axis_(std::move(axis)),
      offset_(std::move(offset)),
      off_value_(off_value) {
  require_finite(axis_, "axis");
  require_finite(offset_, "offset");
  if (!(off_value_ >= 0.0 && off_value_ < 1.0)) {
    throw InvalidInput("alpha off_value must lie in [0, 1)");
  }
  if (!axis_.empty() && !offset_.empty() && axis_.size() != offset_.size()) {
    throw InvalidInput("alpha axis and offset differ in dimension");
  }
}

AlphaMap AlphaMap::constant_one() { return AlphaMap(Kind::constant_one, {}, {}, 0.0); }

AlphaMap AlphaMap::cone_indicator(std::vector<double> axis,
                                  std::vector<double> offset,
                                  double off_value) {
  return AlphaMap(Kind::cone_indicator, std::move(axis), std::move(offset),
                  off_value);
}

AlphaMap AlphaMap::product_form(std::vector<double> axis,
                                std::vector<double> offset, double off_value) {
  return AlphaMap(Kind::product_form, std::move(axis), std::move(offset),
                  off_value);
}

void AlphaMap::check_dim(const Point& z) const {
  if ((!axis_.empty() && axis_.size() != z.dim()) ||
      (!offset_.empty() && offset_.size() != z.dim())) {
    throw InvalidInput("alpha parameters do not match point dimension " +
                       std::to_string(z.dim()));
  }
}

bool AlphaMap::in_cone(const Point& z) const {
  check_dim(z);
  for (std::size_t i = 0; i < z.dim(); ++i) {
    if (axis_at(i) * (z[i] - offset_at(i)) < 0.0) return false;
  }
  return true;
}

double AlphaMap::operator()(const Point& x, const Point& y) const {
  require_same_dim(x, y);
  switch (kind_) {
    case Kind::constant_one:
      return 1.0;
    case Kind::cone_indicator:
      return in_cone(x) && in_cone(y) ? 1.0 : off_value_;
    case Kind::product_form: {
      check_dim(x);
      auto weight = [this](const Point& z) {
        double s = 1.0;
        for (std::size_t i = 0; i < z.dim(); ++i) {
          s += axis_at(i) * (z[i] - offset_at(i));
        }
        return std::max(off_value_, s);
      };
      return weight(x) * weight(y);
    }
  }
  return 0.0;
}

std::string to_string(AlphaMap::Kind kind) {
  switch (kind) {
    case AlphaMap::Kind::constant_one: return "constant_one";
    case AlphaMap::Kind::cone_indicator: return "cone_indicator";
    case AlphaMap::Kind::product_form: return "product_form";
  }
  return "?";
}

AlphaMap::Kind parse_alpha_kind(std::string_view name) {
  if (name == "constant_one") return AlphaMap::Kind::constant_one;
  if (name == "cone_indicator") return AlphaMap::Kind::cone_indicator;
  if (name == "product_form") return AlphaMap::Kind::product_form;
  throw InvalidInput("unknown alpha kind '" + std::string(name) + "'");
}

}  // namespace ppfix
