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

#include <string>
#include <string_view>
#include <vector>

#include "ppfix/core/point.hpp"

namespace ppfix {

/// Nonnegative weight alpha: E x E -> R+, from a closed registry.
///
/// The cone is the set { z : axis_i * (z_i - offset_i) >= 0 for every i }.
/// An empty axis means all ones and an empty offset means the origin, so the
/// default cone is the nonnegative orthant in any dimension.
///
///  - constant_one:   alpha(x, y) = 1
///  - cone_indicator: alpha(x, y) = 1 if x and y are in the cone, else off_value
///  - product_form:   alpha(x, y) = w(x) * w(y) with
///                    w(z) = max(off_value, 1 + <axis, z - offset>)
class AlphaMap {
 public:
  enum class Kind { constant_one, cone_indicator, product_form };

  static AlphaMap constant_one();
  static AlphaMap cone_indicator(std::vector<double> axis = {},
                                 std::vector<double> offset = {},
                                 double off_value = 0.0);
  static AlphaMap product_form(std::vector<double> axis = {},
                               std::vector<double> offset = {},
                               double off_value = 0.0);

  double operator()(const Point& x, const Point& y) const;

  Kind kind() const noexcept { return kind_; }
  const std::vector<double>& axis() const noexcept { return axis_; }
  const std::vector<double>& offset() const noexcept { return offset_; }
  double off_value() const noexcept { return off_value_; }

  bool in_cone(const Point& z) const;

  friend bool operator==(const AlphaMap&, const AlphaMap&) = default;

 private:
  AlphaMap(Kind kind, std::vector<double> axis, std::vector<double> offset,
           double off_value);

  double axis_at(std::size_t i) const { return axis_.empty() ? 1.0 : axis_[i]; }
  double offset_at(std::size_t i) const {
    return offset_.empty() ? 0.0 : offset_[i];
  }
  void check_dim(const Point& z) const;

  Kind kind_;
  std::vector<double> axis_;
  std::vector<double> offset_;
  double off_value_;
};

std::string to_string(AlphaMap::Kind kind);
AlphaMap::Kind parse_alpha_kind(std::string_view name);

}  // namespace ppfix
