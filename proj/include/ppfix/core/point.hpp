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
#include <initializer_list>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace ppfix {

/// An element of E = R^m. Always finite and of dimension at least one.
class Point {
 public:
  /// Throws InvalidInput on an empty vector and NumericError on NaN/Inf.
  explicit Point(std::vector<double> coords);
  Point(std::initializer_list<double> coords);

  static Point zeros(std::size_t dim);

  std::size_t dim() const noexcept { return coords_.size(); }
  double operator[](std::size_t i) const { return coords_[i]; }
  std::span<const double> coords() const noexcept { return coords_; }
  const std::vector<double>& vec() const noexcept { return coords_; }

  friend bool operator==(const Point&, const Point&) = default;

  friend Point operator+(const Point& x, const Point& y);
  friend Point operator-(const Point& x, const Point& y);
  friend Point operator*(double lambda, const Point& x);

 private:
  std::vector<double> coords_;
};

enum class Norm { euclidean, supremum, one };

Norm parse_norm(std::string_view name);
std::string to_string(Norm norm);

double norm(const Point& x, Norm kind);

/// d(x, y) = ||x - y||. Throws InvalidInput on a dimension mismatch.
double metric_d(const Point& x, const Point& y, Norm kind = Norm::euclidean);

void require_same_dim(const Point& x, const Point& y);

}  // namespace ppfix
