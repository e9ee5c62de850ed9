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
#include <functional>
#include <vector>

#include "ppfix/core/point.hpp"

namespace ppfix::fspace {

/// Uniform grid a = t_0 < ... < t_{n-1} = b on a closed interval.
class Interval {
 public:
  Interval(double a, double b, std::size_t node_count);

  double a() const noexcept { return a_; }
  double b() const noexcept { return b_; }
  std::size_t node_count() const noexcept { return n_; }
  double spacing() const noexcept { return (b_ - a_) / static_cast<double>(n_ - 1); }

  /// t_i; the last node is exactly b.
  double node(std::size_t i) const;

  friend bool operator==(const Interval&, const Interval&) = default;

 private:
  double a_;
  double b_;
  std::size_t n_;
};

/// The evaluation point c, pinned to a grid node.
struct EvalAnchor {
  double c = 0.0;
  std::size_t node_index = 0;

  friend bool operator==(const EvalAnchor&, const EvalAnchor&) = default;
};

/// Locate c on the grid. A c within 1e-9 of a node spacing of a node snaps to
/// that node's exact value; anything else throws InvalidInput.
EvalAnchor make_anchor(const Interval& interval, double c);

/// Throws InvalidInput unless `anchor` names a node of `interval` exactly.
void require_anchor(const Interval& interval, const EvalAnchor& anchor);

/// A continuous function I -> R^m sampled at the grid nodes.
class GridFunction {
 public:
  GridFunction(Interval interval, std::vector<Point> values);

  static GridFunction sample(const Interval& interval,
                             const std::function<Point(double)>& f);

  const Interval& interval() const noexcept { return interval_; }
  const std::vector<Point>& values() const noexcept { return values_; }
  std::size_t dim() const noexcept { return values_.front().dim(); }
  std::size_t size() const noexcept { return values_.size(); }
  const Point& operator[](std::size_t i) const { return values_[i]; }
  const Point& at(const EvalAnchor& anchor) const;

  friend bool operator==(const GridFunction&, const GridFunction&) = default;

  friend GridFunction operator+(const GridFunction& f, const GridFunction& g);
  friend GridFunction operator-(const GridFunction& f, const GridFunction& g);
  friend GridFunction operator*(double lambda, const GridFunction& f);

 private:
  Interval interval_;
  std::vector<Point> values_;
};

void require_compatible(const GridFunction& f, const GridFunction& g);

/// ||phi||_0, the maximum over nodes of the pointwise norm.
double sup_norm(const GridFunction& phi, Norm norm = Norm::euclidean);

/// Index of the first node attaining sup_norm.
std::size_t argmax_node(const GridFunction& phi, Norm norm = Norm::euclidean);

/// D(phi, xi) = ||phi - xi||_0.
double metric_D(const GridFunction& phi, const GridFunction& xi,
                Norm norm = Norm::euclidean);

/// H[u]: the constant function t -> u.
GridFunction embed_constant(const Point& u, const Interval& interval);

/// True when every node value lies within `tol` of the value at node 0.
/// With tol = 0 this is membership in the constant class.
bool is_constant(const GridFunction& phi, double tol = 0.0,
                 Norm norm = Norm::euclidean);

/// Arithmetic mean of the node values.
Point grid_mean(const GridFunction& phi);

}  // namespace ppfix::fspace
