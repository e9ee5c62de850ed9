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

#include "ppfix/fspace/grid_function.hpp"

#include <cmath>
#include <sstream>

#include "ppfix/error.hpp"

namespace ppfix::fspace {

Interval::Interval(double a, double b, std::size_t node_count)
    : a_(a), b_(b), n_(node_count) {
  if (!std::isfinite(a) || !std::isfinite(b) || !(a < b)) {
    throw InvalidInput("interval requires finite a < b");
  }
  if (node_count < 2) throw InvalidInput("interval requires at least 2 nodes");
}

double Interval::node(std::size_t i) const {
  if (i >= n_) throw InvalidInput("node index out of range");
  if (i == n_ - 1) return b_;
  // (b - a) * i / (n - 1) keeps decimal nodes such as 0.5 or 0.3 on [0, 1]
  // exact to the nearest double.
  return a_ + (b_ - a_) * static_cast<double>(i) / static_cast<double>(n_ - 1);
}

EvalAnchor make_anchor(const Interval& interval, double c) {
  if (!std::isfinite(c) || c < interval.a() || c > interval.b()) {
    std::ostringstream os;
    os << "anchor c = " << c << " lies outside [" << interval.a() << ", "
       << interval.b() << "]";
    throw InvalidInput(os.str());
  }
  const double h = interval.spacing();
  const auto i = static_cast<std::size_t>(std::llround((c - interval.a()) / h));
  const std::size_t idx = std::min(i, interval.node_count() - 1);
  const double t = interval.node(idx);
  if (std::abs(t - c) > 1e-9 * h) {
    std::ostringstream os;
    os.precision(17);
    os << "anchor c = " << c << " is not a grid node (nearest node " << t
       << ")";
    throw InvalidInput(os.str());
  }
  return EvalAnchor{t, idx};
}

void require_anchor(const Interval& interval, const EvalAnchor& anchor) {
  if (anchor.node_index >= interval.node_count() ||
      interval.node(anchor.node_index) != anchor.c) {
    throw InvalidInput("anchor does not coincide with a node of the interval");
  }
}

GridFunction::GridFunction(Interval interval, std::vector<Point> values)
    : interval_(interval), values_(std::move(values)) {
  if (values_.size() != interval_.node_count()) {
    throw InvalidInput("grid function has " + std::to_string(values_.size()) +
                       " values for " + std::to_string(interval_.node_count()) +
                       " nodes");
  }
  for (const Point& v : values_) {
    if (v.dim() != values_.front().dim()) {
      throw InvalidInput("grid function values differ in dimension");
    }
  }
}

GridFunction GridFunction::sample(const Interval& interval,
                                  const std::function<Point(double)>& f) {
  std::vector<Point> values;
  values.reserve(interval.node_count());
  for (std::size_t i = 0; i < interval.node_count(); ++i) {
    values.push_back(f(interval.node(i)));
  }
  return GridFunction(interval, std::move(values));
}

const Point& GridFunction::at(const EvalAnchor& anchor) const {
  require_anchor(interval_, anchor);
  return values_[anchor.node_index];
}

void require_compatible(const GridFunction& f, const GridFunction& g) {
  if (!(f.interval() == g.interval())) {
    throw InvalidInput("grid functions live on different grids");
  }
  if (f.dim() != g.dim()) {
    throw InvalidInput("grid functions differ in dimension");
  }
}

GridFunction operator+(const GridFunction& f, const GridFunction& g) {
  require_compatible(f, g);
  std::vector<Point> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] + g[i]);
  return GridFunction(f.interval(), std::move(out));
}

GridFunction operator-(const GridFunction& f, const GridFunction& g) {
  require_compatible(f, g);
  std::vector<Point> out;
  out.reserve(f.size());
  for (std::size_t i = 0; i < f.size(); ++i) out.push_back(f[i] - g[i]);
  return GridFunction(f.interval(), std::move(out));
}

GridFunction operator*(double lambda, const GridFunction& f) {
  std::vector<Point> out;
  out.reserve(f.size());
  for (const Point& v : f.values()) out.push_back(lambda * v);
  return GridFunction(f.interval(), std::move(out));
}

double sup_norm(const GridFunction& phi, Norm kind) {
  return norm(phi[argmax_node(phi, kind)], kind);
}

std::size_t argmax_node(const GridFunction& phi, Norm kind) {
  std::size_t best = 0;
  double best_norm = norm(phi[0], kind);
  for (std::size_t i = 1; i < phi.size(); ++i) {
    const double v = norm(phi[i], kind);
    if (v > best_norm) {
      best = i;
      best_norm = v;
    }
  }
  return best;
}

double metric_D(const GridFunction& phi, const GridFunction& xi, Norm kind) {
  require_compatible(phi, xi);
  double m = 0.0;
  for (std::size_t i = 0; i < phi.size(); ++i) {
    m = std::max(m, metric_d(phi[i], xi[i], kind));
  }
  return m;
}

GridFunction embed_constant(const Point& u, const Interval& interval) {
  return GridFunction(interval, std::vector<Point>(interval.node_count(), u));
}

bool is_constant(const GridFunction& phi, double tol, Norm kind) {
  for (const Point& v : phi.values()) {
    if (metric_d(v, phi[0], kind) > tol) return false;
  }
  return true;
}

Point grid_mean(const GridFunction& phi) {
  // Accumulate deviations from the first node so the mean of a constant
  // function is that constant bit for bit.
  const Point& base = phi[0];
  std::vector<double> dev(phi.dim(), 0.0);
  for (const Point& v : phi.values()) {
    for (std::size_t j = 0; j < dev.size(); ++j) dev[j] += v[j] - base[j];
  }
  const double n = static_cast<double>(phi.size());
  for (std::size_t j = 0; j < dev.size(); ++j) dev[j] = base[j] + dev[j] / n;
  return Point(std::move(dev));
}

}  // namespace ppfix::fspace
