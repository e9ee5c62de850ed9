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

#include "ppfix/core/point.hpp"

#include <algorithm>
#include <cmath>

#include "ppfix/error.hpp"

namespace ppfix {

Point::Point(std::vector<double> coords) : coords_(std::move(coords)) {
  if (coords_.empty()) throw InvalidInput("point must have dimension >= 1");
  for (double c : coords_) {
    if (!std::isfinite(c)) throw NumericError("non-finite coordinate");
  }
}

Point::Point(std::initializer_list<double> coords)
    : Point(std::vector<double>(coords)) {}

Point Point::zeros(std::size_t dim) { return Point(std::vector<double>(dim)); }

void require_same_dim(const Point& x, const Point& y) {
  if (x.dim() != y.dim()) {
    throw InvalidInput("dimension mismatch: " + std::to_string(x.dim()) +
                       " vs " + std::to_string(y.dim()));
  }
}

Point operator+(const Point& x, const Point& y) {
  require_same_dim(x, y);
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] + y[i];
  return Point(std::move(out));
}

Point operator-(const Point& x, const Point& y) {
  require_same_dim(x, y);
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = x[i] - y[i];
  return Point(std::move(out));
}

Point operator*(double lambda, const Point& x) {
  std::vector<double> out(x.dim());
  for (std::size_t i = 0; i < out.size(); ++i) out[i] = lambda * x[i];
  return Point(std::move(out));
}

Norm parse_norm(std::string_view name) {
  if (name == "euclidean") return Norm::euclidean;
  if (name == "supremum") return Norm::supremum;
  if (name == "one-norm" || name == "one") return Norm::one;
  throw InvalidInput("unknown norm '" + std::string(name) +
                     "' (expected euclidean, supremum or one-norm)");
}

std::string to_string(Norm norm) {
  switch (norm) {
    case Norm::euclidean: return "euclidean";
    case Norm::supremum: return "supremum";
    case Norm::one: return "one-norm";
  }
  return "?";
}

double norm(const Point& x, Norm kind) {
  switch (kind) {
    case Norm::euclidean: {
      // hypot-style scaling avoids overflow for large coordinates
      double scale = 0.0;
      for (double c : x.coords()) scale = std::max(scale, std::abs(c));
      if (scale == 0.0) return 0.0;
      double sum = 0.0;
      for (double c : x.coords()) sum += (c / scale) * (c / scale);
      return scale * std::sqrt(sum);
    }
    case Norm::supremum: {
      double m = 0.0;
      for (double c : x.coords()) m = std::max(m, std::abs(c));
      return m;
    }
    case Norm::one: {
      double sum = 0.0;
      for (double c : x.coords()) sum += std::abs(c);
      return sum;
    }
  }
  return 0.0;
}

double metric_d(const Point& x, const Point& y, Norm kind) {
  require_same_dim(x, y);
  // Coordinate differences computed in place so that identical points give
  // exactly zero without constructing a temporary.
  switch (kind) {
    case Norm::euclidean: {
      double scale = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        scale = std::max(scale, std::abs(x[i] - y[i]));
      }
      if (scale == 0.0) return 0.0;
      double sum = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        const double r = (x[i] - y[i]) / scale;
        sum += r * r;
      }
      return scale * std::sqrt(sum);
    }
    case Norm::supremum: {
      double m = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) {
        m = std::max(m, std::abs(x[i] - y[i]));
      }
      return m;
    }
    case Norm::one: {
      double sum = 0.0;
      for (std::size_t i = 0; i < x.dim(); ++i) sum += std::abs(x[i] - y[i]);
      return sum;
    }
  }
  return 0.0;
}

}  // namespace ppfix
