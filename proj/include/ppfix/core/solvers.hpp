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
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ppfix/core/alpha.hpp"
#include "ppfix/core/certificate.hpp"
#include "ppfix/core/point.hpp"

namespace ppfix {

using Selfmap = std::function<Point(const Point&)>;

/// x_0, T x_0, T^2 x_0, ... with step_distances[i] = d(points[i], points[i+1]).
struct OrbitTrace {
  std::vector<Point> points;
  std::vector<double> step_distances;

  friend bool operator==(const OrbitTrace&, const OrbitTrace&) = default;
};

enum class Status { converged, max_iter, diverging };

std::string to_string(Status status);

struct FixedPointReport {
  std::optional<Point> solution;
  Status status = Status::max_iter;
  // Index n of the step d(x_n, x_{n+1}) that met the stopping rule; the
  // solution is x_{n+1}.
  std::size_t iterations = 0;
  double final_residual = 0.0;
  double tol = 0.0;
  std::optional<double> k;
  OrbitTrace trace;
  CertificateList certificates;
  std::vector<std::string> notes;
};

struct IterationControl {
  double tol = 1e-10;
  std::size_t max_iter = 1000;
  Norm norm = Norm::euclidean;
};

/// Evaluate T once, rejecting non-finite output or a change of dimension.
Point apply_selfmap(const Selfmap& map, const Point& x, std::size_t step);

OrbitTrace picard_orbit(const Selfmap& map, const Point& x0, std::size_t steps,
                        Norm norm = Norm::euclidean);

/// Picard iteration for a (d; k)-contraction.
///
/// With k declared the run stops once d(x_n, x_{n+1}) <= tol (1 - k) / k,
/// which bounds d(x_{n+1}, x*) by tol, and records per step the decay
/// certificate d(x_{n+1}, x_{n+2}) <= k d(x_n, x_{n+1}) and the a-priori
/// certificate d(x_n, x_{n+1}) <= k^n d(x_0, x_1). Without k the run stops
/// once d(x_n, x_{n+1}) <= tol and reports `diverging` after three consecutive
/// growing steps.
FixedPointReport banach_solve(const Selfmap& map, const Point& x0,
                              std::optional<double> k,
                              const IterationControl& control = {});

/// Picard iteration for an alpha-admissible (alpha, k)-contraction.
///
/// Requires alpha(x0, T x0) >= 1. Every step records the chain certificate
/// alpha(x_n, x_{n+1}) >= 1; a broken chain throws AdmissibilityViolation.
/// On convergence also records alpha(x*, T x*) >= 1 and spot-checks
/// d(x_{n+1}, T x*) <= k d(x_n, x*) on the last three iterates.
FixedPointReport svv_solve(const Selfmap& map, const AlphaMap& alpha,
                           const Point& x0, double k,
                           const IterationControl& control = {});

struct ModulusEstimate {
  double k_hat = 0.0;
  std::size_t worst_index = 0;
  std::pair<Point, Point> worst_pair;
};

/// max over pairs of d(Tx, Ty) / d(x, y).
ModulusEstimate contraction_modulus_estimate(
    const Selfmap& map, const std::vector<std::pair<Point, Point>>& pairs,
    Norm norm = Norm::euclidean);

/// `count` pairs of distinct points with coordinates uniform in
/// [-radius, radius], deterministic in `seed`.
std::vector<std::pair<Point, Point>> sample_pairs(std::size_t dim,
                                                  std::size_t count,
                                                  std::uint64_t seed,
                                                  double radius = 10.0);

}  // namespace ppfix
