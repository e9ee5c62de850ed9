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

#include "ppfix/core/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <random>
#include <sstream>

#include "ppfix/error.hpp"

namespace ppfix {

namespace {

using StepHook = std::function<void(std::size_t n, const Point& x,
                                    const Point& next, FixedPointReport&)>;

struct IterationOutcome {
  FixedPointReport report;
  std::optional<Point> image_of_solution;  // T x*, when converged
};

void validate_control(const IterationControl& control) {
  if (!(control.tol > 0.0) || !std::isfinite(control.tol)) {
    throw InvalidInput("tol must be a positive finite number");
  }
}

void validate_k(double k) {
  if (!(k >= 0.0 && k < 1.0)) {
    throw InvalidInput("contraction modulus k must lie in [0, 1)");
  }
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Shared Picard loop. Both solvers run through here so that with alpha == 1
// their traces are identical by construction.
IterationOutcome iterate(const Selfmap& map, const Point& x0,
                         std::optional<double> k,
                         const IterationControl& control,
                         const StepHook& on_step) {
  validate_control(control);
  if (k) validate_k(*k);

  IterationOutcome out;
  FixedPointReport& report = out.report;
  report.tol = control.tol;
  report.k = k;
  report.trace.points.push_back(x0);

  const double threshold =
      !k ? control.tol
         : (*k == 0.0 ? std::numeric_limits<double>::infinity()
                      : control.tol * (1.0 - *k) / *k);

  std::optional<Point> pending;
  double first_step = 0.0;
  double prev_step = 0.0;
  double prev_scale = 0.0;
  int growing = 0;

  for (std::size_t n = 0;; ++n) {
    if (n >= control.max_iter) {
      report.status = Status::max_iter;
      report.iterations = n;
      report.final_residual = prev_step;
      break;
    }
    const Point x = report.trace.points.back();
    Point next = pending ? std::move(*pending) : apply_selfmap(map, x, n);
    pending.reset();

    const double step = metric_d(x, next, control.norm);
    const double scale = std::max(norm(x, control.norm), norm(next, control.norm));
    report.trace.points.push_back(next);
    report.trace.step_distances.push_back(step);

    if (on_step) on_step(n, x, next, report);

    if (k) {
      if (n == 0) first_step = step;
      if (n > 0) {
        report.certificates.push_back(certify("step_decay", n - 1, step,
                                              *k * prev_step,
                                              std::max(scale, prev_scale)));
      }
      report.certificates.push_back(certify(
          "apriori_step", n, step,
          std::pow(*k, static_cast<double>(n)) * first_step,
          std::max(scale, norm(x0, control.norm))));
    } else if (n > 0) {
      growing = step > prev_step ? growing + 1 : 0;
      if (growing >= 3) {
        report.status = Status::diverging;
        report.iterations = n;
        report.final_residual = step;
        report.notes.push_back("step ratio exceeded 1 on three consecutive steps");
        break;
      }
    }

    if (step <= threshold) {
      Point after = apply_selfmap(map, next, n + 1);
      const double residual = metric_d(next, after, control.norm);
      if (residual <= control.tol) {
        report.status = Status::converged;
        report.iterations = n;
        report.final_residual = residual;
        report.solution = next;
        out.image_of_solution = std::move(after);
        break;
      }
      pending = std::move(after);
    }
    prev_step = step;
    prev_scale = scale;
  }
  return out;
}

}  // namespace

std::string to_string(Status status) {
  switch (status) {
    case Status::converged: return "converged";
    case Status::max_iter: return "max_iter";
    case Status::diverging: return "diverging";
  }
  return "?";
}

Point apply_selfmap(const Selfmap& map, const Point& x, std::size_t step) {
  try {
    Point y = map(x);
    if (y.dim() != x.dim()) {
      throw InvalidInput("operator changed dimension from " +
                         std::to_string(x.dim()) + " to " +
                         std::to_string(y.dim()) + " at step " +
                         std::to_string(step));
    }
    return y;
  } catch (const NumericError& e) {
    if (e.step()) throw;
    throw NumericError("operator evaluation produced a non-finite value", step);
  }
}

OrbitTrace picard_orbit(const Selfmap& map, const Point& x0, std::size_t steps,
                        Norm norm) {
  OrbitTrace trace;
  trace.points.reserve(steps + 1);
  trace.points.push_back(x0);
  for (std::size_t n = 0; n < steps; ++n) {
    Point next = apply_selfmap(map, trace.points.back(), n);
    trace.step_distances.push_back(metric_d(trace.points.back(), next, norm));
    trace.points.push_back(std::move(next));
  }
  return trace;
}

FixedPointReport banach_solve(const Selfmap& map, const Point& x0,
                              std::optional<double> k,
                              const IterationControl& control) {
  return iterate(map, x0, k, control, {}).report;
}

FixedPointReport svv_solve(const Selfmap& map, const AlphaMap& alpha,
                           const Point& x0, double k,
                           const IterationControl& control) {
  validate_k(k);
  validate_control(control);

  const Point x1 = apply_selfmap(map, x0, 0);
  const double start_weight = alpha(x0, x1);
  Certificate start = certify("alpha_start", 0, 1.0, start_weight);
  if (!start.pass) {
    throw PreconditionError(
        "(c04)",
        "starting condition violated: alpha(x0, T x0) = " +
            format_double(start_weight) + " < 1",
        {start});
  }

  auto chain = [&alpha](std::size_t n, const Point& x, const Point& next,
                        FixedPointReport& report) {
    const double weight = alpha(x, next);
    report.certificates.push_back(certify("alpha_chain", n, 1.0, weight));
    if (!report.certificates.back().pass) {
      throw AdmissibilityViolation(
          "(c01)", n,
          "alpha chain broken: alpha(x_n, x_{n+1}) = " + format_double(weight) +
              " < 1; operator is not alpha-admissible",
          report.certificates);
    }
  };

  IterationOutcome out = iterate(map, x0, k, control, chain);
  FixedPointReport& report = out.report;
  report.notes.push_back(
      "(c03) alpha closedness is checked along the produced orbit only");

  if (report.status == Status::converged) {
    const Point& fixed = *report.solution;
    const Point& image = *out.image_of_solution;
    report.certificates.push_back(
        certify("alpha_fixed", report.iterations + 1, 1.0, alpha(fixed, image)));
    if (!report.certificates.back().pass) {
      report.notes.push_back(
          "(c03) alpha(x*, T x*) < 1: alpha is not closed along this orbit");
    }

    const auto& pts = report.trace.points;
    const std::size_t last = pts.size() - 1;
    const std::size_t first = last >= 3 ? last - 3 : 0;
    for (std::size_t n = first; n < last; ++n) {
      const double lhs = metric_d(pts[n + 1], image, control.norm);
      const double rhs = k * metric_d(pts[n], fixed, control.norm);
      const double scale = std::max(norm(pts[n], control.norm),
                                    norm(fixed, control.norm));
      report.certificates.push_back(certify("fixed_contraction", n, lhs, rhs, scale));
    }
  }
  return report;
}

ModulusEstimate contraction_modulus_estimate(
    const Selfmap& map, const std::vector<std::pair<Point, Point>>& pairs,
    Norm norm) {
  if (pairs.empty()) throw InvalidInput("modulus estimate needs at least one pair");
  std::optional<ModulusEstimate> best;
  for (std::size_t i = 0; i < pairs.size(); ++i) {
    const auto& [x, y] = pairs[i];
    const double dxy = metric_d(x, y, norm);
    if (!(dxy > 0.0)) {
      throw InvalidInput("sample pair " + std::to_string(i) +
                         " has zero distance");
    }
    const double ratio =
        metric_d(apply_selfmap(map, x, 0), apply_selfmap(map, y, 0), norm) / dxy;
    if (!best || ratio > best->k_hat) {
      best = ModulusEstimate{ratio, i, pairs[i]};
    }
  }
  return *best;
}

std::vector<std::pair<Point, Point>> sample_pairs(std::size_t dim,
                                                  std::size_t count,
                                                  std::uint64_t seed,
                                                  double radius) {
  if (dim == 0) throw InvalidInput("sample dimension must be >= 1");
  std::mt19937_64 rng(seed);
  std::uniform_real_distribution<double> coord(-radius, radius);
  auto draw = [&] {
    std::vector<double> c(dim);
    for (double& v : c) v = coord(rng);
    return Point(std::move(c));
  };
  std::vector<std::pair<Point, Point>> pairs;
  pairs.reserve(count);
  while (pairs.size() < count) {
    Point x = draw();
    Point y = draw();
    if (x != y) pairs.emplace_back(std::move(x), std::move(y));
  }
  return pairs;
}

}  // namespace ppfix
