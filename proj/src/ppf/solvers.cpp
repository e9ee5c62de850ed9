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

#include "ppfix/ppf/solvers.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "ppfix/error.hpp"
#include "ppfix/fspace/razumikhin.hpp"

namespace ppfix::ppf {

namespace {

double require_k(const NonselfMapHandle& op) {
  if (!op.k) {
    throw InvalidInput("(b03) operator has no declared contraction modulus k");
  }
  if (!(*op.k >= 0.0 && *op.k < 1.0)) {
    throw ContractionViolation("(b03) declared modulus k = " +
                               std::to_string(*op.k) + " is not in [0, 1)");
  }
  return *op.k;
}

std::string format_double(double v) {
  std::ostringstream os;
  os.precision(17);
  os << v;
  return os.str();
}

// Lift a finished selfmap run back to K and certify the reduction both ways.
PPFReport lift_report(const NonselfMapHandle& op, const EvalAnchor& anchor,
                      const Point& u0, FixedPointReport inner,
                      const IterationControl& control) {
  PPFReport report;
  report.status = inner.status;
  report.anchor = anchor;
  report.start = u0;
  if (inner.status == Status::converged) {
    const Point& x = *inner.solution;
    GridFunction phi = fspace::embed_constant(x, op.interval);
    const double scale = norm(x, control.norm);

    report.residual = ppf_fix_check(phi, op, anchor, control.norm);
    report.certificates.push_back(
        certify("ppf_fixed_point", 0, report.residual, control.tol, scale));

    const double selfmap_residual =
        metric_d(x, associated_selfmap(op)(phi.at(anchor)), control.norm);
    report.certificates.push_back(
        certify("selfmap_fixed_point", 0, selfmap_residual, control.tol, scale));

    double spread = 0.0;
    for (const Point& v : phi.values()) {
      spread = std::max(spread, metric_d(v, x, control.norm));
    }
    report.certificates.push_back(certify("constant_class", 0, spread, 0.0));

    report.point = x;
    report.solution = std::move(phi);
  } else {
    report.notes.push_back("selfmap iteration ended with status " +
                           to_string(inner.status));
  }
  report.inner = std::move(inner);
  return report;
}

}  // namespace

bool BLRPairReport::all_pass() const {
  for (const BLRRow& row : rows) {
    if (!row.pass || (row.same_start_pass && !*row.same_start_pass)) return false;
  }
  return ppfix::all_pass(certificates);
}

PPFReport constant_blr_solve(const NonselfMapHandle& op, const Point& u0,
                             const EvalAnchor& anchor,
                             const IterationControl& control) {
  const double k = require_k(op);
  fspace::require_anchor(op.interval, anchor);
  FixedPointReport inner = banach_solve(associated_selfmap(op), u0, k, control);
  return lift_report(op, anchor, u0, std::move(inner), control);
}

BLRPairReport blr_pair_bounds(const NonselfMapHandle& op, const Point& u0,
                              const Point& v0, const EvalAnchor& anchor,
                              std::size_t steps, Norm norm_kind) {
  const double k = require_k(op);
  fspace::require_anchor(op.interval, anchor);
  const Selfmap map = associated_selfmap(op);

  // steps + 2 points so that D(phi_n, phi_{n+1}) exists for every row.
  const OrbitTrace phi_orbit = picard_orbit(map, u0, steps + 1, norm_kind);
  const OrbitTrace xi_orbit = picard_orbit(map, v0, steps + 1, norm_kind);

  auto lift = [&op](const Point& u) { return fspace::embed_constant(u, op.interval); };
  std::vector<GridFunction> phi;
  std::vector<GridFunction> xi;
  for (std::size_t n = 0; n <= steps + 1; ++n) {
    phi.push_back(lift(phi_orbit.points[n]));
    xi.push_back(lift(xi_orbit.points[n]));
  }

  BLRPairReport report{phi[0], xi[0], phi_orbit.points, xi_orbit.points, k, {}, {}};

  const double phi_first = fspace::metric_D(phi[0], phi[1], norm_kind);
  const double xi_first = fspace::metric_D(xi[0], xi[1], norm_kind);
  const double start_gap = fspace::metric_D(phi[0], xi[0], norm_kind);
  const double bound = (phi_first + xi_first) / (1.0 - k) + start_gap;
  const bool same_start = u0 == v0;

  auto scale_at = [&](std::size_t n) {
    return std::max({norm(phi_orbit.points[n], norm_kind),
                     norm(xi_orbit.points[n], norm_kind),
                     norm(phi_orbit.points[n + 1], norm_kind),
                     norm(xi_orbit.points[n + 1], norm_kind)});
  };

  for (std::size_t n = 0; n <= steps; ++n) {
    BLRRow row;
    row.n = n;
    row.distance = fspace::metric_D(phi[n], xi[n], norm_kind);
    row.bound = bound;
    row.pass = certify("pair_distance_bound", n, row.distance, bound, scale_at(n)).pass;
    if (same_start) {
      row.same_start_bound = 2.0 * phi_first / (1.0 - k);
      row.same_start_pass =
          certify("same_start_bound", n, row.distance, *row.same_start_bound).pass;
    }
    report.rows.push_back(row);

    const double kn = std::pow(k, static_cast<double>(n));
    report.certificates.push_back(certify(
        "pair_contraction", n, row.distance, kn * start_gap, scale_at(n)));

    const double phi_step = fspace::metric_D(phi[n], phi[n + 1], norm_kind);
    const double xi_step = fspace::metric_D(xi[n], xi[n + 1], norm_kind);
    report.certificates.push_back(
        certify("phi_apriori_step", n, phi_step, kn * phi_first, scale_at(n)));
    report.certificates.push_back(
        certify("xi_apriori_step", n, xi_step, kn * xi_first, scale_at(n)));
    if (n + 2 <= steps + 1) {
      const double s = std::max(scale_at(n), scale_at(n + 1));
      report.certificates.push_back(certify(
          "phi_step_decay", n,
          fspace::metric_D(phi[n + 1], phi[n + 2], norm_kind), k * phi_step, s));
      report.certificates.push_back(certify(
          "xi_step_decay", n,
          fspace::metric_D(xi[n + 1], xi[n + 2], norm_kind), k * xi_step, s));
    }

    // phi_n nabla phi_{n+1}: the constant-class sequence is an iterative one.
    const auto nabla = [&](const char* name, const GridFunction& a,
                           const GridFunction& b) {
      const double lhs = metric_d(op(a), b.at(anchor), norm_kind);
      const bool related = fspace::nabla_related(a, b, op, anchor, norm_kind);
      report.certificates.push_back(Certificate{name, n, lhs, 0.0, related});
    };
    nabla("phi_nabla", phi[n], phi[n + 1]);
    nabla("xi_nabla", xi[n], xi[n + 1]);
  }
  return report;
}

PPFReport existential_blr_solve(const NonselfMapHandle& op,
                                const EvalAnchor& anchor,
                                const IterationControl& control,
                                bool aclosed_asserted) {
  if (!aclosed_asserted) {
    throw InvalidInput(
        "(b09) existential solve requires the caller to assert that the "
        "Razumikhin class is algebraically closed; use constant_blr_solve "
        "otherwise");
  }
  PPFReport report = constant_blr_solve(op, Point::zeros(op.dim), anchor, control);
  report.notes.push_back(
      "(b09) an algebraically closed Razumikhin class contains every difference "
      "phi - H[phi(c)], which has norm 0 at c, so every member is constant and "
      "the class coincides with K; the result is the constant-class solution");
  return report;
}

StartingLift k_starting_lift(const NonselfMapHandle& op, const AlphaMap& alpha,
                             const GridFunction& phi0, const EvalAnchor& anchor) {
  fspace::require_anchor(op.interval, anchor);
  CertificateList certs;

  const Point image = op(phi0);
  const double start_weight = alpha(phi0.at(anchor), image);
  certs.push_back(certify("alpha_start_function", 0, 1.0, start_weight));
  if (!certs.back().pass) {
    throw PreconditionError("(d04)",
                            "starting condition violated: alpha(phi0(c), "
                            "op(phi0)) = " + format_double(start_weight) + " < 1",
                            certs);
  }

  GridFunction lifted = fspace::embed_constant(image, op.interval);
  const double lifted_weight = alpha(lifted.at(anchor), op(lifted));
  certs.push_back(certify("alpha_start_lifted", 0, 1.0, lifted_weight));
  if (!certs.back().pass) {
    throw AdmissibilityViolation(
        "(d01)", 0,
        "lifted start H[op(phi0)] fails the (d05) starting condition: alpha = " +
            format_double(lifted_weight) + " < 1; operator is not alpha-admissible",
        certs);
  }
  return StartingLift{std::move(lifted), std::move(certs)};
}

PPFReport aks_solve(const NonselfMapHandle& op, const AlphaMap& alpha,
                    const AksStart& start, const EvalAnchor& anchor,
                    const IterationControl& control) {
  const double k = require_k(op);
  fspace::require_anchor(op.interval, anchor);

  CertificateList lift_certs;
  std::vector<std::string> notes;
  Point u0 = [&]() -> Point {
    if (const auto* p = std::get_if<Point>(&start)) return *p;
    const auto& phi0 = std::get<GridFunction>(start);
    if (fspace::is_constant(phi0, 0.0, control.norm)) return phi0[0];
    StartingLift lift = k_starting_lift(op, alpha, phi0, anchor);
    lift_certs = std::move(lift.certificates);
    notes.push_back("non-constant start lifted to H[op(phi0)]");
    return lift.lifted[0];
  }();

  FixedPointReport inner = [&] {
    try {
      return svv_solve(associated_selfmap(op), alpha, u0, k, control);
    } catch (const PreconditionError& e) {
      CertificateList certs = lift_certs;
      certs.insert(certs.end(), e.certificates().begin(), e.certificates().end());
      throw PreconditionError("(d05)", std::string("constant start: ") + e.what(),
                              std::move(certs));
    } catch (const AdmissibilityViolation& e) {
      CertificateList certs = lift_certs;
      certs.insert(certs.end(), e.certificates().begin(), e.certificates().end());
      throw AdmissibilityViolation("(d01)", e.step(), "associated selfmap: " +
                                                          std::string(e.what()),
                                   std::move(certs));
    }
  }();

  PPFReport report = lift_report(op, anchor, u0, std::move(inner), control);
  report.certificates.insert(report.certificates.begin(), lift_certs.begin(),
                             lift_certs.end());
  report.notes.insert(report.notes.begin(), notes.begin(), notes.end());
  if (report.solution) {
    const double weight = alpha(report.solution->at(anchor), op(*report.solution));
    report.certificates.push_back(certify("alpha_ppf_fixed", 0, 1.0, weight));
  }
  return report;
}

}  // namespace ppfix::ppf
