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

#include <gtest/gtest.h>

#include <cmath>

#include "ppfix/error.hpp"
#include "ppfix/fspace/razumikhin.hpp"
#include "support/oracles.hpp"

namespace ppfix::ppf {
namespace {

using fspace::embed_constant;
using fspace::make_anchor;

const Interval kGrid(0.0, 1.0, 101);

// op(phi) = s * (average of node values) + v, scalar valued.
NonselfMapHandle mean_op(double s, double v, const Interval& I = kGrid) {
  return NonselfMapHandle{[s, v](const GridFunction& phi) {
                            double sum = 0.0;
                            for (const Point& p : phi.values()) sum += p[0];
                            return Point{s * sum / static_cast<double>(phi.size()) + v};
                          },
                          s, I, 1};
}

NonselfMapHandle anchor_eval(const EvalAnchor& c, const Interval& I = kGrid) {
  return NonselfMapHandle{[c](const GridFunction& phi) { return phi.at(c); }, std::nullopt, I,
                          1};
}

NonselfMapHandle zero_op(const Interval& I = kGrid) {
  return NonselfMapHandle{[](const GridFunction&) { return Point{0.0}; }, 0.0, I, 1};
}

std::size_t count_named(const CertificateList& certs, const std::string& name) {
  std::size_t n = 0;
  for (const auto& c : certs) n += c.name == name;
  return n;
}

TEST(AssociatedSelfmapTest, Examples) {
  const EvalAnchor c = make_anchor(kGrid, 0.3);
  const Selfmap id = associated_selfmap(anchor_eval(c));
  EXPECT_EQ(id(Point{4.5}), Point{4.5});
  const Selfmap affine = associated_selfmap(mean_op(0.5, 1.0));
  for (double u : {0.0, 2.0, -3.0, 10.0}) EXPECT_DOUBLE_EQ(affine(Point{u})[0], u / 2.0 + 1.0);
  EXPECT_EQ(associated_selfmap(zero_op())(Point{9.0}), Point{0.0});
}

TEST(AssociatedSelfmapTest, ShapeChecks) {
  const NonselfMapHandle op = mean_op(0.5, 1.0);
  EXPECT_THROW(op(embed_constant(Point{1.0}, Interval(0.0, 2.0, 101))), InvalidInput);
  EXPECT_THROW(op(embed_constant(Point{1.0, 2.0}, kGrid)), InvalidInput);
}

TEST(PpfFixCheckTest, Examples) {
  const EvalAnchor c = make_anchor(kGrid, 1.0);
  const GridFunction wave =
      GridFunction::sample(kGrid, [](double t) { return Point{std::sin(7.0 * t)}; });
  EXPECT_EQ(ppf_fix_check(wave, anchor_eval(c), c), 0.0);
  EXPECT_EQ(ppf_fix_check(embed_constant(Point{2.0}, kGrid), mean_op(0.5, 1.0), c), 0.0);
  EXPECT_EQ(ppf_fix_check(embed_constant(Point{0.0}, kGrid), mean_op(0.5, 1.0),
                          make_anchor(kGrid, 0.0)),
            1.0);
}

TEST(ConstantBlrSolveTest, WeightedMeanOracle) {
  const EvalAnchor c = make_anchor(kGrid, 1.0);
  const PPFReport r = constant_blr_solve(mean_op(0.5, 1.0), Point{0.0}, c, {1e-10, 1000});
  ASSERT_EQ(r.status, Status::converged);
  EXPECT_NEAR((*r.point)[0], 1.0 / (1.0 - 0.5), 1e-9);
  EXPECT_LE(r.residual, 1e-10);
  EXPECT_EQ(*r.solution, embed_constant(*r.point, kGrid));
  EXPECT_TRUE(fspace::is_constant(*r.solution));
  EXPECT_TRUE(all_pass(r.certificates));
  EXPECT_TRUE(all_pass(r.inner.certificates));
  EXPECT_EQ(count_named(r.certificates, "ppf_fixed_point"), 1u);
  EXPECT_EQ(count_named(r.certificates, "selfmap_fixed_point"), 1u);
}

TEST(ConstantBlrSolveTest, ZeroOperatorInOneStep) {
  const PPFReport r = constant_blr_solve(zero_op(), Point{5.0}, make_anchor(kGrid, 0.5));
  ASSERT_EQ(r.status, Status::converged);
  EXPECT_EQ(*r.point, Point{0.0});
  EXPECT_EQ(r.inner.iterations, 0u);
}

TEST(ConstantBlrSolveTest, TwoStartsAgree) {
  const double tol = 1e-10;
  const EvalAnchor c = make_anchor(kGrid, 0.0);
  const PPFReport a = constant_blr_solve(mean_op(0.5, 1.0), Point{0.0}, c, {tol, 1000});
  const PPFReport b = constant_blr_solve(mean_op(0.5, 1.0), Point{100.0}, c, {tol, 1000});
  EXPECT_LE(fspace::metric_D(*a.solution, *b.solution), 10 * tol);
}

TEST(ConstantBlrSolveTest, NeedsDeclaredK) {
  const EvalAnchor c = make_anchor(kGrid, 0.0);
  EXPECT_THROW(constant_blr_solve(anchor_eval(c), Point{0.0}, c), InvalidInput);
  NonselfMapHandle bad = mean_op(0.5, 1.0);
  bad.k = 1.5;
  EXPECT_THROW(constant_blr_solve(bad, Point{0.0}, c), ContractionViolation);
  EXPECT_THROW(constant_blr_solve(mean_op(0.5, 1.0), Point{0.0}, EvalAnchor{0.123, 3}),
               InvalidInput);
}

TEST(ConstantBlrSolveTest, MaxIterHasNoSolution) {
  const PPFReport r =
      constant_blr_solve(mean_op(0.5, 1.0), Point{0.0}, make_anchor(kGrid, 1.0), {1e-10, 3});
  EXPECT_EQ(r.status, Status::max_iter);
  EXPECT_FALSE(r.solution.has_value());
}

TEST(BlrPairBoundsTest, DistinctStartsHandIterated) {
  const EvalAnchor c = make_anchor(kGrid, 1.0);
  const BLRPairReport r = blr_pair_bounds(mean_op(0.5, 1.0), Point{0.0}, Point{4.0}, c, 50);
  ASSERT_EQ(r.rows.size(), 51u);
  const double d_phi = 1.0;  // |0 - 1|
  const double d_xi = 1.0;   // |4 - 3|
  const double bound = (d_phi + d_xi) / 0.5 + 4.0;
  for (const BLRRow& row : r.rows) {
    const double x = oracle::scalar_affine_orbit(0.5, 1.0, 0.0, row.n);
    const double y = oracle::scalar_affine_orbit(0.5, 1.0, 4.0, row.n);
    EXPECT_NEAR(row.distance, std::fabs(x - y), 1e-12);
    EXPECT_DOUBLE_EQ(row.bound, bound);
    EXPECT_TRUE(row.pass);
    EXPECT_FALSE(row.same_start_bound.has_value());
  }
  EXPECT_EQ(r.rows[0].distance, 4.0);
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(count_named(r.certificates, "phi_nabla"), 51u);
}

TEST(BlrPairBoundsTest, SameStartIsExactlyZero) {
  const BLRPairReport r =
      blr_pair_bounds(mean_op(0.5, 1.0), Point{3.0}, Point{3.0}, make_anchor(kGrid, 0.0), 20);
  for (const BLRRow& row : r.rows) {
    EXPECT_EQ(row.distance, 0.0);
    ASSERT_TRUE(row.same_start_bound.has_value());
    EXPECT_DOUBLE_EQ(*row.same_start_bound, 2.0 * 0.5 / 0.5);
    EXPECT_TRUE(*row.same_start_pass);
  }
  EXPECT_TRUE(r.all_pass());
}

TEST(BlrPairBoundsTest, ZeroSteps) {
  const BLRPairReport r =
      blr_pair_bounds(mean_op(0.5, 1.0), Point{0.0}, Point{4.0}, make_anchor(kGrid, 0.0), 0);
  ASSERT_EQ(r.rows.size(), 1u);
  EXPECT_TRUE(r.rows[0].pass);
}

TEST(ExistentialBlrSolveTest, MatchesConstantSolve) {
  const EvalAnchor c = make_anchor(kGrid, 1.0);
  const PPFReport e = existential_blr_solve(mean_op(0.5, 1.0), c, {1e-10, 1000}, true);
  const PPFReport k = constant_blr_solve(mean_op(0.5, 1.0), Point{0.0}, c, {1e-10, 1000});
  EXPECT_EQ(e.point, k.point);
  EXPECT_EQ(e.inner.trace, k.inner.trace);
  EXPECT_EQ(e.certificates, k.certificates);
  EXPECT_EQ(e.notes.size(), k.notes.size() + 1);
  EXPECT_EQ(*existential_blr_solve(zero_op(), c, {}, true).point, Point{0.0});
  EXPECT_THROW(existential_blr_solve(mean_op(0.5, 1.0), c, {}, false), InvalidInput);
}

TEST(StartingLiftTest, Examples) {
  const Interval I(0.0, 1.0, 11);
  const EvalAnchor c = make_anchor(I, 1.0);
  const GridFunction ramp = GridFunction::sample(I, [](double t) { return Point{t}; });
  const NonselfMapHandle op = mean_op(0.5, 1.0, I);

  const StartingLift one = k_starting_lift(op, AlphaMap::constant_one(), ramp, c);
  EXPECT_EQ(one.lifted, embed_constant(op(ramp), I));

  const StartingLift cone = k_starting_lift(op, AlphaMap::cone_indicator(), ramp, c);
  EXPECT_DOUBLE_EQ(op(ramp)[0], 1.25);
  EXPECT_DOUBLE_EQ(cone.lifted[0][0], 1.25);
  EXPECT_DOUBLE_EQ(op(cone.lifted)[0], 1.625);
  EXPECT_TRUE(all_pass(cone.certificates));

  const GridFunction negative = GridFunction::sample(I, [](double t) { return Point{-t}; });
  try {
    k_starting_lift(op, AlphaMap::cone_indicator(), negative, c);
    FAIL() << "expected PreconditionError";
  } catch (const PreconditionError& e) {
    EXPECT_EQ(e.condition(), "(d04)");
  }
}

TEST(StartingLiftTest, LiftedStartFailing) {
  const Interval I(0.0, 1.0, 11);
  const EvalAnchor c = make_anchor(I, 1.0);
  // Maps constants into the negative half-line, so the lift leaves the cone.
  const NonselfMapHandle op{[](const GridFunction& phi) {
                              return phi[0][0] < 0.1 ? Point{1.0} : Point{-1.0};
                            },
                            0.5, I, 1};
  const GridFunction start = GridFunction::sample(I, [](double t) { return Point{t}; });
  try {
    k_starting_lift(op, AlphaMap::cone_indicator(), start, c);
    FAIL() << "expected AdmissibilityViolation";
  } catch (const AdmissibilityViolation& e) {
    EXPECT_EQ(e.condition(), "(d01)");
    EXPECT_EQ(e.certificates().size(), 2u);
  }
}

TEST(AksSolveTest, ConstantOneEqualsConstantBlr) {
  const EvalAnchor c = make_anchor(kGrid, 1.0);
  const PPFReport a = aks_solve(mean_op(0.5, 1.0), AlphaMap::constant_one(), Point{0.0}, c);
  const PPFReport k = constant_blr_solve(mean_op(0.5, 1.0), Point{0.0}, c);
  EXPECT_EQ(a.point, k.point);
  EXPECT_EQ(a.solution, k.solution);
  EXPECT_EQ(a.inner.iterations, k.inner.iterations);
  EXPECT_EQ(a.inner.trace, k.inner.trace);
  EXPECT_EQ(a.residual, k.residual);
}

TEST(AksSolveTest, ThirdMeanWithCone) {
  const PPFReport r = aks_solve(mean_op(1.0 / 3.0, 0.0), AlphaMap::cone_indicator(),
                                Point{1.0}, make_anchor(kGrid, 0.5));
  ASSERT_EQ(r.status, Status::converged);
  EXPECT_NEAR((*r.point)[0], 0.0, 1e-9);
  EXPECT_EQ(count_named(r.inner.certificates, "alpha_chain"), r.inner.iterations + 1);
  EXPECT_TRUE(all_pass(r.inner.certificates));
  EXPECT_TRUE(all_pass(r.certificates));
}

TEST(AksSolveTest, InnerReportMatchesDirectSvv) {
  const EvalAnchor c = make_anchor(kGrid, 0.5);
  const NonselfMapHandle op = mean_op(1.0 / 3.0, 0.0);
  const PPFReport r = aks_solve(op, AlphaMap::cone_indicator(), Point{1.0}, c);
  const FixedPointReport direct =
      svv_solve(associated_selfmap(op), AlphaMap::cone_indicator(), Point{1.0}, 1.0 / 3.0);
  EXPECT_EQ(r.inner.trace, direct.trace);
  EXPECT_EQ(r.inner.certificates, direct.certificates);
  EXPECT_EQ(r.inner.solution, direct.solution);
}

TEST(AksSolveTest, NonConstantStartIsLifted) {
  const double tol = 1e-10;
  const EvalAnchor c = make_anchor(kGrid, 1.0);
  const GridFunction ramp = GridFunction::sample(kGrid, [](double t) { return Point{t}; });
  const NonselfMapHandle op = mean_op(0.5, 1.0);
  const PPFReport lifted = aks_solve(op, AlphaMap::cone_indicator(), ramp, c, {tol, 1000});
  const PPFReport flat = constant_blr_solve(op, Point{0.0}, c, {tol, 1000});
  ASSERT_EQ(lifted.status, Status::converged);
  EXPECT_EQ(*lifted.start, op(ramp));
  EXPECT_LE(fspace::metric_D(*lifted.solution, *flat.solution), 10 * tol);
  EXPECT_EQ(count_named(lifted.certificates, "alpha_start_lifted"), 1u);
}

TEST(AksSolveTest, NegativeStartsFail) {
  const EvalAnchor c = make_anchor(kGrid, 0.5);
  EXPECT_THROW(aks_solve(mean_op(1.0 / 3.0, 0.0), AlphaMap::cone_indicator(), Point{-1.0}, c),
               PreconditionError);
}

TEST(PpfProperty, ReductionBothWaysAndUniqueness) {
  oracle::Gen gen(71);
  for (int trial = 0; trial < 100; ++trial) {
    const Interval I = gen.interval();
    const EvalAnchor c = make_anchor(I, I.node(gen.index(0, I.node_count() - 1)));
    const double s = gen.uniform(0.0, 0.9);
    const double v = gen.uniform(-5.0, 5.0);
    const NonselfMapHandle op = mean_op(s, v, I);
    const double tol = 1e-10;
    const PPFReport a = constant_blr_solve(op, Point{gen.uniform(-50, 50)}, c, {tol, 5000});
    const PPFReport b = constant_blr_solve(op, Point{gen.uniform(-50, 50)}, c, {tol, 5000});
    ASSERT_EQ(a.status, Status::converged);
    const double scale = std::max(1.0, std::fabs(v / (1.0 - s)));
    EXPECT_LE(ppf_fix_check(*a.solution, op, c), 10 * tol * scale);
    EXPECT_LE(metric_d(*a.point, associated_selfmap(op)(*a.point)), 10 * tol * scale);
    EXPECT_LE(fspace::metric_D(*a.solution, *b.solution), 10 * tol * scale);
    EXPECT_NEAR((*a.point)[0], v / (1.0 - s), 10 * tol * scale);
    EXPECT_TRUE(fspace::razumikhin_member(*a.solution, c).is_member);
  }
}

TEST(PpfProperty, PairContractionInK) {
  oracle::Gen gen(72);
  for (int trial = 0; trial < 100; ++trial) {
    const Interval I = gen.interval();
    const EvalAnchor c = make_anchor(I, I.node(gen.index(0, I.node_count() - 1)));
    const double s = gen.uniform(0.0, 0.95);
    const NonselfMapHandle op = mean_op(s, gen.uniform(-5.0, 5.0), I);
    const BLRPairReport r = blr_pair_bounds(op, Point{gen.uniform(-20, 20)},
                                            Point{gen.uniform(-20, 20)}, c, 30);
    EXPECT_TRUE(r.all_pass());
    const double d0 = r.rows[0].distance;
    for (const BLRRow& row : r.rows) {
      EXPECT_LE(row.distance, std::pow(s, row.n) * d0 + 1e-12 * (1.0 + d0) * 100);
    }
  }
}

}  // namespace
}  // namespace ppfix::ppf
