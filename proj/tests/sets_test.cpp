// Copyright 2026 The bregman-geometry Authors
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

#include <gtest/gtest.h>

#include <cmath>
#include <random>

#include "bregman/errors.hpp"
#include "bregman/sets.hpp"

namespace bregman {
namespace {

TEST(CompactSet, FactoriesValidateAgainstDomain) {
  const LegendreFunction ent = LegendreFunction::entropy(2);
  EXPECT_THROW(CompactSet::finite(ent, {Vector{1.0, 0.0}}), DomainError);
  EXPECT_THROW(CompactSet::finite(ent, {}), InvalidArgument);
  EXPECT_THROW(CompactSet::finite(ent, {Vector{1.0}}), DimensionError);
  EXPECT_THROW(CompactSet::interval(LegendreFunction::neglog(1), -1.0, 2.0), DomainError);
  EXPECT_THROW(CompactSet::interval(LegendreFunction::energy(1), 2.0, 2.0), InvalidArgument);
  EXPECT_THROW(CompactSet::interval(ent, 1.0, 2.0), DimensionError);
  EXPECT_THROW(CompactSet::box(ent, Vector{1.0, 2.0}, Vector{2.0, 2.0}), InvalidArgument);
  EXPECT_THROW(CompactSet::segment(ent, Vector{1.0, 2.0}, Vector{1.0, 2.0}), InvalidArgument);
  const LegendreFunction big = LegendreFunction::energy(kMaxBoxDim + 1);
  EXPECT_THROW(CompactSet::box(big, Vector(kMaxBoxDim + 1, 0.0), Vector(kMaxBoxDim + 1, 1.0)), InvalidArgument);
  EXPECT_THROW(CompactSet::finite(LegendreFunction::energy(1), {Vector{NAN}}), InvalidArgument);
}

TEST(CompactSet, FiniteSetsMergeNearDuplicates) {
  const LegendreFunction fn = LegendreFunction::energy(1);
  const CompactSet s = CompactSet::finite(fn, {Vector{1.0}, Vector{1.0 + 1e-14}, Vector{2.0}});
  EXPECT_EQ(s.get_if<FiniteSet>()->points.size(), 2u);
  EXPECT_FALSE(s.is_convex());
  EXPECT_TRUE(CompactSet::finite(fn, {Vector{1.0}, Vector{1.0}}).is_convex());
}

TEST(CompactSet, ValidateForAnotherFunction) {
  const CompactSet s = CompactSet::interval(LegendreFunction::energy(1), -1.0, 1.0);
  EXPECT_NO_THROW(s.validate_for(LegendreFunction::energy(1)));
  EXPECT_THROW(s.validate_for(LegendreFunction::entropy(1)), DomainError);
}

TEST(ExtremePoints, PerVariant) {
  const LegendreFunction f1 = LegendreFunction::energy(1);
  const LegendreFunction f3 = LegendreFunction::energy(3);
  EXPECT_EQ(extreme_points(CompactSet::interval(f1, 0.0, 1.0)).points.size(), 2u);
  const auto box = extreme_points(CompactSet::box(f3, Vector{0.0, 0.0, 0.0}, Vector{1.0, 2.0, 3.0})).points;
  ASSERT_EQ(box.size(), 8u);
  // bit j of the vertex index selects hi_j
  EXPECT_EQ(box[0], (Vector{0.0, 0.0, 0.0}));
  EXPECT_EQ(box[5], (Vector{1.0, 0.0, 3.0}));
  EXPECT_EQ(box[7], (Vector{1.0, 2.0, 3.0}));
  const auto seg = extreme_points(CompactSet::segment(f3, Vector{0.0, 0.0, 0.0}, Vector{1.0, 1.0, 1.0})).points;
  EXPECT_EQ(seg.size(), 2u);
}

TEST(DualImage, MapsThroughGradient) {
  const LegendreFunction fn = LegendreFunction::entropy(1);
  const CompactSet img = dual_image(fn, CompactSet::interval(fn, 1.0, std::exp(2.0)));
  const auto* iv = img.get_if<IntervalSet>();
  ASSERT_NE(iv, nullptr);
  EXPECT_DOUBLE_EQ(iv->a, 0.0);
  EXPECT_NEAR(iv->b, 2.0, 1e-15);

  // neglog gradient is increasing too: -1/x
  const LegendreFunction nl = LegendreFunction::neglog(2);
  const CompactSet box = dual_image(nl, CompactSet::box(nl, Vector{1.0, 2.0}, Vector{2.0, 4.0}));
  const auto* b = box.get_if<BoxSet>();
  ASSERT_NE(b, nullptr);
  EXPECT_EQ(b->lo, (Vector{-1.0, -0.5}));
  EXPECT_EQ(b->hi, (Vector{-0.5, -0.25}));
  EXPECT_NO_THROW(box.validate_for(nl.conjugate()));

  const LegendreFunction e2 = LegendreFunction::entropy(2);
  const CompactSet seg = dual_image(e2, CompactSet::segment(e2, Vector{1.0, 3.0}, Vector{3.0, 1.0}), 11);
  const auto* pts = seg.get_if<FiniteSet>();
  ASSERT_NE(pts, nullptr);
  EXPECT_EQ(pts->points.size(), 11u);
  EXPECT_NEAR(pts->points.front()[1], std::log(3.0), 1e-15);
}

TEST(HullMembership, TriangleBarycentricWeights) {
  const std::vector<Vector> tri = {Vector{0.0, 0.0}, Vector{4.0, 0.0}, Vector{0.0, 4.0}};
  const HullMembership in = convex_hull_membership(Vector{1.0, 1.0}, tri, 1e-12);
  EXPECT_TRUE(in.inside);
  EXPECT_NEAR(in.weights[0], 0.5, 1e-12);
  EXPECT_NEAR(in.weights[1], 0.25, 1e-12);
  EXPECT_NEAR(in.weights[2], 0.25, 1e-12);
  EXPECT_LE(in.residual, 1e-12);

  const HullMembership out = convex_hull_membership(Vector{3.0, 3.0}, tri, 1e-12);
  EXPECT_FALSE(out.inside);
  EXPECT_NEAR(out.margin, std::sqrt(2.0), 1e-12);
}

TEST(HullMembership, SegmentAndPointEdgeCases) {
  const std::vector<Vector> seg = {Vector{1.0, 3.0}, Vector{3.0, 1.0}};
  const HullMembership mid = convex_hull_membership(Vector{2.0, 2.0}, seg, 1e-12);
  EXPECT_TRUE(mid.inside);
  EXPECT_NEAR(mid.weights[0], 0.5, 1e-12);
  const std::vector<Vector> one = {Vector{5.0}};
  EXPECT_TRUE(convex_hull_membership(Vector{5.0}, one, 0.0).inside);
  EXPECT_NEAR(convex_hull_membership(Vector{7.0}, one, 0.0).margin, 2.0, 1e-15);
}

TEST(HullMembership, RandomPointsInsideSimplexHull) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> u(-1.0, 1.0);
  std::gamma_distribution<double> gam(1.0, 1.0);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<Vector> pts;
    for (int i = 0; i < 7; ++i) pts.push_back(Vector{u(rng), u(rng), u(rng)});
    Vector y(3);
    double total = 0.0;
    std::vector<double> w;
    for (int i = 0; i < 7; ++i) {
      w.push_back(gam(rng));
      total += w.back();
    }
    for (int i = 0; i < 7; ++i) y += (w[i] / total) * pts[i];
    const HullMembership h = convex_hull_membership(y, pts, 1e-10);
    EXPECT_TRUE(h.inside) << "trial " << trial << " residual " << h.residual;
    double sum = 0.0;
    for (double x : h.weights) {
      EXPECT_GE(x, -1e-14);
      sum += x;
    }
    EXPECT_NEAR(sum, 1.0, 1e-12);
  }
}

}  // namespace
}  // namespace bregman
