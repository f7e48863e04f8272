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

#include "bregman/distance.hpp"
#include "bregman/errors.hpp"
#include "bregman/maps.hpp"

namespace bregman {
namespace {

constexpr MapKind kMaps[] = {MapKind::LeftNearest, MapKind::RightNearest, MapKind::LeftFarthest,
                             MapKind::RightFarthest};

bool is_left(MapKind k) { return k == MapKind::LeftNearest || k == MapKind::LeftFarthest; }
bool is_far(MapKind k) { return k == MapKind::LeftFarthest || k == MapKind::RightFarthest; }

TEST(MapKindNames, RoundTrip) {
  for (MapKind k : kMaps) EXPECT_EQ(map_kind_from_name(map_kind_name(k)), k);
  EXPECT_FALSE(map_kind_from_name("nearest").has_value());
}

TEST(Maps, EuclideanBisectorIsATie) {
  const LegendreFunction fn = LegendreFunction::energy(1);
  const CompactSet c = CompactSet::finite(fn, {Vector{0.0}, Vector{2.0}});
  const MapResult tie = left_nearest(fn, c, Vector{1.0});
  ASSERT_TRUE(tie.tied());
  EXPECT_EQ(tie.attainers[0], Vector{0.0});
  EXPECT_EQ(tie.attainers[1], Vector{2.0});
  EXPECT_DOUBLE_EQ(tie.value, 0.5);
  const MapResult one = left_nearest(fn, c, Vector{0.3});
  ASSERT_FALSE(one.tied());
  EXPECT_EQ(one.attainers[0], Vector{0.0});
  EXPECT_TRUE(left_farthest(fn, c, Vector{1.0}).tied());
}

TEST(Maps, IntervalNearestClampsAndFarthestPicksEndpoints) {
  const LegendreFunction fn = LegendreFunction::entropy(1);
  const CompactSet c = CompactSet::interval(fn, 1.0, 2.0);
  const MapResult ln = left_nearest(fn, c, Vector{3.0});
  EXPECT_EQ(ln.attainers, std::vector<Vector>{Vector{2.0}});
  EXPECT_DOUBLE_EQ(ln.value, distance(fn, Vector{2.0}, Vector{3.0}));
  const MapResult rn = right_nearest(fn, c, Vector{0.5});
  ASSERT_EQ(rn.attainers.size(), 1u);
  EXPECT_NEAR(rn.attainers[0][0], 1.0, 1e-14);
  EXPECT_EQ(left_nearest(fn, c, Vector{1.5}).value, 0.0);
  EXPECT_EQ(left_farthest(fn, c, Vector{1.1}).attainers, std::vector<Vector>{Vector{2.0}});
  EXPECT_EQ(right_farthest(fn, c, Vector{1.9}).attainers, std::vector<Vector>{Vector{1.0}});
}

TEST(Maps, BoxNearestIsCoordinatewiseClamp) {
  const LegendreFunction fn = LegendreFunction::neglog(3);
  const CompactSet c = CompactSet::box(fn, Vector{1.0, 1.0, 1.0}, Vector{2.0, 3.0, 4.0});
  const MapResult r = left_nearest(fn, c, Vector{0.5, 2.0, 9.0});
  EXPECT_EQ(r.attainers, std::vector<Vector>{(Vector{1.0, 2.0, 4.0})});
}

TEST(Maps, SegmentFarthestRule) {
  // D(., y) over conv{(1,a), (a,1)}: c0 below the diagonal, c1 above, both on it
  for (const LegendreFunction& fn :
       {LegendreFunction::energy(2), LegendreFunction::entropy(2), LegendreFunction::neglog(2)}) {
    const Vector c0{1.0, 4.0};
    const Vector c1{4.0, 1.0};
    const CompactSet seg = CompactSet::segment(fn, c0, c1);
    EXPECT_EQ(left_farthest(fn, seg, Vector{3.0, 2.0}).attainers, std::vector<Vector>{c0});
    EXPECT_EQ(left_farthest(fn, seg, Vector{2.0, 3.0}).attainers, std::vector<Vector>{c1});
    EXPECT_EQ(left_farthest(fn, seg, Vector{2.5, 2.5}).attainers, (std::vector<Vector>{c0, c1}));
  }
}

TEST(Maps, SegmentNearestInteriorPoint) {
  const LegendreFunction fn = LegendreFunction::energy(2);
  const CompactSet seg = CompactSet::segment(fn, Vector{0.0, 0.0}, Vector{2.0, 0.0});
  const MapResult r = left_nearest(fn, seg, Vector{1.0, 1.0});
  EXPECT_NEAR(r.attainers[0][0], 1.0, 1e-9);
  EXPECT_NEAR(r.value, 0.5, 1e-15);
  // the right maps refine a sampled curve by golden section: the argument is
  // only located to about sqrt(eps)
  const MapResult rr = right_nearest(fn, seg, Vector{1.0, 1.0});
  EXPECT_NEAR(rr.attainers[0][0], 1.0, 1e-7);
  EXPECT_NEAR(rr.value, 0.5, 1e-15);
}

TEST(Maps, QueryOutsideDomainThrows) {
  const LegendreFunction fn = LegendreFunction::entropy(1);
  const CompactSet c = CompactSet::interval(fn, 1.0, 2.0);
  EXPECT_THROW(left_nearest(fn, c, Vector{-1.0}), DomainError);
  EXPECT_THROW(right_farthest(fn, c, Vector{0.0}), DomainError);
  EXPECT_THROW(left_nearest(fn, c, Vector{1.0, 1.0}), DimensionError);
}

// Every map against exhaustive search over a 2001-point discretization of
// the set, using the library distance.
class MapsBruteForce : public ::testing::TestWithParam<Kind> {};

TEST_P(MapsBruteForce, AllVariantsAgree) {
  const Kind k = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(k) + 17);
  const double lo = k == Kind::HalvedEnergy ? -2.0 : 1.0;
  const double hi = k == Kind::HalvedEnergy ? 2.0 : 3.0;
  std::uniform_real_distribution<double> u(lo, hi);
  std::uniform_real_distribution<double> q(k == Kind::HalvedEnergy ? -3.0 : 0.5, 4.0);
  const int n = 2001;
  for (int trial = 0; trial < 12; ++trial) {
    const LegendreFunction f1(k, 1);
    const LegendreFunction f2(k, 2);
    double a = u(rng);
    double b = u(rng);
    if (a > b) std::swap(a, b);
    if (b - a < 0.1) b = a + 0.1;
    const Vector c0{u(rng), u(rng)};
    const Vector c1{u(rng), u(rng)};
    std::vector<Vector> ipts;
    std::vector<Vector> spts;
    for (int s = 0; s < n; ++s) {
      ipts.push_back(Vector{a + (b - a) * s / (n - 1.0)});
      spts.push_back(lerp(c0, c1, s / (n - 1.0)));
    }
    const struct {
      const LegendreFunction* fn;
      CompactSet set;
      const std::vector<Vector>* pts;
    } cases[] = {{&f1, CompactSet::interval(f1, a, b), &ipts}, {&f2, CompactSet::segment(f2, c0, c1), &spts}};
    for (const auto& c : cases) {
      const Vector z = c.fn->dim() == 1 ? Vector{q(rng)} : Vector{q(rng), q(rng)};
      for (MapKind m : kMaps) {
        double brute = is_far(m) ? -INFINITY : INFINITY;
        for (const Vector& p : *c.pts) {
          const double d = is_left(m) ? distance(*c.fn, p, z) : distance(*c.fn, z, p);
          brute = is_far(m) ? std::max(brute, d) : std::min(brute, d);
        }
        const MapResult r = compute_map(m, *c.fn, c.set, z);
        EXPECT_NEAR(r.value, brute, 1e-6) << map_kind_name(m) << " trial " << trial;
        // the reported attainers realize the reported value
        for (const Vector& p : r.attainers) {
          const double d = is_left(m) ? distance(*c.fn, p, z) : distance(*c.fn, z, p);
          EXPECT_NEAR(d, r.value, r.tie_tol + 1e-12);
        }
      }
    }
  }
}

TEST_P(MapsBruteForce, DualTransportAgrees) {
  const Kind k = GetParam();
  std::mt19937_64 rng(static_cast<std::uint64_t>(k) + 29);
  const double lo = k == Kind::HalvedEnergy ? -2.0 : 1.0;
  std::uniform_real_distribution<double> u(lo, lo + 2.0);
  const LegendreFunction f2(k, 2);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Vector> pts;
    for (int i = 0; i < 6; ++i) pts.push_back(Vector{u(rng), u(rng)});
    const CompactSet sets[] = {CompactSet::finite(f2, pts),
                               CompactSet::box(f2, Vector{lo, lo}, Vector{lo + 1.0, lo + 1.5}),
                               CompactSet::segment(f2, pts[0], pts[1])};
    const Vector z{u(rng), u(rng)};
    for (const CompactSet& s : sets) {
      // a segment's dual image is its sampled curve, so the transported value
      // carries the sampling error
      const double tol = s.kind() == SetKind::Segment ? 1e-6 : 1e-9;
      for (MapKind m : kMaps) EXPECT_LE(duality_transport_check(f2, s, z, m), tol) << map_kind_name(m);
      EXPECT_NEAR(right_nearest(f2, s, z).value, right_nearest_direct(f2, s, z).value, 1e-10);
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Catalog, MapsBruteForce,
                         ::testing::Values(Kind::HalvedEnergy, Kind::NegativeEntropy, Kind::NegativeLog),
                         [](const auto& info) { return std::string(kind_name(info.param)); });

}  // namespace
}  // namespace bregman
