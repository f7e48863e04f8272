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

#include "bregman/probes.hpp"

namespace bregman::probe {
namespace {

Grid line(double lo, double hi, std::size_t n) { return {Vector{lo}, Vector{hi}, n}; }

const MapTally& tally(const ProbeReport& r, MapKind k) {
  for (const auto& t : r.tallies) {
    if (t.map == k) return t;
  }
  throw std::logic_error("map not scanned");
}

bool has_witness_near(const ProbeReport& r, const Vector& p, double tol) {
  for (const auto& w : r.witnesses) {
    if (max_abs_diff(w.point, p) <= tol) return true;
  }
  return false;
}

void expect_consistent(const LegendreFunction& fn, const ProbeReport& r) {
  for (const auto& t : r.tallies) EXPECT_EQ(t.single_valued + t.tied, r.total);
  EXPECT_LE(r.witnesses.size(), 8u);
  for (const auto& w : r.witnesses) EXPECT_TRUE(reverify(fn, w, r.tie_tol));
}

TEST(Grid, EnumeratesLastAxisFastest) {
  const Grid g{Vector{0.0, 10.0}, Vector{1.0, 12.0}, 3};
  EXPECT_EQ(g.size(), 9u);
  EXPECT_EQ(g.point(0), (Vector{0.0, 10.0}));
  EXPECT_EQ(g.point(1), (Vector{0.0, 11.0}));
  EXPECT_EQ(g.point(3), (Vector{0.5, 10.0}));
  EXPECT_EQ(g.point(8), (Vector{1.0, 12.0}));
}

TEST(ChebyshevProbe, EuclideanBisector) {
  const LegendreFunction fn = LegendreFunction::energy(1);
  const CompactSet c = CompactSet::finite(fn, {Vector{0.0}, Vector{2.0}});
  const ProbeReport r = chebyshev_probe(fn, c, line(-1.0, 3.0, 40));
  expect_consistent(fn, r);
  ASSERT_FALSE(r.witnesses.empty());
  EXPECT_TRUE(has_witness_near(r, Vector{1.0}, 1e-10));
}

TEST(ChebyshevProbe, EntropyBisectorIsNotTheMidpoint) {
  const LegendreFunction fn = LegendreFunction::entropy(1);
  const CompactSet c = CompactSet::finite(fn, {Vector{1.0}, Vector{4.0}});
  const ProbeReport r = chebyshev_probe(fn, c, line(0.5, 5.0, 64));
  expect_consistent(fn, r);
  const double y = std::exp((4.0 * std::log(4.0) - 3.0) / 3.0);
  EXPECT_TRUE(has_witness_near(r, Vector{y}, 1e-9));
}

TEST(ChebyshevProbe, SingletonHasNoTies) {
  const LegendreFunction fn = LegendreFunction::energy(2);
  const CompactSet c = CompactSet::finite(fn, {Vector{1.0, 1.0}});
  const ProbeReport r = chebyshev_probe(fn, c, {Vector{-1.0, -1.0}, Vector{2.0, 2.0}, 11});
  EXPECT_EQ(r.total, 121u);
  EXPECT_TRUE(r.witnesses.empty());
  EXPECT_EQ(tally(r, MapKind::LeftNearest).tied, 0u);
}

TEST(KleeProbe, FindsLeftFarthestTies) {
  {
    const LegendreFunction fn = LegendreFunction::energy(1);
    const CompactSet c = CompactSet::finite(fn, {Vector{0.0}, Vector{2.0}});
    const ProbeReport r = klee_probe(fn, c, line(-1.0, 3.0, 40));
    expect_consistent(fn, r);
    EXPECT_TRUE(has_witness_near(r, Vector{1.0}, 1e-9));
  }
  {
    const LegendreFunction fn = LegendreFunction::neglog(1);
    const CompactSet c = CompactSet::interval(fn, 1.0, 2.0);
    const ProbeReport r = klee_probe(fn, c, line(0.5, 3.0, 40));
    expect_consistent(fn, r);
    EXPECT_TRUE(has_witness_near(r, Vector{1.0 / std::log(2.0)}, 1e-8));
    EXPECT_NEAR(r.metrics.at("left_radius"), std::log(2.0) - std::log(std::log(2.0)) - 1.0, 1e-9);
  }
  {
    const LegendreFunction fn = LegendreFunction::entropy(2);
    const CompactSet c = CompactSet::segment(fn, Vector{1.0, 3.0}, Vector{3.0, 1.0});
    const ProbeReport r = klee_probe(fn, c, {Vector{1.0, 1.0}, Vector{3.0, 3.0}, 9});
    expect_consistent(fn, r);
    EXPECT_TRUE(has_witness_near(r, Vector{2.0, 2.0}, 1e-7));
  }
}

TEST(CuriousSetProbe, NoRobustTiesAndNonconvexCurve) {
  const Grid g{Vector{0.5, 0.5}, Vector{4.0, 9.0}, 41};
  const ProbeReport r = curious_set_probe(2001, g);
  EXPECT_EQ(r.metrics.at("robust_ties"), 0.0);
  EXPECT_GT(r.metrics.at("nonconvexity_gap"), 0.1);
  EXPECT_EQ(r.metrics.at("curve_points"), 2001.0);
  const ProbeReport trivial = curious_set_probe(1, g);
  EXPECT_EQ(tally(trivial, MapKind::RightNearest).tied, 0u);
}

TEST(Scan, TieFractionsFollowSetShape) {
  const LegendreFunction fn = LegendreFunction::energy(1);
  const ProbeReport iv = single_valuedness_scan(fn, CompactSet::interval(fn, 0.0, 1.0), line(-2.0, 3.0, 101));
  expect_consistent(fn, iv);
  EXPECT_EQ(iv.tallies.size(), 4u);
  EXPECT_EQ(tally(iv, MapKind::LeftNearest).tie_fraction(), 0.0);
  EXPECT_EQ(tally(iv, MapKind::RightNearest).tie_fraction(), 0.0);

  const ProbeReport one = single_valuedness_scan(fn, CompactSet::finite(fn, {Vector{0.5}}), line(-2.0, 3.0, 101));
  for (const auto& t : one.tallies) EXPECT_EQ(t.tied, 0u);

  const LegendreFunction ent = LegendreFunction::entropy(1);
  const CompactSet three = CompactSet::finite(ent, {Vector{1.0}, Vector{2.0}, Vector{5.0}});
  const ProbeReport r = single_valuedness_scan(ent, three, line(0.3, 6.0, 1001));
  expect_consistent(ent, r);
  for (const auto& t : r.tallies) EXPECT_LE(t.tie_fraction(), 1e-2);
}

TEST(Scan, DeterministicAcrossThreadCounts) {
  const LegendreFunction fn = LegendreFunction::entropy(2);
  const CompactSet c = CompactSet::finite(fn, {Vector{1.0, 1.0}, Vector{3.0, 1.0}, Vector{1.0, 3.0}});
  const Grid g{Vector{0.5, 0.5}, Vector{4.0, 4.0}, 31};
  ProbeOptions one;
  one.jobs = 1;
  one.keep_rows = true;
  ProbeOptions four = one;
  four.jobs = 4;
  const ProbeReport a = single_valuedness_scan(fn, c, g, one);
  const ProbeReport b = single_valuedness_scan(fn, c, g, four);
  ASSERT_EQ(a.rows.size(), b.rows.size());
  for (std::size_t i = 0; i < a.rows.size(); ++i) {
    EXPECT_EQ(a.rows[i].value, b.rows[i].value);
    EXPECT_EQ(a.rows[i].tie, b.rows[i].tie);
  }
  ASSERT_EQ(a.witnesses.size(), b.witnesses.size());
  for (std::size_t i = 0; i < a.witnesses.size(); ++i) EXPECT_EQ(a.witnesses[i].point, b.witnesses[i].point);
  for (std::size_t i = 0; i < a.tallies.size(); ++i) EXPECT_EQ(a.tallies[i].tied, b.tallies[i].tied);
}

}  // namespace
}  // namespace bregman::probe
