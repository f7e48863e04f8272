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

#include "bregman/maps.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>

#include "bregman/distance.hpp"
#include "bregman/distance_table.hpp"
#include "bregman/errors.hpp"

namespace bregman {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDistinctTol = 1e-9;
constexpr int kBisectCap = 200;
constexpr double kParamTol = 1e-12;

struct Candidate {
  Vector point;
  double value;
};

MapResult select(std::vector<Candidate> cands, bool farthest, double tie_tol) {
  double best = farthest ? -kInf : kInf;
  for (const auto& c : cands) best = farthest ? std::max(best, c.value) : std::min(best, c.value);
  MapResult r{best, {}, tie_tol};
  for (auto& c : cands) {
    if (std::abs(c.value - best) > tie_tol) continue;
    const bool dup = std::any_of(r.attainers.begin(), r.attainers.end(), [&](const Vector& p) {
      return max_abs_diff(p, c.point) <= kDistinctTol;
    });
    if (!dup) r.attainers.push_back(std::move(c.point));
  }
  std::sort(r.attainers.begin(), r.attainers.end(), lex_less);
  return r;
}

Vector clamp_to(const Vector& v, const Vector& lo, const Vector& hi) {
  Vector out(v.dim());
  for (std::size_t j = 0; j < v.dim(); ++j) out[j] = std::clamp(v[j], lo[j], hi[j]);
  return out;
}

// Minimizer over [0, 1] of a convex function given its nondecreasing
// derivative: bisection on the sign of the slope.
double convex_argmin(const std::function<double(double)>& slope) {
  if (slope(0.0) >= 0.0) return 0.0;
  if (slope(1.0) <= 0.0) return 1.0;
  double lo = 0.0;
  double hi = 1.0;
  for (int it = 0; it < kBisectCap && hi - lo > 0.0; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    (slope(mid) < 0.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

// Golden-section search for a local extremum of h on [lo, hi].
double golden(const std::function<double(double)>& h, double lo, double hi, bool maximize) {
  const double inv_phi = (std::sqrt(5.0) - 1.0) / 2.0;
  auto better = [&](double a, double b) { return maximize ? a >= b : a <= b; };
  double x1 = hi - inv_phi * (hi - lo);
  double x2 = lo + inv_phi * (hi - lo);
  double f1 = h(x1);
  double f2 = h(x2);
  for (int it = 0; it < 200 && hi - lo > kParamTol; ++it) {
    if (better(f1, f2)) {
      hi = x2;
      x2 = x1;
      f2 = f1;
      x1 = hi - inv_phi * (hi - lo);
      f1 = h(x1);
    } else {
      lo = x1;
      x1 = x2;
      f1 = f2;
      x2 = lo + inv_phi * (hi - lo);
      f2 = h(x2);
    }
  }
  return 0.5 * (lo + hi);
}

// Global extremum of h(t), t in [0, 1]: sample, keep the competitive local
// extrema, refine each by golden-section search inside its neighbouring cells.
std::vector<std::pair<double, double>> sampled_extrema(const std::function<double(double)>& h,
                                                       std::size_t samples, bool maximize) {
  samples = std::max<std::size_t>(samples, 3);
  std::vector<double> t(samples);
  std::vector<double> v(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    t[k] = static_cast<double>(k) / static_cast<double>(samples - 1);
    v[k] = h(t[k]);
  }
  auto better = [&](double a, double b) { return maximize ? a > b : a < b; };
  double best = v[0];
  for (double x : v) best = better(x, best) ? x : best;
  const double keep_tol = 1e-6 * (1.0 + std::abs(best));

  std::vector<std::pair<double, double>> out;
  out.emplace_back(0.0, v.front());
  out.emplace_back(1.0, v.back());
  for (std::size_t k = 0; k < samples; ++k) {
    const bool left_ok = k == 0 || !better(v[k - 1], v[k]);
    const bool right_ok = k + 1 == samples || !better(v[k + 1], v[k]);
    if (!left_ok || !right_ok || std::abs(v[k] - best) > keep_tol) continue;
    const double lo = k == 0 ? 0.0 : t[k - 1];
    const double hi = k + 1 == samples ? 1.0 : t[k + 1];
    const double ts = golden(h, lo, hi, maximize);
    out.emplace_back(ts, h(ts));
    out.emplace_back(t[k], v[k]);
  }
  return out;
}

MapResult segment_extremum(const SegmentSet& s, const std::function<double(double)>& h,
                           std::size_t samples, bool maximize, double tie_tol) {
  std::vector<Candidate> cands;
  for (const auto& [t, val] : sampled_extrema(h, samples, maximize)) {
    cands.push_back({lerp(s.c0, s.c1, t), val});
  }
  return select(std::move(cands), maximize, tie_tol);
}

MapResult over_points(const LegendreFunction& fn, const std::vector<Vector>& pts, const Vector& z,
                      bool left_arg, bool farthest, double tie_tol) {
  std::vector<Candidate> cands;
  cands.reserve(pts.size());
  for (const auto& p : pts) {
    cands.push_back({p, left_arg ? distance(fn, p, z) : distance(fn, z, p)});
  }
  return select(std::move(cands), farthest, tie_tol);
}

MapResult map_back(const LegendreFunction& conj, MapResult r) {
  for (auto& p : r.attainers) p = conj.gradient(p);
  std::sort(r.attainers.begin(), r.attainers.end(), lex_less);
  return r;
}

void check_query(const LegendreFunction& fn, const CompactSet& set, const Vector& z) {
  require_dim(z, fn.dim());
  require_dim(z, set.dim());
  fn.require_interior(z);
}

}  // namespace

std::string_view map_kind_name(MapKind k) {
  switch (k) {
    case MapKind::LeftNearest: return "left_nearest";
    case MapKind::RightNearest: return "right_nearest";
    case MapKind::LeftFarthest: return "left_farthest";
    case MapKind::RightFarthest: return "right_farthest";
  }
  return "unknown";
}

std::optional<MapKind> map_kind_from_name(std::string_view name) {
  for (MapKind k : {MapKind::LeftNearest, MapKind::RightNearest, MapKind::LeftFarthest,
                    MapKind::RightFarthest}) {
    if (map_kind_name(k) == name) return k;
  }
  return std::nullopt;
}

MapResult left_nearest(const LegendreFunction& fn, const CompactSet& set, const Vector& y,
                       const MapOptions& opts) {
  check_query(fn, set, y);
  if (const auto* f = set.get_if<FiniteSet>()) {
    const DistanceTable table(fn, f->points);
    return table.to_map_result(table.left_min(y, opts.tie_tol), opts.tie_tol);
  }
  if (const auto* iv = set.get_if<IntervalSet>()) {
    const Vector p{std::clamp(y[0], iv->a, iv->b)};
    return {distance(fn, p, y), {p}, opts.tie_tol};
  }
  if (const auto* box = set.get_if<BoxSet>()) {
    const Vector p = clamp_to(y, box->lo, box->hi);
    return {distance(fn, p, y), {p}, opts.tie_tol};
  }
  const auto& seg = std::get<SegmentSet>(set.variant());
  // d/dt D(c(t), y) = <grad f(c(t)) - grad f(y), c1 - c0>, nondecreasing
  const Vector dir = seg.c1 - seg.c0;
  const Vector gy = fn.gradient(y);
  auto slope = [&](double t) { return dot(fn.gradient(lerp(seg.c0, seg.c1, t)) - gy, dir); };
  const Vector p = lerp(seg.c0, seg.c1, convex_argmin(slope));
  return {distance(fn, p, y), {p}, opts.tie_tol};
}

MapResult right_nearest(const LegendreFunction& fn, const CompactSet& set, const Vector& x,
                        const MapOptions& opts) {
  check_query(fn, set, x);
  const LegendreFunction conj = fn.conjugate();
  const Vector xs = fn.gradient(x);
  if (const auto* seg = set.get_if<SegmentSet>()) {
    // D_f(x, c) = D_{f*}(grad f(c), grad f(x)) along the image curve
    auto h = [&](double t) { return distance(conj, fn.gradient(lerp(seg->c0, seg->c1, t)), xs); };
    return segment_extremum(*seg, h, opts.segment_samples, false, opts.tie_tol);
  }
  const CompactSet dual = dual_image(fn, set, opts.segment_samples);
  return map_back(conj, left_nearest(conj, dual, xs, opts));
}

MapResult left_farthest(const LegendreFunction& fn, const CompactSet& set, const Vector& y,
                        const MapOptions& opts) {
  check_query(fn, set, y);
  if (const auto* f = set.get_if<FiniteSet>()) {
    const DistanceTable table(fn, f->points);
    return table.to_map_result(table.left_max(y, opts.tie_tol), opts.tie_tol);
  }
  return over_points(fn, extreme_points(set).points, y, true, true, opts.tie_tol);
}

MapResult right_farthest(const LegendreFunction& fn, const CompactSet& set, const Vector& x,
                         const MapOptions& opts) {
  check_query(fn, set, x);
  if (const auto* f = set.get_if<FiniteSet>()) {
    const DistanceTable table(fn, f->points);
    return table.to_map_result(table.right_max(x, opts.tie_tol), opts.tie_tol);
  }
  if (const auto* seg = set.get_if<SegmentSet>()) {
    const LegendreFunction conj = fn.conjugate();
    const Vector xs = fn.gradient(x);
    auto h = [&](double t) { return distance(conj, fn.gradient(lerp(seg->c0, seg->c1, t)), xs); };
    return segment_extremum(*seg, h, opts.segment_samples, true, opts.tie_tol);
  }
  // D(x, .) decreases then increases along each coordinate: endpoints / vertices
  return over_points(fn, extreme_points(set).points, x, false, true, opts.tie_tol);
}

MapResult compute_map(MapKind kind, const LegendreFunction& fn, const CompactSet& set,
                      const Vector& z, const MapOptions& opts) {
  switch (kind) {
    case MapKind::LeftNearest: return left_nearest(fn, set, z, opts);
    case MapKind::RightNearest: return right_nearest(fn, set, z, opts);
    case MapKind::LeftFarthest: return left_farthest(fn, set, z, opts);
    case MapKind::RightFarthest: return right_farthest(fn, set, z, opts);
  }
  throw InvalidArgument("unknown map kind");
}

MapResult right_nearest_direct(const LegendreFunction& fn, const CompactSet& set, const Vector& x,
                               const MapOptions& opts) {
  check_query(fn, set, x);
  if (const auto* f = set.get_if<FiniteSet>()) {
    return over_points(fn, f->points, x, false, false, opts.tie_tol);
  }
  if (const auto* iv = set.get_if<IntervalSet>()) {
    const Vector p{std::clamp(x[0], iv->a, iv->b)};
    return {distance(fn, x, p), {p}, opts.tie_tol};
  }
  if (const auto* box = set.get_if<BoxSet>()) {
    const Vector p = clamp_to(x, box->lo, box->hi);
    return {distance(fn, x, p), {p}, opts.tie_tol};
  }
  const auto& seg = std::get<SegmentSet>(set.variant());
  auto h = [&](double t) { return distance(fn, x, lerp(seg.c0, seg.c1, t)); };
  return segment_extremum(seg, h, opts.segment_samples, false, opts.tie_tol);
}

double duality_transport_check(const LegendreFunction& fn, const CompactSet& set, const Vector& z,
                               MapKind kind, const MapOptions& opts) {
  check_query(fn, set, z);
  const LegendreFunction conj = fn.conjugate();
  const CompactSet dual = dual_image(fn, set, opts.segment_samples);
  const Vector zs = fn.gradient(z);
  double primal = 0.0;
  double transported = 0.0;
  switch (kind) {
    case MapKind::LeftNearest:
      primal = left_nearest(fn, set, z, opts).value;
      transported = right_nearest_direct(conj, dual, zs, opts).value;
      break;
    case MapKind::RightNearest:
      primal = right_nearest_direct(fn, set, z, opts).value;
      transported = left_nearest(conj, dual, zs, opts).value;
      break;
    case MapKind::LeftFarthest:
      primal = left_farthest(fn, set, z, opts).value;
      transported = right_farthest(conj, dual, zs, opts).value;
      break;
    case MapKind::RightFarthest:
      primal = right_farthest(fn, set, z, opts).value;
      transported = left_farthest(conj, dual, zs, opts).value;
      break;
  }
  return std::abs(primal - transported);
}

}  // namespace bregman
