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

#include "bregman/sets.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "bregman/errors.hpp"

namespace bregman {
namespace {

void require_interior_point(const LegendreFunction& fn, const Vector& p) {
  require_dim(p, fn.dim());
  if (!p.all_finite()) throw InvalidArgument("set point has a non-finite coordinate");
  fn.require_interior(p);
}

std::vector<Vector> dedup(std::vector<Vector> points) {
  std::vector<Vector> out;
  out.reserve(points.size());
  for (auto& p : points) {
    const bool seen = std::any_of(out.begin(), out.end(),
                                  [&](const Vector& q) { return max_abs_diff(p, q) <= kDedupTol; });
    if (!seen) out.push_back(std::move(p));
  }
  return out;
}

}  // namespace

std::string_view set_kind_name(SetKind k) {
  switch (k) {
    case SetKind::Finite: return "finite";
    case SetKind::Interval: return "interval";
    case SetKind::Box: return "box";
    case SetKind::Segment: return "segment";
  }
  return "unknown";
}

CompactSet CompactSet::finite(const LegendreFunction& fn, std::vector<Vector> points) {
  if (points.empty()) throw InvalidArgument("finite set must be nonempty");
  for (const auto& p : points) require_interior_point(fn, p);
  return CompactSet(FiniteSet{dedup(std::move(points))}, fn.dim());
}

CompactSet CompactSet::interval(const LegendreFunction& fn, double a, double b) {
  if (fn.dim() != 1) throw DimensionError(1, fn.dim());
  if (!(a < b)) throw InvalidArgument("interval needs a < b");
  require_interior_point(fn, Vector{a});
  require_interior_point(fn, Vector{b});
  return CompactSet(IntervalSet{a, b}, 1);
}

CompactSet CompactSet::box(const LegendreFunction& fn, Vector lo, Vector hi) {
  require_interior_point(fn, lo);
  require_interior_point(fn, hi);
  if (fn.dim() > kMaxBoxDim) {
    throw InvalidArgument("box dimension " + std::to_string(fn.dim()) + " exceeds " +
                          std::to_string(kMaxBoxDim));
  }
  for (std::size_t j = 0; j < lo.dim(); ++j) {
    if (!(lo[j] < hi[j])) throw InvalidArgument("box needs lo < hi in coordinate " + std::to_string(j));
  }
  const std::size_t n = lo.dim();
  return CompactSet(BoxSet{std::move(lo), std::move(hi)}, n);
}

CompactSet CompactSet::segment(const LegendreFunction& fn, Vector c0, Vector c1) {
  require_interior_point(fn, c0);
  require_interior_point(fn, c1);
  if (max_abs_diff(c0, c1) <= kDedupTol) throw InvalidArgument("segment endpoints coincide");
  const std::size_t n = c0.dim();
  return CompactSet(SegmentSet{std::move(c0), std::move(c1)}, n);
}

bool CompactSet::is_convex() const noexcept {
  if (const auto* f = get_if<FiniteSet>()) return f->points.size() == 1;
  return true;
}

void CompactSet::validate_for(const LegendreFunction& fn) const {
  require_dim(Vector(dim_), fn.dim());
  for (const auto& p : extreme_points(*this).points) fn.require_interior(p);
}

CompactSet dual_image(const LegendreFunction& fn, const CompactSet& set,
                      std::size_t segment_samples) {
  const LegendreFunction conj = fn.conjugate();
  return std::visit(
      [&](const auto& s) -> CompactSet {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          std::vector<Vector> image;
          image.reserve(s.points.size());
          for (const auto& p : s.points) image.push_back(fn.gradient(p));
          return CompactSet::finite(conj, std::move(image));
        } else if constexpr (std::is_same_v<T, IntervalSet>) {
          // grad f is increasing in one dimension
          const double ga = fn.gradient(Vector{s.a})[0];
          const double gb = fn.gradient(Vector{s.b})[0];
          return CompactSet::interval(conj, std::min(ga, gb), std::max(ga, gb));
        } else if constexpr (std::is_same_v<T, BoxSet>) {
          return CompactSet::box(conj, fn.gradient(s.lo), fn.gradient(s.hi));
        } else {
          if (segment_samples < 2) throw InvalidArgument("segment image needs at least 2 samples");
          std::vector<Vector> image;
          image.reserve(segment_samples);
          for (std::size_t k = 0; k < segment_samples; ++k) {
            const double t = static_cast<double>(k) / static_cast<double>(segment_samples - 1);
            image.push_back(fn.gradient(lerp(s.c0, s.c1, t)));
          }
          return CompactSet::finite(conj, std::move(image));
        }
      },
      set.variant());
}

ExtremePointList extreme_points(const CompactSet& set) {
  return std::visit(
      [](const auto& s) -> ExtremePointList {
        using T = std::decay_t<decltype(s)>;
        if constexpr (std::is_same_v<T, FiniteSet>) {
          return {s.points};
        } else if constexpr (std::is_same_v<T, IntervalSet>) {
          return {{Vector{s.a}, Vector{s.b}}};
        } else if constexpr (std::is_same_v<T, BoxSet>) {
          const std::size_t n = s.lo.dim();
          ExtremePointList out;
          out.points.reserve(std::size_t{1} << n);
          for (std::size_t mask = 0; mask < (std::size_t{1} << n); ++mask) {
            Vector v(n);
            for (std::size_t j = 0; j < n; ++j) v[j] = (mask >> j) & 1U ? s.hi[j] : s.lo[j];
            out.points.push_back(std::move(v));
          }
          return out;
        } else {
          return {{s.c0, s.c1}};
        }
      },
      set.variant());
}

}  // namespace bregman
