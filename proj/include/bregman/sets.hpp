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

#pragma once

#include <cstddef>
#include <span>
#include <string_view>
#include <variant>
#include <vector>

#include "bregman/legendre.hpp"
#include "bregman/vector.hpp"

namespace bregman {

struct FiniteSet {
  std::vector<Vector> points;
};

/// [a, b] in R, a < b.
struct IntervalSet {
  double a;
  double b;
};

/// Axis-aligned box lo <= x <= hi, lo < hi coordinate-wise.
struct BoxSet {
  Vector lo;
  Vector hi;
};

/// conv{c0, c1}, c_lambda = (1 - lambda) c0 + lambda c1.
struct SegmentSet {
  Vector c0;
  Vector c1;
};

enum class SetKind { Finite, Interval, Box, Segment };
std::string_view set_kind_name(SetKind k);

/// Largest box dimension accepted; a box has 2^n vertices.
inline constexpr std::size_t kMaxBoxDim = 10;
/// Points closer than this (sup norm) are merged in finite sets.
inline constexpr double kDedupTol = 1e-12;

/// A nonempty compact set inside int dom f. Factories validate the defining
/// data against the Legendre function the set will be used with.
class CompactSet {
 public:
  using Variant = std::variant<FiniteSet, IntervalSet, BoxSet, SegmentSet>;

  static CompactSet finite(const LegendreFunction& fn, std::vector<Vector> points);
  static CompactSet interval(const LegendreFunction& fn, double a, double b);
  static CompactSet box(const LegendreFunction& fn, Vector lo, Vector hi);
  static CompactSet segment(const LegendreFunction& fn, Vector c0, Vector c1);

  std::size_t dim() const noexcept { return dim_; }
  SetKind kind() const noexcept { return static_cast<SetKind>(data_.index()); }
  const Variant& variant() const noexcept { return data_; }

  template <class T>
  const T* get_if() const noexcept {
    return std::get_if<T>(&data_);
  }

  /// True for the convex variants and for one-point finite sets.
  bool is_convex() const noexcept;

  /// Throws DomainError / DimensionError if the set is not inside int dom fn.
  void validate_for(const LegendreFunction& fn) const;

 private:
  CompactSet(Variant data, std::size_t dim) : data_(std::move(data)), dim_(dim) {}

  Variant data_;
  std::size_t dim_;
};

struct ExtremePointList {
  std::vector<Vector> points;
};

/// Default number of samples used when a segment's dual image (a curve) is
/// represented by a finite set.
inline constexpr std::size_t kDefaultSegmentSamples = 1001;

/// C* = grad f(C), as a set valid for fn.conjugate(). Segments map to a finite
/// discretization of the image curve.
CompactSet dual_image(const LegendreFunction& fn, const CompactSet& set,
                      std::size_t segment_samples = kDefaultSegmentSamples);

/// Finite: every point; Interval: {a, b}; Box: 2^n vertices (bit j of the
/// vertex index selects hi_j); Segment: {c0, c1}.
ExtremePointList extreme_points(const CompactSet& set);

struct HullMembership {
  bool inside = false;
  /// Barycentric weights over the input points (zero for unused points).
  std::vector<double> weights;
  /// || sum_i w_i p_i - y ||_inf for the returned weights.
  double residual = 0.0;
  /// Euclidean distance from y to the hull; a separating margin when outside.
  double margin = 0.0;
};

/// Nearest point of conv(points) to y by Wolfe's minimum-norm-point method;
/// reports `inside` when the sup-norm residual is within tol.
HullMembership convex_hull_membership(const Vector& y, std::span<const Vector> points, double tol);

}  // namespace bregman
