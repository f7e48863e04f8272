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
#include <vector>

#include "bregman/legendre.hpp"
#include "bregman/map_result.hpp"
#include "bregman/simd/affine.hpp"
#include "bregman/vector.hpp"

namespace bregman {

/// Attainer indices of an extremal query over a DistanceTable.
struct IndexedExtremum {
  double value = 0.0;
  std::vector<std::size_t> indices;  ///< ascending
};

/// A finite point set prepared for repeated distance scans. Left and right
/// distances to all points are affine in the (transformed) query, so a scan is
/// one pass of the SIMD affine kernel; the final attainers are re-evaluated
/// with the exact distance formula.
class DistanceTable {
 public:
  DistanceTable(const LegendreFunction& fn, std::vector<Vector> points);

  const LegendreFunction& function() const noexcept { return fn_; }
  const std::vector<Vector>& points() const noexcept { return points_; }
  std::size_t size() const noexcept { return points_.size(); }

  /// out_i ~ D(c_i, y); kernel precision, not re-evaluated.
  void left_distances(const Vector& y, std::span<double> out) const;
  /// out_i ~ D(x, c_i).
  void right_distances(const Vector& x, std::span<double> out) const;

  IndexedExtremum left_min(const Vector& y, double tie_tol) const;
  IndexedExtremum left_max(const Vector& y, double tie_tol) const;
  IndexedExtremum right_min(const Vector& x, double tie_tol) const;
  IndexedExtremum right_max(const Vector& x, double tie_tol) const;

  MapResult to_map_result(const IndexedExtremum& e, double tie_tol) const;

 private:
  enum class Side { Left, Right };
  IndexedExtremum extremum(Side side, const Vector& q, double tie_tol, bool farthest) const;

  LegendreFunction fn_;
  std::vector<Vector> points_;
  simd::AffineFamily left_;   // f(c_i) - <z, c_i>, z = grad f(y)
  simd::AffineFamily right_;  // f*(c_i*) - <x, c_i*>
  double left_scale_ = 0.0;
  double right_scale_ = 0.0;
};

}  // namespace bregman
