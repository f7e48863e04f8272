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

#include "bregman/distance_table.hpp"

#include <algorithm>
#include <cmath>

#include "bregman/distance.hpp"
#include "bregman/errors.hpp"

namespace bregman {

DistanceTable::DistanceTable(const LegendreFunction& fn, std::vector<Vector> points)
    : fn_(fn), points_(std::move(points)) {
  if (points_.empty()) throw InvalidArgument("distance table needs at least one point");
  const std::size_t m = points_.size();
  const std::size_t n = fn_.dim();
  left_ = simd::AffineFamily(m, n);
  right_ = simd::AffineFamily(m, n);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector& c = points_[i];
    fn_.require_interior(c);
    const Vector cs = fn_.gradient(c);
    left_.offsets[i] = fn_.value(c);
    right_.offsets[i] = fn_.conjugate_value(cs);
    double lmag = std::abs(left_.offsets[i]);
    double rmag = std::abs(right_.offsets[i]);
    for (std::size_t j = 0; j < n; ++j) {
      left_.coeff(j, i) = -c[j];
      right_.coeff(j, i) = -cs[j];
      lmag += std::abs(c[j]);
      rmag += std::abs(cs[j]);
    }
    left_scale_ = std::max(left_scale_, lmag);
    right_scale_ = std::max(right_scale_, rmag);
  }
}

void DistanceTable::left_distances(const Vector& y, std::span<double> out) const {
  const Vector z = fn_.gradient(y);
  const double shift = fn_.conjugate_value(z);
  simd::affine_scores(left_, z.span(), out);
  for (double& v : out) v += shift;
}

void DistanceTable::right_distances(const Vector& x, std::span<double> out) const {
  fn_.require_interior(x);
  const double shift = fn_.value(x);
  simd::affine_scores(right_, x.span(), out);
  for (double& v : out) v += shift;
}

IndexedExtremum DistanceTable::left_min(const Vector& y, double tie_tol) const {
  return extremum(Side::Left, y, tie_tol, false);
}
IndexedExtremum DistanceTable::left_max(const Vector& y, double tie_tol) const {
  return extremum(Side::Left, y, tie_tol, true);
}
IndexedExtremum DistanceTable::right_min(const Vector& x, double tie_tol) const {
  return extremum(Side::Right, x, tie_tol, false);
}
IndexedExtremum DistanceTable::right_max(const Vector& x, double tie_tol) const {
  return extremum(Side::Right, x, tie_tol, true);
}

IndexedExtremum DistanceTable::extremum(Side side, const Vector& q, double tie_tol,
                                        bool farthest) const {
  const std::size_t m = points_.size();
  std::vector<double> scores(m);
  double query_mag = 0.0;
  if (side == Side::Left) {
    left_distances(q, scores);
    query_mag = norm_inf(fn_.gradient(q)) * left_scale_ + std::abs(fn_.conjugate_value(fn_.gradient(q)));
  } else {
    right_distances(q, scores);
    query_mag = norm_inf(q) * right_scale_ + std::abs(fn_.value(q));
  }
  const auto it = farthest ? std::max_element(scores.begin(), scores.end())
                           : std::min_element(scores.begin(), scores.end());
  const double best_score = *it;
  // affine-form rounding is bounded by a few ulps of the term magnitudes
  const double slack = tie_tol + 1e-13 * (1.0 + query_mag + left_scale_ + right_scale_);

  std::vector<std::pair<std::size_t, double>> exact;
  for (std::size_t i = 0; i < m; ++i) {
    if (std::abs(scores[i] - best_score) <= slack) {
      const double d = side == Side::Left ? distance(fn_, points_[i], q) : distance(fn_, q, points_[i]);
      exact.emplace_back(i, d);
    }
  }
  double best = exact.front().second;
  for (const auto& [i, d] : exact) best = farthest ? std::max(best, d) : std::min(best, d);
  IndexedExtremum out{best, {}};
  for (const auto& [i, d] : exact) {
    if (std::abs(d - best) <= tie_tol) out.indices.push_back(i);
  }
  return out;
}

MapResult DistanceTable::to_map_result(const IndexedExtremum& e, double tie_tol) const {
  MapResult r{e.value, {}, tie_tol};
  for (std::size_t i : e.indices) r.attainers.push_back(points_[i]);
  std::sort(r.attainers.begin(), r.attainers.end(), lex_less);
  return r;
}

}  // namespace bregman
