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

#include <Eigen/Dense>
#include <algorithm>
#include <cmath>
#include <limits>

#include "bregman/errors.hpp"
#include "bregman/sets.hpp"

namespace bregman {
namespace {

using Eigen::MatrixXd;
using Eigen::VectorXd;

// Minimizes || Q v || over the affine hull { sum v = 1 } of the active columns.
VectorXd affine_min_norm(const MatrixXd& q, const std::vector<std::size_t>& active) {
  const auto k = static_cast<Eigen::Index>(active.size());
  MatrixXd sys = MatrixXd::Zero(k + 1, k + 1);
  for (Eigen::Index a = 0; a < k; ++a) {
    for (Eigen::Index b = 0; b < k; ++b) sys(a, b) = q.col(active[a]).dot(q.col(active[b]));
    sys(a, k) = 1.0;
    sys(k, a) = 1.0;
  }
  VectorXd rhs = VectorXd::Zero(k + 1);
  rhs(k) = 1.0;
  VectorXd sol = sys.completeOrthogonalDecomposition().solve(rhs);
  return sol.head(k);
}

}  // namespace

HullMembership convex_hull_membership(const Vector& y, std::span<const Vector> points, double tol) {
  if (points.empty()) throw InvalidArgument("hull membership needs at least one point");
  const std::size_t m = points.size();
  const std::size_t n = y.dim();
  MatrixXd q(n, m);
  double scale = 0.0;
  for (std::size_t i = 0; i < m; ++i) {
    require_dim(points[i], n);
    for (std::size_t j = 0; j < n; ++j) q(j, i) = points[i][j] - y[j];
    scale = std::max(scale, q.col(i).squaredNorm());
  }

  std::size_t first = 0;
  for (std::size_t i = 1; i < m; ++i) {
    if (q.col(i).squaredNorm() < q.col(first).squaredNorm()) first = i;
  }
  std::vector<std::size_t> active{first};
  std::vector<double> w{1.0};
  VectorXd x = q.col(first);

  const double major_eps = 1e-14 * std::max(scale, 1e-300);
  const std::size_t max_major = 50 + 10 * m;
  for (std::size_t major = 0; major < max_major; ++major) {
    if (x.squaredNorm() <= 1e-30 * std::max(scale, 1.0)) break;
    std::size_t best = 0;
    double best_dot = std::numeric_limits<double>::infinity();
    for (std::size_t i = 0; i < m; ++i) {
      const double d = x.dot(q.col(i));
      if (d < best_dot) {
        best_dot = d;
        best = i;
      }
    }
    if (x.squaredNorm() - best_dot <= major_eps) break;
    if (std::find(active.begin(), active.end(), best) != active.end()) break;
    active.push_back(best);
    w.push_back(0.0);

    for (std::size_t minor = 0; minor < 10 * m + 10; ++minor) {
      const VectorXd v = affine_min_norm(q, active);
      bool positive = true;
      for (Eigen::Index a = 0; a < v.size(); ++a) positive = positive && v(a) > 1e-15;
      if (positive) {
        for (std::size_t a = 0; a < active.size(); ++a) w[a] = v(static_cast<Eigen::Index>(a));
        break;
      }
      double theta = 1.0;
      for (std::size_t a = 0; a < active.size(); ++a) {
        const double va = v(static_cast<Eigen::Index>(a));
        if (va <= 1e-15 && w[a] - va > 0.0) theta = std::min(theta, w[a] / (w[a] - va));
      }
      for (std::size_t a = 0; a < active.size(); ++a) {
        w[a] = (1.0 - theta) * w[a] + theta * v(static_cast<Eigen::Index>(a));
      }
      std::vector<std::size_t> keep_idx;
      std::vector<double> keep_w;
      for (std::size_t a = 0; a < active.size(); ++a) {
        if (w[a] > 1e-15) {
          keep_idx.push_back(active[a]);
          keep_w.push_back(w[a]);
        }
      }
      if (keep_idx.empty()) {
        const auto it = std::max_element(w.begin(), w.end());
        keep_idx.push_back(active[static_cast<std::size_t>(it - w.begin())]);
        keep_w.push_back(1.0);
      }
      active = std::move(keep_idx);
      w = std::move(keep_w);
    }
    double total = 0.0;
    for (double wa : w) total += wa;
    x.setZero(static_cast<Eigen::Index>(n));
    for (std::size_t a = 0; a < active.size(); ++a) {
      w[a] /= total;
      x += w[a] * q.col(active[a]);
    }
  }

  HullMembership out;
  out.weights.assign(m, 0.0);
  for (std::size_t a = 0; a < active.size(); ++a) out.weights[active[a]] = w[a];
  Vector recon(n);
  for (std::size_t i = 0; i < m; ++i) {
    if (out.weights[i] == 0.0) continue;
    for (std::size_t j = 0; j < n; ++j) recon[j] += out.weights[i] * points[i][j];
  }
  out.residual = max_abs_diff(recon, y);
  out.margin = norm2(recon - y);
  out.inside = out.residual <= tol;
  return out;
}

}  // namespace bregman
