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

#include "bregman/centers.hpp"

#include <Eigen/Dense>
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

struct Solve {
  Vector x;
  SolverTrace trace;
};

// min over x in [lo, hi] of the convex function h; the bracket holds the
// minimizer because the center lies in grad f*(conv grad f(C)).
Solve ternary_center(const std::function<double(double)>& h, double lo, double hi,
                     std::size_t cap) {
  Solve s{Vector{0.0}, {"ternary", 0, hi - lo, false}};
  const double tol = 1e-13 * std::max({1.0, std::abs(lo), std::abs(hi)});
  std::size_t it = 0;
  for (; it < std::min<std::size_t>(cap, 400) && hi - lo > tol; ++it) {
    const double m1 = lo + (hi - lo) / 3.0;
    const double m2 = hi - (hi - lo) / 3.0;
    if (h(m1) <= h(m2)) {
      hi = m2;
    } else {
      lo = m1;
    }
  }
  s.x[0] = 0.5 * (lo + hi);
  s.trace.iterations = it;
  s.trace.final_step = hi - lo;
  s.trace.converged = hi - lo <= tol;
  return s;
}

// Log-barrier Newton method for
//   min f(x) + t   s.t.  t >= f*(q_i*) - <q_i*, x>   (i = 1..m),
// i.e. min_x max_i D(x, q_i).
Solve barrier_center(const LegendreFunction& fn, const std::vector<Vector>& cands,
                     const Vector& start, std::size_t cap) {
  using Eigen::MatrixXd;
  using Eigen::VectorXd;
  const std::size_t m = cands.size();
  const std::size_t n = fn.dim();
  const auto ni = static_cast<Eigen::Index>(n);
  MatrixXd qs(n, m);
  VectorXd c(m);
  for (std::size_t i = 0; i < m; ++i) {
    const Vector g = fn.gradient(cands[i]);
    for (std::size_t j = 0; j < n; ++j) qs(static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(i)) = g[j];
    c(static_cast<Eigen::Index>(i)) = fn.conjugate_value(g);
  }
  auto to_vector = [&](const VectorXd& v) {
    Vector out(n);
    for (std::size_t j = 0; j < n; ++j) out[j] = v(static_cast<Eigen::Index>(j));
    return out;
  };

  VectorXd x(ni);
  for (std::size_t j = 0; j < n; ++j) x(static_cast<Eigen::Index>(j)) = start[j];
  auto slack = [&](const VectorXd& xv, double t) -> VectorXd {
    return (qs.transpose() * xv).array() + t - c.array();
  };
  double t = (c - qs.transpose() * x).maxCoeff() + 1.0;

  Solve s{start, {"barrier-newton", 0, 0.0, false}};
  double tau = 1.0;
  std::size_t iters = 0;
  const double target_gap = 1e-14;
  auto barrier = [&](const VectorXd& xv, double tv, double tauv) {
    const Vector xp = to_vector(xv);
    if (!fn.in_interior(xp)) return kInf;
    const VectorXd sl = slack(xv, tv);
    if ((sl.array() <= 0.0).any()) return kInf;
    return tauv * (fn.value(xp) + tv) - sl.array().log().sum();
  };

  while (iters < cap) {
    for (int newton = 0; newton < 100 && iters < cap; ++newton, ++iters) {
      const Vector xp = to_vector(x);
      const Vector grad_f = fn.gradient(xp);
      const Vector hess_f = fn.second_derivative(xp);
      const VectorXd sl = slack(x, t);
      const VectorXd inv = sl.cwiseInverse();
      const VectorXd inv2 = inv.cwiseProduct(inv);

      VectorXd g(ni + 1);
      MatrixXd h = MatrixXd::Zero(ni + 1, ni + 1);
      for (std::size_t j = 0; j < n; ++j) {
        const auto jj = static_cast<Eigen::Index>(j);
        g(jj) = tau * grad_f[j];
        h(jj, jj) = tau * hess_f[j];
      }
      g.head(ni) -= qs * inv;
      g(ni) = tau - inv.sum();
      h.topLeftCorner(ni, ni) += qs * inv2.asDiagonal() * qs.transpose();
      const VectorXd hxt = qs * inv2;
      h.block(0, ni, ni, 1) = hxt;
      h.block(ni, 0, 1, ni) = hxt.transpose();
      h(ni, ni) = inv2.sum();

      const VectorXd step = h.ldlt().solve(-g);
      const double decrement = -g.dot(step);
      if (!(decrement > 2e-14)) break;

      const double phi = barrier(x, t, tau);
      double alpha = 1.0;
      bool accepted = false;
      for (int ls = 0; ls < 80 && !accepted; ++ls) {
        const double trial = barrier(x + alpha * step.head(ni), t + alpha * step(ni), tau);
        accepted = trial <= phi - 0.25 * alpha * decrement;
        if (!accepted) alpha *= 0.5;
      }
      // no sufficient decrease left at this tau: rounding floor reached
      if (!accepted) break;
      x += alpha * step.head(ni);
      t += alpha * step(ni);
      s.trace.final_step = alpha * step.head(ni).lpNorm<Eigen::Infinity>();
    }
    const double objective = std::abs(fn.value(to_vector(x)) + t);
    if (static_cast<double>(m) / tau <= target_gap * (1.0 + objective)) {
      s.trace.converged = true;
      break;
    }
    tau *= 8.0;
  }
  s.x = to_vector(x);
  s.trace.iterations = iters;
  return s;
}

std::vector<Vector> segment_samples(const SegmentSet& seg, std::size_t samples) {
  std::vector<Vector> out;
  out.reserve(samples);
  for (std::size_t k = 0; k < samples; ++k) {
    out.push_back(lerp(seg.c0, seg.c1, static_cast<double>(k) / static_cast<double>(samples - 1)));
  }
  return out;
}

Vector dual_barycenter(const LegendreFunction& fn, const std::vector<Vector>& pts) {
  Vector mean(fn.dim());
  for (const auto& p : pts) mean += fn.gradient(p);
  mean *= 1.0 / static_cast<double>(pts.size());
  return fn.conjugate_gradient(mean);
}

Solve solve_right_center(const LegendreFunction& fn, const CompactSet& set,
                         const CenterOptions& opts) {
  const std::vector<Vector> ext = extreme_points(set).points;
  if (ext.size() == 1) return {ext.front(), {"trivial", 0, 0.0, true}};

  if (fn.dim() == 1) {
    double lo = kInf;
    double hi = -kInf;
    for (const auto& p : ext) {
      lo = std::min(lo, p[0]);
      hi = std::max(hi, p[0]);
    }
    MapOptions mo = opts.map;
    auto h = [&](double x) { return right_farthest(fn, set, Vector{x}, mo).value; };
    return ternary_center(h, lo, hi, opts.max_iterations);
  }

  if (const auto* seg = set.get_if<SegmentSet>()) {
    std::vector<Vector> cands = segment_samples(*seg, opts.map.segment_samples);
    Solve s = barrier_center(fn, cands, dual_barycenter(fn, ext), opts.max_iterations);
    std::size_t total = s.trace.iterations;
    for (int round = 0; round < 30; ++round) {
      const MapResult far = right_farthest(fn, set, s.x, opts.map);
      double cand_max = -kInf;
      for (const auto& q : cands) cand_max = std::max(cand_max, distance(fn, s.x, q));
      if (far.value <= cand_max + 1e-13 * (1.0 + std::abs(far.value))) break;
      for (const auto& a : far.attainers) cands.push_back(a);
      s = barrier_center(fn, cands, s.x, opts.max_iterations);
      total += s.trace.iterations;
    }
    s.trace.method = "barrier-newton+exchange";
    s.trace.iterations = total;
    return s;
  }
  return barrier_center(fn, ext, dual_barycenter(fn, ext), opts.max_iterations);
}

double certificate_tie(const CenterOptions& opts, double radius) {
  return opts.certificate_tie_tol * std::max(1.0, std::abs(radius));
}

}  // namespace

CenterResult right_center(const LegendreFunction& fn, const CompactSet& set,
                          const CenterOptions& opts) {
  set.validate_for(fn);
  Solve s = solve_right_center(fn, set, opts);
  CenterResult r;
  r.center = s.x;
  r.trace = s.trace;
  MapOptions mo = opts.map;
  r.radius = right_farthest(fn, set, r.center, mo).value;
  mo.tie_tol = certificate_tie(opts, r.radius);
  const MapResult far = right_farthest(fn, set, r.center, mo);

  std::vector<Vector> dual_pts;
  for (const auto& p : far.attainers) dual_pts.push_back(fn.gradient(p));
  const HullMembership hull = convex_hull_membership(fn.gradient(r.center), dual_pts, opts.tol);
  r.certificate = {far.attainers, hull.weights, hull.residual};
  r.trace.converged = r.trace.converged && hull.inside;
  return r;
}

CenterResult left_center(const LegendreFunction& fn, const CompactSet& set,
                         const CenterOptions& opts) {
  set.validate_for(fn);
  const LegendreFunction conj = fn.conjugate();
  std::vector<Vector> dual_ext;
  for (const auto& p : extreme_points(set).points) dual_ext.push_back(fn.gradient(p));
  const CompactSet dual = CompactSet::finite(conj, std::move(dual_ext));
  const Solve s = solve_right_center(conj, dual, opts);

  CenterResult r;
  r.center = conj.gradient(s.x);
  r.trace = s.trace;
  MapOptions mo = opts.map;
  r.radius = left_farthest(fn, set, r.center, mo).value;
  mo.tie_tol = certificate_tie(opts, r.radius);
  const MapResult far = left_farthest(fn, set, r.center, mo);
  const HullMembership hull = convex_hull_membership(r.center, far.attainers, opts.tol);
  r.certificate = {far.attainers, hull.weights, hull.residual};
  r.trace.converged = r.trace.converged && hull.inside;
  return r;
}

IntervalCenters interval_center_closed_form(const LegendreFunction& fn, double a, double b) {
  if (fn.dim() != 1) throw DimensionError(1, fn.dim());
  if (!(a < b)) throw InvalidArgument("interval needs a < b");
  const Vector va{a};
  const Vector vb{b};
  const double as = fn.gradient(va)[0];
  const double bs = fn.gradient(vb)[0];
  IntervalCenters out{};
  out.right = (fn.conjugate_value(Vector{bs}) - fn.conjugate_value(Vector{as})) / (bs - as);
  out.left = fn.conjugate_gradient(Vector{(fn.value(vb) - fn.value(va)) / (b - a)})[0];
  return out;
}

double radius_duality_check(const LegendreFunction& fn, const CompactSet& set,
                            const CenterOptions& opts) {
  const double left_radius = left_center(fn, set, opts).radius;
  const double right_dual_radius =
      right_center(fn.conjugate(), dual_image(fn, set, opts.map.segment_samples), opts).radius;
  return std::abs(left_radius - right_dual_radius);
}

}  // namespace bregman
