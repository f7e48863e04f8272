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

#include "bregman/probes.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <functional>
#include <optional>
#include <thread>

#include "bregman/centers.hpp"
#include "bregman/distance.hpp"
#include "bregman/distance_table.hpp"
#include "bregman/errors.hpp"

namespace bregman::probe {
namespace {

constexpr double kSamePoint = 1e-9;
constexpr double kSameWitness = 1e-7;
constexpr std::size_t kRobustSpread = 10;

using Evaluator = std::function<MapResult(const Vector&)>;

std::size_t worker_count(std::size_t jobs, std::size_t work) {
  std::size_t n = jobs != 0 ? jobs : std::max(1u, std::thread::hardware_concurrency());
  return std::max<std::size_t>(1, std::min(n, work));
}

// Runs body(i) for i in [0, n) on contiguous chunks; results land by index, so
// the outcome does not depend on the worker count.
template <class T>
std::vector<T> parallel_map(std::size_t n, std::size_t jobs, const std::function<T(std::size_t)>& body) {
  std::vector<T> out(n);
  const std::size_t workers = worker_count(jobs, n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) out[i] = body(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  const std::size_t chunk = (n + workers - 1) / workers;
  for (std::size_t w = 0; w < workers; ++w) {
    pool.emplace_back([&, w] {
      try {
        for (std::size_t i = w * chunk; i < std::min(n, (w + 1) * chunk); ++i) out[i] = body(i);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
  return out;
}

void require_grid(const LegendreFunction& fn, const Grid& grid) {
  require_dim(grid.lo, fn.dim());
  require_dim(grid.hi, fn.dim());
  if (grid.resolution == 0) throw InvalidArgument("grid resolution must be positive");
  for (std::size_t j = 0; j < grid.dim(); ++j) {
    if (!(grid.lo[j] <= grid.hi[j])) throw InvalidArgument("grid needs lo <= hi");
  }
  // every catalog domain is a product of intervals, so the corners decide
  fn.require_interior(grid.lo);
  fn.require_interior(grid.hi);
}

class WitnessList {
 public:
  WitnessList(const LegendreFunction& fn, double tie_tol, std::size_t cap)
      : fn_(fn), tie_tol_(tie_tol), cap_(cap) {}

  bool full() const { return out_.size() >= cap_; }

  bool offer(MapKind map, const Vector& point, const MapResult& r) {
    if (full() || !r.tied()) return false;
    Witness w{map, point, r.attainers, 0.0};
    if (!reverify(fn_, w, tie_tol_)) return false;
    for (const Witness& o : out_) {
      if (o.map == map && max_abs_diff(o.point, point) <= kSameWitness) return false;
    }
    double lo = INFINITY;
    double hi = -INFINITY;
    for (const Vector& a : w.attainers) {
      const double d = attainer_distance(fn_, map, a, point);
      lo = std::min(lo, d);
      hi = std::max(hi, d);
    }
    w.gap = hi - lo;
    out_.push_back(std::move(w));
    return true;
  }

  std::vector<Witness> take() { return std::move(out_); }

 private:
  const LegendreFunction& fn_;
  double tie_tol_;
  std::size_t cap_;
  std::vector<Witness> out_;
};

// Sign change of D(p, .) - D(q, .) along [a, b]; returns the crossing.
std::optional<Vector> bisect_switch(const LegendreFunction& fn, MapKind map, const Vector& p,
                                    const Vector& q, const Vector& a, const Vector& b,
                                    std::size_t& evaluations) {
  auto gap = [&](double t) {
    ++evaluations;
    const Vector y = lerp(a, b, t);
    return attainer_distance(fn, map, p, y) - attainer_distance(fn, map, q, y);
  };
  double lo = 0.0;
  double hi = 1.0;
  const double g_lo = gap(lo);
  const double g_hi = gap(hi);
  if (!std::isfinite(g_lo) || !std::isfinite(g_hi) || (g_lo > 0.0) == (g_hi > 0.0)) return std::nullopt;
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (lo + hi);
    if (mid == lo || mid == hi) break;
    if ((gap(mid) > 0.0) == (g_lo > 0.0)) {
      lo = mid;
    } else {
      hi = mid;
    }
  }
  return lerp(a, b, 0.5 * (lo + hi));
}

struct ScanOutcome {
  std::vector<MapResult> results;
  MapTally tally;
};

ScanOutcome scan_grid(MapKind map, const Evaluator& eval, const Grid& grid, const ProbeOptions& opts,
                      ProbeReport& report) {
  const std::size_t n = grid.size();
  ScanOutcome out{parallel_map<MapResult>(n, opts.jobs, [&](std::size_t i) { return eval(grid.point(i)); }),
                  MapTally{map, 0, 0}};
  report.evaluations += n;
  for (std::size_t i = 0; i < n; ++i) {
    const MapResult& r = out.results[i];
    if (r.tied()) {
      ++out.tally.tied;
    } else {
      ++out.tally.single_valued;
    }
    if (opts.keep_rows) report.rows.push_back({map, grid.point(i), r.value, r.tied()});
  }
  return out;
}

// Walks grid edges in index order; where the first attainer switches, the
// crossing of the two attainers' distances is bisected and re-evaluated.
void bisect_edges(const LegendreFunction& fn, MapKind map, const Evaluator& eval, const Grid& grid,
                  const std::vector<MapResult>& results, WitnessList& witnesses,
                  std::size_t& evaluations) {
  const std::size_t n = grid.size();
  const std::size_t d = grid.dim();
  const std::size_t res = grid.resolution;
  for (std::size_t i = 0; i < n && !witnesses.full(); ++i) {
    std::size_t stride = 1;
    std::size_t rest = i;
    for (std::size_t axis = d; axis-- > 0;) {
      const std::size_t coord = rest % res;
      rest /= res;
      const std::size_t nb = i + stride;
      stride *= res;
      if (coord + 1 >= res) continue;
      const Vector& p = results[i].attainers.front();
      const Vector& q = results[nb].attainers.front();
      if (max_abs_diff(p, q) <= kSamePoint) continue;
      const auto y = bisect_switch(fn, map, p, q, grid.point(i), grid.point(nb), evaluations);
      if (!y) continue;
      ++evaluations;
      witnesses.offer(map, *y, eval(*y));
      if (witnesses.full()) return;
    }
  }
}

void grid_witnesses(MapKind map, const Grid& grid, const std::vector<MapResult>& results,
                    WitnessList& witnesses) {
  for (std::size_t i = 0; i < results.size() && !witnesses.full(); ++i) {
    if (results[i].tied()) witnesses.offer(map, grid.point(i), results[i]);
  }
}

Vector curve_point(double t) { return Vector{std::exp(t), std::exp(2.0 * t)}; }

}  // namespace

std::size_t Grid::size() const noexcept {
  std::size_t n = 1;
  for (std::size_t j = 0; j < dim(); ++j) n *= resolution;
  return n;
}

Vector Grid::point(std::size_t index) const {
  Vector p(dim());
  for (std::size_t j = dim(); j-- > 0;) {
    const std::size_t k = index % resolution;
    index /= resolution;
    p[j] = resolution == 1 ? lo[j]
                           : lo[j] + (hi[j] - lo[j]) * static_cast<double>(k) /
                                         static_cast<double>(resolution - 1);
  }
  return p;
}

double MapTally::tie_fraction() const noexcept {
  const std::size_t n = single_valued + tied;
  return n == 0 ? 0.0 : static_cast<double>(tied) / static_cast<double>(n);
}

double attainer_distance(const LegendreFunction& fn, MapKind map, const Vector& attainer,
                         const Vector& query) {
  switch (map) {
    case MapKind::LeftNearest:
    case MapKind::LeftFarthest:
      return distance(fn, attainer, query);
    case MapKind::RightNearest:
    case MapKind::RightFarthest:
      return distance(fn, query, attainer);
  }
  return INFINITY;
}

bool reverify(const LegendreFunction& fn, const Witness& w, double tie_tol) {
  std::vector<Vector> distinct;
  for (const Vector& a : w.attainers) {
    const bool dup = std::any_of(distinct.begin(), distinct.end(),
                                 [&](const Vector& b) { return max_abs_diff(a, b) <= kSamePoint; });
    if (!dup) distinct.push_back(a);
  }
  if (distinct.size() < 2) return false;
  double lo = INFINITY;
  double hi = -INFINITY;
  for (const Vector& a : distinct) {
    const double d = attainer_distance(fn, w.map, a, w.point);
    if (!std::isfinite(d)) return false;
    lo = std::min(lo, d);
    hi = std::max(hi, d);
  }
  return hi - lo <= tie_tol;
}

ProbeReport chebyshev_probe(const LegendreFunction& fn, const CompactSet& set, const Grid& grid,
                            const ProbeOptions& opts) {
  const auto* finite = set.get_if<FiniteSet>();
  if (finite == nullptr) throw InvalidArgument("chebyshev_probe needs a finite set");
  require_grid(fn, grid);
  const DistanceTable table(fn, finite->points);
  const Evaluator eval = [&](const Vector& y) {
    return table.to_map_result(table.left_min(y, opts.tie_tol), opts.tie_tol);
  };
  ProbeReport report{"chebyshev", grid, opts.tie_tol, grid.size(), {}, {}, 0, {}, {}};
  const ScanOutcome scan = scan_grid(MapKind::LeftNearest, eval, grid, opts, report);
  report.tallies.push_back(scan.tally);
  WitnessList witnesses(fn, opts.tie_tol, opts.max_witnesses);
  grid_witnesses(MapKind::LeftNearest, grid, scan.results, witnesses);
  bisect_edges(fn, MapKind::LeftNearest, eval, grid, scan.results, witnesses, report.evaluations);
  report.witnesses = witnesses.take();
  return report;
}

ProbeReport klee_probe(const LegendreFunction& fn, const CompactSet& set, const Grid& grid,
                       const ProbeOptions& opts) {
  require_grid(fn, grid);
  const Evaluator eval = [&](const Vector& y) {
    MapOptions mo = opts.map;
    mo.tie_tol = opts.tie_tol;
    return left_farthest(fn, set, y, mo);
  };
  ProbeReport report{"klee", grid, opts.tie_tol, grid.size(), {}, {}, 0, {}, {}};
  WitnessList witnesses(fn, opts.tie_tol, opts.max_witnesses);

  if (extreme_points(set).points.size() >= 2) {
    const CenterResult c = left_center(fn, set);
    report.metrics["left_radius"] = c.radius;
    MapOptions loose = opts.map;
    loose.tie_tol = 1e-6 * std::max(1.0, c.radius);
    const MapResult near_tie = left_farthest(fn, set, c.center, loose);
    report.evaluations += 2;
    if (near_tie.attainers.size() >= 2) {
      // D(p, .) - D(q, .) increases along q - p, so bracket the crossing on
      // that line through the center and bisect.
      const Vector& p = near_tie.attainers[0];
      const Vector& q = near_tie.attainers[1];
      const Vector dir = q - p;
      double h = 1e-6;
      for (int k = 0; k < 40; ++k, h *= 4.0) {
        const Vector a = c.center - h * dir;
        const Vector b = c.center + h * dir;
        if (!fn.in_interior(a) || !fn.in_interior(b)) break;
        const auto y = bisect_switch(fn, MapKind::LeftFarthest, p, q, a, b, report.evaluations);
        if (!y) continue;
        ++report.evaluations;
        witnesses.offer(MapKind::LeftFarthest, *y, eval(*y));
        break;
      }
    }
  }

  const ScanOutcome scan = scan_grid(MapKind::LeftFarthest, eval, grid, opts, report);
  report.tallies.push_back(scan.tally);
  grid_witnesses(MapKind::LeftFarthest, grid, scan.results, witnesses);
  bisect_edges(fn, MapKind::LeftFarthest, eval, grid, scan.results, witnesses, report.evaluations);
  report.witnesses = witnesses.take();
  return report;
}

ProbeReport curious_set_probe(std::size_t resolution, const Grid& grid, double t_max,
                              const ProbeOptions& opts) {
  if (resolution == 0) throw InvalidArgument("curve resolution must be positive");
  if (!(t_max >= 0.0)) throw InvalidArgument("curve parameter range must be nonnegative");
  const LegendreFunction fn = LegendreFunction::entropy(2);
  require_grid(fn, grid);
  const double dt = resolution == 1 ? 0.0 : t_max / static_cast<double>(resolution - 1);
  std::vector<Vector> curve;
  curve.reserve(resolution);
  double step = 0.0;
  for (std::size_t k = 0; k < resolution; ++k) {
    curve.push_back(curve_point(dt * static_cast<double>(k)));
    if (k > 0) step = std::max(step, norm2(curve[k] - curve[k - 1]));
  }
  const DistanceTable table(fn, curve);
  ProbeReport report{"curious", grid, opts.tie_tol, grid.size(), {}, {}, 0, {}, {}};
  const auto extrema = parallel_map<IndexedExtremum>(
      grid.size(), opts.jobs, [&](std::size_t i) { return table.right_min(grid.point(i), opts.tie_tol); });
  report.evaluations += grid.size();

  MapTally tally{MapKind::RightNearest, 0, 0};
  std::size_t raw_ties = 0;
  WitnessList witnesses(fn, opts.tie_tol, opts.max_witnesses);
  for (std::size_t i = 0; i < extrema.size(); ++i) {
    const IndexedExtremum& e = extrema[i];
    const bool tied = e.indices.size() > 1;
    const bool robust = tied && e.indices.back() - e.indices.front() > kRobustSpread;
    raw_ties += tied ? 1 : 0;
    if (robust) {
      ++tally.tied;
      witnesses.offer(MapKind::RightNearest, grid.point(i), table.to_map_result(e, opts.tie_tol));
    } else {
      ++tally.single_valued;
    }
    if (opts.keep_rows) report.rows.push_back({MapKind::RightNearest, grid.point(i), e.value, robust});
  }
  report.tallies.push_back(tally);
  report.witnesses = witnesses.take();
  report.metrics["curve_points"] = static_cast<double>(resolution);
  report.metrics["curve_step"] = step;
  report.metrics["robust_spread"] = static_cast<double>(kRobustSpread);
  report.metrics["raw_ties"] = static_cast<double>(raw_ties);
  report.metrics["robust_ties"] = static_cast<double>(tally.tied);

  if (t_max >= 1.0) {
    // Euclidean distance from the chord midpoint to the curve: sampled
    // minimum refined by ternary search in the neighbouring cells
    const Vector m = 0.5 * (curve_point(0.0) + curve_point(1.0));
    auto dist = [&](double t) { return norm2(curve_point(t) - m); };
    std::size_t best = 0;
    for (std::size_t k = 1; k < resolution; ++k) {
      if (norm2(curve[k] - m) < norm2(curve[best] - m)) best = k;
    }
    double lo = std::max(0.0, dt * (static_cast<double>(best) - 1.0));
    double hi = std::min(t_max, dt * (static_cast<double>(best) + 1.0));
    for (int it = 0; it < 200; ++it) {
      const double m1 = lo + (hi - lo) / 3.0;
      const double m2 = hi - (hi - lo) / 3.0;
      if (dist(m1) < dist(m2)) {
        hi = m2;
      } else {
        lo = m1;
      }
    }
    report.metrics["nonconvexity_gap"] = std::min(dist(0.5 * (lo + hi)), norm2(curve[best] - m));
  }
  return report;
}

ProbeReport single_valuedness_scan(const LegendreFunction& fn, const CompactSet& set, const Grid& grid,
                                   const ProbeOptions& opts) {
  require_grid(fn, grid);
  ProbeReport report{"scan", grid, opts.tie_tol, grid.size(), {}, {}, 0, {}, {}};
  WitnessList witnesses(fn, opts.tie_tol, opts.max_witnesses);
  MapOptions mo = opts.map;
  mo.tie_tol = opts.tie_tol;
  for (MapKind map : {MapKind::LeftNearest, MapKind::RightNearest, MapKind::LeftFarthest,
                      MapKind::RightFarthest}) {
    const Evaluator eval = [&](const Vector& z) { return compute_map(map, fn, set, z, mo); };
    const ScanOutcome scan = scan_grid(map, eval, grid, opts, report);
    report.tallies.push_back(scan.tally);
    grid_witnesses(map, grid, scan.results, witnesses);
  }
  report.witnesses = witnesses.take();
  return report;
}

}  // namespace bregman::probe
