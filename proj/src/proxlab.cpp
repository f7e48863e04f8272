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

#include "bregman/proxlab.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <string>

#include "bregman/errors.hpp"
#include "bregman/sets.hpp"
#include "bregman/simd/affine.hpp"

namespace bregman::prox {
namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kDistinct = 1e-9;

// A candidate extremizer: an endpoint or the vertex of one piece, with the
// objective evaluated against the true g.
struct Candidate {
  double point;
  double value;
};

// Candidates of every piece for extremizing A w^2 + B w over its closure, in
// fixed slots (lo, hi, vertex) so that a candidate keeps its identity as the
// query moves; absent slots hold the neutral value.
std::vector<Candidate> candidates(const PiecewiseFunction& g, double quad, double lin,
                                  const std::function<double(double)>& objective, bool maximize) {
  const double neutral = maximize ? -kInf : kInf;
  std::vector<Candidate> out;
  for (const Piece& p : g.pieces()) {
    // objective restricted to the piece: a w^2 + b w + const
    const double a = maximize ? quad - p.c2 : p.c2 + quad;
    const double b = maximize ? lin - p.c1 : p.c1 + lin;
    const bool has_vertex = maximize ? a < 0.0 : a > 0.0;
    for (const auto& [present, w] : {std::pair{std::isfinite(p.lo), p.lo},
                                     std::pair{std::isfinite(p.hi), p.hi},
                                     std::pair{has_vertex, has_vertex ? std::clamp(-b / (2.0 * a), p.lo, p.hi) : 0.0}}) {
      out.push_back(present ? Candidate{w, objective(w)} : Candidate{0.0, neutral});
    }
  }
  return out;
}

MapResult collect(const std::vector<Candidate>& cands, bool maximize, double tie_tol) {
  double best = maximize ? -kInf : kInf;
  for (const auto& c : cands) best = maximize ? std::max(best, c.value) : std::min(best, c.value);
  MapResult r{best, {}, tie_tol};
  std::vector<double> pts;
  for (const auto& c : cands) {
    if (!std::isfinite(c.value) || std::abs(c.value - best) > tie_tol) continue;
    const bool dup = std::any_of(pts.begin(), pts.end(),
                                 [&](double q) { return std::abs(q - c.point) <= kDistinct; });
    if (!dup) pts.push_back(c.point);
  }
  std::sort(pts.begin(), pts.end());
  for (double w : pts) r.attainers.push_back(Vector{w});
  return r;
}

void require_lambda(const PiecewiseFunction& g, double lambda) {
  const double lg = thresholds(g).lambda_g;
  if (!(lambda > 0.0 && lambda < lg)) {
    throw InvalidArgument("lambda = " + std::to_string(lambda) + " outside (0, lambda_g = " +
                          std::to_string(lg) + ")");
  }
}

void require_mu(const PiecewiseFunction& g, double mu) {
  const double mg = thresholds(g).mu_g;
  if (!(mu > mg) || !std::isfinite(mu)) {
    throw InvalidArgument("mu = " + std::to_string(mu) + " must exceed mu_g = " + std::to_string(mg));
  }
}

std::vector<Candidate> prox_candidates(const PiecewiseFunction& g, double lambda, double x) {
  auto obj = [&](double w) { return g(w) + (x - w) * (x - w) / (2.0 * lambda); };
  return candidates(g, 1.0 / (2.0 * lambda), -x / lambda, obj, false);
}

std::vector<Candidate> farthest_candidates(const PiecewiseFunction& g, double mu, double y) {
  auto obj = [&](double x) { return (y - x) * (y - x) / (2.0 * mu) - g(x); };
  return candidates(g, 1.0 / (2.0 * mu), -y / mu, obj, true);
}

std::size_t winner(const std::vector<Candidate>& b, bool maximize) {
  std::size_t w = 0;
  for (std::size_t i = 1; i < b.size(); ++i) {
    if (maximize ? b[i].value > b[w].value : b[i].value < b[w].value) w = i;
  }
  return w;
}

std::optional<double> find_tie(const std::function<std::vector<Candidate>(double)>& pieces,
                               const std::function<MapResult(double)>& verify, bool maximize,
                               double lo, double hi, std::size_t grid) {
  grid = std::max<std::size_t>(grid, 2);
  double prev_x = lo;
  auto prev = pieces(prev_x);
  std::size_t prev_w = winner(prev, maximize);
  for (std::size_t k = 1; k < grid; ++k) {
    const double x = lo + (hi - lo) * static_cast<double>(k) / static_cast<double>(grid - 1);
    auto cur = pieces(x);
    const std::size_t w = winner(cur, maximize);
    if (w != prev_w) {
      // gap(t) = value of candidate w - value of candidate prev_w changes sign on [prev_x, x]
      double a = prev_x;
      double b = x;
      auto gap = [&](double t) {
        const auto pb = pieces(t);
        return pb[w].value - pb[prev_w].value;
      };
      const double ga = gap(a);
      for (int it = 0; it < 200 && b - a > 1e-15 * std::max(1.0, std::abs(a)); ++it) {
        const double mid = 0.5 * (a + b);
        const double gm = gap(mid);
        if ((gm > 0.0) == (ga > 0.0)) {
          a = mid;
        } else {
          b = mid;
        }
      }
      for (double t : {a, b, 0.5 * (a + b)}) {
        if (verify(t).tied()) return t;
      }
    }
    prev_x = x;
    prev = std::move(cur);
    prev_w = w;
  }
  return std::nullopt;
}

}  // namespace

std::string_view piece_form_name(PieceForm f) {
  switch (f) {
    case PieceForm::Quadratic: return "quadratic";
    case PieceForm::Constant: return "constant";
    case PieceForm::Indicator: return "indicator";
  }
  return "unknown";
}

bool Piece::contains(double x) const noexcept {
  const bool above = lo_closed ? x >= lo : x > lo;
  const bool below = hi_closed ? x <= hi : x < hi;
  return above && below;
}

double Piece::form_value(double x) const noexcept { return (c2 * x + c1) * x + c0; }

Piece Piece::quadratic(double lo, double hi, double c2, double c1, double c0) {
  return {lo, hi, std::isfinite(lo), std::isfinite(hi), PieceForm::Quadratic, c2, c1, c0};
}

Piece Piece::constant(double lo, double hi, double level) {
  return {lo, hi, std::isfinite(lo), std::isfinite(hi), PieceForm::Constant, 0.0, 0.0, level};
}

Piece Piece::indicator(double lo, double hi) {
  return {lo, hi, std::isfinite(lo), std::isfinite(hi), PieceForm::Indicator, 0.0, 0.0, 0.0};
}

PiecewiseFunction::PiecewiseFunction(std::vector<Piece> pieces) : pieces_(std::move(pieces)) {
  if (pieces_.empty()) throw InvalidArgument("piecewise function needs at least one piece");
  std::sort(pieces_.begin(), pieces_.end(), [](const Piece& a, const Piece& b) { return a.lo < b.lo; });
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    Piece& p = pieces_[i];
    if (std::isnan(p.lo) || std::isnan(p.hi) || !(p.lo <= p.hi)) {
      throw InvalidArgument("piece " + std::to_string(i) + " has lo > hi");
    }
    if (!std::isfinite(p.lo)) p.lo_closed = false;
    if (!std::isfinite(p.hi)) p.hi_closed = false;
    if (p.lo == p.hi && !(p.lo_closed && p.hi_closed)) {
      throw InvalidArgument("piece " + std::to_string(i) + " is empty");
    }
    if (p.form != PieceForm::Quadratic && (p.c2 != 0.0 || p.c1 != 0.0)) {
      throw InvalidArgument("constant/indicator piece " + std::to_string(i) + " must be flat");
    }
    if (p.form == PieceForm::Indicator && p.c0 != 0.0) {
      throw InvalidArgument("indicator piece " + std::to_string(i) + " must be 0");
    }
    if (!std::isfinite(p.c2) || !std::isfinite(p.c1) || !std::isfinite(p.c0)) {
      throw InvalidArgument("piece " + std::to_string(i) + " has non-finite coefficients");
    }
    if (i > 0) {
      const Piece& q = pieces_[i - 1];
      if (q.hi > p.lo || (q.hi == p.lo && q.hi_closed && p.lo_closed)) {
        throw InvalidArgument("pieces " + std::to_string(i - 1) + " and " + std::to_string(i) + " overlap");
      }
    }
  }
  // lower semicontinuity at finite open endpoints: a closed neighbour must
  // carry a value no larger than the one-sided limit
  for (std::size_t i = 0; i < pieces_.size(); ++i) {
    const Piece& p = pieces_[i];
    for (const bool at_lo : {true, false}) {
      const double e = at_lo ? p.lo : p.hi;
      const bool closed = at_lo ? p.lo_closed : p.hi_closed;
      if (!std::isfinite(e) || closed) continue;
      const double limit = p.form_value(e);
      const double at = (*this)(e);
      if (!(at <= limit + 1e-12 * std::max(1.0, std::abs(limit)))) {
        throw InvalidArgument("not lower semicontinuous at x = " + std::to_string(e));
      }
    }
  }
}

PiecewiseFunction PiecewiseFunction::halved_square() {
  return PiecewiseFunction({Piece::quadratic(-kInf, kInf, 0.5, 0.0, 0.0)});
}

PiecewiseFunction PiecewiseFunction::indicator(double a, double b) {
  if (!(a <= b)) throw InvalidArgument("indicator needs a <= b");
  return PiecewiseFunction({Piece::indicator(a, b)});
}

PiecewiseFunction PiecewiseFunction::step(double a, double b, double level) {
  if (!(a < b)) throw InvalidArgument("step function needs a < b");
  const double mid = 0.5 * (a + b);
  Piece upper = Piece::constant(mid, b, level);
  upper.lo_closed = false;
  return PiecewiseFunction({Piece::constant(a, mid, 0.0), upper});
}

double PiecewiseFunction::operator()(double x) const noexcept {
  for (const Piece& p : pieces_) {
    if (p.contains(x)) return p.form_value(x);
  }
  return kInf;
}

Thresholds thresholds(const PiecewiseFunction& g) {
  Thresholds t{kInf, 0.0};
  for (const Piece& p : g.pieces()) {
    const bool unbounded = !std::isfinite(p.lo) || !std::isfinite(p.hi);
    if (!unbounded) continue;
    if (p.c2 < 0.0) t.lambda_g = std::min(t.lambda_g, -1.0 / (2.0 * p.c2));
    t.mu_g = std::max(t.mu_g, p.c2 > 0.0 ? 1.0 / (2.0 * p.c2) : kInf);
  }
  return t;
}

double moreau_envelope(const PiecewiseFunction& g, double lambda, double x) {
  return prox(g, lambda, x).value;
}

MapResult prox(const PiecewiseFunction& g, double lambda, double x, double tie_tol) {
  require_lambda(g, lambda);
  return collect(prox_candidates(g, lambda, x), false, tie_tol);
}

double farthest_envelope(const PiecewiseFunction& g, double mu, double y) {
  return farthest_map(g, mu, y).value;
}

MapResult farthest_map(const PiecewiseFunction& g, double mu, double y, double tie_tol) {
  require_mu(g, mu);
  return collect(farthest_candidates(g, mu, y), true, tie_tol);
}

ChebyshevPoint chebyshev_point(const PiecewiseFunction& g, double mu) {
  require_mu(g, mu);
  // direction of descent of phi at y: +1 if y < conv Q(y), -1 if above, 0 inside
  auto direction = [&](double y) {
    const MapResult q = farthest_map(g, mu, y, 0.0);
    if (y < q.attainers.front()[0]) return 1;
    if (y > q.attainers.back()[0]) return -1;
    return 0;
  };
  double lo = g.domain_lo();
  double hi = g.domain_hi();
  if (!std::isfinite(lo) || !std::isfinite(hi)) {
    const double c = std::isfinite(lo) ? lo : (std::isfinite(hi) ? hi : 0.0);
    double width = 1.0;
    int doublings = 0;
    lo = c - width;
    hi = c + width;
    while (!(direction(lo) >= 0 && direction(hi) <= 0)) {
      if (++doublings > 60) throw ConvergenceError("could not bracket the Chebyshev point");
      width *= 2.0;
      lo = c - width;
      hi = c + width;
    }
  }
  ChebyshevPoint out;
  double p = 0.5 * (lo + hi);
  std::size_t it = 0;
  if (direction(lo) == 0) {
    p = lo;
  } else if (direction(hi) == 0) {
    p = hi;
  } else {
    for (; it < 200; ++it) {
      p = 0.5 * (lo + hi);
      const int d = direction(p);
      if (d == 0 || p == lo || p == hi) break;
      if (d > 0) {
        lo = p;
      } else {
        hi = p;
      }
    }
  }
  out.point = p;
  out.iterations = it;
  out.farthest = farthest_map(g, mu, p);
  const HullMembership h = convex_hull_membership(Vector{p}, out.farthest.attainers, 1e-8);
  out.weights = h.weights;
  out.residual = h.residual;
  return out;
}

GridConjugate::GridConjugate(const PiecewiseFunction& g, double k, const IdentityCheckOptions& opts) {
  const std::size_t n = std::max<std::size_t>(opts.grid_points, 2);
  const double step = (opts.window_hi - opts.window_lo) / static_cast<double>(n - 1);
  std::vector<double> nodes;
  std::vector<double> offsets;
  auto add = [&](double x) {
    const double v = g(x) + 0.5 * k * x * x;
    if (!std::isfinite(v)) return;
    nodes.push_back(x);
    offsets.push_back(-v);
  };
  for (std::size_t i = 0; i < n; ++i) add(opts.window_lo + step * static_cast<double>(i));
  for (const Piece& p : g.pieces()) {
    if (p.lo_closed && p.lo >= opts.window_lo && p.lo <= opts.window_hi) add(p.lo);
    if (p.hi_closed && p.hi >= opts.window_lo && p.hi <= opts.window_hi) add(p.hi);
  }
  if (nodes.empty()) throw InvalidArgument("conjugate grid misses dom g");
  family_.count = nodes.size();
  family_.dim = 1;
  family_.offsets = std::move(offsets);
  family_.coeffs = std::move(nodes);
}

double GridConjugate::operator()(double z) const {
  const double zz[1] = {z};
  return simd::affine_max(family_, zz).value;
}

IdentityCheckReport gradient_identity_check(const PiecewiseFunction& g, Identity which,
                                            double parameter, std::span<const double> samples,
                                            const IdentityCheckOptions& opts) {
  const double k = which == Identity::Prox ? 1.0 / parameter : -1.0 / parameter;
  if (which == Identity::Prox) {
    require_lambda(g, parameter);
  } else {
    require_mu(g, parameter);
  }
  const GridConjugate conj(g, k, opts);
  IdentityCheckReport rep;
  for (double z : samples) {
    const MapResult m = which == Identity::Prox ? prox(g, parameter, parameter * z, opts.tie_tol)
                                                : farthest_map(g, parameter, -parameter * z, opts.tie_tol);
    if (m.tied()) {
      rep.skipped.push_back(z);
      continue;
    }
    const double fd = (conj(z + opts.fd_step) - conj(z - opts.fd_step)) / (2.0 * opts.fd_step);
    const double r = std::abs(fd - m.attainers.front()[0]);
    rep.used.push_back(z);
    rep.residuals.push_back(r);
    rep.max_residual = std::max(rep.max_residual, r);
  }
  return rep;
}

std::optional<double> find_prox_tie(const PiecewiseFunction& g, double lambda, double lo, double hi,
                                    std::size_t grid) {
  require_lambda(g, lambda);
  return find_tie([&](double x) { return prox_candidates(g, lambda, x); },
                  [&](double x) { return prox(g, lambda, x); }, false, lo, hi, grid);
}

std::optional<double> find_farthest_tie(const PiecewiseFunction& g, double mu, double lo, double hi,
                                        std::size_t grid) {
  require_mu(g, mu);
  return find_tie([&](double y) { return farthest_candidates(g, mu, y); },
                  [&](double y) { return farthest_map(g, mu, y); }, true, lo, hi, grid);
}

}  // namespace bregman::prox
