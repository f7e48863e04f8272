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
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "bregman/map_result.hpp"
#include "bregman/simd/affine.hpp"

namespace bregman::prox {

enum class PieceForm { Quadratic, Constant, Indicator };

std::string_view piece_form_name(PieceForm f);

/// c2 x^2 + c1 x + c0 on an interval; `Constant` and `Indicator` pieces keep
/// c2 = c1 = 0 (an indicator piece is the constant 0).
struct Piece {
  double lo;
  double hi;
  bool lo_closed = true;
  bool hi_closed = true;
  PieceForm form = PieceForm::Quadratic;
  double c2 = 0.0;
  double c1 = 0.0;
  double c0 = 0.0;

  bool contains(double x) const noexcept;
  double form_value(double x) const noexcept;

  static Piece quadratic(double lo, double hi, double c2, double c1, double c0);
  static Piece constant(double lo, double hi, double level);
  static Piece indicator(double lo, double hi);
};

/// A proper, lower semicontinuous function of one real variable given by
/// disjoint pieces, +inf off their union.
class PiecewiseFunction {
 public:
  /// Sorts and validates: disjoint pieces, at least one nonempty, and lower
  /// semicontinuity at every finite open endpoint.
  explicit PiecewiseFunction(std::vector<Piece> pieces);

  /// q = x^2 / 2 on R.
  static PiecewiseFunction halved_square();
  static PiecewiseFunction indicator(double a, double b);
  /// 0 on [a, (a+b)/2], `level` on ((a+b)/2, b], +inf elsewhere.
  static PiecewiseFunction step(double a, double b, double level = 1.0);

  double operator()(double x) const noexcept;
  const std::vector<Piece>& pieces() const noexcept { return pieces_; }
  double domain_lo() const noexcept { return pieces_.front().lo; }
  double domain_hi() const noexcept { return pieces_.back().hi; }

 private:
  std::vector<Piece> pieces_;
};

struct Thresholds {
  double lambda_g;  ///< prox-boundedness threshold (may be +inf)
  double mu_g;      ///< inf { mu > 0 : g - q / mu bounded below } (may be +inf)
};

Thresholds thresholds(const PiecewiseFunction& g);

/// e_lambda g(x) = inf_w g(w) + (x - w)^2 / (2 lambda); requires 0 < lambda < lambda_g.
double moreau_envelope(const PiecewiseFunction& g, double lambda, double x);
MapResult prox(const PiecewiseFunction& g, double lambda, double x, double tie_tol = kDefaultTieTol);

/// phi_mu g(y) = sup_x (y - x)^2 / (2 mu) - g(x); requires mu > mu_g.
double farthest_envelope(const PiecewiseFunction& g, double mu, double y);
MapResult farthest_map(const PiecewiseFunction& g, double mu, double y,
                       double tie_tol = kDefaultTieTol);

struct ChebyshevPoint {
  double point = 0.0;
  /// Q_mu g(point) with the default tie tolerance.
  MapResult farthest;
  /// Barycentric weights of `point` over farthest.attainers.
  std::vector<double> weights;
  double residual = 0.0;
  std::size_t iterations = 0;
};

/// The unique minimizer of phi_mu g. phi_mu g is convex with subdifferential
/// (y - conv Q_mu g(y)) / mu, so the point is found by bisection on the sign
/// of that subdifferential; the bracket is the closed hull of dom g, or is
/// widened geometrically (60 doublings at most) when dom g is unbounded.
ChebyshevPoint chebyshev_point(const PiecewiseFunction& g, double mu);

enum class Identity {
  Prox,      ///< grad (g + q/lambda)* = P_lambda g (lambda .)
  Farthest,  ///< grad (g - q/mu)* = Q_mu g (-mu .)
};

struct IdentityCheckOptions {
  double window_lo = -50.0;
  double window_hi = 50.0;
  std::size_t grid_points = 1'000'001;
  double fd_step = 1e-5;
  double tie_tol = kDefaultTieTol;
};

struct IdentityCheckReport {
  double max_residual = 0.0;
  std::vector<double> residuals;  ///< per used sample
  std::vector<double> used;
  std::vector<double> skipped;    ///< samples where the map was multivalued
};

/// Compares a central difference of a grid-maximized conjugate with the
/// proximal / farthest map at each sample. The conjugate oracle maximizes
/// over the grid restricted to dom g (plus the closed piece endpoints).
IdentityCheckReport gradient_identity_check(const PiecewiseFunction& g, Identity which,
                                            double parameter, std::span<const double> samples,
                                            const IdentityCheckOptions& opts = {});

/// h* for h = g + k q, maximized over the oracle grid (k = 1/lambda for the
/// proximal identity, -1/mu for the farthest one).
class GridConjugate {
 public:
  GridConjugate(const PiecewiseFunction& g, double k, const IdentityCheckOptions& opts);
  double operator()(double z) const;

 private:
  simd::AffineFamily family_;
};

/// Locates a point in [lo, hi] where P_lambda g (or Q_mu g) has two distinct
/// values: scans `grid` points for a change of the winning piece and bisects.
std::optional<double> find_prox_tie(const PiecewiseFunction& g, double lambda, double lo,
                                    double hi, std::size_t grid);
std::optional<double> find_farthest_tie(const PiecewiseFunction& g, double mu, double lo,
                                        double hi, std::size_t grid);

}  // namespace bregman::prox
