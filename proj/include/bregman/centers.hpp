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
#include <string>
#include <vector>

#include "bregman/legendre.hpp"
#include "bregman/maps.hpp"
#include "bregman/sets.hpp"
#include "bregman/vector.hpp"

namespace bregman {

/// Convex-combination certificate for a Chebyshev center.
///
/// Right center x:  grad f(x) in conv grad f(P), P = attained right farthest points.
/// Left center y:   y in conv P, P = attained left farthest points.
/// `residual` is the sup-norm reconstruction error in the coordinates where the
/// characterization lives (dual for right centers, primal for left centers).
struct Certificate {
  std::vector<Vector> points;
  std::vector<double> weights;
  double residual = 0.0;
};

struct SolverTrace {
  std::string method;
  std::size_t iterations = 0;
  double final_step = 0.0;
  bool converged = false;
};

struct CenterResult {
  Vector center;
  double radius = 0.0;
  Certificate certificate;
  SolverTrace trace;
};

struct CenterOptions {
  /// Certificate residual required to report convergence.
  double tol = 1e-6;
  /// Farthest points within this (times max(1, radius)) of the radius enter
  /// the certificate.
  double certificate_tie_tol = 1e-8;
  std::size_t max_iterations = 10000;
  MapOptions map;
};

/// argmin over x in int dom f of sup_{y in C} D(x, y) (a convex function).
/// One dimension: ternary search between the extreme points. Higher
/// dimension: the farthest point is attained on a finite candidate set
/// (points, vertices) and the minimax is solved by a log-barrier Newton
/// method; segments add refined farthest points until the candidate set is
/// exact to rounding.
CenterResult right_center(const LegendreFunction& fn, const CompactSet& set,
                          const CenterOptions& opts = {});

/// argmin over y of sup_{x in C} D(x, y), computed as grad f* of the right
/// center of grad f(ext C) under f*. The left farthest distance only sees the
/// extreme points of C, so this is exact for every set variant.
CenterResult left_center(const LegendreFunction& fn, const CompactSet& set,
                         const CenterOptions& opts = {});

struct IntervalCenters {
  double right;  ///< (f*(b*) - f*(a*)) / (b* - a*)
  double left;   ///< grad f*((f(b) - f(a)) / (b - a))
};

/// Closed-form right/left Chebyshev centers of [a, b] for a 1-D function.
IntervalCenters interval_center_closed_form(const LegendreFunction& fn, double a, double b);

/// |left radius of C under f - right radius of C* under f*|.
double radius_duality_check(const LegendreFunction& fn, const CompactSet& set,
                            const CenterOptions& opts = {});

}  // namespace bregman
