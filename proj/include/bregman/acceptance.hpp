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

// Closed-form reproduction and property suites, one check per acceptance
// criterion. Each check compares the library against an independent oracle
// (hand-derived formulas, naive definitions, exhaustive search) on
// fixed-seed random instances.

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "bregman/legendre.hpp"
#include "bregman/vector.hpp"

namespace bregman::acceptance {

struct CriterionResult {
  int id = 0;
  std::string name;
  bool pass = false;
  /// Worst observed error (or other headline figure) and its limit.
  double worst = 0.0;
  double limit = 0.0;
  std::string detail;
  double seconds = 0.0;
};

struct AcceptanceOptions {
  std::uint64_t seed = 20260311;
  /// Worker threads for the probe criterion (0: hardware concurrency).
  std::size_t jobs = 0;
};

CriterionResult legendre_duality(const AcceptanceOptions& opts);
CriterionResult distance_dual_identity(const AcceptanceOptions& opts);
CriterionResult interval_centers(const AcceptanceOptions& opts);
CriterionResult segment_midpoint(const AcceptanceOptions& opts);
CriterionResult center_certificates(const AcceptanceOptions& opts);
CriterionResult radius_duality(const AcceptanceOptions& opts);
CriterionResult prox_closed_forms(const AcceptanceOptions& opts);
CriterionResult gradient_identities(const AcceptanceOptions& opts);
CriterionResult probe_suite(const AcceptanceOptions& opts);
CriterionResult oracle_equivalence(const AcceptanceOptions& opts);

using Criterion = std::function<CriterionResult(const AcceptanceOptions&)>;
/// All criteria in order 1..10.
std::vector<Criterion> all_criteria();
std::vector<CriterionResult> run_all(const AcceptanceOptions& opts = {});

/// "PASS  1 legendre duality  worst=... limit=...  (detail)"
std::string format_line(const CriterionResult& r);

// Independent oracles, written from the definitions and kept apart from the
// library code paths they check.
namespace oracle {

/// f, f' and f* of the three catalog members, coded directly.
double f(Kind k, double t);
double df(Kind k, double t);
double fconj(Kind k, double s);
/// f(x) - f(y) - f'(y)(x - y), coordinate sums, no rearrangement.
double naive_distance(Kind k, const Vector& x, const Vector& y);

/// Left/right centers of [a, b] from the hand-derived formulas.
double interval_right_center(Kind k, double a, double b);
double interval_left_center(Kind k, double a, double b);

/// sup_k z x_k - h(x_k) over an explicit grid (plain loop).
double grid_conjugate(const std::function<double(double)>& h, double lo, double hi,
                      std::size_t points, double z);

/// min / max of obj over the grid lo + (hi - lo) k / (points - 1).
double grid_min(const std::function<double(double)>& obj, double lo, double hi, std::size_t points);
double grid_max(const std::function<double(double)>& obj, double lo, double hi, std::size_t points);

}  // namespace oracle
}  // namespace bregman::acceptance
