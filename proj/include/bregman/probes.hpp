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
#include <map>
#include <string>
#include <vector>

#include "bregman/legendre.hpp"
#include "bregman/map_result.hpp"
#include "bregman/maps.hpp"
#include "bregman/sets.hpp"
#include "bregman/vector.hpp"

namespace bregman::probe {

/// Tensor grid with `resolution` points per axis between lo and hi
/// (inclusive). Points are enumerated lexicographically, last axis fastest.
struct Grid {
  Vector lo;
  Vector hi;
  std::size_t resolution = 2;

  std::size_t dim() const noexcept { return lo.dim(); }
  std::size_t size() const noexcept;
  Vector point(std::size_t index) const;
};

/// A query point where a map has two or more attainers.
struct Witness {
  MapKind map;
  Vector point;
  std::vector<Vector> attainers;
  /// Spread of the recomputed distances over the attainers.
  double gap = 0.0;
};

struct MapTally {
  MapKind map;
  std::size_t single_valued = 0;
  std::size_t tied = 0;

  double tie_fraction() const noexcept;
};

/// One CSV row: the map value at a grid point and whether it was tied.
struct GridRow {
  MapKind map;
  Vector point;
  double value = 0.0;
  bool tie = false;
};

struct ProbeReport {
  std::string probe;
  Grid grid;
  double tie_tol = kDefaultTieTol;
  std::size_t total = 0;
  /// One tally per scanned map; single_valued + tied == total for each.
  std::vector<MapTally> tallies;
  std::vector<Witness> witnesses;
  std::size_t evaluations = 0;
  /// Probe-specific scalar findings (sorted by name).
  std::map<std::string, double> metrics;
  std::vector<GridRow> rows;
};

struct ProbeOptions {
  double tie_tol = kDefaultTieTol;
  std::size_t max_witnesses = 8;
  /// Worker threads; 0 means hardware concurrency.
  std::size_t jobs = 0;
  bool keep_rows = false;
  MapOptions map;
};

/// Distance realized by `attainer` for the given map at `query`.
double attainer_distance(const LegendreFunction& fn, MapKind map, const Vector& attainer,
                         const Vector& query);

/// True when `w` has at least two distinct attainers whose recomputed
/// distances agree within tie_tol.
bool reverify(const LegendreFunction& fn, const Witness& w, double tie_tol);

/// Left-nearest ties over a finite set: grid scan, then bisection on every
/// grid edge whose nearest point switches.
ProbeReport chebyshev_probe(const LegendreFunction& fn, const CompactSet& set, const Grid& grid,
                            const ProbeOptions& opts = {});

/// Left-farthest ties: the left Chebyshev center (polished so that its two
/// farthest points agree) is tried first, then grid-edge bisection.
ProbeReport klee_probe(const LegendreFunction& fn, const CompactSet& set, const Grid& grid,
                       const ProbeOptions& opts = {});

/// Right-nearest scan of the entropy curve {(e^t, e^{2t}) : t in [0, t_max]}
/// sampled at `resolution` points. A tie is robust when its attainers are more
/// than 10 curve steps apart; nearby attainers are discretization artifacts.
/// Also reports the Euclidean distance from the midpoint of (1, 1) and
/// (e, e^2) to the curve as a nonconvexity witness.
ProbeReport curious_set_probe(std::size_t resolution, const Grid& grid, double t_max = 1.0,
                              const ProbeOptions& opts = {});

/// Tie counts of all four maps over the grid.
ProbeReport single_valuedness_scan(const LegendreFunction& fn, const CompactSet& set,
                                   const Grid& grid, const ProbeOptions& opts = {});

}  // namespace bregman::probe
