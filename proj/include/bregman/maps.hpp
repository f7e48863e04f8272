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
#include <string_view>

#include "bregman/legendre.hpp"
#include "bregman/map_result.hpp"
#include "bregman/sets.hpp"
#include "bregman/vector.hpp"

namespace bregman {

enum class MapKind { LeftNearest, RightNearest, LeftFarthest, RightFarthest };

std::string_view map_kind_name(MapKind k);
std::optional<MapKind> map_kind_from_name(std::string_view name);

struct MapOptions {
  double tie_tol = kDefaultTieTol;
  /// Samples of the segment parameter for the right maps on segments.
  std::size_t segment_samples = kDefaultSegmentSamples;
};

/// inf / argmin over x in C of D(x, y).
/// Finite sets are scanned exhaustively; intervals and boxes clamp y
/// coordinate-wise (D(., y) is convex, separable and minimized at y); segments
/// are solved by ternary search on the segment parameter.
MapResult left_nearest(const LegendreFunction& fn, const CompactSet& set, const Vector& y,
                       const MapOptions& opts = {});

/// inf / argmin over y in C of D(x, y), computed as
/// grad f* o (left nearest under f* on C*) o grad f.
/// Segments go through a sampled dual image refined by golden-section search;
/// that path is approximate (about 1e-12 in the parameter).
MapResult right_nearest(const LegendreFunction& fn, const CompactSet& set, const Vector& x,
                        const MapOptions& opts = {});

/// sup / argmax over x in C of D(x, y). D(., y) is convex, so the maximum is
/// taken over the extreme points of C.
MapResult left_farthest(const LegendreFunction& fn, const CompactSet& set, const Vector& y,
                        const MapOptions& opts = {});

/// sup / argmax over y in C of D(x, y). Intervals and boxes attain it at
/// endpoints / vertices; segments use the sampled dual route (approximate).
MapResult right_farthest(const LegendreFunction& fn, const CompactSet& set, const Vector& x,
                         const MapOptions& opts = {});

MapResult compute_map(MapKind kind, const LegendreFunction& fn, const CompactSet& set,
                      const Vector& z, const MapOptions& opts = {});

/// |primal value - value of the dual counterpart under f* on C* at grad f(z)|.
/// The primal right maps are evaluated from the definition here, so each
/// residual compares two independent routes.
double duality_transport_check(const LegendreFunction& fn, const CompactSet& set, const Vector& z,
                               MapKind kind, const MapOptions& opts = {});

/// Right maps evaluated straight from the definition (no dual transport).
MapResult right_nearest_direct(const LegendreFunction& fn, const CompactSet& set, const Vector& x,
                               const MapOptions& opts = {});

}  // namespace bregman
