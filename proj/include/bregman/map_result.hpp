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

#include <vector>

#include "bregman/vector.hpp"

namespace bregman {

/// Default absolute tolerance on distance values for reporting ties.
inline constexpr double kDefaultTieTol = 1e-9;

/// Value of a nearest/farthest distance together with every attaining point.
/// Attainers realize `value` within `tie_tol` and are pairwise distinct beyond
/// 1e-9; they are sorted lexicographically.
struct MapResult {
  double value = 0.0;
  std::vector<Vector> attainers;
  double tie_tol = kDefaultTieTol;

  bool tied() const noexcept { return attainers.size() > 1; }
};

}  // namespace bregman
