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

#include "bregman/distance.hpp"

#include <cmath>
#include <limits>

namespace bregman {

double distance(const LegendreFunction& fn, const Vector& x, const Vector& y) {
  require_dim(x, fn.dim());
  require_dim(y, fn.dim());
  double s = 0.0;
  for (std::size_t j = 0; j < fn.dim(); ++j) {
    const double d = scalar::distance(fn.kind(j), x[j], y[j]);
    if (d == std::numeric_limits<double>::infinity()) return d;
    s += d;
  }
  return s;
}

double distance_dual_identity_residual(const LegendreFunction& fn, const Vector& x,
                                       const Vector& y) {
  fn.require_interior(x);
  fn.require_interior(y);
  const double primal = distance(fn, x, y);
  const double dual = distance(fn.conjugate(), fn.gradient(y), fn.gradient(x));
  return std::abs(primal - dual);
}

}  // namespace bregman
