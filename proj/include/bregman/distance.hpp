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

#include "bregman/legendre.hpp"
#include "bregman/vector.hpp"

namespace bregman {

/// D_f(x, y) = f(x) - f(y) - <grad f(y), x - y>, evaluated coordinate-wise in
/// cancellation-free form. Returns +inf when y is not in int dom f or x is not
/// in dom f; only a dimension mismatch throws.
double distance(const LegendreFunction& fn, const Vector& x, const Vector& y);

/// |D_f(x, y) - D_{f*}(grad f(y), grad f(x))|. Both points must be interior.
double distance_dual_identity_residual(const LegendreFunction& fn, const Vector& x,
                                       const Vector& y);

}  // namespace bregman
