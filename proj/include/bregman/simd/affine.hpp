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

// Batched evaluation of affine families
//
//     s_i(z) = offset_i + sum_j coeff_{j,i} z_j,   i = 0..count-1
//
// with fused argmin / argmax. Every distance scan in the library reduces to
// this form once the per-point terms of D_f are precomputed:
//
//     D(c_i, y) = f(c_i) - <grad f(y), c_i> + f*(grad f(y))
//     D(x, c_i) = f*(grad f(c_i)) - <grad f(c_i), x> + f(x)
//
// and grid maximization of <z, x_k> - h(x_k) (numerical conjugates) is the
// same kernel in one dimension.
//
// The scalar code is the reference; AVX2+FMA and NEON variants are selected
// at runtime and must agree with it to rounding.

#include <cstddef>
#include <span>
#include <string_view>
#include <vector>

namespace bregman::simd {

enum class Backend { Scalar, Avx2, Neon };

std::string_view backend_name(Backend b);
bool backend_available(Backend b);

/// Backend used by the dispatching entry points. Chosen once from CPU
/// features; the environment variable BREGMAN_SIMD={scalar,avx2,neon,auto}
/// overrides the choice.
Backend active_backend();
/// Forces a backend (throws InvalidArgument if unavailable on this CPU).
void set_backend(Backend b);
/// Returns to automatic selection.
void reset_backend();

struct AffineFamily {
  std::size_t count = 0;
  std::size_t dim = 0;
  std::vector<double> offsets;  ///< size count
  std::vector<double> coeffs;   ///< dim-major: coeffs[j * count + i]

  AffineFamily() = default;
  AffineFamily(std::size_t count, std::size_t dim)
      : count(count), dim(dim), offsets(count, 0.0), coeffs(count * dim, 0.0) {}

  double& coeff(std::size_t j, std::size_t i) { return coeffs[j * count + i]; }
  double coeff(std::size_t j, std::size_t i) const { return coeffs[j * count + i]; }
};

/// First index among equal extreme values.
struct Extremum {
  double value;
  std::size_t index;
};

void affine_scores(const AffineFamily& fam, std::span<const double> z, std::span<double> out);
Extremum affine_min(const AffineFamily& fam, std::span<const double> z);
Extremum affine_max(const AffineFamily& fam, std::span<const double> z);

void affine_scores(Backend b, const AffineFamily& fam, std::span<const double> z,
                   std::span<double> out);
Extremum affine_min(Backend b, const AffineFamily& fam, std::span<const double> z);
Extremum affine_max(Backend b, const AffineFamily& fam, std::span<const double> z);

}  // namespace bregman::simd
