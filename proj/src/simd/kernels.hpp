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

#include "bregman/simd/affine.hpp"

namespace bregman::simd {

struct KernelArgs {
  const double* offsets;
  const double* coeffs;
  std::size_t count;
  std::size_t dim;
  const double* z;
};

namespace scalar_impl {
void scores(const KernelArgs& a, double* out);
Extremum argmin(const KernelArgs& a);
Extremum argmax(const KernelArgs& a);
}  // namespace scalar_impl

#if defined(BREGMAN_HAVE_AVX2)
namespace avx2_impl {
void scores(const KernelArgs& a, double* out);
Extremum argmin(const KernelArgs& a);
Extremum argmax(const KernelArgs& a);
}  // namespace avx2_impl
#endif

#if defined(BREGMAN_HAVE_NEON)
namespace neon_impl {
void scores(const KernelArgs& a, double* out);
Extremum argmin(const KernelArgs& a);
Extremum argmax(const KernelArgs& a);
}  // namespace neon_impl
#endif

}  // namespace bregman::simd
