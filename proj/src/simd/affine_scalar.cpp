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

#include "kernels.hpp"

namespace bregman::simd::scalar_impl {
namespace {

inline double score(const KernelArgs& a, std::size_t i) {
  double s = a.offsets[i];
  for (std::size_t j = 0; j < a.dim; ++j) s += a.coeffs[j * a.count + i] * a.z[j];
  return s;
}

}  // namespace

void scores(const KernelArgs& a, double* out) {
  for (std::size_t i = 0; i < a.count; ++i) out[i] = score(a, i);
}

Extremum argmin(const KernelArgs& a) {
  Extremum best{score(a, 0), 0};
  for (std::size_t i = 1; i < a.count; ++i) {
    const double s = score(a, i);
    if (s < best.value) best = {s, i};
  }
  return best;
}

Extremum argmax(const KernelArgs& a) {
  Extremum best{score(a, 0), 0};
  for (std::size_t i = 1; i < a.count; ++i) {
    const double s = score(a, i);
    if (s > best.value) best = {s, i};
  }
  return best;
}

}  // namespace bregman::simd::scalar_impl
