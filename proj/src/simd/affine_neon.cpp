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

#include <arm_neon.h>

#include <cmath>

#include "kernels.hpp"

namespace bregman::simd::neon_impl {
namespace {

inline float64x2_t block(const KernelArgs& a, std::size_t i) {
  float64x2_t acc = vld1q_f64(a.offsets + i);
  for (std::size_t j = 0; j < a.dim; ++j) {
    acc = vfmaq_n_f64(acc, vld1q_f64(a.coeffs + j * a.count + i), a.z[j]);
  }
  return acc;
}

inline double tail_score(const KernelArgs& a, std::size_t i) {
  double s = a.offsets[i];
  for (std::size_t j = 0; j < a.dim; ++j) s = std::fma(a.coeffs[j * a.count + i], a.z[j], s);
  return s;
}

template <bool kMin>
Extremum extremum(const KernelArgs& a) {
  Extremum best{0.0, 0};
  bool have = false;
  std::size_t i = 0;
  for (; i + 2 <= a.count; i += 2) {
    double lanes[2];
    vst1q_f64(lanes, block(a, i));
    for (std::size_t l = 0; l < 2; ++l) {
      if (!have || (kMin ? lanes[l] < best.value : lanes[l] > best.value)) {
        best = {lanes[l], i + l};
        have = true;
      }
    }
  }
  for (; i < a.count; ++i) {
    const double s = tail_score(a, i);
    if (!have || (kMin ? s < best.value : s > best.value)) {
      best = {s, i};
      have = true;
    }
  }
  return best;
}

}  // namespace

void scores(const KernelArgs& a, double* out) {
  std::size_t i = 0;
  for (; i + 2 <= a.count; i += 2) vst1q_f64(out + i, block(a, i));
  for (; i < a.count; ++i) out[i] = tail_score(a, i);
}

Extremum argmin(const KernelArgs& a) { return extremum<true>(a); }
Extremum argmax(const KernelArgs& a) { return extremum<false>(a); }

}  // namespace bregman::simd::neon_impl
