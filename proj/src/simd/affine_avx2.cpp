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

// Compiled with -mavx2 -mfma; only reached after a runtime CPU check.
#include <immintrin.h>

#include "kernels.hpp"

namespace bregman::simd::avx2_impl {
namespace {

inline __m256d block(const KernelArgs& a, std::size_t i) {
  __m256d acc = _mm256_loadu_pd(a.offsets + i);
  for (std::size_t j = 0; j < a.dim; ++j) {
    acc = _mm256_fmadd_pd(_mm256_loadu_pd(a.coeffs + j * a.count + i), _mm256_set1_pd(a.z[j]), acc);
  }
  return acc;
}

inline double tail_score(const KernelArgs& a, std::size_t i) {
  double s = a.offsets[i];
  for (std::size_t j = 0; j < a.dim; ++j) s = __builtin_fma(a.coeffs[j * a.count + i], a.z[j], s);
  return s;
}

template <bool kMin>
Extremum extremum(const KernelArgs& a) {
  constexpr int kCmp = kMin ? _CMP_LT_OQ : _CMP_GT_OQ;
  std::size_t i = 0;
  Extremum best{0.0, 0};
  bool have = false;
  if (a.count >= 4) {
    __m256d best_v = block(a, 0);
    __m256d best_i = _mm256_setr_pd(0.0, 1.0, 2.0, 3.0);
    __m256d idx = best_i;
    const __m256d four = _mm256_set1_pd(4.0);
    for (i = 4; i + 4 <= a.count; i += 4) {
      idx = _mm256_add_pd(idx, four);
      const __m256d v = block(a, i);
      const __m256d better = _mm256_cmp_pd(v, best_v, kCmp);
      best_v = _mm256_blendv_pd(best_v, v, better);
      best_i = _mm256_blendv_pd(best_i, idx, better);
    }
    alignas(32) double vals[4];
    alignas(32) double ids[4];
    _mm256_store_pd(vals, best_v);
    _mm256_store_pd(ids, best_i);
    best = {vals[0], static_cast<std::size_t>(ids[0])};
    for (int l = 1; l < 4; ++l) {
      const auto li = static_cast<std::size_t>(ids[l]);
      const bool strictly = kMin ? vals[l] < best.value : vals[l] > best.value;
      if (strictly || (vals[l] == best.value && li < best.index)) best = {vals[l], li};
    }
    have = true;
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
  for (; i + 4 <= a.count; i += 4) _mm256_storeu_pd(out + i, block(a, i));
  for (; i < a.count; ++i) out[i] = tail_score(a, i);
}

Extremum argmin(const KernelArgs& a) { return extremum<true>(a); }
Extremum argmax(const KernelArgs& a) { return extremum<false>(a); }

}  // namespace bregman::simd::avx2_impl
