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

#include <atomic>
#include <cstdlib>
#include <string>

#include "bregman/errors.hpp"
#include "kernels.hpp"

namespace bregman::simd {
namespace {

Backend detect() {
  if (const char* env = std::getenv("BREGMAN_SIMD")) {
    const std::string v(env);
    if (v == "scalar") return Backend::Scalar;
    if (v == "avx2" && backend_available(Backend::Avx2)) return Backend::Avx2;
    if (v == "neon" && backend_available(Backend::Neon)) return Backend::Neon;
  }
  if (backend_available(Backend::Avx2)) return Backend::Avx2;
  if (backend_available(Backend::Neon)) return Backend::Neon;
  return Backend::Scalar;
}

std::atomic<int>& forced() {
  static std::atomic<int> value{-1};
  return value;
}

KernelArgs args_of(const AffineFamily& fam, std::span<const double> z) {
  if (z.size() != fam.dim) throw DimensionError(fam.dim, z.size());
  if (fam.count == 0) throw InvalidArgument("empty affine family");
  return {fam.offsets.data(), fam.coeffs.data(), fam.count, fam.dim, z.data()};
}

}  // namespace

std::string_view backend_name(Backend b) {
  switch (b) {
    case Backend::Scalar: return "scalar";
    case Backend::Avx2: return "avx2";
    case Backend::Neon: return "neon";
  }
  return "unknown";
}

bool backend_available(Backend b) {
  switch (b) {
    case Backend::Scalar: return true;
    case Backend::Avx2:
#if defined(BREGMAN_HAVE_AVX2)
      return __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
#else
      return false;
#endif
    case Backend::Neon:
#if defined(BREGMAN_HAVE_NEON)
      return true;
#else
      return false;
#endif
  }
  return false;
}

Backend active_backend() {
  static const Backend detected = detect();
  const int f = forced().load(std::memory_order_relaxed);
  return f < 0 ? detected : static_cast<Backend>(f);
}

void set_backend(Backend b) {
  if (!backend_available(b)) {
    throw InvalidArgument("SIMD backend " + std::string(backend_name(b)) + " is not available");
  }
  forced().store(static_cast<int>(b), std::memory_order_relaxed);
}

void reset_backend() { forced().store(-1, std::memory_order_relaxed); }

void affine_scores(Backend b, const AffineFamily& fam, std::span<const double> z,
                   std::span<double> out) {
  const KernelArgs a = args_of(fam, z);
  if (out.size() != fam.count) throw DimensionError(fam.count, out.size());
  switch (b) {
#if defined(BREGMAN_HAVE_AVX2)
    case Backend::Avx2: return avx2_impl::scores(a, out.data());
#endif
#if defined(BREGMAN_HAVE_NEON)
    case Backend::Neon: return neon_impl::scores(a, out.data());
#endif
    default: return scalar_impl::scores(a, out.data());
  }
}

Extremum affine_min(Backend b, const AffineFamily& fam, std::span<const double> z) {
  const KernelArgs a = args_of(fam, z);
  switch (b) {
#if defined(BREGMAN_HAVE_AVX2)
    case Backend::Avx2: return avx2_impl::argmin(a);
#endif
#if defined(BREGMAN_HAVE_NEON)
    case Backend::Neon: return neon_impl::argmin(a);
#endif
    default: return scalar_impl::argmin(a);
  }
}

Extremum affine_max(Backend b, const AffineFamily& fam, std::span<const double> z) {
  const KernelArgs a = args_of(fam, z);
  switch (b) {
#if defined(BREGMAN_HAVE_AVX2)
    case Backend::Avx2: return avx2_impl::argmax(a);
#endif
#if defined(BREGMAN_HAVE_NEON)
    case Backend::Neon: return neon_impl::argmax(a);
#endif
    default: return scalar_impl::argmax(a);
  }
}

void affine_scores(const AffineFamily& fam, std::span<const double> z, std::span<double> out) {
  affine_scores(active_backend(), fam, z, out);
}

Extremum affine_min(const AffineFamily& fam, std::span<const double> z) {
  return affine_min(active_backend(), fam, z);
}

Extremum affine_max(const AffineFamily& fam, std::span<const double> z) {
  return affine_max(active_backend(), fam, z);
}

}  // namespace bregman::simd
