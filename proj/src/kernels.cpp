// Copyright 2026 The unimap Authors.
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

#include "unimap/kernels.hpp"

#include <atomic>
#include <cstdlib>
#include <cstring>

#include "unimap/error.hpp"

#ifdef UNIMAP_HAVE_AVX2_TU
#include "kernels_avx2.hpp"
#endif

namespace unimap::kernels {

namespace scalar {

void compose(std::span<const std::int32_t> outer,
             std::span<const std::int32_t> inner, std::span<std::int32_t> out) {
  for (std::size_t i = 0; i < inner.size(); ++i) out[i] = outer[inner[i]];
}

std::pair<std::int32_t, std::int32_t> minmax(std::span<const std::int32_t> v) {
  std::int32_t lo = v[0];
  std::int32_t hi = v[0];
  for (std::int32_t x : v) {
    if (x < lo) lo = x;
    if (x > hi) hi = x;
  }
  return {lo, hi};
}

std::uint64_t sum_cubes(std::span<const std::uint32_t> v) {
  std::uint64_t total = 0;
  for (std::uint32_t x32 : v) {
    const std::uint64_t x = x32;
    total += x * x * x;
  }
  return total;
}

}  // namespace scalar

namespace {

Isa detect() {
  if (const char* env = std::getenv("UNIMAP_SIMD");
      env != nullptr && std::strcmp(env, "scalar") == 0) {
    return Isa::kScalar;
  }
  return isa_available(Isa::kAvx2) ? Isa::kAvx2 : Isa::kScalar;
}

std::atomic<Isa>& selected() {
  static std::atomic<Isa> isa{detect()};
  return isa;
}

}  // namespace

std::string_view to_string(Isa isa) {
  return isa == Isa::kAvx2 ? "avx2" : "scalar";
}

bool isa_available(Isa isa) {
  switch (isa) {
    case Isa::kScalar:
      return true;
    case Isa::kAvx2:
#ifdef UNIMAP_HAVE_AVX2_TU
      return __builtin_cpu_supports("avx2");
#else
      return false;
#endif
  }
  return false;
}

Isa active_isa() { return selected().load(std::memory_order_relaxed); }

void force_isa(Isa isa) {
  if (!isa_available(isa)) {
    fail(Errc::kInvalidArgument,
         "instruction set not available: " + std::string(to_string(isa)));
  }
  selected().store(isa, std::memory_order_relaxed);
}

void compose(std::span<const std::int32_t> outer,
             std::span<const std::int32_t> inner, std::span<std::int32_t> out) {
#ifdef UNIMAP_HAVE_AVX2_TU
  if (active_isa() == Isa::kAvx2) {
    avx2::compose(outer.data(), inner.data(), out.data(), inner.size());
    return;
  }
#endif
  scalar::compose(outer, inner, out);
}

std::pair<std::int32_t, std::int32_t> minmax(std::span<const std::int32_t> v) {
#ifdef UNIMAP_HAVE_AVX2_TU
  if (active_isa() == Isa::kAvx2) {
    std::int32_t lo = 0;
    std::int32_t hi = 0;
    avx2::minmax(v.data(), v.size(), &lo, &hi);
    return {lo, hi};
  }
#endif
  return scalar::minmax(v);
}

std::uint64_t sum_cubes(std::span<const std::uint32_t> v) {
#ifdef UNIMAP_HAVE_AVX2_TU
  if (active_isa() == Isa::kAvx2) return avx2::sum_cubes(v.data(), v.size());
#endif
  return scalar::sum_cubes(v);
}

}  // namespace unimap::kernels
