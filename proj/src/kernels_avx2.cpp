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

#include "kernels_avx2.hpp"

#include <immintrin.h>

namespace unimap::kernels::avx2 {

void compose(const std::int32_t* outer, const std::int32_t* inner,
             std::int32_t* out, std::size_t size) {
  std::size_t i = 0;
  for (; i + 8 <= size; i += 8) {
    const __m256i idx =
        _mm256_loadu_si256(reinterpret_cast<const __m256i*>(inner + i));
    const __m256i val = _mm256_i32gather_epi32(outer, idx, 4);
    _mm256_storeu_si256(reinterpret_cast<__m256i*>(out + i), val);
  }
  for (; i < size; ++i) out[i] = outer[inner[i]];
}

void minmax(const std::int32_t* v, std::size_t size, std::int32_t* lo,
            std::int32_t* hi) {
  std::int32_t mn = v[0];
  std::int32_t mx = v[0];
  std::size_t i = 0;
  if (size >= 8) {
    __m256i vmin = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v));
    __m256i vmax = vmin;
    for (i = 8; i + 8 <= size; i += 8) {
      const __m256i x =
          _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
      vmin = _mm256_min_epi32(vmin, x);
      vmax = _mm256_max_epi32(vmax, x);
    }
    alignas(32) std::int32_t a[8];
    alignas(32) std::int32_t b[8];
    _mm256_store_si256(reinterpret_cast<__m256i*>(a), vmin);
    _mm256_store_si256(reinterpret_cast<__m256i*>(b), vmax);
    for (int k = 0; k < 8; ++k) {
      if (a[k] < mn) mn = a[k];
      if (b[k] > mx) mx = b[k];
    }
  }
  for (; i < size; ++i) {
    if (v[i] < mn) mn = v[i];
    if (v[i] > mx) mx = v[i];
  }
  *lo = mn;
  *hi = mx;
}

namespace {

// Lane-wise 64x64 -> low 64 bits multiply where b < 2^32.
inline __m256i mul64_by_u32(__m256i a, __m256i b) {
  const __m256i lo = _mm256_mul_epu32(a, b);
  const __m256i hi = _mm256_mul_epu32(_mm256_srli_epi64(a, 32), b);
  return _mm256_add_epi64(lo, _mm256_slli_epi64(hi, 32));
}

inline __m256i cubes(__m128i x32) {
  const __m256i x = _mm256_cvtepu32_epi64(x32);
  const __m256i sq = _mm256_mul_epu32(x, x);
  return mul64_by_u32(sq, x);
}

}  // namespace

std::uint64_t sum_cubes(const std::uint32_t* v, std::size_t size) {
  __m256i acc = _mm256_setzero_si256();
  std::size_t i = 0;
  for (; i + 8 <= size; i += 8) {
    const __m256i x = _mm256_loadu_si256(reinterpret_cast<const __m256i*>(v + i));
    acc = _mm256_add_epi64(acc, cubes(_mm256_castsi256_si128(x)));
    acc = _mm256_add_epi64(acc, cubes(_mm256_extracti128_si256(x, 1)));
  }
  alignas(32) std::uint64_t lanes[4];
  _mm256_store_si256(reinterpret_cast<__m256i*>(lanes), acc);
  std::uint64_t total = lanes[0] + lanes[1] + lanes[2] + lanes[3];
  for (; i < size; ++i) {
    const std::uint64_t x = v[i];
    total += x * x * x;
  }
  return total;
}

}  // namespace unimap::kernels::avx2
