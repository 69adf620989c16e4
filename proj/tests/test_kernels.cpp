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

#include <random>

#include "doctest.h"
#include "unimap/kernels.hpp"

using namespace unimap;

namespace {

struct IsaGuard {
  kernels::Isa saved = kernels::active_isa();
  ~IsaGuard() { kernels::force_isa(saved); }
};

}  // namespace

TEST_CASE("vector kernels match the scalar reference") {
  if (!kernels::isa_available(kernels::Isa::kAvx2)) {
    MESSAGE("AVX2 not available; only the scalar path is exercised");
    return;
  }
  IsaGuard guard;
  kernels::force_isa(kernels::Isa::kAvx2);
  std::mt19937_64 rng(31);
  for (int size : {1, 2, 7, 8, 9, 15, 16, 17, 63, 64, 65, 1000, 4097}) {
    std::vector<std::int32_t> outer(size), inner(size);
    for (int i = 0; i < size; ++i) outer[i] = inner[i] = i;
    std::shuffle(outer.begin(), outer.end(), rng);
    std::shuffle(inner.begin(), inner.end(), rng);
    std::vector<std::int32_t> a(size), b(size);
    kernels::compose(outer, inner, a);
    kernels::scalar::compose(outer, inner, b);
    CHECK(a == b);

    std::vector<std::int32_t> vals(size);
    std::uniform_int_distribution<std::int32_t> any(INT32_MIN, INT32_MAX);
    for (auto& x : vals) x = any(rng);
    CHECK(kernels::minmax(vals) == kernels::scalar::minmax(vals));

    std::vector<std::uint32_t> counts(size);
    std::uniform_int_distribution<std::uint32_t> big(0, UINT32_MAX);
    for (auto& x : counts) x = big(rng);
    CHECK(kernels::sum_cubes(counts) == kernels::scalar::sum_cubes(counts));
    for (auto& x : counts) x %= 20000;
    CHECK(kernels::sum_cubes(counts) == kernels::scalar::sum_cubes(counts));
  }
}

TEST_CASE("scalar sum of cubes on small input") {
  const std::vector<std::uint32_t> v{1, 2, 3};
  CHECK(kernels::scalar::sum_cubes(v) == 36);
  const std::vector<std::int32_t> w{4, -2, 9};
  CHECK(kernels::scalar::minmax(w) == std::pair<std::int32_t, std::int32_t>{-2, 9});
}
