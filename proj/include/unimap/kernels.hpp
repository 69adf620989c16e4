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

#pragma once

// Data-parallel inner loops. Every kernel has a scalar reference version and,
// on x86-64, an AVX2 version; the dispatcher picks one at runtime from the
// CPU features (override with UNIMAP_SIMD=scalar). Both versions must return
// bit-identical results.

#include <cstdint>
#include <span>
#include <string_view>
#include <utility>

namespace unimap::kernels {

enum class Isa { kScalar, kAvx2 };

std::string_view to_string(Isa isa);

bool isa_available(Isa isa);

// Currently selected implementation.
Isa active_isa();

// Pins the dispatcher to `isa`. Throws if the CPU cannot run it.
void force_isa(Isa isa);

// out[i] = outer[inner[i]]. Every inner[i] must index into outer.
void compose(std::span<const std::int32_t> outer,
             std::span<const std::int32_t> inner, std::span<std::int32_t> out);

// {min, max} of a non-empty span.
std::pair<std::int32_t, std::int32_t> minmax(std::span<const std::int32_t> v);

// Sum of v[i]^3 in wrapping 64-bit arithmetic (exact whenever the true sum
// fits, which holds for label histograms of trees below ~2.6e6 vertices).
std::uint64_t sum_cubes(std::span<const std::uint32_t> v);

namespace scalar {
void compose(std::span<const std::int32_t> outer,
             std::span<const std::int32_t> inner, std::span<std::int32_t> out);
std::pair<std::int32_t, std::int32_t> minmax(std::span<const std::int32_t> v);
std::uint64_t sum_cubes(std::span<const std::uint32_t> v);
}  // namespace scalar

}  // namespace unimap::kernels
