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

// Raw-pointer entry points of the AVX2 translation unit. Kept free of any
// standard-library inline code so nothing compiled with -mavx2 can leak into
// the rest of the binary through ODR merging.

#include <cstddef>
#include <cstdint>

namespace unimap::kernels::avx2 {

void compose(const std::int32_t* outer, const std::int32_t* inner,
             std::int32_t* out, std::size_t size);
void minmax(const std::int32_t* v, std::size_t size, std::int32_t* lo,
            std::int32_t* hi);
std::uint64_t sum_cubes(const std::uint32_t* v, std::size_t size);

}  // namespace unimap::kernels::avx2
