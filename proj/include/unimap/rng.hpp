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

// Reproducible random streams. A stream is fixed by (seed, stream index);
// the engine is mt19937_64 fed through std::seed_seq, both of which are
// specified exactly by the standard, and bounded draws use multiply-shift
// rejection instead of std::uniform_int_distribution (whose output is left
// to the library vendor).

#include <cstdint>
#include <random>
#include <string_view>

namespace unimap {

class SeededRng {
 public:
  static constexpr std::string_view kAlgorithm = "mt19937_64+seed_seq+lemire";

  explicit SeededRng(std::uint64_t seed, std::uint64_t stream = 0);

  std::uint64_t seed() const noexcept { return seed_; }
  std::uint64_t stream() const noexcept { return stream_; }
  std::string_view algorithm() const noexcept { return kAlgorithm; }

  // Independent child stream; the parent is left untouched.
  SeededRng substream(std::uint64_t index) const;

  std::uint64_t next() { return engine_(); }
  // Each 64-bit draw is served as two halves, low half first.
  std::uint32_t next32() {
    if (spare_left_) {
      spare_left_ = false;
      return static_cast<std::uint32_t>(spare_ >> 32);
    }
    spare_ = engine_();
    spare_left_ = true;
    return static_cast<std::uint32_t>(spare_);
  }
  // Uniform on [0, bound). bound must be positive. Bounds below 2^32 use
  // 32-bit draws.
  std::uint64_t uniform_below(std::uint64_t bound) {
    if (bound - 1 <= 0xFFFFFFFFull) {
      const auto b = static_cast<std::uint32_t>(bound);
      std::uint64_t m = static_cast<std::uint64_t>(next32()) * b;
      if (static_cast<std::uint32_t>(m) < b) {
        const std::uint32_t threshold = (0u - b) % b;
        while (static_cast<std::uint32_t>(m) < threshold) {
          m = static_cast<std::uint64_t>(next32()) * b;
        }
      }
      return m >> 32;
    }
    return uniform_below_wide(bound);
  }
  // Uniform on [0, 1) with 53 random bits.
  double uniform01();

 private:
  std::uint64_t uniform_below_wide(std::uint64_t bound);

  std::uint64_t spare_ = 0;
  bool spare_left_ = false;
  std::uint64_t seed_;
  std::uint64_t stream_;
  std::mt19937_64 engine_;
};

}  // namespace unimap
