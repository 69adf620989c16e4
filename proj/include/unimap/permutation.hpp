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

#include <cstdint>
#include <initializer_list>
#include <span>
#include <vector>

namespace unimap {

// Half-edges are stored 0-based. Everything that crosses the library
// boundary in text form (JSON, CLI, CSV) is 1-based.
using HalfEdge = std::int32_t;

// A bijection of {0, ..., size-1}; size is even and positive.
class Permutation {
 public:
  Permutation() = default;

  // images[i] = sigma(i), 0-based. Throws InvalidArgument unless images is a
  // bijection of even positive length.
  explicit Permutation(std::vector<HalfEdge> images);

  static Permutation identity(std::size_t size);

  // images[i-1] = sigma(i) for 1-based values.
  static Permutation from_one_based(std::span<const int> images);

  // Builds a permutation of {1..size} from 1-based cycle notation; points not
  // mentioned are fixed. from_cycles(6, {{1,4,3},{2,5,6}}) sends 1 to 4.
  static Permutation from_cycles(
      std::size_t size, std::initializer_list<std::initializer_list<int>> cycles);
  static Permutation from_cycles(std::size_t size,
                                 const std::vector<std::vector<int>>& cycles);

  // The long cycle (0 1 2 ... size-1).
  static Permutation long_cycle(std::size_t size);

  std::size_t size() const noexcept { return images_.size(); }
  HalfEdge operator()(HalfEdge h) const { return images_[h]; }
  std::span<const HalfEdge> images() const noexcept { return images_; }
  std::vector<int> to_one_based() const;

  Permutation inverse() const;

  // Cycles of the permutation, each starting at its minimum element, sorted
  // by minimum element.
  std::vector<std::vector<HalfEdge>> cycles() const;
  std::size_t cycle_count() const;

  bool is_fixed_point_free_involution() const;

  friend bool operator==(const Permutation&, const Permutation&) = default;

 private:
  struct Unchecked {};
  Permutation(std::vector<HalfEdge> images, Unchecked)
      : images_(std::move(images)) {}

  friend Permutation compose(const Permutation& outer, const Permutation& inner);
  friend Permutation conjugate(const Permutation& sigma, const Permutation& pi);

  std::vector<HalfEdge> images_;
};

// (outer o inner)(i) = outer(inner(i)). Sizes must agree.
Permutation compose(const Permutation& outer, const Permutation& inner);

// pi o sigma o pi^-1: sigma transported along the relabeling pi.
Permutation conjugate(const Permutation& sigma, const Permutation& pi);

}  // namespace unimap
