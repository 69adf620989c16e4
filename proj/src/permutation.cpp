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

#include "unimap/permutation.hpp"

#include <algorithm>
#include <numeric>
#include <string>

#include "unimap/error.hpp"
#include "unimap/kernels.hpp"

namespace unimap {

Permutation::Permutation(std::vector<HalfEdge> images)
    : images_(std::move(images)) {
  const std::size_t size = images_.size();
  if (size == 0 || size % 2 != 0) {
    fail(Errc::kInvalidArgument,
         "permutation length must be even and positive, got " +
             std::to_string(size));
  }
  std::vector<char> seen(size, 0);
  for (HalfEdge x : images_) {
    if (x < 0 || static_cast<std::size_t>(x) >= size || seen[x]) {
      fail(Errc::kInvalidArgument, "images do not form a bijection");
    }
    seen[x] = 1;
  }
}

Permutation Permutation::identity(std::size_t size) {
  std::vector<HalfEdge> images(size);
  std::iota(images.begin(), images.end(), 0);
  return Permutation(std::move(images));
}

Permutation Permutation::from_one_based(std::span<const int> images) {
  std::vector<HalfEdge> zero(images.size());
  for (std::size_t i = 0; i < images.size(); ++i) zero[i] = images[i] - 1;
  return Permutation(std::move(zero));
}

Permutation Permutation::from_cycles(
    std::size_t size, std::initializer_list<std::initializer_list<int>> cycles) {
  std::vector<std::vector<int>> v;
  for (const auto& c : cycles) v.emplace_back(c);
  return from_cycles(size, v);
}

Permutation Permutation::from_cycles(
    std::size_t size, const std::vector<std::vector<int>>& cycles) {
  std::vector<HalfEdge> images(size);
  std::iota(images.begin(), images.end(), 0);
  std::vector<char> used(size, 0);
  for (const auto& c : cycles) {
    for (std::size_t k = 0; k < c.size(); ++k) {
      const int from = c[k] - 1;
      const int to = c[(k + 1) % c.size()] - 1;
      if (from < 0 || static_cast<std::size_t>(from) >= size || used[from]) {
        fail(Errc::kInvalidArgument, "malformed cycle notation");
      }
      used[from] = 1;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::long_cycle(std::size_t size) {
  std::vector<HalfEdge> images(size);
  for (std::size_t i = 0; i < size; ++i) {
    images[i] = static_cast<HalfEdge>((i + 1) % size);
  }
  return Permutation(std::move(images));
}

std::vector<int> Permutation::to_one_based() const {
  std::vector<int> out(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) out[i] = images_[i] + 1;
  return out;
}

Permutation Permutation::inverse() const {
  std::vector<HalfEdge> inv(images_.size());
  for (std::size_t i = 0; i < images_.size(); ++i) {
    inv[images_[i]] = static_cast<HalfEdge>(i);
  }
  return Permutation(std::move(inv), Unchecked{});
}

std::vector<std::vector<HalfEdge>> Permutation::cycles() const {
  std::vector<std::vector<HalfEdge>> out;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    auto& cycle = out.emplace_back();
    HalfEdge h = static_cast<HalfEdge>(start);
    while (!seen[h]) {
      seen[h] = 1;
      cycle.push_back(h);
      h = images_[h];
    }
  }
  return out;
}

std::size_t Permutation::cycle_count() const {
  std::size_t count = 0;
  std::vector<char> seen(images_.size(), 0);
  for (std::size_t start = 0; start < images_.size(); ++start) {
    if (seen[start]) continue;
    ++count;
    for (HalfEdge h = static_cast<HalfEdge>(start); !seen[h]; h = images_[h]) {
      seen[h] = 1;
    }
  }
  return count;
}

bool Permutation::is_fixed_point_free_involution() const {
  for (std::size_t i = 0; i < images_.size(); ++i) {
    const HalfEdge j = images_[i];
    if (static_cast<std::size_t>(j) == i ||
        static_cast<std::size_t>(images_[j]) != i) {
      return false;
    }
  }
  return true;
}

Permutation compose(const Permutation& outer, const Permutation& inner) {
  if (outer.size() != inner.size()) {
    fail(Errc::kLengthMismatch, "cannot compose permutations of lengths " +
                                    std::to_string(outer.size()) + " and " +
                                    std::to_string(inner.size()));
  }
  std::vector<HalfEdge> out(inner.size());
  kernels::compose(outer.images_, inner.images_, out);
  return Permutation(std::move(out), Permutation::Unchecked{});
}

Permutation conjugate(const Permutation& sigma, const Permutation& pi) {
  if (sigma.size() != pi.size()) {
    fail(Errc::kLengthMismatch, "cannot conjugate by a relabeling of a "
                                "different length");
  }
  // (pi sigma pi^-1)(pi(i)) = pi(sigma(i))
  std::vector<HalfEdge> moved(sigma.size());
  kernels::compose(pi.images_, sigma.images_, moved);
  std::vector<HalfEdge> out(sigma.size());
  for (std::size_t i = 0; i < sigma.size(); ++i) out[pi.images_[i]] = moved[i];
  return Permutation(std::move(out), Permutation::Unchecked{});
}

}  // namespace unimap
