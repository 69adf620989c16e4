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

// Small independent helpers for tests: random objects built without the
// library's samplers, and brute-force counting by plain recursion.

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <random>
#include <string>
#include <vector>

#include <boost/math/distributions/chi_squared.hpp>

#include "unimap/comb_map.hpp"

namespace unimap::testing {

using Rng = std::mt19937_64;

inline int uniform_int(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

inline Permutation random_involution(Rng& rng, int n) {
  std::vector<HalfEdge> pts(2 * n);
  for (int i = 0; i < 2 * n; ++i) pts[i] = i;
  std::shuffle(pts.begin(), pts.end(), rng);
  std::vector<HalfEdge> a(2 * n);
  for (int i = 0; i < 2 * n; i += 2) {
    a[pts[i]] = pts[i + 1];
    a[pts[i + 1]] = pts[i];
  }
  return Permutation(std::move(a));
}

inline Permutation random_permutation(Rng& rng, int size) {
  std::vector<HalfEdge> p(size);
  for (int i = 0; i < size; ++i) p[i] = i;
  std::shuffle(p.begin(), p.end(), rng);
  return Permutation(std::move(p));
}

inline CombMap random_map(Rng& rng, int n) {
  return CombMap::make(random_involution(rng, n), random_permutation(rng, 2 * n));
}

// Uniform rooted unicellular map with n edges, any genus.
inline RootedMap random_unicellular(Rng& rng, int n) {
  return RootedMap::from_alpha(random_involution(rng, n));
}

inline RootedMap random_unicellular_of_genus(Rng& rng, int n, int g) {
  for (;;) {
    RootedMap m = random_unicellular(rng, n);
    if (m.genus() == g) return m;
  }
}

// All fixed-point-free involutions on 2n points by plain recursion.
inline void all_involutions(int n, const std::function<void(const Permutation&)>& f) {
  std::vector<HalfEdge> a(2 * n, -1);
  std::function<void()> rec = [&]() {
    int first = -1;
    for (int i = 0; i < 2 * n; ++i) {
      if (a[i] < 0) {
        first = i;
        break;
      }
    }
    if (first < 0) {
      f(Permutation(a));
      return;
    }
    for (int j = first + 1; j < 2 * n; ++j) {
      if (a[j] >= 0) continue;
      a[first] = j;
      a[j] = first;
      rec();
      a[first] = -1;
      a[j] = -1;
    }
  };
  rec();
}

// Random plane tree with n edges for fuzzing; not uniform.
inline RootedMap random_tree(Rng& rng, int n) {
  for (;;) {
    std::vector<HalfEdge> a(2 * n);
    std::vector<HalfEdge> open;
    int ups = 0;
    bool ok = true;
    for (int i = 0; i < 2 * n && ok; ++i) {
      const bool up = ups < n && (open.empty() || uniform_int(rng, 0, 1) == 1);
      if (up) {
        open.push_back(i);
        ++ups;
      } else if (!open.empty()) {
        a[i] = open.back();
        a[open.back()] = i;
        open.pop_back();
      } else {
        ok = false;
      }
    }
    if (ok && open.empty()) return RootedMap::from_alpha(Permutation(a));
  }
}

inline std::uint64_t binomial(int n, int k) {
  if (k < 0 || k > n) return 0;
  std::uint64_t r = 1;
  for (int i = 1; i <= k; ++i) r = r * static_cast<std::uint64_t>(n - k + i) / i;
  return r;
}

inline std::uint64_t catalan(int n) { return binomial(2 * n, n) / (n + 1); }

inline std::uint64_t double_factorial_odd(int n) {
  std::uint64_t r = 1;
  for (int k = 2 * n - 1; k > 1; k -= 2) r *= static_cast<std::uint64_t>(k);
  return r;
}

// Goodness of fit of observed counts against the uniform law on `classes`
// outcomes; outcomes never observed count as zero. Returns the p-value.
inline double uniform_chi_square_p(const std::map<std::string, std::uint64_t>& observed,
                                   std::size_t classes) {
  std::uint64_t total = 0;
  for (const auto& [k, c] : observed) total += c;
  const double expected = static_cast<double>(total) / static_cast<double>(classes);
  double stat = 0;
  for (const auto& [k, c] : observed) {
    const double d = static_cast<double>(c) - expected;
    stat += d * d / expected;
  }
  stat += expected * static_cast<double>(classes - observed.size());
  const boost::math::chi_squared dist(static_cast<double>(classes - 1));
  return boost::math::cdf(boost::math::complement(dist, stat));
}

}  // namespace unimap::testing
