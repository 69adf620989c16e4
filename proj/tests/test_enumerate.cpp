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

#include <atomic>
#include <cmath>
#include <numbers>

#include "doctest.h"
#include "support.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/error.hpp"
#include "unimap/scheme.hpp"

using namespace unimap;

namespace {

// Rooted unicellular maps by genus from the classical three-term recursion
// (n+1) e(g,n) = 2(2n-1) e(g,n-1) + (n-1)(2n-1)(2n-3) e(g-1,n-2), e(0,0) = 1.
std::vector<std::vector<BigInt>> harer_zagier(int gmax, int nmax) {
  std::vector<std::vector<BigInt>> e(gmax + 1, std::vector<BigInt>(nmax + 1, 0));
  e[0][0] = 1;
  for (int n = 1; n <= nmax; ++n) {
    for (int g = 0; g <= gmax; ++g) {
      BigInt x = 2 * (2 * n - 1) * e[g][n - 1];
      if (g > 0 && n >= 2) x += BigInt((n - 1) * (2 * n - 1) * (2 * n - 3)) * e[g - 1][n - 2];
      e[g][n] = x / (n + 1);
    }
  }
  return e;
}

// Genus of gamma = (0 1 ... 2n-1) glued along alpha, by counting cycles of
// beta = gamma alpha^{-1} with a plain loop.
int genus_of(const Permutation& alpha) {
  const int size = static_cast<int>(alpha.size());
  std::vector<bool> seen(size, false);
  int cycles = 0;
  for (int h = 0; h < size; ++h) {
    if (seen[h]) continue;
    ++cycles;
    for (int x = h; !seen[x]; x = (alpha(x) + 1) % size) seen[x] = true;
  }
  return (size / 2 + 1 - cycles) / 2;
}

std::optional<Errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("unicellular counts follow the three-term recursion") {
  const auto e = harer_zagier(3, 8);
  for (int n = 1; n <= 8; ++n) {
    for (int g = 0; 2 * g <= n && g <= 3; ++g) {
      CHECK(BigInt(count_unicellular(g, n)) == e[g][n]);
    }
  }
  CHECK(count_unicellular(1, 3) == 10);
  CHECK(count_unicellular(2, 5) == 483);
}

TEST_CASE("genus partition against plain recursion") {
  for (int n = 1; n <= 5; ++n) {
    std::map<int, std::uint64_t> by_genus;
    testing::all_involutions(n, [&](const Permutation& a) { ++by_genus[genus_of(a)]; });
    for (const auto& [g, c] : by_genus) CHECK(count_unicellular(g, n) == c);
  }
}

TEST_CASE("enumerated maps are canonical and of the right genus") {
  for (int n = 1; n <= 6; ++n) {
    for (int g = 0; 2 * g <= n; ++g) {
      const auto maps = enum_unicellular(g, n);
      CHECK(maps.size() == count_unicellular(g, n));
      for (const RootedMap& m : maps) {
        CHECK(m.map().is_canonical());
        CHECK(m.genus() == g);
        CHECK(m.map().is_unicellular());
      }
    }
  }
}

TEST_CASE("dominant maps are a filter of all maps") {
  for (int n = 2; n <= 7; ++n) {
    std::uint64_t filtered = 0;
    for (const RootedMap& m : enum_unicellular(1, n)) filtered += is_dominant(m) ? 1 : 0;
    CHECK(count_dominant(1, n) == filtered);
    CHECK(enum_dominant(1, n).size() == filtered);
  }
  CHECK(count_dominant(1, 2) == 0);
  CHECK(count_dominant(1, 3) == 1);
}

TEST_CASE("worker count does not change results") {
  EnumConfig three;
  three.workers = 3;
  for (int n = 3; n <= 7; ++n) {
    CHECK(count_unicellular(1, n) == count_unicellular(1, n, three));
    CHECK(count_dominant(1, n) == count_dominant(1, n, three));
    CHECK(enum_unicellular(1, n) == enum_unicellular(1, n, three));
  }
  std::atomic<std::uint64_t> visits{0};
  for_each_involution(5, three, [&](int, std::span<const HalfEdge>) { ++visits; });
  CHECK(visits == testing::double_factorial_odd(5));
}

TEST_CASE("enumeration bounds") {
  EnumConfig tiny;
  tiny.budget = 100;
  CHECK(code_of([&] { count_unicellular(1, 6, tiny); }) == Errc::kResourceBound);
  CHECK(code_of([&] { count_unicellular(1, 3, tiny); }) == std::nullopt);
  CHECK(code_of([] { count_unicellular(2, 3); }) == Errc::kGenusOutOfRange);
  CHECK(code_of([] { count_unicellular(0, 0); }) == Errc::kGenusOutOfRange);
  CHECK(code_of([] { count_unicellular(-1, 4); }) == Errc::kGenusOutOfRange);
}

TEST_CASE("closed forms") {
  for (int n = 0; n <= 15; ++n) CHECK(catalan(n) == BigInt(testing::catalan(n)));
  for (int n = 0; n <= 20; ++n) {
    for (int k = 0; k <= n; ++k) CHECK(binomial(n, k) == BigInt(testing::binomial(n, k)));
  }
  for (int n = 1; n <= 10; ++n) CHECK(double_factorial_odd(n) == testing::double_factorial_odd(n));
  for (int n = 1; n <= 12; ++n) CHECK(half_t(n) == BigInt(testing::binomial(2 * n, n) / 2));
  CHECK(dominant_schemes(1) == 1);
  CHECK(dominant_schemes(2) == 105);
  CHECK(dominant_schemes(3) == 50050);
  CHECK(code_of([] { dominant_schemes(0); }) == Errc::kOutOfRange);
  CHECK(code_of([] { marked_trees(2, 4); }) == Errc::kOutOfRange);
  CHECK(code_of([] { half_t(0); }) == Errc::kOutOfRange);
}

TEST_CASE("marked trees: formula against enumeration") {
  for (int n = 2; n <= 6; ++n) CHECK(BigInt(count_marked_trees(1, n)) == marked_trees(1, n));
  for (int n = 5; n <= 6; ++n) CHECK(BigInt(count_marked_trees(2, n)) == marked_trees(2, n));
}

TEST_CASE("trees with triples: singular sets are removed") {
  for (int n = 2; n <= 6; ++n) {
    const auto all = enum_trees_with_triples(1, n);
    CHECK(all.size() == count_trees_with_triples(1, n));
    CHECK(all.size() <= count_marked_trees(1, n));
  }
  CHECK(count_trees_with_triples(1, 3) == 2);
}

TEST_CASE("dominant scheme counts") {
  CHECK(count_dominant_schemes(1) == 1);
  const auto schemes = enum_schemes(1);
  // genus-one schemes: the trivalent one with 3 edges and the figure eight
  std::map<int, int> by_size;
  for (const RootedMap& s : schemes) ++by_size[s.n()];
  CHECK(by_size[3] == 1);
  CHECK(by_size[2] == 1);
}

TEST_CASE("asymptotic count") {
  // genus zero: Catalan numbers
  const double c = std::exp(std::lgamma(601.0) - 2 * std::lgamma(301.0) - std::log(301.0));
  CHECK(c / u_asym(0, 300) == doctest::Approx(1.0).epsilon(1e-2));
  const auto e = harer_zagier(1, 400);
  const double exact = static_cast<double>(e[1][400] / (BigInt(1) << 700)) *
                       std::pow(2.0, 700);
  CHECK(std::abs(exact / u_asym(1, 400) - 1) < 0.05);
}

TEST_CASE("scheme decomposition identities") {
  const DoublerootingReport r = doublerooting_check(1, 7);
  CHECK(r.ok);
  CHECK(r.rows.size() == 7);
  for (const auto& row : r.rows) {
    CHECK(row.brute == row.doublerooting);
    CHECK(row.brute == row.allschemes);
  }
  CHECK(code_of([] { doublerooting_check(1, 9); }) == Errc::kOutOfRange);
}

TEST_CASE("count table") {
  CountTable t;
  t.add(1, 3, 10, "brute-force");
  t.add(1, 3, 10, "formula");
  t.add(1, 4, 70, "brute-force");
  CHECK(t.consistent());
  CHECK(t.to_csv() == "g,n,count,generator\n1,3,10,brute-force\n1,3,10,formula\n1,4,70,brute-force\n");
  t.add(1, 4, 71, "formula");
  CHECK_FALSE(t.consistent());
}
