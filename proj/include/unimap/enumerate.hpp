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

// Exhaustive enumeration oracles and closed-form counters.
//
// Involutions are generated by pairing the smallest unpaired half-edge first,
// partners in increasing order. Work is split among workers by the partner
// of half-edge 0.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "unimap/bijection.hpp"
#include "unimap/comb_map.hpp"

namespace unimap {

using BigInt = boost::multiprecision::cpp_int;

struct EnumConfig {
  int workers = 1;
  std::uint64_t budget = 100'000'000;  // visited involutions
};

BigInt double_factorial_odd(int n);  // (2n-1)!!

// Throws ResourceBound when (2n-1)!! exceeds the budget. The visitor is
// called from worker threads with the unit index (partner of half-edge 0,
// minus one); one unit is only ever visited by one thread, in order.
void for_each_involution(
    int n, const EnumConfig& cfg,
    const std::function<void(int unit, std::span<const HalfEdge> alpha)>& visit);

// Vertex count of the canonical map with this alpha.
int canonical_vertex_count(std::span<const HalfEdge> alpha);

// Throws GenusOutOfRange unless n >= 1 and 0 <= 2g <= n.
std::uint64_t count_unicellular(int g, int n, const EnumConfig& cfg = {});
std::vector<RootedMap> enum_unicellular(int g, int n, const EnumConfig& cfg = {});

std::uint64_t count_dominant(int g, int n, const EnumConfig& cfg = {});
std::vector<RootedMap> enum_dominant(int g, int n, const EnumConfig& cfg = {});

// All rooted schemes of genus g (every vertex of degree at least 3).
std::vector<RootedMap> enum_schemes(int g, const EnumConfig& cfg = {});
// Rooted trivalent schemes of genus g, counted without materializing them.
std::uint64_t count_dominant_schemes(int g, const EnumConfig& cfg = {});

// Every tree with n edges and every ordered sequence of g disjoint vertex
// triples, keeping the non-singular ones.
std::vector<TreeWithTriples> enum_trees_with_triples(int g, int n);
std::uint64_t count_trees_with_triples(int g, int n);
// The same sequences without the singularity filter.
std::uint64_t count_marked_trees(int g, int n);

// Closed forms. Throw OutOfRange outside their domain.
BigInt catalan(int n);
BigInt binomial(int n, int k);
BigInt marked_trees(int g, int n);
BigInt dominant_schemes(int g);
BigInt tstar(int g);
BigInt half_t(int n);
double u_asym(int g, int n);  // asymptotic, not exact

struct DoublerootingRow {
  int n = 0;
  BigInt brute;         // rooted unicellular maps of genus g
  BigInt doublerooting; // n * sum_s [z^n] T^|s| / |s|
  BigInt allschemes;    // sum_s [z^n] Ttilde T^(|s|-1) with Ttilde_n = n T_n
};

struct DoublerootingReport {
  int g = 0;
  std::vector<DoublerootingRow> rows;
  bool ok = true;
};

DoublerootingReport doublerooting_check(int g, int n_max, const EnumConfig& cfg = {});

struct CountEntry {
  int g = 0;
  int n = 0;
  BigInt count;
  std::string generator;
};

class CountTable {
 public:
  void add(int g, int n, BigInt count, std::string generator);
  const std::vector<CountEntry>& entries() const { return entries_; }
  // All generators agree on every (g, n) they share.
  bool consistent() const;
  std::string to_csv() const;

 private:
  std::vector<CountEntry> entries_;
};

}  // namespace unimap
