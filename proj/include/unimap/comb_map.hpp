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

#include <compare>
#include <cstddef>
#include <vector>

#include "unimap/permutation.hpp"

namespace unimap {

// A vertex is a cycle of beta; it is named by the smallest half-edge on it.
struct VertexId {
  HalfEdge id = 0;
  friend auto operator<=>(const VertexId&, const VertexId&) = default;
};

// A map as a triple (alpha, beta, gamma) of permutations of the 2n
// half-edges with gamma = beta o alpha and alpha a fixed-point-free
// involution. Edges, vertices and faces are the cycles of alpha, beta and
// gamma. Values are immutable; surgery builds new maps.
class CombMap {
 public:
  // Throws LengthMismatch or NotInvolution.
  static CombMap make(Permutation alpha, Permutation beta);

  int n() const noexcept { return static_cast<int>(alpha_.size() / 2); }
  std::size_t half_edge_count() const noexcept { return alpha_.size(); }

  const Permutation& alpha() const noexcept { return alpha_; }
  const Permutation& beta() const noexcept { return beta_; }
  const Permutation& gamma() const noexcept { return gamma_; }

  std::vector<VertexId> vertices() const;
  std::size_t vertex_count() const noexcept { return vertex_count_; }
  std::size_t face_count() const { return gamma_.cycle_count(); }

  // Throws OutOfRange for a half-edge outside the map.
  VertexId vertex_of(HalfEdge h) const;
  bool has_vertex(VertexId v) const;
  // Throws UnknownVertex.
  std::size_t vertex_degree(VertexId v) const;
  // Half-edges of v in beta order, starting at v.id.
  std::vector<HalfEdge> vertex_cycle(VertexId v) const;

  bool is_connected() const;
  bool is_unicellular() const { return gamma_.cycle_count() == 1; }
  // (|alpha| + 2 - |beta| - |gamma|) / 2. Throws NotConnected.
  int genus() const;
  // gamma == (0 1 ... 2n-1): the canonical labelling of a rooted
  // unicellular map with root half-edge 0.
  bool is_canonical() const;

  friend bool operator==(const CombMap& a, const CombMap& b) {
    return a.alpha_ == b.alpha_ && a.beta_ == b.beta_;
  }

 private:
  CombMap(Permutation alpha, Permutation beta, Permutation gamma);

  Permutation alpha_;
  Permutation beta_;
  Permutation gamma_;
  std::vector<HalfEdge> vertex_of_;    // half-edge -> min of its beta-cycle
  std::vector<std::int32_t> degree_;   // indexed by vertex id, 0 otherwise
  std::size_t vertex_count_ = 0;
};

// A rooted unicellular map in its canonical representative: gamma is the
// long cycle and the root is half-edge 0.
class RootedMap {
 public:
  // Throws NotCanonical.
  explicit RootedMap(CombMap map);

  // The canonical representative for a given fixed-point-free involution.
  static RootedMap from_alpha(Permutation alpha);

  const CombMap& map() const noexcept { return map_; }
  int n() const noexcept { return map_.n(); }
  int genus() const { return map_.genus(); }

  friend bool operator==(const RootedMap&, const RootedMap&) = default;

 private:
  CombMap map_;
};

// Map conjugated by pi: alpha' = pi alpha pi^-1, beta' = pi beta pi^-1.
CombMap relabel(const CombMap& m, const Permutation& pi);

struct CanonicalForm {
  RootedMap map;
  Permutation relabel;  // old half-edge -> canonical half-edge
};

// Relabels a unicellular map so that root becomes 0 and gamma becomes the
// long cycle. Throws NotUnicellular.
CanonicalForm canonicalize(const CombMap& m, HalfEdge root);

// Sub-map on a set of half-edges closed under alpha and beta, relabelled
// compactly in increasing order. old_label[i] is the original label of the
// new half-edge i.
struct SubMap {
  CombMap map;
  std::vector<HalfEdge> old_label;
};
SubMap restrict_to(const CombMap& m, const std::vector<HalfEdge>& half_edges);

// Connected components as sorted half-edge lists, ordered by smallest label.
std::vector<std::vector<HalfEdge>> components(const CombMap& m);

// Maps laid side by side; the half-edges of parts[k] are shifted by the
// total size of parts[0..k).
CombMap disjoint_union(const std::vector<CombMap>& parts);

}  // namespace unimap
