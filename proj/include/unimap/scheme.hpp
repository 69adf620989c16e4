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

// Core, scheme and the decomposition of a unicellular map into one doubly
// marked tree per scheme edge.
//
// Scheme edges are indexed by their smallest half-edge in canonical labels
// (the order of first appearance along the face tour), and each edge is
// oriented away from that half-edge. The root edge comes first.

#include <utility>
#include <vector>

#include "unimap/comb_map.hpp"

namespace unimap {

struct CoreResult {
  RootedMap core;
  std::vector<HalfEdge> origin;  // core half-edge -> half-edge of the map
};

// Throws GenusZero.
CoreResult prune_core(const RootedMap& m);

struct Scheme {
  RootedMap map;
  std::vector<HalfEdge> edge_origin;  // increasing; edge_origin[0] == 0

  int edge_count() const { return static_cast<int>(edge_origin.size()); }
  // Index of the edge carrying half-edge h.
  int edge_of(HalfEdge h) const;
};

// Throws InvalidArgument unless m is unicellular without degree 1 or 2
// vertices.
Scheme make_scheme(RootedMap m);

struct SchemeResult {
  Scheme scheme;
  std::vector<HalfEdge> origin;  // scheme half-edge -> node half-edge of m
};

// Prunes first, so it accepts any unicellular map of positive genus.
SchemeResult contract_to_scheme(const RootedMap& m);

struct DoublyMarkedTree {
  RootedMap tree;
  VertexId mark;
  friend bool operator==(const DoublyMarkedTree&, const DoublyMarkedTree&) = default;
};

struct Decomposition {
  Scheme scheme;
  std::vector<DoublyMarkedTree> trees;
  // The map's root edge inside trees[0], as (root half-edge, opposite).
  std::pair<HalfEdge, HalfEdge> root_mark;
};

bool operator==(const Decomposition& a, const Decomposition& b);

Decomposition decompose(const RootedMap& m);

// Throws InconsistentDecomposition.
RootedMap recompose(const Decomposition& d);

bool is_dominant(const RootedMap& m);

bool is_in_T(const RootedMap& t, VertexId nu);

// Whether the oriented edge (eps, alpha(eps)) lies at the right of nu.
// Edges of the root-to-nu path are at the right when oriented away from the
// root. Other edges hang from a path vertex v: always at the right when v is
// the root vertex, never when v is nu, and otherwise when their branch sits
// clockwise after the path edge towards nu and before the one to the root.
bool is_right_of(const RootedMap& t, VertexId nu, HalfEdge eps);

// The half-edge at nu on the edge to its parent.
HalfEdge incoming_path_half_edge(const RootedMap& t, VertexId nu);

}  // namespace unimap
