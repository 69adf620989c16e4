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

// Leaf pruning and degree-2 chain contraction, shared by the core/scheme
// construction of unicellular maps and by tree skeletons. Vertices flagged
// as protected are never pruned or contracted away.
//
// "Counterclockwise" around a vertex is the beta-cycle read backwards (beta
// lists half-edges clockwise). When the root edge is pruned, the new root is
// the first surviving half-edge met counterclockwise from the corner where
// the root's hanging tree is attached.

#include <vector>

#include "unimap/comb_map.hpp"

namespace unimap {

struct Pruning {
  std::vector<char> kept;                  // per half-edge
  std::vector<std::int32_t> kept_degree;   // per vertex id
  // Per removed half-edge: the half-edge of the surviving vertex whose edge
  // leads into the hanging tree containing it. -1 for kept half-edges.
  std::vector<HalfEdge> attachment;
  HalfEdge root = -1;                      // -1 when everything was pruned
};

// protected_vertex is indexed by vertex id; an empty vector protects nothing.
Pruning prune_leaves(const CombMap& m, const std::vector<char>& protected_vertex,
                     HalfEdge root);

// The kept half-edge following h in beta order at its vertex.
HalfEdge next_kept(const CombMap& m, const Pruning& p, HalfEdge h);

struct Contraction {
  std::vector<char> is_node;          // per vertex id
  std::vector<HalfEdge> chain_end;    // per kept node half-edge, else -1
  // Per kept half-edge: the node half-edge that starts the chain through it
  // in the same direction.
  std::vector<HalfEdge> chain_start;
  HalfEdge root = -1;
};

Contraction contract_chains(const CombMap& m, const Pruning& p,
                            const std::vector<char>& protected_vertex);

struct Reduced {
  RootedMap map;
  std::vector<HalfEdge> origin;  // canonical label -> half-edge of the input
};

// The pruned map, canonically labelled from the transferred root.
Reduced pruned_map(const CombMap& m, const Pruning& p);

// The map on node half-edges with chains replaced by single edges.
Reduced contracted_map(const CombMap& m, const Pruning& p, const Contraction& c);

}  // namespace unimap
