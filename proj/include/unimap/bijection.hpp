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

// Intertwined nodes, opening sequences, skeletons and the two reciprocal
// maps between opened dominant maps and plane trees with g vertex triples.
//
// Every intermediate map is kept in canonical form rooted at half-edge 0, so
// vertex ids in opening sequences refer to those canonical labels.

#include <array>
#include <cstdint>
#include <vector>

#include "unimap/comb_map.hpp"

namespace unimap {

struct OpeningSequence {
  // nodes[i] is v_{i+1}; v_g is sliced first, in the input map.
  std::vector<VertexId> nodes;
  friend bool operator==(const OpeningSequence&, const OpeningSequence&) = default;
};

using Triple = std::array<VertexId, 3>;  // kept sorted

struct TreeWithTriples {
  RootedMap tree;
  std::vector<Triple> triples;
  friend bool operator==(const TreeWithTriples&, const TreeWithTriples&) = default;
};

// Sorts each triple. Throws InvalidArgument (not a tree, unknown or repeated
// vertex) or Singular.
TreeWithTriples make_tree_with_triples(RootedMap tree, std::vector<Triple> triples);

// The three core half-edges of a trivalent node in beta order starting from
// the smallest.
std::array<HalfEdge, 3> node_half_edges(const RootedMap& m, VertexId v);

// Throws NotDominant.
std::vector<VertexId> intertwined_nodes(const RootedMap& m);

struct SliceResult {
  RootedMap map;
  Permutation relabel;               // labels of m -> labels of map
  std::array<HalfEdge, 3> core;      // in labels of m
};

// Throws NotIntertwined (which covers non-nodes and non-dominant maps).
SliceResult slice_intertwined(const RootedMap& m, VertexId v);

std::vector<OpeningSequence> opening_sequences(const RootedMap& m);
std::uint64_t count_opening_sequences(const RootedMap& m);

struct PhiTrace {
  TreeWithTriples result;
  // Per triple, the core half-edges at the sliced node, in tree labels.
  std::vector<std::array<HalfEdge, 3>> incoming;
  Permutation relabel;  // labels of the input map -> labels of the tree
};

// Throws InvalidSequence.
PhiTrace open_phi_traced(const RootedMap& m, const OpeningSequence& seq);
TreeWithTriples open_phi(const RootedMap& m, const OpeningSequence& seq);

struct SkeletonReport {
  RootedMap skeleton;
  std::vector<HalfEdge> origin;   // skeleton half-edge -> tree half-edge
  std::vector<char> marked;       // per skeleton vertex id
  std::vector<std::int32_t> degree;  // per skeleton vertex id, 0 elsewhere
};

// Throws TooFewMarks when fewer than two distinct vertices are given.
SkeletonReport skeleton(const RootedMap& t, const std::vector<VertexId>& w);

// Same answer as inspecting the skeleton, from the pruned tree directly.
bool is_non_singular(const RootedMap& t, const std::vector<VertexId>& w);

// Throws Singular when v has no well-defined incoming half-edge.
HalfEdge incoming_half_edge(const RootedMap& t, const std::vector<VertexId>& w,
                            VertexId v);

enum class GluingRule {
  kIncreasing,  // glue in increasing current labels
  kTrial,       // try both circular orders, keep the unicellular one
};

struct ClosedMap {
  RootedMap map;
  OpeningSequence sequence;
  Permutation relabel;  // labels of the tree -> labels of the map
};

ClosedMap close_psi(const TreeWithTriples& tc,
                    GluingRule rule = GluingRule::kIncreasing);

std::vector<VertexId> flatten(const std::vector<Triple>& triples);

}  // namespace unimap
