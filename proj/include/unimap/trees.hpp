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

// Rooted plane trees in canonical form. Walking the face tour 0, 1, 2, ...
// is the contour of the tree, so a half-edge h is "down" (at the parent end
// of its edge) exactly when h < alpha(h).

#include <cstdint>
#include <functional>
#include <vector>

#include "unimap/comb_map.hpp"

namespace unimap {

using DyckWord = std::vector<bool>;  // true = up step

bool is_plane_tree(const RootedMap& t);

// Up step i matched with down step j gives the edge {i, j}.
RootedMap tree_from_dyck(const DyckWord& w);
DyckWord dyck_from_tree(const RootedMap& t);

VertexId root_vertex(const RootedMap& t);

// Per vertex id: the half-edge of the vertex on the edge to its parent, or
// -1 for the root vertex and for non-vertex ids.
std::vector<HalfEdge> up_half_edges(const RootedMap& t);

// Up half-edges met walking from v to the root vertex.
std::vector<HalfEdge> path_to_root(const RootedMap& t,
                                   const std::vector<HalfEdge>& up, VertexId v);

// Calls visit on every Dyck word of semilength n, in lexicographic order
// with down steps first.
void for_each_dyck_word(int n, const std::function<void(const DyckWord&)>& visit);

std::vector<RootedMap> all_plane_trees(int n);

}  // namespace unimap
