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

#include <vector>

#include "unimap/comb_map.hpp"

namespace unimap {

struct SliceSpec {
  VertexId vertex;
  std::vector<HalfEdge> cut_set;
};

struct GlueSpec {
  std::vector<HalfEdge> tuple;
};

// Splits the beta-cycle of s.vertex before every element of the cut set. The
// cycle is first rotated to start at min(cut_set). alpha is untouched; the
// result has |cut_set| - 1 more vertices and may be disconnected.
// Throws EmptyCutSet, HalfEdgeNotOnVertex, UnknownVertex.
CombMap slice_vertex(const CombMap& m, const SliceSpec& s);

// Merges the vertices of tuple (i_1, ..., i_k) into the single cycle
// (i_1, ..., i_2, ..., i_k, ...), each block being the old vertex read from
// i_l. Throws GlueTooShort (k < 2), DuplicateHalfEdge, SameVertex.
CombMap glue_halfedges(const CombMap& m, const GlueSpec& g);

}  // namespace unimap
