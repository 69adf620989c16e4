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

#include "unimap/surgery.hpp"

#include <algorithm>
#include <string>

#include "unimap/error.hpp"

namespace unimap {

CombMap slice_vertex(const CombMap& m, const SliceSpec& s) {
  if (s.cut_set.empty()) fail(Errc::kEmptyCutSet, "cut set is empty");
  const std::vector<HalfEdge> cycle = m.vertex_cycle(s.vertex);

  std::vector<char> in_cut(m.half_edge_count(), 0);
  for (HalfEdge h : s.cut_set) {
    if (h < 0 || static_cast<std::size_t>(h) >= m.half_edge_count() ||
        m.vertex_of(h) != s.vertex) {
      fail(Errc::kHalfEdgeNotOnVertex,
           "half-edge " + std::to_string(h + 1) + " is not incident to vertex " +
               std::to_string(s.vertex.id + 1));
    }
    in_cut[h] = 1;
  }

  const HalfEdge first = *std::min_element(s.cut_set.begin(), s.cut_set.end());
  const auto start = std::find(cycle.begin(), cycle.end(), first) - cycle.begin();
  const std::size_t degree = cycle.size();

  std::vector<HalfEdge> beta(m.beta().images().begin(), m.beta().images().end());
  // Walk the rotated cycle; each block closes onto its own first element.
  HalfEdge block_head = first;
  for (std::size_t k = 0; k < degree; ++k) {
    const HalfEdge cur = cycle[(start + k) % degree];
    const HalfEdge next = cycle[(start + k + 1) % degree];
    if (in_cut[next]) {
      beta[cur] = block_head;
      block_head = next;
    } else {
      beta[cur] = next;
    }
  }
  return CombMap::make(m.alpha(), Permutation(std::move(beta)));
}

CombMap glue_halfedges(const CombMap& m, const GlueSpec& g) {
  const auto& tuple = g.tuple;
  if (tuple.size() < 2) {
    fail(Errc::kGlueTooShort, "gluing needs at least two half-edges");
  }
  std::vector<char> used_half(m.half_edge_count(), 0);
  std::vector<char> used_vertex(m.half_edge_count(), 0);
  for (HalfEdge h : tuple) {
    const VertexId v = m.vertex_of(h);
    if (used_half[h]) {
      fail(Errc::kDuplicateHalfEdge,
           "half-edge " + std::to_string(h + 1) + " appears twice");
    }
    if (used_vertex[v.id]) {
      fail(Errc::kSameVertex, "two half-edges of the tuple lie on vertex " +
                                  std::to_string(v.id + 1));
    }
    used_half[h] = 1;
    used_vertex[v.id] = 1;
  }

  std::vector<HalfEdge> beta(m.beta().images().begin(), m.beta().images().end());
  const std::size_t k = tuple.size();
  for (std::size_t l = 0; l < k; ++l) {
    // The last half-edge of block l (the beta-predecessor of i_l) now points
    // at i_{l+1}.
    const HalfEdge head = tuple[l];
    HalfEdge last = head;
    while (m.beta()(last) != head) last = m.beta()(last);
    beta[last] = tuple[(l + 1) % k];
  }
  return CombMap::make(m.alpha(), Permutation(std::move(beta)));
}

}  // namespace unimap
