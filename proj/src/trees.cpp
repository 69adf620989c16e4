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

#include "unimap/trees.hpp"

#include "unimap/error.hpp"

namespace unimap {

bool is_plane_tree(const RootedMap& t) { return t.genus() == 0; }

RootedMap tree_from_dyck(const DyckWord& w) {
  const std::size_t size = w.size();
  if (size == 0 || size % 2 != 0) {
    fail(Errc::kInvalidArgument, "Dyck word must have positive even length");
  }
  std::vector<HalfEdge> alpha(size);
  std::vector<HalfEdge> open;
  for (std::size_t i = 0; i < size; ++i) {
    if (w[i]) {
      open.push_back(static_cast<HalfEdge>(i));
    } else {
      if (open.empty()) fail(Errc::kInvalidArgument, "not a Dyck word");
      alpha[i] = open.back();
      alpha[open.back()] = static_cast<HalfEdge>(i);
      open.pop_back();
    }
  }
  if (!open.empty()) fail(Errc::kInvalidArgument, "not a Dyck word");
  return RootedMap::from_alpha(Permutation(std::move(alpha)));
}

DyckWord dyck_from_tree(const RootedMap& t) {
  const auto& alpha = t.map().alpha();
  DyckWord w(alpha.size());
  for (std::size_t i = 0; i < w.size(); ++i) {
    w[i] = static_cast<HalfEdge>(i) < alpha(static_cast<HalfEdge>(i));
  }
  return w;
}

VertexId root_vertex(const RootedMap& t) { return t.map().vertex_of(0); }

std::vector<HalfEdge> up_half_edges(const RootedMap& t) {
  const CombMap& m = t.map();
  std::vector<HalfEdge> up(m.half_edge_count(), -1);
  for (std::size_t i = 0; i < up.size(); ++i) {
    const HalfEdge h = static_cast<HalfEdge>(i);
    if (m.alpha()(h) < h) up[m.vertex_of(h).id] = h;
  }
  return up;
}

std::vector<HalfEdge> path_to_root(const RootedMap& t,
                                   const std::vector<HalfEdge>& up, VertexId v) {
  std::vector<HalfEdge> out;
  for (HalfEdge h = up[v.id]; h >= 0; h = up[t.map().vertex_of(t.map().alpha()(h)).id]) {
    out.push_back(h);
  }
  return out;
}

void for_each_dyck_word(int n, const std::function<void(const DyckWord&)>& visit) {
  if (n < 1) fail(Errc::kInvalidArgument, "trees need at least one edge");
  DyckWord w(2 * static_cast<std::size_t>(n));
  std::function<void(std::size_t, int, int)> rec = [&](std::size_t pos, int ups,
                                                       int height) {
    if (pos == w.size()) {
      visit(w);
      return;
    }
    if (height > 0) {
      w[pos] = false;
      rec(pos + 1, ups, height - 1);
    }
    if (ups < n) {
      w[pos] = true;
      rec(pos + 1, ups + 1, height + 1);
    }
  };
  rec(0, 0, 0);
}

std::vector<RootedMap> all_plane_trees(int n) {
  std::vector<RootedMap> out;
  for_each_dyck_word(n, [&](const DyckWord& w) { out.push_back(tree_from_dyck(w)); });
  return out;
}

}  // namespace unimap
