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

#include "unimap/scheme.hpp"

#include <algorithm>
#include <string>

#include "unimap/error.hpp"
#include "unimap/reduction.hpp"
#include "unimap/surgery.hpp"
#include "unimap/trees.hpp"

namespace unimap {

namespace {

void require_positive_genus(const RootedMap& m) {
  if (m.genus() == 0) fail(Errc::kGenusZero, "a plane tree has no core");
}

std::vector<HalfEdge> edge_origins(const CombMap& m) {
  std::vector<HalfEdge> out;
  for (std::size_t i = 0; i < m.half_edge_count(); ++i) {
    const HalfEdge h = static_cast<HalfEdge>(i);
    if (h < m.alpha()(h)) out.push_back(h);
  }
  return out;
}

void inconsistent(const std::string& what) {
  fail(Errc::kInconsistentDecomposition, what);
}

}  // namespace

CoreResult prune_core(const RootedMap& m) {
  require_positive_genus(m);
  const Pruning p = prune_leaves(m.map(), {}, 0);
  Reduced r = pruned_map(m.map(), p);
  return CoreResult{std::move(r.map), std::move(r.origin)};
}

int Scheme::edge_of(HalfEdge h) const {
  const HalfEdge o = std::min(h, map.map().alpha()(h));
  const auto it = std::lower_bound(edge_origin.begin(), edge_origin.end(), o);
  return static_cast<int>(it - edge_origin.begin());
}

Scheme make_scheme(RootedMap m) {
  for (VertexId v : m.map().vertices()) {
    if (m.map().vertex_degree(v) < 3) {
      fail(Errc::kInvalidArgument, "a scheme has no vertex of degree 1 or 2");
    }
  }
  std::vector<HalfEdge> origins = edge_origins(m.map());
  return Scheme{std::move(m), std::move(origins)};
}

SchemeResult contract_to_scheme(const RootedMap& m) {
  require_positive_genus(m);
  const Pruning p = prune_leaves(m.map(), {}, 0);
  const Contraction c = contract_chains(m.map(), p, {});
  Reduced r = contracted_map(m.map(), p, c);
  return SchemeResult{make_scheme(std::move(r.map)), std::move(r.origin)};
}

bool operator==(const Decomposition& a, const Decomposition& b) {
  return a.scheme.map == b.scheme.map && a.trees == b.trees &&
         a.root_mark == b.root_mark;
}

Decomposition decompose(const RootedMap& m) {
  require_positive_genus(m);
  const CombMap& map = m.map();
  const Pruning p = prune_leaves(map, {}, 0);
  const Contraction c = contract_chains(map, p, {});
  Reduced r = contracted_map(map, p, c);
  Scheme scheme = make_scheme(std::move(r.map));

  CombMap sliced = map;
  for (VertexId v : map.vertices()) {
    if (!c.is_node[v.id]) continue;
    std::vector<HalfEdge> cut;
    for (HalfEdge h : map.vertex_cycle(v)) {
      if (p.kept[h]) cut.push_back(h);
    }
    sliced = slice_vertex(sliced, SliceSpec{v, cut});
  }

  const auto comps = components(sliced);
  std::vector<std::int32_t> comp_of(map.half_edge_count(), -1);
  for (std::size_t k = 0; k < comps.size(); ++k) {
    for (HalfEdge h : comps[k]) comp_of[h] = static_cast<std::int32_t>(k);
  }

  Decomposition d{std::move(scheme), {}, {0, 0}};
  for (int i = 0; i < d.scheme.edge_count(); ++i) {
    const HalfEdge start = r.origin[d.scheme.edge_origin[i]];
    const HalfEdge end = c.chain_end[start];
    const auto& comp = comps[comp_of[start]];
    SubMap sub = restrict_to(sliced, comp);
    const auto local = [&](HalfEdge h) {
      return static_cast<HalfEdge>(
          std::lower_bound(sub.old_label.begin(), sub.old_label.end(), h) -
          sub.old_label.begin());
    };
    CanonicalForm cf = canonicalize(sub.map, local(start));
    const VertexId nu = cf.map.map().vertex_of(cf.relabel(local(end)));
    if (i == 0) {
      if (comp_of[0] != comp_of[start]) {
        inconsistent("root edge is not in the first tree");
      }
      const HalfEdge root = cf.relabel(local(0));
      d.root_mark = {root, cf.map.map().alpha()(root)};
    }
    d.trees.push_back(DoublyMarkedTree{std::move(cf.map), nu});
  }
  return d;
}

RootedMap recompose(const Decomposition& d) {
  const Scheme& s = d.scheme;
  if (static_cast<int>(d.trees.size()) != s.edge_count()) {
    inconsistent("need one tree per scheme edge");
  }
  std::vector<CombMap> parts;
  std::vector<HalfEdge> offset;
  HalfEdge total = 0;
  for (const DoublyMarkedTree& t : d.trees) {
    if (t.tree.genus() != 0 || !t.tree.map().has_vertex(t.mark) ||
        !is_in_T(t.tree, t.mark)) {
      inconsistent("every tree must be a plane tree with a valid mark");
    }
    offset.push_back(total);
    total += static_cast<HalfEdge>(t.tree.map().half_edge_count());
    parts.push_back(t.tree.map());
  }
  const auto& [root, opposite] = d.root_mark;
  const CombMap& first = d.trees[0].tree.map();
  if (root < 0 || static_cast<std::size_t>(root) >= first.half_edge_count() ||
      first.alpha()(root) != opposite) {
    inconsistent("root mark is not an oriented edge of the first tree");
  }
  if (!is_right_of(d.trees[0].tree, d.trees[0].mark, root)) {
    inconsistent("root mark is not at the right of the first mark");
  }

  CombMap glued = disjoint_union(parts);
  const CombMap& sm = s.map.map();
  for (VertexId v : sm.vertices()) {
    std::vector<HalfEdge> tuple;
    for (HalfEdge h : sm.vertex_cycle(v)) {
      const int i = s.edge_of(h);
      const DoublyMarkedTree& t = d.trees[i];
      tuple.push_back(offset[i] + (h == s.edge_origin[i]
                                       ? 0
                                       : incoming_path_half_edge(t.tree, t.mark)));
    }
    glued = glue_halfedges(glued, GlueSpec{tuple});
  }
  if (!glued.is_unicellular()) inconsistent("recomposed map is not unicellular");
  return canonicalize(glued, offset[0] + root).map;
}

bool is_dominant(const RootedMap& m) {
  if (m.genus() == 0) return false;
  const SchemeResult s = contract_to_scheme(m);
  for (VertexId v : s.scheme.map.map().vertices()) {
    if (s.scheme.map.map().vertex_degree(v) != 3) return false;
  }
  return true;
}

bool is_in_T(const RootedMap& t, VertexId nu) {
  if (t.genus() != 0 || !t.map().has_vertex(nu) || nu == root_vertex(t)) {
    return false;
  }
  const auto up = up_half_edges(t);
  const auto path = path_to_root(t, up, nu);
  return !path.empty() && path.back() == t.map().alpha()(0);
}

HalfEdge incoming_path_half_edge(const RootedMap& t, VertexId nu) {
  const auto up = up_half_edges(t);
  if (up[nu.id] < 0) fail(Errc::kInvalidArgument, "the root vertex has no parent");
  return up[nu.id];
}

bool is_right_of(const RootedMap& t, VertexId nu, HalfEdge eps) {
  const CombMap& m = t.map();
  const auto up = up_half_edges(t);
  const auto path = path_to_root(t, up, nu);
  const VertexId root_v = root_vertex(t);

  // on_path[v] = the down half-edge at v leading towards nu, for path
  // vertices other than nu; nu itself is flagged separately.
  std::vector<HalfEdge> toward(m.half_edge_count(), -1);
  std::vector<char> on_path(m.half_edge_count(), 0);
  on_path[nu.id] = 1;
  for (HalfEdge h : path) {
    const HalfEdge down = m.alpha()(h);
    const VertexId parent = m.vertex_of(down);
    on_path[parent.id] = 1;
    toward[parent.id] = down;
  }

  const HalfEdge e_down = std::min(eps, m.alpha()(eps));
  const HalfEdge e_up = std::max(eps, m.alpha()(eps));
  if (on_path[m.vertex_of(e_up).id] && up[m.vertex_of(e_up).id] == e_up) {
    // The edge's child end is a path vertex: the edge lies on the path.
    return eps == e_down;
  }

  // Climb to the path vertex where the branch containing eps hangs.
  HalfEdge branch = e_down;
  while (!on_path[m.vertex_of(branch).id]) {
    branch = m.alpha()(up[m.vertex_of(branch).id]);
  }
  const VertexId v = m.vertex_of(branch);
  if (v == root_v) return true;
  if (v == nu) return false;
  for (HalfEdge h = m.beta()(toward[v.id]); h != up[v.id]; h = m.beta()(h)) {
    if (h == branch) return true;
  }
  return false;
}

}  // namespace unimap
