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

#include "unimap/reduction.hpp"

#include <algorithm>

#include "unimap/error.hpp"

namespace unimap {

namespace {

bool is_protected(const std::vector<char>& protected_vertex, VertexId v) {
  return !protected_vertex.empty() && protected_vertex[v.id];
}

// Compact sub-map on `members` with the given alpha/beta (in input labels),
// canonicalized from `root`.
template <class AlphaFn, class BetaFn>
Reduced build(const CombMap& m, const std::vector<HalfEdge>& members,
              HalfEdge root, AlphaFn alpha_of, BetaFn beta_of) {
  std::vector<HalfEdge> index(m.half_edge_count(), -1);
  for (std::size_t i = 0; i < members.size(); ++i) {
    index[members[i]] = static_cast<HalfEdge>(i);
  }
  std::vector<HalfEdge> alpha(members.size());
  std::vector<HalfEdge> beta(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    alpha[i] = index[alpha_of(members[i])];
    beta[i] = index[beta_of(members[i])];
  }
  const CombMap compact =
      CombMap::make(Permutation(std::move(alpha)), Permutation(std::move(beta)));
  CanonicalForm cf = canonicalize(compact, index[root]);
  std::vector<HalfEdge> origin(members.size());
  for (std::size_t i = 0; i < members.size(); ++i) {
    origin[cf.relabel(static_cast<HalfEdge>(i))] = members[i];
  }
  return Reduced{std::move(cf.map), std::move(origin)};
}

}  // namespace

Pruning prune_leaves(const CombMap& m, const std::vector<char>& protected_vertex,
                     HalfEdge root) {
  const std::size_t size = m.half_edge_count();
  Pruning p;
  p.kept.assign(size, 1);
  p.kept_degree.assign(size, 0);
  p.attachment.assign(size, -1);
  for (VertexId v : m.vertices()) {
    p.kept_degree[v.id] = static_cast<std::int32_t>(m.vertex_degree(v));
  }

  std::vector<HalfEdge> queue;
  for (VertexId v : m.vertices()) {
    if (p.kept_degree[v.id] == 1 && !is_protected(protected_vertex, v)) {
      queue.push_back(v.id);
    }
  }
  // removal[v] = the half-edge by which vertex v left the map.
  std::vector<HalfEdge> removal(size, -1);
  std::vector<HalfEdge> removed_edges;  // outer half-edges in removal order
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const VertexId v{queue[q]};
    if (p.kept_degree[v.id] != 1) continue;
    HalfEdge h = v.id;
    while (!p.kept[h]) h = m.beta()(h);
    const HalfEdge inner = m.alpha()(h);
    p.kept[h] = 0;
    p.kept[inner] = 0;
    p.kept_degree[v.id] = 0;
    removal[v.id] = h;
    removed_edges.push_back(h);
    const VertexId w = m.vertex_of(inner);
    if (--p.kept_degree[w.id] == 1 && !is_protected(protected_vertex, w)) {
      queue.push_back(w.id);
    }
  }

  // Later removals are closer to the surviving part.
  for (auto it = removed_edges.rbegin(); it != removed_edges.rend(); ++it) {
    const HalfEdge outer = *it;
    const HalfEdge inner = m.alpha()(outer);
    const VertexId w = m.vertex_of(inner);
    HalfEdge att = -1;
    if (p.kept_degree[w.id] > 0) {
      att = inner;
    } else if (removal[w.id] >= 0) {
      att = p.attachment[removal[w.id]];
    }
    p.attachment[outer] = att;
    p.attachment[inner] = att;
  }

  if (p.kept[root]) {
    p.root = root;
  } else if (p.attachment[root] >= 0) {
    const Permutation beta_inv = m.beta().inverse();
    HalfEdge h = beta_inv(p.attachment[root]);
    while (!p.kept[h]) h = beta_inv(h);
    p.root = h;
  }
  return p;
}

HalfEdge next_kept(const CombMap& m, const Pruning& p, HalfEdge h) {
  HalfEdge x = m.beta()(h);
  while (!p.kept[x]) x = m.beta()(x);
  return x;
}

Contraction contract_chains(const CombMap& m, const Pruning& p,
                            const std::vector<char>& protected_vertex) {
  const std::size_t size = m.half_edge_count();
  Contraction c;
  c.is_node.assign(size, 0);
  c.chain_end.assign(size, -1);
  c.chain_start.assign(size, -1);
  for (VertexId v : m.vertices()) {
    const auto d = p.kept_degree[v.id];
    if (d >= 3 || (d >= 1 && is_protected(protected_vertex, v))) {
      c.is_node[v.id] = 1;
    }
  }
  const auto node_of = [&](HalfEdge h) { return c.is_node[m.vertex_of(h).id] != 0; };

  for (std::size_t i = 0; i < size; ++i) {
    const HalfEdge h = static_cast<HalfEdge>(i);
    if (!p.kept[h] || !node_of(h)) continue;
    HalfEdge x = h;
    for (std::size_t steps = 0;; ++steps) {
      if (steps > size) {
        fail(Errc::kInvalidArgument, "chain without an endpoint node");
      }
      c.chain_start[x] = h;
      const HalfEdge y = m.alpha()(x);
      if (node_of(y)) {
        c.chain_end[h] = y;
        break;
      }
      x = next_kept(m, p, y);
    }
  }
  if (p.root >= 0) c.root = c.chain_start[p.root];
  return c;
}

Reduced pruned_map(const CombMap& m, const Pruning& p) {
  if (p.root < 0) fail(Errc::kGenusZero, "nothing survives pruning");
  std::vector<HalfEdge> members;
  for (std::size_t i = 0; i < m.half_edge_count(); ++i) {
    if (p.kept[i]) members.push_back(static_cast<HalfEdge>(i));
  }
  return build(
      m, members, p.root, [&](HalfEdge h) { return m.alpha()(h); },
      [&](HalfEdge h) { return next_kept(m, p, h); });
}

Reduced contracted_map(const CombMap& m, const Pruning& p,
                       const Contraction& c) {
  if (c.root < 0) fail(Errc::kGenusZero, "nothing survives pruning");
  std::vector<HalfEdge> members;
  for (std::size_t i = 0; i < m.half_edge_count(); ++i) {
    if (c.chain_end[i] >= 0) members.push_back(static_cast<HalfEdge>(i));
  }
  return build(
      m, members, c.root, [&](HalfEdge h) { return c.chain_end[h]; },
      [&](HalfEdge h) { return next_kept(m, p, h); });
}

}  // namespace unimap
