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

#include "unimap/bijection.hpp"

#include <algorithm>
#include <functional>
#include <string>

#include "unimap/error.hpp"
#include "unimap/reduction.hpp"
#include "unimap/surgery.hpp"

namespace unimap {

namespace {

Pruning core_pruning(const RootedMap& m) { return prune_leaves(m.map(), {}, 0); }

std::array<HalfEdge, 3> kept_triple(const CombMap& m, const Pruning& p, VertexId v) {
  HalfEdge first = -1;
  for (HalfEdge h : m.vertex_cycle(v)) {
    if (p.kept[h] && (first < 0 || h < first)) first = h;
  }
  const HalfEdge second = next_kept(m, p, first);
  const HalfEdge third = next_kept(m, p, second);
  return {first, second, third};
}

bool intertwined(const std::array<HalfEdge, 3>& e) {
  return e[0] < e[2] && e[2] < e[1];
}

std::vector<char> protect(const CombMap& m, const std::vector<VertexId>& w) {
  std::vector<char> flags(m.half_edge_count(), 0);
  for (VertexId v : w) {
    if (!m.has_vertex(v)) {
      fail(Errc::kInvalidArgument, "no vertex with id " + std::to_string(v.id + 1));
    }
    flags[v.id] = 1;
  }
  return flags;
}

std::size_t distinct_count(const std::vector<char>& flags) {
  return static_cast<std::size_t>(std::count(flags.begin(), flags.end(), 1));
}

// Pruning of the tree down to the union of paths between marks, or an error
// when there are fewer than two marks.
Pruning mark_pruning(const RootedMap& t, const std::vector<char>& flags) {
  if (distinct_count(flags) < 2) {
    fail(Errc::kTooFewMarks, "a skeleton needs at least two marked vertices");
  }
  return prune_leaves(t.map(), flags, 0);
}

bool non_singular(const CombMap& m, const Pruning& p, const std::vector<char>& flags) {
  for (VertexId v : m.vertices()) {
    const auto d = p.kept_degree[v.id];
    if (flags[v.id] ? d != 1 : d > 3) return false;
  }
  return true;
}

HalfEdge only_kept(const CombMap& m, const Pruning& p, VertexId v) {
  for (HalfEdge h : m.vertex_cycle(v)) {
    if (p.kept[h]) return h;
  }
  return -1;
}

}  // namespace

std::vector<VertexId> flatten(const std::vector<Triple>& triples) {
  std::vector<VertexId> out;
  for (const Triple& c : triples) out.insert(out.end(), c.begin(), c.end());
  return out;
}

TreeWithTriples make_tree_with_triples(RootedMap tree, std::vector<Triple> triples) {
  if (tree.genus() != 0) fail(Errc::kInvalidArgument, "the base must be a plane tree");
  for (Triple& c : triples) std::sort(c.begin(), c.end());
  const std::vector<VertexId> all = flatten(triples);
  const std::vector<char> flags = protect(tree.map(), all);
  if (distinct_count(flags) != all.size()) {
    fail(Errc::kInvalidArgument, "triples must be disjoint sets of three vertices");
  }
  if (!triples.empty() && !is_non_singular(tree, all)) {
    fail(Errc::kSingular, "the union of the triples is singular");
  }
  return TreeWithTriples{std::move(tree), std::move(triples)};
}

std::array<HalfEdge, 3> node_half_edges(const RootedMap& m, VertexId v) {
  const Pruning p = core_pruning(m);
  if (!m.map().has_vertex(v) || p.kept_degree[v.id] != 3) {
    fail(Errc::kNotIntertwined, "vertex " + std::to_string(v.id + 1) +
                                    " is not a trivalent node");
  }
  return kept_triple(m.map(), p, v);
}

std::vector<VertexId> intertwined_nodes(const RootedMap& m) {
  if (m.genus() == 0) fail(Errc::kNotDominant, "a plane tree is not dominant");
  const Pruning p = core_pruning(m);
  std::vector<VertexId> out;
  for (VertexId v : m.map().vertices()) {
    const auto d = p.kept_degree[v.id];
    if (d > 3) fail(Errc::kNotDominant, "the scheme has a vertex of degree > 3");
    if (d == 3 && intertwined(kept_triple(m.map(), p, v))) out.push_back(v);
  }
  return out;
}

SliceResult slice_intertwined(const RootedMap& m, VertexId v) {
  const Pruning p = core_pruning(m);
  if (!m.map().has_vertex(v) || p.kept_degree[v.id] != 3) {
    fail(Errc::kNotIntertwined, "vertex " + std::to_string(v.id + 1) +
                                    " is not a trivalent node");
  }
  const auto e = kept_triple(m.map(), p, v);
  if (!intertwined(e)) {
    fail(Errc::kNotIntertwined,
         "vertex " + std::to_string(v.id + 1) + " is not intertwined");
  }
  const CombMap sliced = slice_vertex(m.map(), SliceSpec{v, {e[0], e[1], e[2]}});
  CanonicalForm cf = canonicalize(sliced, 0);
  return SliceResult{std::move(cf.map), std::move(cf.relabel), e};
}

std::vector<OpeningSequence> opening_sequences(const RootedMap& m) {
  const int g = m.genus();
  std::vector<OpeningSequence> out;
  std::vector<VertexId> chosen(static_cast<std::size_t>(g));
  std::function<void(const RootedMap&, int)> rec = [&](const RootedMap& cur, int i) {
    if (i == 0) {
      out.push_back(OpeningSequence{chosen});
      return;
    }
    for (VertexId v : intertwined_nodes(cur)) {
      chosen[i - 1] = v;
      rec(slice_intertwined(cur, v).map, i - 1);
    }
  };
  if (g == 0) fail(Errc::kNotDominant, "a plane tree is not dominant");
  rec(m, g);
  return out;
}

std::uint64_t count_opening_sequences(const RootedMap& m) {
  return opening_sequences(m).size();
}

PhiTrace open_phi_traced(const RootedMap& m, const OpeningSequence& seq) {
  const int g = m.genus();
  if (static_cast<int>(seq.nodes.size()) != g) {
    fail(Errc::kInvalidSequence, "an opening sequence has one node per genus");
  }
  RootedMap cur = m;
  std::vector<std::array<HalfEdge, 3>> tracked(static_cast<std::size_t>(g));
  Permutation total = Permutation::identity(m.map().half_edge_count());
  for (int i = g; i >= 1; --i) {
    SliceResult r = [&] {
      try {
        return slice_intertwined(cur, seq.nodes[i - 1]);
      } catch (const Error& e) {
        fail(Errc::kInvalidSequence, "node " + std::to_string(i) + ": " + e.what());
      }
    }();
    for (int j = i; j < g; ++j) {
      for (HalfEdge& h : tracked[j]) h = r.relabel(h);
    }
    for (int k = 0; k < 3; ++k) tracked[i - 1][k] = r.relabel(r.core[k]);
    total = compose(r.relabel, total);
    cur = std::move(r.map);
  }
  std::vector<Triple> triples;
  for (const auto& hs : tracked) {
    Triple c{cur.map().vertex_of(hs[0]), cur.map().vertex_of(hs[1]),
             cur.map().vertex_of(hs[2])};
    std::sort(c.begin(), c.end());
    triples.push_back(c);
  }
  return PhiTrace{TreeWithTriples{std::move(cur), std::move(triples)},
                  std::move(tracked), std::move(total)};
}

TreeWithTriples open_phi(const RootedMap& m, const OpeningSequence& seq) {
  return open_phi_traced(m, seq).result;
}

SkeletonReport skeleton(const RootedMap& t, const std::vector<VertexId>& w) {
  const std::vector<char> flags = protect(t.map(), w);
  const Pruning p = mark_pruning(t, flags);
  const Contraction c = contract_chains(t.map(), p, flags);
  Reduced r = contracted_map(t.map(), p, c);
  const CombMap& s = r.map.map();
  std::vector<char> marked(s.half_edge_count(), 0);
  std::vector<std::int32_t> degree(s.half_edge_count(), 0);
  for (VertexId v : s.vertices()) {
    marked[v.id] = flags[t.map().vertex_of(r.origin[v.id]).id];
    degree[v.id] = static_cast<std::int32_t>(s.vertex_degree(v));
  }
  return SkeletonReport{std::move(r.map), std::move(r.origin), std::move(marked),
                        std::move(degree)};
}

bool is_non_singular(const RootedMap& t, const std::vector<VertexId>& w) {
  const std::vector<char> flags = protect(t.map(), w);
  return non_singular(t.map(), mark_pruning(t, flags), flags);
}

HalfEdge incoming_half_edge(const RootedMap& t, const std::vector<VertexId>& w,
                            VertexId v) {
  const std::vector<char> flags = protect(t.map(), w);
  if (!t.map().has_vertex(v) || !flags[v.id]) {
    fail(Errc::kInvalidArgument, "vertex is not marked");
  }
  const Pruning p = mark_pruning(t, flags);
  if (p.kept_degree[v.id] != 1) {
    fail(Errc::kSingular, "vertex " + std::to_string(v.id + 1) +
                              " has no single incoming half-edge");
  }
  return only_kept(t.map(), p, v);
}

ClosedMap close_psi(const TreeWithTriples& tc, GluingRule rule) {
  const CombMap& tree = tc.tree.map();
  const std::vector<VertexId> all = flatten(tc.triples);
  if (tc.tree.genus() != 0) fail(Errc::kInvalidArgument, "the base must be a plane tree");
  const std::vector<char> flags = protect(tree, all);
  if (distinct_count(flags) != all.size()) {
    fail(Errc::kInvalidArgument, "triples must be disjoint sets of three vertices");
  }

  std::vector<std::array<HalfEdge, 3>> h(tc.triples.size());
  if (!tc.triples.empty()) {
    const Pruning p = mark_pruning(tc.tree, flags);
    if (!non_singular(tree, p, flags)) {
      fail(Errc::kSingular, "the union of the triples is singular");
    }
    for (std::size_t i = 0; i < h.size(); ++i) {
      for (int k = 0; k < 3; ++k) h[i][k] = only_kept(tree, p, tc.triples[i][k]);
    }
  }

  RootedMap cur = tc.tree;
  OpeningSequence seq;
  Permutation total = Permutation::identity(tree.half_edge_count());
  for (std::size_t i = 0; i < h.size(); ++i) {
    std::array<HalfEdge, 3> x = h[i];
    std::sort(x.begin(), x.end());
    CombMap glued = glue_halfedges(cur.map(), GlueSpec{{x[0], x[1], x[2]}});
    if (rule == GluingRule::kTrial) {
      const CombMap other = glue_halfedges(cur.map(), GlueSpec{{x[0], x[2], x[1]}});
      if (glued.is_unicellular() == other.is_unicellular()) {
        fail(Errc::kInvalidArgument, "exactly one circular order must be unicellular");
      }
      if (other.is_unicellular()) glued = other;
    }
    if (!glued.is_unicellular()) {
      fail(Errc::kInvalidArgument, "gluing in increasing order is not unicellular");
    }
    CanonicalForm cf = canonicalize(glued, 0);
    for (std::size_t j = i + 1; j < h.size(); ++j) {
      for (HalfEdge& y : h[j]) y = cf.relabel(y);
    }
    seq.nodes.push_back(cf.map.map().vertex_of(cf.relabel(x[0])));
    total = compose(cf.relabel, total);
    cur = std::move(cf.map);
  }
  return ClosedMap{std::move(cur), std::move(seq), std::move(total)};
}

}  // namespace unimap
