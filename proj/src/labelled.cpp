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

#include "unimap/labelled.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>

#include "unimap/error.hpp"

namespace unimap {

namespace {

// Vertex order for backtracking: breadth-first from the root, each vertex
// after the first paired with a neighbour that comes earlier.
struct VisitOrder {
  std::vector<VertexId> order;
  std::vector<VertexId> anchor;
  std::vector<std::vector<VertexId>> neighbours;  // per vertex id
};

VisitOrder visit_order(const CombMap& m) {
  VisitOrder o;
  o.neighbours.resize(m.half_edge_count());
  for (VertexId v : m.vertices()) {
    for (HalfEdge h : m.vertex_cycle(v)) o.neighbours[v.id].push_back(m.vertex_of(m.alpha()(h)));
  }
  std::vector<char> seen(m.half_edge_count(), 0);
  const VertexId root = m.vertex_of(0);
  o.order.push_back(root);
  o.anchor.push_back(root);
  seen[root.id] = 1;
  for (std::size_t i = 0; i < o.order.size(); ++i) {
    for (VertexId u : o.neighbours[o.order[i].id]) {
      if (seen[u.id]) continue;
      seen[u.id] = 1;
      o.order.push_back(u);
      o.anchor.push_back(o.order[i]);
    }
  }
  return o;
}

void check_tree(const RootedMap& t) {
  if (!is_plane_tree(t)) fail(Errc::kInvalidArgument, "expected a plane tree");
}

}  // namespace

void Labelling::set(VertexId v, std::int32_t label) {
  if (v.id < 0 || static_cast<std::size_t>(v.id) >= value_.size()) {
    fail(Errc::kUnknownVertex, "vertex " + std::to_string(v.id + 1) + " is out of range");
  }
  value_[v.id] = label;
  defined_[v.id] = 1;
}

bool Labelling::has(VertexId v) const {
  return v.id >= 0 && static_cast<std::size_t>(v.id) < value_.size() && defined_[v.id];
}

std::int32_t Labelling::at(VertexId v) const {
  if (!has(v)) fail(Errc::kMissingLabel, "vertex " + std::to_string(v.id + 1) + " has no label");
  return value_[v.id];
}

std::vector<std::pair<VertexId, std::int32_t>> Labelling::entries() const {
  std::vector<std::pair<VertexId, std::int32_t>> out;
  for (std::size_t i = 0; i < value_.size(); ++i) {
    if (defined_[i]) out.emplace_back(VertexId{static_cast<HalfEdge>(i)}, value_[i]);
  }
  return out;
}

Labelling zero_labelling(const CombMap& m) {
  Labelling l(m.half_edge_count());
  for (VertexId v : m.vertices()) l.set(v, 0);
  return l;
}

bool validate_labelling(const RootedMap& rm, const Labelling& l) {
  const CombMap& m = rm.map();
  for (VertexId v : m.vertices()) l.at(v);
  if (l.at(m.vertex_of(0)) != 0) return false;
  for (std::size_t i = 0; i < m.half_edge_count(); ++i) {
    const HalfEdge h = static_cast<HalfEdge>(i);
    if (std::abs(l.at(m.vertex_of(h)) - l.at(m.vertex_of(m.alpha()(h)))) > 1) return false;
  }
  return true;
}

std::vector<HalfEdge> tree_edges(const RootedMap& t) {
  const auto& alpha = t.map().alpha();
  std::vector<HalfEdge> out;
  for (std::size_t i = 0; i < alpha.size(); ++i) {
    const HalfEdge h = static_cast<HalfEdge>(i);
    if (h < alpha(h)) out.push_back(h);
  }
  return out;
}

LabelledTree make_labelled_tree(RootedMap tree, std::vector<std::int8_t> increments) {
  check_tree(tree);
  if (increments.size() != static_cast<std::size_t>(tree.n())) {
    fail(Errc::kInvalidArgument, "one increment per edge is required");
  }
  for (std::int8_t d : increments) {
    if (d < -1 || d > 1) fail(Errc::kInvalidArgument, "increments lie in {-1,0,1}");
  }
  return LabelledTree{std::move(tree), std::move(increments)};
}

std::vector<std::int32_t> vertex_labels(const DyckWord& w,
                                        std::span<const std::int8_t> increments) {
  std::vector<std::int32_t> out;
  out.reserve(w.size() / 2 + 1);
  out.push_back(0);
  std::vector<std::int32_t> stack{0};
  std::size_t k = 0;
  for (bool up : w) {
    if (up) {
      const std::int32_t l = stack.back() + increments[k++];
      out.push_back(l);
      stack.push_back(l);
    } else {
      stack.pop_back();
    }
  }
  return out;
}

Labelling labels_of(const LabelledTree& t) {
  const std::vector<std::int32_t> values =
      vertex_labels(dyck_from_tree(t.tree), t.increments);
  const std::vector<HalfEdge> edges = tree_edges(t.tree);
  Labelling l(t.tree.map().half_edge_count());
  l.set(VertexId{0}, 0);
  for (std::size_t k = 0; k < edges.size(); ++k) l.set(VertexId{edges[k] + 1}, values[k + 1]);
  return l;
}

LabelledTree from_labelling(const RootedMap& tree, const Labelling& l) {
  check_tree(tree);
  if (!validate_labelling(tree, l)) fail(Errc::kInvalidArgument, "invalid labelling");
  const CombMap& m = tree.map();
  std::vector<std::int8_t> inc;
  for (HalfEdge h : tree_edges(tree)) {
    inc.push_back(static_cast<std::int8_t>(l.at(VertexId{h + 1}) - l.at(m.vertex_of(h))));
  }
  return LabelledTree{tree, std::move(inc)};
}

bool triples_share_labels(const TreeWithTriples& base, const Labelling& l) {
  return std::all_of(base.triples.begin(), base.triples.end(), [&](const Triple& c) {
    return l.at(c[0]) == l.at(c[1]) && l.at(c[1]) == l.at(c[2]);
  });
}

WellLabelledTriples make_well_labelled(TreeWithTriples base, Labelling l) {
  if (!validate_labelling(base.tree, l)) fail(Errc::kInvalidArgument, "invalid labelling");
  if (!triples_share_labels(base, l)) {
    fail(Errc::kUnequalTripleLabels, "a triple carries different labels");
  }
  return WellLabelledTriples{std::move(base), std::move(l)};
}

WellLabelledTriples labelled_phi(const RootedMap& m, const Labelling& l,
                                 const OpeningSequence& seq) {
  if (!validate_labelling(m, l)) fail(Errc::kInvalidArgument, "invalid labelling");
  PhiTrace trace = open_phi_traced(m, seq);
  const Permutation back = trace.relabel.inverse();
  const CombMap& t = trace.result.tree.map();
  Labelling out(t.half_edge_count());
  for (VertexId v : t.vertices()) out.set(v, l.at(m.map().vertex_of(back(v.id))));
  return WellLabelledTriples{std::move(trace.result), std::move(out)};
}

LabelledClosedMap labelled_psi(const WellLabelledTriples& w, GluingRule rule) {
  if (!triples_share_labels(w.base, w.labelling)) {
    fail(Errc::kUnequalTripleLabels, "a triple carries different labels");
  }
  if (!validate_labelling(w.base.tree, w.labelling)) {
    fail(Errc::kInvalidArgument, "invalid labelling");
  }
  ClosedMap closed = close_psi(w.base, rule);
  const Permutation back = closed.relabel.inverse();
  const CombMap& t = w.base.tree.map();
  const CombMap& m = closed.map.map();
  Labelling out(m.half_edge_count());
  for (VertexId v : m.vertices()) out.set(v, w.labelling.at(t.vertex_of(back(v.id))));
  return LabelledClosedMap{LabelledMap{std::move(closed.map), std::move(out)},
                           std::move(closed.sequence)};
}

void for_each_labelling(const RootedMap& rm,
                        const std::function<void(const Labelling&)>& visit) {
  const CombMap& m = rm.map();
  const VisitOrder o = visit_order(m);
  std::vector<std::int32_t> value(m.half_edge_count(), 0);
  std::vector<char> assigned(m.half_edge_count(), 0);
  assigned[o.order[0].id] = 1;
  std::function<void(std::size_t)> rec = [&](std::size_t i) {
    if (i == o.order.size()) {
      Labelling l(m.half_edge_count());
      for (VertexId v : o.order) l.set(v, value[v.id]);
      visit(l);
      return;
    }
    const VertexId v = o.order[i];
    const std::int32_t base = value[o.anchor[i].id];
    assigned[v.id] = 1;
    for (std::int32_t x = base - 1; x <= base + 1; ++x) {
      const bool ok = std::all_of(
          o.neighbours[v.id].begin(), o.neighbours[v.id].end(),
          [&](VertexId u) { return u == v || !assigned[u.id] || std::abs(value[u.id] - x) <= 1; });
      if (!ok) continue;
      value[v.id] = x;
      rec(i + 1);
    }
    assigned[v.id] = 0;
  };
  rec(1);
}

std::uint64_t count_labellings(const RootedMap& m) {
  std::uint64_t count = 0;
  for_each_labelling(m, [&](const Labelling&) { ++count; });
  return count;
}

std::uint64_t count_well_labelled(int g, int n) {
  std::uint64_t count = 0;
  for (const TreeWithTriples& tc : enum_trees_with_triples(g, n)) {
    const DyckWord w = dyck_from_tree(tc.tree);
    const std::vector<HalfEdge> edges = tree_edges(tc.tree);
    std::vector<std::size_t> slot(tc.tree.map().half_edge_count(), 0);
    for (std::size_t k = 0; k < edges.size(); ++k) slot[edges[k] + 1] = k + 1;
    std::vector<std::int8_t> inc(static_cast<std::size_t>(n), -1);
    while (true) {
      const std::vector<std::int32_t> lab = vertex_labels(w, inc);
      bool ok = true;
      for (const Triple& c : tc.triples) {
        const auto a = lab[slot[c[0].id]];
        if (lab[slot[c[1].id]] != a || lab[slot[c[2].id]] != a) {
          ok = false;
          break;
        }
      }
      if (ok) ++count;
      std::size_t k = 0;
      while (k < inc.size() && inc[k] == 1) inc[k++] = -1;
      if (k == inc.size()) break;
      ++inc[k];
    }
  }
  return count;
}

std::uint64_t count_labelled_dominant(int g, int n, const EnumConfig& cfg) {
  std::uint64_t count = 0;
  for (const RootedMap& m : enum_dominant(g, n, cfg)) count += count_labellings(m);
  return count;
}

}  // namespace unimap
