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

// Labelled maps and trees. A labelling gives every vertex an integer, the
// root vertex gets 0 and the two ends of any edge differ by at most one.
//
// Trees store one increment per edge instead: edge k is the k-th smallest
// half-edge h with h < alpha(h), its child vertex has id h+1, and the
// increment is label(child) - label(parent). Any increment vector is valid.

#include <cstdint>
#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "unimap/bijection.hpp"
#include "unimap/comb_map.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/trees.hpp"

namespace unimap {

class Labelling {
 public:
  Labelling() = default;
  // No vertex labelled yet; ids range over [0, half_edge_count).
  explicit Labelling(std::size_t half_edge_count)
      : value_(half_edge_count, 0), defined_(half_edge_count, 0) {}

  void set(VertexId v, std::int32_t label);
  bool has(VertexId v) const;
  // Throws MissingLabel.
  std::int32_t at(VertexId v) const;
  std::size_t capacity() const noexcept { return value_.size(); }
  // Labelled vertices in increasing id order.
  std::vector<std::pair<VertexId, std::int32_t>> entries() const;

  friend bool operator==(const Labelling&, const Labelling&) = default;

 private:
  std::vector<std::int32_t> value_;
  std::vector<char> defined_;
};

Labelling zero_labelling(const CombMap& m);

// Root label 0 and |difference| <= 1 along every edge. Throws MissingLabel
// if some vertex of m has no label.
bool validate_labelling(const RootedMap& m, const Labelling& l);

struct LabelledTree {
  RootedMap tree;
  std::vector<std::int8_t> increments;  // per edge index
  friend bool operator==(const LabelledTree&, const LabelledTree&) = default;
};

// Throws InvalidArgument (not a tree, wrong length, increment outside
// {-1,0,1}).
LabelledTree make_labelled_tree(RootedMap tree, std::vector<std::int8_t> increments);
// Down half-edges in increasing order; position k is edge index k.
std::vector<HalfEdge> tree_edges(const RootedMap& t);
Labelling labels_of(const LabelledTree& t);
// Inverse of labels_of. Throws InvalidArgument on an invalid labelling.
LabelledTree from_labelling(const RootedMap& tree, const Labelling& l);

// Labels straight from the contour word, without building the map: entry 0
// is the root, entry k+1 the child end of edge k.
std::vector<std::int32_t> vertex_labels(const DyckWord& w,
                                        std::span<const std::int8_t> increments);

struct LabelledMap {
  RootedMap map;
  Labelling labels;
  friend bool operator==(const LabelledMap&, const LabelledMap&) = default;
};

struct WellLabelledTriples {
  TreeWithTriples base;
  Labelling labelling;
  friend bool operator==(const WellLabelledTriples&, const WellLabelledTriples&) = default;
};

bool triples_share_labels(const TreeWithTriples& base, const Labelling& l);
// Throws InvalidArgument on an invalid labelling, UnequalTripleLabels when
// a triple mixes labels.
WellLabelledTriples make_well_labelled(TreeWithTriples base, Labelling l);

// Slicing keeps every label; the pieces of a sliced node inherit its label.
WellLabelledTriples labelled_phi(const RootedMap& m, const Labelling& l,
                                 const OpeningSequence& seq);

struct LabelledClosedMap {
  LabelledMap map;
  OpeningSequence sequence;
};

// Throws UnequalTripleLabels before doing any gluing.
LabelledClosedMap labelled_psi(const WellLabelledTriples& w,
                               GluingRule rule = GluingRule::kIncreasing);

// Every valid labelling of m, vertices visited in a breadth-first order.
void for_each_labelling(const RootedMap& m,
                        const std::function<void(const Labelling&)>& visit);
std::uint64_t count_labellings(const RootedMap& m);

// |W_{g,n}|: trees with g triples and a labelling equal on each triple.
std::uint64_t count_well_labelled(int g, int n);
// Labelled dominant maps of genus g with n edges.
std::uint64_t count_labelled_dominant(int g, int n, const EnumConfig& cfg = {});

}  // namespace unimap
