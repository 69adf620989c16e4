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

#include "unimap/comb_map.hpp"

#include <algorithm>
#include <string>

#include "unimap/error.hpp"

namespace unimap {

CombMap::CombMap(Permutation alpha, Permutation beta, Permutation gamma)
    : alpha_(std::move(alpha)),
      beta_(std::move(beta)),
      gamma_(std::move(gamma)),
      vertex_of_(alpha_.size(), -1),
      degree_(alpha_.size(), 0) {
  const std::size_t size = beta_.size();
  for (std::size_t start = 0; start < size; ++start) {
    if (vertex_of_[start] != -1) continue;
    // Scanning in increasing order, the first unseen point is the cycle min.
    const HalfEdge id = static_cast<HalfEdge>(start);
    std::int32_t degree = 0;
    for (HalfEdge h = id; vertex_of_[h] == -1; h = beta_(h)) {
      vertex_of_[h] = id;
      ++degree;
    }
    degree_[id] = degree;
    ++vertex_count_;
  }
}

CombMap CombMap::make(Permutation alpha, Permutation beta) {
  if (alpha.size() != beta.size()) {
    fail(Errc::kLengthMismatch,
         "alpha has length " + std::to_string(alpha.size()) +
             " but beta has length " + std::to_string(beta.size()));
  }
  if (!alpha.is_fixed_point_free_involution()) {
    fail(Errc::kNotInvolution, "alpha must be a fixed-point-free involution");
  }
  Permutation gamma = compose(beta, alpha);
  return CombMap(std::move(alpha), std::move(beta), std::move(gamma));
}

std::vector<VertexId> CombMap::vertices() const {
  std::vector<VertexId> out;
  out.reserve(vertex_count_);
  for (std::size_t h = 0; h < degree_.size(); ++h) {
    if (degree_[h] > 0) out.push_back(VertexId{static_cast<HalfEdge>(h)});
  }
  return out;
}

VertexId CombMap::vertex_of(HalfEdge h) const {
  if (h < 0 || static_cast<std::size_t>(h) >= vertex_of_.size()) {
    fail(Errc::kOutOfRange, "half-edge " + std::to_string(h + 1) +
                                " is not in a map with " +
                                std::to_string(vertex_of_.size()) +
                                " half-edges");
  }
  return VertexId{vertex_of_[h]};
}

bool CombMap::has_vertex(VertexId v) const {
  return v.id >= 0 && static_cast<std::size_t>(v.id) < degree_.size() &&
         degree_[v.id] > 0;
}

std::size_t CombMap::vertex_degree(VertexId v) const {
  if (!has_vertex(v)) {
    fail(Errc::kUnknownVertex, "no vertex with id " + std::to_string(v.id + 1));
  }
  return static_cast<std::size_t>(degree_[v.id]);
}

std::vector<HalfEdge> CombMap::vertex_cycle(VertexId v) const {
  std::vector<HalfEdge> out;
  out.reserve(vertex_degree(v));
  HalfEdge h = v.id;
  do {
    out.push_back(h);
    h = beta_(h);
  } while (h != v.id);
  return out;
}

bool CombMap::is_connected() const {
  const std::size_t size = alpha_.size();
  std::vector<char> seen(size, 0);
  std::vector<HalfEdge> stack{0};
  seen[0] = 1;
  std::size_t reached = 1;
  while (!stack.empty()) {
    const HalfEdge h = stack.back();
    stack.pop_back();
    for (HalfEdge next : {alpha_(h), gamma_(h)}) {
      if (!seen[next]) {
        seen[next] = 1;
        ++reached;
        stack.push_back(next);
      }
    }
  }
  return reached == size;
}

int CombMap::genus() const {
  if (!is_connected()) fail(Errc::kNotConnected, "genus needs a connected map");
  const long twice = static_cast<long>(n()) + 2 -
                     static_cast<long>(vertex_count_) -
                     static_cast<long>(face_count());
  return static_cast<int>(twice / 2);
}

bool CombMap::is_canonical() const {
  const auto images = gamma_.images();
  const std::size_t size = images.size();
  for (std::size_t i = 0; i < size; ++i) {
    if (static_cast<std::size_t>(images[i]) != (i + 1) % size) return false;
  }
  return true;
}

RootedMap::RootedMap(CombMap map) : map_(std::move(map)) {
  if (!map_.is_canonical()) {
    fail(Errc::kNotCanonical, "gamma is not the cycle (1, 2, ..., 2n)");
  }
}

RootedMap RootedMap::from_alpha(Permutation alpha) {
  // beta = gamma o alpha^-1 = gamma o alpha.
  const std::size_t size = alpha.size();
  if (!alpha.is_fixed_point_free_involution()) {
    fail(Errc::kNotInvolution, "alpha must be a fixed-point-free involution");
  }
  std::vector<HalfEdge> beta(size);
  for (std::size_t i = 0; i < size; ++i) {
    beta[i] = static_cast<HalfEdge>((alpha(static_cast<HalfEdge>(i)) + 1) % size);
  }
  return RootedMap(CombMap::make(std::move(alpha), Permutation(std::move(beta))));
}

CombMap relabel(const CombMap& m, const Permutation& pi) {
  return CombMap::make(conjugate(m.alpha(), pi), conjugate(m.beta(), pi));
}

CanonicalForm canonicalize(const CombMap& m, HalfEdge root) {
  if (!m.is_unicellular()) {
    fail(Errc::kNotUnicellular, "only unicellular maps have a canonical form");
  }
  const std::size_t size = m.half_edge_count();
  if (root < 0 || static_cast<std::size_t>(root) >= size) {
    fail(Errc::kOutOfRange, "root half-edge out of range");
  }
  std::vector<HalfEdge> pi(size);
  HalfEdge h = root;
  for (std::size_t k = 0; k < size; ++k) {
    pi[h] = static_cast<HalfEdge>(k);
    h = m.gamma()(h);
  }
  Permutation relabeling(std::move(pi));
  RootedMap rooted(relabel(m, relabeling));
  return CanonicalForm{std::move(rooted), std::move(relabeling)};
}

SubMap restrict_to(const CombMap& m, const std::vector<HalfEdge>& half_edges) {
  std::vector<HalfEdge> old_label = half_edges;
  std::sort(old_label.begin(), old_label.end());
  std::vector<HalfEdge> new_label(m.half_edge_count(), -1);
  for (std::size_t i = 0; i < old_label.size(); ++i) {
    new_label[old_label[i]] = static_cast<HalfEdge>(i);
  }
  std::vector<HalfEdge> alpha(old_label.size());
  std::vector<HalfEdge> beta(old_label.size());
  for (std::size_t i = 0; i < old_label.size(); ++i) {
    const HalfEdge a = new_label[m.alpha()(old_label[i])];
    const HalfEdge b = new_label[m.beta()(old_label[i])];
    if (a < 0 || b < 0) {
      fail(Errc::kInvalidArgument,
           "half-edge set is not closed under alpha and beta");
    }
    alpha[i] = a;
    beta[i] = b;
  }
  return SubMap{CombMap::make(Permutation(std::move(alpha)),
                              Permutation(std::move(beta))),
                std::move(old_label)};
}

std::vector<std::vector<HalfEdge>> components(const CombMap& m) {
  const std::size_t size = m.half_edge_count();
  std::vector<char> seen(size, 0);
  std::vector<std::vector<HalfEdge>> out;
  for (std::size_t start = 0; start < size; ++start) {
    if (seen[start]) continue;
    auto& comp = out.emplace_back();
    std::vector<HalfEdge> stack{static_cast<HalfEdge>(start)};
    seen[start] = 1;
    while (!stack.empty()) {
      const HalfEdge h = stack.back();
      stack.pop_back();
      comp.push_back(h);
      for (HalfEdge next : {m.alpha()(h), m.beta()(h)}) {
        if (!seen[next]) {
          seen[next] = 1;
          stack.push_back(next);
        }
      }
    }
    std::sort(comp.begin(), comp.end());
  }
  return out;
}

CombMap disjoint_union(const std::vector<CombMap>& parts) {
  std::vector<HalfEdge> alpha;
  std::vector<HalfEdge> beta;
  HalfEdge offset = 0;
  for (const CombMap& part : parts) {
    for (HalfEdge x : part.alpha().images()) alpha.push_back(x + offset);
    for (HalfEdge x : part.beta().images()) beta.push_back(x + offset);
    offset += static_cast<HalfEdge>(part.half_edge_count());
  }
  return CombMap::make(Permutation(std::move(alpha)),
                       Permutation(std::move(beta)));
}

}  // namespace unimap
