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

#include <set>

#include "doctest.h"
#include "support.hpp"
#include "unimap/comb_map.hpp"
#include "unimap/error.hpp"

using namespace unimap;
using unimap::testing::Rng;

namespace {

Errc code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return Errc::kInvalidArgument;
}

CombMap genus_one_two_edges() {
  // gamma = (1 2 3 4), alpha = (1 3)(2 4), so beta = gamma alpha.
  const Permutation alpha = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
  return CombMap::make(alpha, compose(Permutation::long_cycle(4), alpha));
}

}  // namespace

TEST_CASE("cycles of the identity are singletons") {
  const auto c = Permutation::identity(4).cycles();
  REQUIRE(c.size() == 4);
  for (int i = 0; i < 4; ++i) CHECK(c[i] == std::vector<HalfEdge>{i});
}

TEST_CASE("cycle notation sends 1 to 4 and 6 to 2") {
  const Permutation p = Permutation::from_cycles(6, {{1, 4, 3}, {2, 5, 6}});
  CHECK(p(0) == 3);
  CHECK(p(5) == 1);
  const auto c = p.cycles();
  REQUIRE(c.size() == 2);
  CHECK(c[0] == std::vector<HalfEdge>{0, 3, 2});
  CHECK(c[1] == std::vector<HalfEdge>{1, 4, 5});
}

TEST_CASE("long cycle composed with (13)(24) is one 4-cycle") {
  const Permutation alpha = Permutation::from_cycles(4, {{1, 3}, {2, 4}});
  const auto c = compose(Permutation::long_cycle(4), alpha).cycles();
  REQUIRE(c.size() == 1);
  CHECK(c[0] == std::vector<HalfEdge>{0, 3, 2, 1});
}

TEST_CASE("one-edge plane tree") {
  const CombMap m = CombMap::make(Permutation::from_cycles(2, {{1, 2}}),
                                  Permutation::identity(2));
  CHECK(m.gamma() == Permutation::from_cycles(2, {{1, 2}}));
  CHECK(m.genus() == 0);
  CHECK(m.is_unicellular());
  CHECK(m.vertex_count() == 2);
  for (VertexId v : m.vertices()) CHECK(m.vertex_degree(v) == 1);
}

TEST_CASE("genus-one map on two edges") {
  const CombMap m = genus_one_two_edges();
  CHECK(m.gamma() == Permutation::long_cycle(4));
  CHECK(m.genus() == 1);
  CHECK(m.vertex_count() == 1);
  CHECK(m.vertex_degree(VertexId{0}) == 4);
  CHECK(m.is_connected());
  CHECK(m.is_canonical());
}

TEST_CASE("plane map on two edges") {
  const RootedMap m =
      RootedMap::from_alpha(Permutation::from_cycles(4, {{1, 2}, {3, 4}}));
  CHECK(m.map().vertex_count() == 3);
  CHECK(m.genus() == 0);
}

TEST_CASE("construction errors") {
  CHECK(code_of([] {
          CombMap::make(Permutation::identity(4), Permutation::identity(4));
        }) == Errc::kNotInvolution);
  CHECK(code_of([] {
          CombMap::make(Permutation::from_cycles(2, {{1, 2}}),
                        Permutation::identity(4));
        }) == Errc::kLengthMismatch);
  CHECK(code_of([] { Permutation(std::vector<HalfEdge>{0, 0}); }) ==
        Errc::kInvalidArgument);
  CHECK(code_of([] { Permutation(std::vector<HalfEdge>{0, 1, 2}); }) ==
        Errc::kInvalidArgument);
  const CombMap tree = CombMap::make(Permutation::from_cycles(2, {{1, 2}}),
                                     Permutation::identity(2));
  CHECK(code_of([&] { tree.vertex_degree(VertexId{3}); }) == Errc::kUnknownVertex);
}

TEST_CASE("two disjoint edges are not connected") {
  const CombMap m = CombMap::make(Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                  Permutation::identity(4));
  CHECK_FALSE(m.is_connected());
  CHECK(code_of([&] { (void)m.genus(); }) == Errc::kNotConnected);
}

TEST_CASE("unicellularity agrees with the face cycle count") {
  Rng rng(11);
  for (int k = 0; k < 10000; ++k) {
    const CombMap m = unimap::testing::random_map(rng, 1 + k % 6);
    CHECK(m.is_unicellular() == (m.gamma().cycles().size() == 1));
    std::size_t degrees = 0;
    for (VertexId v : m.vertices()) degrees += m.vertex_degree(v);
    CHECK(degrees == m.half_edge_count());
    for (std::size_t i = 0; i < m.half_edge_count(); ++i) {
      const HalfEdge h = static_cast<HalfEdge>(i);
      REQUIRE(m.gamma()(h) == m.beta()(m.alpha()(h)));
      REQUIRE(m.alpha()(m.alpha()(h)) == h);
      REQUIRE(m.alpha()(h) != h);
    }
    if (m.is_connected()) {
      const long chi = static_cast<long>(m.vertex_count() + m.face_count()) - m.n();
      CHECK(chi % 2 == 0);
      CHECK(chi <= 2);
    }
  }
}

TEST_CASE("unicellular maps have n = 2g - 1 + v") {
  Rng rng(12);
  for (int k = 0; k < 2000; ++k) {
    const RootedMap m = unimap::testing::random_unicellular(rng, 1 + k % 9);
    CHECK(m.n() == 2 * m.genus() - 1 + static_cast<int>(m.map().vertex_count()));
  }
}

TEST_CASE("canonicalize at the root is the identity") {
  const RootedMap m = RootedMap(genus_one_two_edges());
  const CanonicalForm cf = canonicalize(m.map(), 0);
  CHECK(cf.relabel == Permutation::identity(4));
  CHECK(cf.map == m);
}

TEST_CASE("canonicalize at k rotates labels") {
  Rng rng(13);
  for (int k = 0; k < 200; ++k) {
    const RootedMap m = unimap::testing::random_unicellular(rng, 1 + k % 7);
    const int size = static_cast<int>(m.map().half_edge_count());
    const HalfEdge root = unimap::testing::uniform_int(rng, 0, size - 1);
    const CanonicalForm cf = canonicalize(m.map(), root);
    for (int i = 0; i < size; ++i) CHECK(cf.relabel(i) == (i - root + size) % size);
  }
}

TEST_CASE("canonicalize is idempotent and a conjugation") {
  Rng rng(14);
  int checked = 0;
  while (checked < 1000) {
    const CombMap m = unimap::testing::random_map(rng, 1 + checked % 7);
    if (!m.is_unicellular()) continue;
    ++checked;
    const HalfEdge root =
        unimap::testing::uniform_int(rng, 0, static_cast<int>(m.half_edge_count()) - 1);
    const CanonicalForm once = canonicalize(m, root);
    CHECK(once.relabel(root) == 0);
    CHECK(once.map.map().is_canonical());
    CHECK(once.map.map().alpha() == conjugate(m.alpha(), once.relabel));
    CHECK(once.map.map().beta() == conjugate(m.beta(), once.relabel));
    const CanonicalForm twice = canonicalize(once.map.map(), 0);
    CHECK(twice.map == once.map);
  }
}

TEST_CASE("canonicalize rejects maps with several faces") {
  const CombMap m = CombMap::make(Permutation::from_cycles(4, {{1, 2}, {3, 4}}),
                                  Permutation::identity(4));
  REQUIRE(m.face_count() > 1);
  CHECK(code_of([&] { canonicalize(m, 0); }) == Errc::kNotUnicellular);
}

TEST_CASE("one-based round trip") {
  const Permutation p = Permutation::from_cycles(6, {{1, 4, 3}, {2, 5, 6}});
  const auto one = p.to_one_based();
  CHECK(one == std::vector<int>{4, 5, 1, 3, 6, 2});
  CHECK(Permutation::from_one_based(one) == p);
  CHECK(p.inverse().inverse() == p);
  CHECK(compose(p, p.inverse()) == Permutation::identity(6));
}
