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

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <optional>

#include "doctest.h"
#include "support.hpp"
#include "unimap/bijection.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/error.hpp"
#include "unimap/io.hpp"
#include "unimap/labelled.hpp"
#include "unimap/scheme.hpp"
#include "unimap/stats.hpp"

using namespace unimap;
using io::Json;

namespace {

std::optional<Errc> code_of(const std::function<void()>& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.code();
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("map json is one-based and roundtrips") {
  const RootedMap m =
      RootedMap::from_alpha(Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
  const Json j = io::map_to_json(m);
  CHECK(j["n"] == 3);
  CHECK(j["root"] == 1);
  CHECK(j["alpha"] == Json::parse("[4,5,6,1,2,3]"));
  CHECK(j["beta"] == Json::parse("[5,6,1,2,3,4]"));
  const io::ParsedMap p = io::map_from_json(j);
  CHECK(p.map == m.map());
  CHECK(p.root == 0);
  CHECK(io::rooted_from_json(j) == m);
}

TEST_CASE("random maps roundtrip at any root") {
  testing::Rng rng(11);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = testing::uniform_int(rng, 1, 9);
    const CombMap m = testing::random_map(rng, n);
    const HalfEdge root = testing::uniform_int(rng, 0, 2 * n - 1);
    const io::ParsedMap p = io::map_from_json(io::map_to_json(m, root));
    CHECK(p.map == m);
    CHECK(p.root == root);
  }
}

TEST_CASE("malformed map json") {
  CHECK(code_of([] { io::map_from_json(Json::parse("[1,2]")); }) == Errc::kParse);
  CHECK(code_of([] { io::map_from_json(Json::parse(R"({"n":2,"alpha":[2,1]})")); }) ==
        Errc::kParse);
  CHECK(code_of([] {
          io::map_from_json(Json::parse(R"({"n":2,"alpha":[2,1,4],"beta":[1,2,3,4]})"));
        }) == Errc::kLengthMismatch);
  CHECK(code_of([] {
          io::map_from_json(Json::parse(R"({"n":2,"alpha":[2,1,4,9],"beta":[1,2,3,4]})"));
        }) == Errc::kOutOfRange);
  CHECK(code_of([] {
          io::map_from_json(Json::parse(R"({"n":2,"alpha":["a",1,4,3],"beta":[1,2,3,4]})"));
        }) == Errc::kParse);
  // a root outside 1..2n
  CHECK(code_of([] {
          io::map_from_json(
              Json::parse(R"({"n":2,"alpha":[2,1,4,3],"beta":[1,2,3,4],"root":5})"));
        }) == Errc::kOutOfRange);
}

TEST_CASE("tree with triples roundtrip") {
  SeededRng rng(5);
  for (int g = 1; g <= 3; ++g) {
    for (int k = 0; k < 10; ++k) {
      const TreeWithTriples t = sample_tree_with_triples(g, 30, rng);
      const Json j = io::to_json(t);
      CHECK(j["triples"].size() == static_cast<std::size_t>(g));
      CHECK(io::tree_with_triples_from_json(j) == t);
      CHECK(io::tree_with_triples_from_json(Json::parse(j.dump())) == t);
    }
  }
}

TEST_CASE("labelled objects roundtrip") {
  SeededRng rng(8);
  for (int k = 0; k < 20; ++k) {
    const LabelledTree t = sample_labelled_tree(25, rng);
    CHECK(io::labelled_tree_from_json(io::to_json(t)) == t);
  }
  for (int g = 1; g <= 2; ++g) {
    const WellLabelledTriples w = sample_well_labelled(g, 40, rng);
    CHECK(io::well_labelled_from_json(io::to_json(w)) == w);
    const LabelledClosedMap c = labelled_psi(w);
    const Json j = io::to_json(c);
    CHECK(j.contains("labels"));
    CHECK(j.contains("sequence"));
    CHECK(io::labelled_map_from_json(j) == c.map);
    CHECK(io::sequence_from_json(j) == c.sequence);
  }
}

TEST_CASE("labels keyed by vertex id") {
  const RootedMap m =
      RootedMap::from_alpha(Permutation::from_cycles(6, {{1, 4}, {2, 5}, {3, 6}}));
  Labelling l = zero_labelling(m.map());
  l.set(m.map().vertices()[1], 1);
  const Json j = io::labels_to_json(m.map(), l);
  CHECK(j.size() == 2);
  CHECK(io::labels_from_json(m.map(), j) == l);
  // partial labellings parse; the gap shows up on access
  const Labelling part = io::labels_from_json(m.map(), Json::parse(R"({"1":0})"));
  CHECK_FALSE(part.has(m.map().vertices()[1]));
  CHECK(code_of([&] { (void)part.at(m.map().vertices()[1]); }) == Errc::kMissingLabel);
  CHECK(code_of([&] { io::labels_from_json(m.map(), Json::parse(R"({"1":0,"2":1,"3":0})")); }) !=
        std::nullopt);
}

TEST_CASE("decomposition roundtrip") {
  SeededRng rng(3);
  for (int g = 1; g <= 2; ++g) {
    for (int k = 0; k < 5; ++k) {
      const RootedMap m = sample_dominant_map(g, 40, rng);
      const Decomposition d = decompose(m);
      CHECK(io::decomposition_from_json(io::to_json(d)) == d);
    }
  }
}

TEST_CASE("atomic file write and read") {
  const auto dir = std::filesystem::temp_directory_path() / "unimap_io_test";
  std::filesystem::create_directories(dir);
  const std::string path = (dir / "x.json").string();
  io::write_file_atomic(path, R"({"a": 1})");
  CHECK_FALSE(std::filesystem::exists(path + ".tmp"));
  CHECK(io::read_json_file(path)["a"] == 1);
  io::write_file_atomic(path, "not json");
  CHECK(code_of([&] { io::read_json_file(path); }) == Errc::kParse);
  CHECK(code_of([&] { io::read_json_file((dir / "missing.json").string()); }) == Errc::kParse);
  std::filesystem::remove_all(dir);
}
