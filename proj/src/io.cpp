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

#include "unimap/io.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "unimap/error.hpp"

namespace unimap::io {

namespace {

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) {
    fail(Errc::kParse, std::string("missing field \"") + name + "\"");
  }
  return j.at(name);
}

std::vector<int> int_array(const Json& j, const char* name) {
  const Json& a = field(j, name);
  if (!a.is_array()) fail(Errc::kParse, std::string("\"") + name + "\" must be an array");
  std::vector<int> out;
  for (const Json& x : a) {
    if (!x.is_number_integer()) {
      fail(Errc::kParse, std::string("\"") + name + "\" must hold integers");
    }
    out.push_back(x.get<int>());
  }
  return out;
}

VertexId vertex_from(const Json& x, const CombMap& m) {
  if (!x.is_number_integer()) fail(Errc::kParse, "vertex ids are integers");
  const int id = x.get<int>();
  if (id < 1 || id > static_cast<int>(m.half_edge_count()) || !m.has_vertex(VertexId{id - 1})) {
    fail(Errc::kUnknownVertex, "no vertex " + std::to_string(id));
  }
  return VertexId{id - 1};
}

Json sequence_json(const OpeningSequence& s) {
  Json a = Json::array();
  for (VertexId v : s.nodes) a.push_back(v.id + 1);
  return a;
}

template <class F>
auto guarded(F f) {
  try {
    return f();
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kParse, e.what());
  }
}

}  // namespace

Json map_to_json(const CombMap& m, HalfEdge root) {
  Json j;
  j["n"] = m.n();
  j["alpha"] = m.alpha().to_one_based();
  j["beta"] = m.beta().to_one_based();
  j["root"] = root + 1;
  return j;
}

Json map_to_json(const RootedMap& m) { return map_to_json(m.map(), 0); }

ParsedMap map_from_json(const Json& j) {
  return guarded([&] {
    const std::vector<int> alpha = int_array(j, "alpha");
    const std::vector<int> beta = int_array(j, "beta");
    if (j.contains("n")) {
      if (!j["n"].is_number_integer() || 2 * j["n"].get<long>() != static_cast<long>(alpha.size())) {
        fail(Errc::kLengthMismatch, "\"n\" does not match the alpha array");
      }
    }
    int root = 1;
    if (j.contains("root")) {
      if (!j["root"].is_number_integer()) fail(Errc::kParse, "\"root\" must be an integer");
      root = j["root"].get<int>();
    }
    if (alpha.size() != beta.size()) fail(Errc::kLengthMismatch, "alpha and beta differ in size");
    if (root < 1 || root > static_cast<int>(alpha.size())) {
      fail(Errc::kOutOfRange, "root half-edge outside the map");
    }
    const int size = static_cast<int>(alpha.size());
    for (const auto* images : {&alpha, &beta}) {
      for (int x : *images) {
        if (x < 1 || x > size) {
          fail(Errc::kOutOfRange, "half-edge " + std::to_string(x) + " outside 1.." +
                                      std::to_string(size));
        }
      }
    }
    CombMap m = CombMap::make(Permutation::from_one_based(alpha),
                              Permutation::from_one_based(beta));
    return ParsedMap{std::move(m), root - 1};
  });
}

RootedMap rooted_from_json(const Json& j) {
  const ParsedMap p = map_from_json(j);
  return canonicalize(p.map, p.root).map;
}

Json to_json(const TreeWithTriples& tc) {
  Json j = map_to_json(tc.tree);
  Json triples = Json::array();
  for (const Triple& c : tc.triples) triples.push_back({c[0].id + 1, c[1].id + 1, c[2].id + 1});
  j["triples"] = triples;
  return j;
}

TreeWithTriples tree_with_triples_from_json(const Json& j) {
  return guarded([&] {
    RootedMap t = rooted_from_json(j);
    if (!map_from_json(j).map.is_canonical() || map_from_json(j).root != 0) {
      fail(Errc::kNotCanonical, "vertex ids need the canonical labelling");
    }
    std::vector<Triple> triples;
    const Json& a = field(j, "triples");
    if (!a.is_array()) fail(Errc::kParse, "\"triples\" must be an array");
    for (const Json& c : a) {
      if (!c.is_array() || c.size() != 3) fail(Errc::kParse, "a triple has three vertices");
      triples.push_back({vertex_from(c[0], t.map()), vertex_from(c[1], t.map()),
                         vertex_from(c[2], t.map())});
    }
    return make_tree_with_triples(std::move(t), std::move(triples));
  });
}

Json to_json(const LabelledTree& t) {
  Json j = map_to_json(t.tree);
  Json inc = Json::array();
  for (std::int8_t d : t.increments) inc.push_back(static_cast<int>(d));
  j["increments"] = inc;
  return j;
}

LabelledTree labelled_tree_from_json(const Json& j) {
  return guarded([&] {
    RootedMap t = rooted_from_json(j);
    std::vector<std::int8_t> inc;
    for (int d : int_array(j, "increments")) {
      if (d < -1 || d > 1) fail(Errc::kParse, "increments lie in {-1,0,1}");
      inc.push_back(static_cast<std::int8_t>(d));
    }
    return make_labelled_tree(std::move(t), std::move(inc));
  });
}

Json labels_to_json(const CombMap& m, const Labelling& l) {
  Json j = Json::object();
  for (VertexId v : m.vertices()) j[std::to_string(v.id + 1)] = l.at(v);
  return j;
}

Labelling labels_from_json(const CombMap& m, const Json& j) {
  return guarded([&] {
    if (!j.is_object()) fail(Errc::kParse, "\"labels\" must be an object");
    Labelling l(m.half_edge_count());
    for (const auto& [key, value] : j.items()) {
      int id = 0;
      try {
        std::size_t used = 0;
        id = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        fail(Errc::kParse, "label keys are vertex ids");
      }
      if (!value.is_number_integer()) fail(Errc::kParse, "labels are integers");
      l.set(vertex_from(Json(id), m), value.get<std::int32_t>());
    }
    return l;
  });
}

Json to_json(const LabelledMap& m) {
  Json j = map_to_json(m.map);
  j["labels"] = labels_to_json(m.map.map(), m.labels);
  return j;
}

LabelledMap labelled_map_from_json(const Json& j) {
  return guarded([&] {
    const ParsedMap p = map_from_json(j);
    if (!p.map.is_canonical() || p.root != 0) {
      fail(Errc::kNotCanonical, "labelled maps are stored in canonical form");
    }
    RootedMap m(p.map);
    Labelling l = labels_from_json(m.map(), field(j, "labels"));
    return LabelledMap{std::move(m), std::move(l)};
  });
}

Json to_json(const WellLabelledTriples& w) {
  Json j = to_json(w.base);
  j["labels"] = labels_to_json(w.base.tree.map(), w.labelling);
  return j;
}

WellLabelledTriples well_labelled_from_json(const Json& j) {
  return guarded([&] {
    TreeWithTriples tc = tree_with_triples_from_json(j);
    Labelling l = labels_from_json(tc.tree.map(), field(j, "labels"));
    return make_well_labelled(std::move(tc), std::move(l));
  });
}

Json to_json(const ClosedMap& c) {
  Json j = map_to_json(c.map);
  j["sequence"] = sequence_json(c.sequence);
  return j;
}

Json to_json(const LabelledClosedMap& c) {
  Json j = to_json(c.map);
  j["sequence"] = sequence_json(c.sequence);
  return j;
}

OpeningSequence sequence_from_json(const Json& j) {
  OpeningSequence s;
  for (int id : guarded([&] { return int_array(j, "sequence"); })) {
    s.nodes.push_back(VertexId{id - 1});
  }
  return s;
}

Json to_json(const Decomposition& d) {
  Json j;
  j["scheme"] = map_to_json(d.scheme.map);
  Json trees = Json::array();
  for (const DoublyMarkedTree& t : d.trees) {
    Json x = map_to_json(t.tree);
    x["mark"] = t.mark.id + 1;
    trees.push_back(x);
  }
  j["trees"] = trees;
  j["root_mark"] = {d.root_mark.first + 1, d.root_mark.second + 1};
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  return guarded([&] {
    Decomposition d{make_scheme(rooted_from_json(field(j, "scheme"))), {}, {}};
    const Json& trees = field(j, "trees");
    if (!trees.is_array()) fail(Errc::kParse, "\"trees\" must be an array");
    for (const Json& x : trees) {
      RootedMap t = rooted_from_json(x);
      const VertexId mark = vertex_from(field(x, "mark"), t.map());
      d.trees.push_back(DoublyMarkedTree{std::move(t), mark});
    }
    const std::vector<int> rm = int_array(j, "root_mark");
    if (rm.size() != 2) fail(Errc::kParse, "\"root_mark\" is a pair of half-edges");
    d.root_mark = {rm[0] - 1, rm[1] - 1};
    return d;
  });
}

Json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) fail(Errc::kParse, "cannot read " + path);
  std::stringstream buf;
  buf << in.rdbuf();
  try {
    return Json::parse(buf.str());
  } catch (const nlohmann::json::exception& e) {
    fail(Errc::kParse, path + ": " + e.what());
  }
}

void write_file_atomic(const std::string& path, const std::string& content) {
  const std::string tmp = path + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) fail(Errc::kInvalidArgument, "cannot write " + tmp);
    out << content;
    if (!out.flush()) fail(Errc::kInvalidArgument, "cannot write " + tmp);
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) fail(Errc::kInvalidArgument, "cannot replace " + path + ": " + ec.message());
}

}  // namespace unimap::io
