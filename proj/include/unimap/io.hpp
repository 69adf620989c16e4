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

// JSON interchange formats. Half-edges and vertex ids are 1-based in every
// file; gamma is never read, it is recomputed from alpha and beta.
//
//   map:         {"n": 3, "alpha": [...], "beta": [...], "root": 1}
//   tree + triples:  map fields + "triples": [[v, v, v], ...]
//   labelled tree:   map fields + "increments": [-1|0|1 per edge index]
//   labelled map:    map fields + "labels": {"v": label, ...}
//   well-labelled:   tree + triples fields + "labels"
//   closed map:      map fields + "sequence": [v1, ..., vg]
//   decomposition:   {"scheme": map, "trees": [map + "mark"], "root_mark": [h, h]}

#include <string>

#include "json.hpp"
#include "unimap/bijection.hpp"
#include "unimap/comb_map.hpp"
#include "unimap/labelled.hpp"
#include "unimap/scheme.hpp"

namespace unimap::io {

using Json = nlohmann::ordered_json;

struct ParsedMap {
  CombMap map;
  HalfEdge root = 0;  // 0-based
};

Json map_to_json(const CombMap& m, HalfEdge root = 0);
Json map_to_json(const RootedMap& m);
// Throws Parse on malformed input; LengthMismatch / NotInvolution from the
// map constructor.
ParsedMap map_from_json(const Json& j);
// Canonical form rooted at the file's root. Throws NotUnicellular.
RootedMap rooted_from_json(const Json& j);

Json to_json(const TreeWithTriples& tc);
TreeWithTriples tree_with_triples_from_json(const Json& j);

Json to_json(const LabelledTree& t);
LabelledTree labelled_tree_from_json(const Json& j);

Json labels_to_json(const CombMap& m, const Labelling& l);
Labelling labels_from_json(const CombMap& m, const Json& j);

Json to_json(const LabelledMap& m);
LabelledMap labelled_map_from_json(const Json& j);

Json to_json(const WellLabelledTriples& w);
WellLabelledTriples well_labelled_from_json(const Json& j);

Json to_json(const ClosedMap& c);
Json to_json(const LabelledClosedMap& c);
OpeningSequence sequence_from_json(const Json& j);

Json to_json(const Decomposition& d);
Decomposition decomposition_from_json(const Json& j);

// Throws Parse on unreadable files or invalid JSON.
Json read_json_file(const std::string& path);
// Writes to a temporary file next to path, then renames it into place.
void write_file_atomic(const std::string& path, const std::string& content);

}  // namespace unimap::io
