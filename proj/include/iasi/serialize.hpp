// Copyright 2026 The iasilab Authors
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

#ifndef IASI_SERIALIZE_HPP_
#define IASI_SERIALIZE_HPP_

#include <optional>
#include <string>
#include <string_view>

#include "json.hpp"

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"
#include "iasi/sparing.hpp"

namespace iasi {

using Json = nlohmann::json;

// Object keys come out sorted (nlohmann's default map), arrays in canonical
// order, two-space indent, trailing newline. Equal values give equal bytes.
std::string dump_canonical(const Json& j);

// Throws ParseError on malformed text.
Json parse_json_text(std::string_view text);

// {"vertices": [...], "edges": [["a","b"], ...]}
Json graph_to_json(const Graph& g);
Graph graph_from_json(const Json& j);

// {"labels": {"a": [1], "b": [0,4,8]}}; arrays must be strictly increasing.
Json labeling_to_json(const Labeling& f);
Labeling labeling_from_json(const Json& j);

Json verify_report_to_json(const VerifyReport& r);
Json sparing_result_to_json(const SparingResult& r);

// Undirected DOT, one line per vertex then one per edge, both sorted. With a
// labeling, each vertex is annotated with its set-label.
std::string graph_to_dot(const Graph& g, const Labeling* f = nullptr);

}  // namespace iasi

#endif  // IASI_SERIALIZE_HPP_
