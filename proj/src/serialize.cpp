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

#include "iasi/serialize.hpp"

#include <cmath>
#include <sstream>

#include "iasi/error.hpp"

namespace iasi {

namespace {

[[noreturn]] void parse_error(const std::string& what) { throw Error(ErrorCode::kParse, what); }

Json edge_json(const Edge& e) { return Json::array({e.u.str(), e.v.str()}); }

VertexId vertex_from(const Json& j) {
  if (!j.is_string()) parse_error("vertex names must be strings");
  return VertexId(j.get<std::string>());
}

Element element_from(const Json& j) {
  if (j.is_number_unsigned()) return j.get<Element>();
  if (j.is_number_integer()) parse_error("label elements must be non-negative");
  if (j.is_number_float()) {
    const double d = j.get<double>();
    if (d >= 18446744073709551616.0 && std::floor(d) == d) {
      throw Error(ErrorCode::kCapacityExceeded, "label element exceeds 64-bit range");
    }
  }
  parse_error("label elements must be non-negative integers");
}

}  // namespace

std::string dump_canonical(const Json& j) { return j.dump(2) + "\n"; }

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    parse_error(std::string("invalid JSON: ") + e.what());
  }
}

Json graph_to_json(const Graph& g) {
  Json vertices = Json::array();
  for (const auto& v : g.vertices()) vertices.push_back(v.str());
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(edge_json(e));
  return {{"vertices", std::move(vertices)}, {"edges", std::move(edges)}};
}

Graph graph_from_json(const Json& j) {
  if (!j.is_object()) parse_error("graph must be a JSON object");
  if (!j.contains("vertices") || !j.at("vertices").is_array()) {
    parse_error("graph needs a \"vertices\" array");
  }
  if (!j.contains("edges") || !j.at("edges").is_array()) parse_error("graph needs an \"edges\" array");
  std::vector<VertexId> vertices;
  for (const auto& v : j.at("vertices")) vertices.push_back(vertex_from(v));
  std::vector<std::pair<VertexId, VertexId>> edges;
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) parse_error("each edge must be a 2-element array");
    edges.emplace_back(vertex_from(e[0]), vertex_from(e[1]));
  }
  return Graph::make(vertices, edges);
}

Json labeling_to_json(const Labeling& f) {
  Json labels = Json::object();
  for (const auto& [v, label] : f) labels[v.str()] = label.elements();
  return {{"labels", std::move(labels)}};
}

Labeling labeling_from_json(const Json& j) {
  if (!j.is_object() || !j.contains("labels") || !j.at("labels").is_object()) {
    parse_error("labeling needs a \"labels\" object");
  }
  Labeling f;
  for (const auto& [name, arr] : j.at("labels").items()) {
    if (!arr.is_array() || arr.empty()) parse_error("label of '" + name + "' must be a non-empty array");
    std::vector<Element> elements;
    for (const auto& x : arr) elements.push_back(element_from(x));
    try {
      f.emplace(VertexId(name), SetLabel::from_strict(std::move(elements)));
    } catch (const Error& e) {
      if (e.code() != ErrorCode::kInvalidArgument) throw;
      parse_error("label of '" + name + "': " + e.what());
    }
  }
  return f;
}

Json verify_report_to_json(const VerifyReport& r) {
  Json vertices = Json::array();
  for (const auto& v : r.mono_indexed_vertices) vertices.push_back(v.str());
  Json mono_edges = Json::array();
  for (const auto& e : r.mono_indexed_edges) mono_edges.push_back(edge_json(e));
  Json numbers = Json::array();
  for (const auto& [e, k] : r.edge_indexing_numbers) {
    numbers.push_back({{"edge", edge_json(e)}, {"k", k}});
  }
  return {
      {"is_iasi", r.is_iasi},
      {"is_weak", r.is_weak},
      {"is_strong", r.is_strong},
      {"uniform_k", r.uniform_k ? Json(*r.uniform_k) : Json(nullptr)},
      {"mono_indexed_vertices", std::move(vertices)},
      {"mono_indexed_edges", std::move(mono_edges)},
      {"edge_indexing_numbers", std::move(numbers)},
  };
}

Json sparing_result_to_json(const SparingResult& r) {
  Json witness = Json::array();
  for (const auto& v : r.witness) witness.push_back(v.str());
  Json mono = Json::array();
  for (const auto& e : r.mono_edges) mono.push_back(edge_json(e));
  Json out = {
      {"phi", r.phi},
      {"witness", std::move(witness)},
      {"mono_edges", std::move(mono)},
      {"algorithm", std::string(algorithm_name(r.algorithm))},
  };
  if (r.labeling) out["labeling"] = labeling_to_json(*r.labeling);
  return out;
}

std::string graph_to_dot(const Graph& g, const Labeling* f) {
  std::ostringstream out;
  out << "graph G {\n";
  for (const auto& v : g.vertices()) {
    out << "  \"" << v.str() << "\"";
    if (f) {
      auto it = f->find(v);
      if (it != f->end()) {
        out << " [label=\"" << v.str() << "\\n{";
        const auto& xs = it->second.elements();
        for (std::size_t i = 0; i < xs.size(); ++i) out << (i ? "," : "") << xs[i];
        out << "}\"]";
      }
    }
    out << ";\n";
  }
  for (const auto& e : g.edges()) out << "  \"" << e.u.str() << "\" -- \"" << e.v.str() << "\";\n";
  out << "}\n";
  return out.str();
}

}  // namespace iasi
