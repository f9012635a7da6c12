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

#include "iasi/graph.hpp"

#include <algorithm>
#include <deque>

#include "iasi/error.hpp"

namespace iasi {

namespace {

bool is_token_char(char c) noexcept {
  return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z') || (c >= '0' && c <= '9') ||
         c == '_' || c == '.' || c == '-';
}

}  // namespace

VertexId::VertexId(std::string name) : name_(std::move(name)) {
  if (!is_valid_token(name_)) {
    throw Error(ErrorCode::kInvalidToken, "invalid vertex name '" + name_ + "'");
  }
}

bool VertexId::is_valid_token(std::string_view s) noexcept {
  return !s.empty() && std::all_of(s.begin(), s.end(), is_token_char);
}

Edge::Edge(VertexId a, VertexId b) : u(std::move(a)), v(std::move(b)) {
  if (v < u) std::swap(u, v);
}

Graph Graph::make(const std::vector<VertexId>& vertices,
                  const std::vector<std::pair<VertexId, VertexId>>& edges) {
  std::set<VertexId> vset;
  for (const auto& v : vertices) {
    if (!vset.insert(v).second) {
      throw Error(ErrorCode::kDuplicateVertex, "vertex '" + v.str() + "' listed twice");
    }
  }
  std::set<Edge> eset;
  for (const auto& [a, b] : edges) {
    if (a == b) throw Error(ErrorCode::kLoopEdge, "loop at '" + a.str() + "'");
    for (const auto* end : {&a, &b}) {
      if (!vset.contains(*end)) {
        throw Error(ErrorCode::kUnknownEndpoint,
                    "edge endpoint '" + end->str() + "' is not a vertex");
      }
    }
    if (!eset.emplace(a, b).second) {
      throw Error(ErrorCode::kDuplicateEdge,
                  "edge {" + a.str() + "," + b.str() + "} listed twice");
    }
  }
  return from_sets(std::move(vset), eset);
}

Graph Graph::from_sets(std::set<VertexId> vertices, const std::set<Edge>& edges) {
  Graph g;
  g.vertices_.assign(std::make_move_iterator(vertices.begin()),
                     std::make_move_iterator(vertices.end()));
  g.adjacency_.resize(g.vertices_.size());
  g.edges_.reserve(edges.size());
  for (const auto& e : edges) {
    auto i = g.index_of(e.u);
    auto j = g.index_of(e.v);
    if (!i || !j) {
      throw Error(ErrorCode::kUnknownEndpoint, "edge endpoint is not a vertex");
    }
    if (*i == *j) throw Error(ErrorCode::kLoopEdge, "loop at '" + e.u.str() + "'");
    g.edges_.emplace_back(*i, *j);  // u < v, so i < j
  }
  // Set order on (u, v) names equals order on (i, j) indices.
  for (const auto& [i, j] : g.edges_) {
    g.adjacency_[i].push_back(j);
    g.adjacency_[j].push_back(i);
  }
  for (auto& row : g.adjacency_) std::sort(row.begin(), row.end());
  return g;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  out.reserve(edges_.size());
  for (const auto& [i, j] : edges_) out.emplace_back(vertices_[i], vertices_[j]);
  return out;
}

std::set<VertexId> Graph::vertex_set() const {
  return {vertices_.begin(), vertices_.end()};
}

std::set<Edge> Graph::edge_set() const {
  auto list = edges();
  return {list.begin(), list.end()};
}

std::optional<std::size_t> Graph::index_of(const VertexId& v) const {
  auto it = std::lower_bound(vertices_.begin(), vertices_.end(), v);
  if (it == vertices_.end() || *it != v) return std::nullopt;
  return static_cast<std::size_t>(it - vertices_.begin());
}

bool Graph::has_edge(std::size_t i, std::size_t j) const {
  const auto& row = adjacency_[i];
  return std::binary_search(row.begin(), row.end(), j);
}

bool Graph::has_edge(const VertexId& a, const VertexId& b) const {
  auto i = index_of(a);
  auto j = index_of(b);
  return i && j && has_edge(*i, *j);
}

Graph graph_union(const Graph& a, const Graph& b) {
  auto vs = a.vertex_set();
  auto es = a.edge_set();
  for (const auto& v : b.vertices()) vs.insert(v);
  for (auto& e : b.edges()) es.insert(std::move(e));
  return Graph::from_sets(std::move(vs), es);
}

Graph graph_intersection(const Graph& a, const Graph& b) {
  std::set<VertexId> vs;
  for (const auto& v : a.vertices()) {
    if (b.contains(v)) vs.insert(v);
  }
  std::set<Edge> es;
  for (auto& e : a.edges()) {
    if (b.has_edge(e.u, e.v)) es.insert(std::move(e));
  }
  return Graph::from_sets(std::move(vs), es);
}

Graph join(std::span<const Graph> parts) {
  if (parts.size() < 2) {
    throw Error(ErrorCode::kInvalidArgument, "join needs at least two parts");
  }
  std::set<VertexId> vs;
  std::set<Edge> es;
  for (const auto& part : parts) {
    for (const auto& v : part.vertices()) {
      if (!vs.insert(v).second) {
        throw Error(ErrorCode::kVertexCollision,
                    "vertex '" + v.str() + "' appears in more than one join part");
      }
    }
    for (auto& e : part.edges()) es.insert(std::move(e));
  }
  for (std::size_t p = 0; p < parts.size(); ++p) {
    for (std::size_t q = p + 1; q < parts.size(); ++q) {
      for (const auto& u : parts[p].vertices()) {
        for (const auto& v : parts[q].vertices()) es.emplace(u, v);
      }
    }
  }
  return Graph::from_sets(std::move(vs), es);
}

Graph join(const Graph& a, const Graph& b) {
  const Graph parts[] = {a, b};
  return join(std::span<const Graph>(parts));
}

Graph ring_sum(const Graph& a, const Graph& b) {
  std::set<Edge> es;
  for (auto& e : a.edges()) {
    if (!b.has_edge(e.u, e.v)) es.insert(std::move(e));
  }
  for (auto& e : b.edges()) {
    if (!a.has_edge(e.u, e.v)) es.insert(std::move(e));
  }
  std::set<VertexId> vs;
  for (const auto& e : es) {
    vs.insert(e.u);
    vs.insert(e.v);
  }
  return Graph::from_sets(std::move(vs), es);
}

Graph subtract(const Graph& g, const Graph& h) {
  for (const auto& v : h.vertices()) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::kNotSubgraph, "vertex '" + v.str() + "' is not in the host graph");
    }
  }
  for (const auto& e : h.edges()) {
    if (!g.has_edge(e.u, e.v)) {
      throw Error(ErrorCode::kNotSubgraph,
                  "edge {" + e.u.str() + "," + e.v.str() + "} is not in the host graph");
    }
  }
  std::set<Edge> es;
  for (auto& e : g.edges()) {
    if (!h.has_edge(e.u, e.v)) es.insert(std::move(e));
  }
  return Graph::from_sets(g.vertex_set(), es);
}

Graph relabel(const Graph& g, std::string_view prefix) {
  if (!VertexId::is_valid_token(prefix)) {
    throw Error(ErrorCode::kInvalidToken, "invalid prefix '" + std::string(prefix) + "'");
  }
  auto renamed = [&](const VertexId& v) { return VertexId(std::string(prefix) + v.str()); };
  std::set<VertexId> vs;
  for (const auto& v : g.vertices()) vs.insert(renamed(v));
  std::set<Edge> es;
  for (const auto& e : g.edges()) es.emplace(renamed(e.u), renamed(e.v));
  return Graph::from_sets(std::move(vs), es);
}

std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g) {
  constexpr std::uint8_t kUnset = 2;
  std::vector<std::uint8_t> colour(g.order(), kUnset);
  std::deque<std::size_t> queue;
  for (std::size_t root = 0; root < g.order(); ++root) {
    if (colour[root] != kUnset) continue;
    colour[root] = 0;
    queue.push_back(root);
    while (!queue.empty()) {
      auto v = queue.front();
      queue.pop_front();
      for (auto w : g.neighbors(v)) {
        if (colour[w] == kUnset) {
          colour[w] = static_cast<std::uint8_t>(1 - colour[v]);
          queue.push_back(w);
        } else if (colour[w] == colour[v]) {
          return std::nullopt;
        }
      }
    }
  }
  return colour;
}

}  // namespace iasi
