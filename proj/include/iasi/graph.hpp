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

#ifndef IASI_GRAPH_HPP_
#define IASI_GRAPH_HPP_

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace iasi {

// A vertex name: non-empty token over [A-Za-z0-9_.-]. Ordered by bytes.
class VertexId {
 public:
  explicit VertexId(std::string name);

  static bool is_valid_token(std::string_view s) noexcept;

  const std::string& str() const noexcept { return name_; }

  friend auto operator<=>(const VertexId&, const VertexId&) = default;
  friend bool operator==(const VertexId&, const VertexId&) = default;

 private:
  std::string name_;
};

// Unordered pair, stored with u < v.
struct Edge {
  VertexId u;
  VertexId v;

  Edge(VertexId a, VertexId b);

  friend auto operator<=>(const Edge&, const Edge&) = default;
  friend bool operator==(const Edge&, const Edge&) = default;
};

// Simple undirected graph over named vertices. Immutable once built.
//
// Vertices are kept sorted so that vertex index order coincides with
// VertexId order; every index-based algorithm (bitmask solvers, labeling
// constructor) inherits deterministic tie-breaking from that.
class Graph {
 public:
  using IndexEdge = std::pair<std::size_t, std::size_t>;

  Graph() = default;

  // Validating constructor. Throws LoopEdge, UnknownEndpoint, DuplicateEdge,
  // DuplicateVertex.
  static Graph make(const std::vector<VertexId>& vertices,
                    const std::vector<std::pair<VertexId, VertexId>>& edges);

  // Trusted constructor for already-canonical sets. Endpoints must be
  // members of `vertices` and no edge may be a loop (checked).
  static Graph from_sets(std::set<VertexId> vertices, const std::set<Edge>& edges);

  std::size_t order() const noexcept { return vertices_.size(); }
  std::size_t size() const noexcept { return edges_.size(); }
  bool empty() const noexcept { return vertices_.empty(); }

  std::span<const VertexId> vertices() const noexcept { return vertices_; }
  const std::vector<IndexEdge>& index_edges() const noexcept { return edges_; }
  std::vector<Edge> edges() const;
  std::set<VertexId> vertex_set() const;
  std::set<Edge> edge_set() const;

  std::optional<std::size_t> index_of(const VertexId& v) const;
  bool contains(const VertexId& v) const { return index_of(v).has_value(); }
  bool has_edge(std::size_t i, std::size_t j) const;
  bool has_edge(const VertexId& a, const VertexId& b) const;

  std::span<const std::size_t> neighbors(std::size_t i) const { return adjacency_[i]; }
  std::size_t degree(std::size_t i) const { return adjacency_[i].size(); }

  friend bool operator==(const Graph& a, const Graph& b) {
    return a.vertices_ == b.vertices_ && a.edges_ == b.edges_;
  }

 private:
  std::vector<VertexId> vertices_;
  std::vector<IndexEdge> edges_;  // i < j, sorted
  std::vector<std::vector<std::size_t>> adjacency_;
};

// --- binary operations -----------------------------------------------------

// V1 ∪ V2, E1 ∪ E2. Shared names denote the same vertex.
Graph graph_union(const Graph& a, const Graph& b);

// V1 ∩ V2, E1 ∩ E2; isolated vertices are retained.
Graph graph_intersection(const Graph& a, const Graph& b);

// Disjoint union of the parts plus every edge between distinct parts.
// Throws VertexCollision if two parts share a name, InvalidArgument if fewer
// than two parts are given.
Graph join(std::span<const Graph> parts);
Graph join(const Graph& a, const Graph& b);

// Symmetric difference of the edge sets over V1 ∪ V2. Vertices left without
// an incident edge are dropped from the result.
Graph ring_sum(const Graph& a, const Graph& b);

// g with the edges of h removed; every vertex of g is kept. Throws
// NotSubgraph unless V(h) ⊆ V(g) and E(h) ⊆ E(g).
Graph subtract(const Graph& g, const Graph& h);

// Prefix every vertex name. Throws InvalidToken on a malformed prefix.
Graph relabel(const Graph& g, std::string_view prefix);

// Two-colouring by BFS per component; colours indexed like g.vertices().
std::optional<std::vector<std::uint8_t>> two_coloring(const Graph& g);
inline bool is_bipartite(const Graph& g) { return two_coloring(g).has_value(); }

// --- parametrised families -------------------------------------------------

enum class Family {
  kPath,              // n = number of edges
  kCycle,             // n vertices
  kComplete,          // n vertices
  kTrivial,           // m isolated vertices
  kWheel,             // C_n + K_1
  kFan,               // P_n + trivial(m)
  kCone,              // C_n + trivial(m)
  kTent,              // C_n + K_1 + trivial(m)
  kFriendship,        // K_1 + m K_2
  kPathFriendship,    // K_1 + m P_n
  kClosedFriendship,  // K_1 + m C_n
  kWindmill,          // K_1 + m K_n
};

struct FamilySpec {
  Family family;
  std::uint64_t m = 0;
  std::uint64_t n = 0;

  static FamilySpec path(std::uint64_t length) { return {Family::kPath, 0, length}; }
  static FamilySpec cycle(std::uint64_t n) { return {Family::kCycle, 0, n}; }
  static FamilySpec complete(std::uint64_t n) { return {Family::kComplete, 0, n}; }
  static FamilySpec trivial(std::uint64_t m) { return {Family::kTrivial, m, 0}; }
  static FamilySpec wheel(std::uint64_t n) { return {Family::kWheel, 0, n}; }
  static FamilySpec fan(std::uint64_t m, std::uint64_t n) { return {Family::kFan, m, n}; }
  static FamilySpec cone(std::uint64_t m, std::uint64_t n) { return {Family::kCone, m, n}; }
  static FamilySpec tent(std::uint64_t m, std::uint64_t n) { return {Family::kTent, m, n}; }
  static FamilySpec friendship(std::uint64_t m) { return {Family::kFriendship, m, 0}; }
  static FamilySpec path_friendship(std::uint64_t m, std::uint64_t n) {
    return {Family::kPathFriendship, m, n};
  }
  static FamilySpec closed_friendship(std::uint64_t m, std::uint64_t n) {
    return {Family::kClosedFriendship, m, n};
  }
  static FamilySpec windmill(std::uint64_t m, std::uint64_t n) {
    return {Family::kWindmill, m, n};
  }
};

std::string_view family_name(Family f) noexcept;
std::optional<Family> parse_family(std::string_view name) noexcept;

// Which of (m, n) the family reads.
bool family_uses_m(Family f) noexcept;
bool family_uses_n(Family f) noexcept;

// Ceilings on generated graphs; larger requests are rejected with
// ParamOutOfRange rather than attempting the allocation.
inline constexpr std::uint64_t kMaxGeneratedVertices = 2000;
inline constexpr std::uint64_t kMaxGeneratedEdges = 500000;

// Builds the family member. Naming: p0..pL (path), c0.. (cycle), k0..
// (complete), t0.. (trivial), "hub" (the K_1), g<i>_ prefix per copy in the
// friendship-type graphs. Throws ParamOutOfRange.
Graph gen_family(const FamilySpec& spec);

// The parts whose join gen_family() forms, in join order. Plain families
// (path, cycle, complete, trivial) return a single part.
std::vector<Graph> family_parts(const FamilySpec& spec);

}  // namespace iasi

#endif  // IASI_GRAPH_HPP_
