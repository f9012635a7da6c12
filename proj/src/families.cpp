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

#include <array>
#include <string>

#include "iasi/error.hpp"
#include "iasi/graph.hpp"

namespace iasi {

namespace {

struct FamilyInfo {
  Family family;
  std::string_view name;
  bool uses_m;
  bool uses_n;
  std::uint64_t min_m;
  std::uint64_t min_n;
};

constexpr std::array<FamilyInfo, 12> kFamilies = {{
    {Family::kPath, "path", false, true, 0, 1},
    {Family::kCycle, "cycle", false, true, 0, 3},
    {Family::kComplete, "complete", false, true, 0, 1},
    {Family::kTrivial, "trivial", true, false, 1, 0},
    {Family::kWheel, "wheel", false, true, 0, 3},
    {Family::kFan, "fan", true, true, 1, 1},
    {Family::kCone, "cone", true, true, 1, 3},
    {Family::kTent, "tent", true, true, 1, 3},
    {Family::kFriendship, "friendship", true, false, 1, 0},
    {Family::kPathFriendship, "path_friendship", true, true, 1, 1},
    {Family::kClosedFriendship, "closed_friendship", true, true, 1, 3},
    {Family::kWindmill, "windmill", true, true, 1, 2},
}};

const FamilyInfo& info(Family f) {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi;
  }
  throw Error(ErrorCode::kInternal, "unknown family");
}

std::string indexed(std::string_view stem, std::uint64_t i) {
  return std::string(stem) + std::to_string(i);
}

Graph path_graph(std::uint64_t length, std::string_view prefix = "") {
  std::set<VertexId> vs;
  std::set<Edge> es;
  for (std::uint64_t i = 0; i <= length; ++i) {
    vs.emplace(std::string(prefix) + indexed("p", i));
  }
  for (std::uint64_t i = 0; i < length; ++i) {
    es.emplace(VertexId(std::string(prefix) + indexed("p", i)),
               VertexId(std::string(prefix) + indexed("p", i + 1)));
  }
  return Graph::from_sets(std::move(vs), es);
}

Graph cycle_graph(std::uint64_t n, std::string_view prefix = "") {
  std::set<VertexId> vs;
  std::set<Edge> es;
  for (std::uint64_t i = 0; i < n; ++i) {
    vs.emplace(std::string(prefix) + indexed("c", i));
    es.emplace(VertexId(std::string(prefix) + indexed("c", i)),
               VertexId(std::string(prefix) + indexed("c", (i + 1) % n)));
  }
  return Graph::from_sets(std::move(vs), es);
}

Graph complete_graph(std::uint64_t n, std::string_view prefix = "") {
  std::set<VertexId> vs;
  std::set<Edge> es;
  for (std::uint64_t i = 0; i < n; ++i) {
    vs.emplace(std::string(prefix) + indexed("k", i));
    for (std::uint64_t j = 0; j < i; ++j) {
      es.emplace(VertexId(std::string(prefix) + indexed("k", j)),
                 VertexId(std::string(prefix) + indexed("k", i)));
    }
  }
  return Graph::from_sets(std::move(vs), es);
}

Graph trivial_graph(std::uint64_t m) {
  std::set<VertexId> vs;
  for (std::uint64_t i = 0; i < m; ++i) vs.emplace(indexed("t", i));
  return Graph::from_sets(std::move(vs), {});
}

Graph hub() { return Graph::from_sets({VertexId("hub")}, {}); }

template <typename Make>
Graph copies(std::uint64_t m, Make make) {
  std::set<VertexId> vs;
  std::set<Edge> es;
  for (std::uint64_t i = 0; i < m; ++i) {
    Graph g = make("g" + std::to_string(i) + "_");
    for (const auto& v : g.vertices()) vs.insert(v);
    for (auto& e : g.edges()) es.insert(std::move(e));
  }
  return Graph::from_sets(std::move(vs), es);
}

// (|V|, |E|) of the requested member, computed before building so that
// oversized requests fail fast. Parameters are already bounded by
// kMaxGeneratedVertices, so none of the products below overflow.
std::pair<std::uint64_t, std::uint64_t> predicted_size(const FamilySpec& s) {
  const auto m = s.m;
  const auto n = s.n;
  const auto kn = n * (n - 1) / 2;
  switch (s.family) {
    case Family::kPath: return {n + 1, n};
    case Family::kCycle: return {n, n};
    case Family::kComplete: return {n, kn};
    case Family::kTrivial: return {m, 0};
    case Family::kWheel: return {n + 1, 2 * n};
    case Family::kFan: return {n + 1 + m, n + m * (n + 1)};
    case Family::kCone: return {n + m, n + m * n};
    case Family::kTent: return {n + 1 + m, 2 * n + m * (n + 1)};
    case Family::kFriendship: return {2 * m + 1, 3 * m};
    case Family::kPathFriendship: return {1 + m * (n + 1), m * n + m * (n + 1)};
    case Family::kClosedFriendship: return {1 + m * n, 2 * m * n};
    case Family::kWindmill: return {1 + m * n, m * kn + m * n};
  }
  return {0, 0};
}

void check_range(const FamilySpec& s) {
  const auto& fi = info(s.family);
  auto fail = [&](const std::string& why) {
    throw Error(ErrorCode::kParamOutOfRange, std::string(fi.name) + ": " + why);
  };
  if (fi.uses_m && s.m < fi.min_m) fail("m must be >= " + std::to_string(fi.min_m));
  if (fi.uses_n && s.n < fi.min_n) fail("n must be >= " + std::to_string(fi.min_n));
  if ((fi.uses_m && s.m > kMaxGeneratedVertices) ||
      (fi.uses_n && s.n > kMaxGeneratedVertices)) {
    fail("parameter exceeds generator limit");
  }
  auto [nv, ne] = predicted_size(s);
  if (nv > kMaxGeneratedVertices || ne > kMaxGeneratedEdges) {
    fail("requested graph exceeds generator limit (" + std::to_string(nv) + " vertices, " +
         std::to_string(ne) + " edges)");
  }
}

}  // namespace

std::string_view family_name(Family f) noexcept {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi.name;
  }
  return "unknown";
}

std::optional<Family> parse_family(std::string_view name) noexcept {
  for (const auto& fi : kFamilies) {
    if (fi.name == name) return fi.family;
  }
  return std::nullopt;
}

bool family_uses_m(Family f) noexcept {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi.uses_m;
  }
  return false;
}

bool family_uses_n(Family f) noexcept {
  for (const auto& fi : kFamilies) {
    if (fi.family == f) return fi.uses_n;
  }
  return false;
}

std::vector<Graph> family_parts(const FamilySpec& spec) {
  check_range(spec);
  const auto m = spec.m;
  const auto n = spec.n;
  switch (spec.family) {
    case Family::kPath: return {path_graph(n)};
    case Family::kCycle: return {cycle_graph(n)};
    case Family::kComplete: return {complete_graph(n)};
    case Family::kTrivial: return {trivial_graph(m)};
    case Family::kWheel: return {cycle_graph(n), hub()};
    case Family::kFan: return {path_graph(n), trivial_graph(m)};
    case Family::kCone: return {cycle_graph(n), trivial_graph(m)};
    case Family::kTent: return {cycle_graph(n), hub(), trivial_graph(m)};
    case Family::kFriendship:
      return {hub(), copies(m, [](const std::string& p) { return complete_graph(2, p); })};
    case Family::kPathFriendship:
      return {hub(), copies(m, [n](const std::string& p) { return path_graph(n, p); })};
    case Family::kClosedFriendship:
      return {hub(), copies(m, [n](const std::string& p) { return cycle_graph(n, p); })};
    case Family::kWindmill:
      return {hub(), copies(m, [n](const std::string& p) { return complete_graph(n, p); })};
  }
  throw Error(ErrorCode::kInternal, "unhandled family");
}

Graph gen_family(const FamilySpec& spec) {
  auto parts = family_parts(spec);
  if (parts.size() == 1) return std::move(parts.front());
  return join(parts);
}

}  // namespace iasi
