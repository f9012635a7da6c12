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

#include <random>

#include "doctest.h"
#include "iasi/error.hpp"
#include "iasi/graph.hpp"
#include "iasi/serialize.hpp"
#include "test_support.hpp"

using namespace iasi;
using iasi::testing::make;
using iasi::testing::V;

namespace {

ErrorCode code_of(auto&& fn) {
  try {
    fn();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an iasi::Error");
  return ErrorCode::kInternal;
}

// Edge count of a join counted pair by pair, independent of join().
std::size_t join_edges_by_definition(const std::vector<Graph>& parts) {
  std::size_t total = 0;
  for (std::size_t p = 0; p < parts.size(); ++p) {
    total += parts[p].size();
    for (std::size_t q = p + 1; q < parts.size(); ++q) total += parts[p].order() * parts[q].order();
  }
  return total;
}

}  // namespace

TEST_CASE("make_graph validates its input") {
  auto k2 = make({"a", "b"}, {{"a", "b"}});
  CHECK(k2.order() == 2);
  CHECK(k2.size() == 1);
  auto k3 = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  CHECK(k3.order() == 3);
  CHECK(k3.size() == 3);

  CHECK(code_of([] { make({"a"}, {{"a", "a"}}); }) == ErrorCode::kLoopEdge);
  CHECK(code_of([] { make({"a"}, {{"a", "b"}}); }) == ErrorCode::kUnknownEndpoint);
  CHECK(code_of([] { make({"a", "b"}, {{"a", "b"}, {"b", "a"}}); }) == ErrorCode::kDuplicateEdge);
  CHECK(code_of([] { make({"a", "a"}, {}); }) == ErrorCode::kDuplicateVertex);
  CHECK(code_of([] { VertexId("bad name"); }) == ErrorCode::kInvalidToken);
  CHECK(code_of([] { VertexId(""); }) == ErrorCode::kInvalidToken);
  CHECK(VertexId::is_valid_token("g0_k1.x-2"));
}

TEST_CASE("vertex order is byte order") {
  auto g = make({"c10", "c2", "B", "a"}, {});
  std::vector<std::string> names;
  for (const auto& v : g.vertices()) names.push_back(v.str());
  CHECK(names == std::vector<std::string>{"B", "a", "c10", "c2"});
}

TEST_CASE("family generators") {
  SUBCASE("path length counts edges") {
    auto p = gen_family(FamilySpec::path(3));
    CHECK(p.order() == 4);
    CHECK(p.size() == 3);
    CHECK(p.has_edge(V("p0"), V("p1")));
    CHECK(p.has_edge(V("p2"), V("p3")));
  }
  SUBCASE("fan(2,3)") {
    auto g = gen_family(FamilySpec::fan(2, 3));
    CHECK(g.order() == 6);
    CHECK(g.size() == 11);
    CHECK(g == join(gen_family(FamilySpec::path(3)), gen_family(FamilySpec::trivial(2))));
  }
  SUBCASE("windmill(2,3)") {
    auto g = gen_family(FamilySpec::windmill(2, 3));
    CHECK(g.order() == 7);
    CHECK(g.size() == 12);
    CHECK(g.contains(V("hub")));
    CHECK(g.has_edge(V("g1_k0"), V("g1_k2")));
    CHECK_FALSE(g.has_edge(V("g0_k0"), V("g1_k0")));
  }
  SUBCASE("wheel") {
    auto w = gen_family(FamilySpec::wheel(4));
    CHECK(w.size() == 8);
    CHECK(w == join(gen_family(FamilySpec::cycle(4)), make({"hub"}, {})));
  }
  SUBCASE("plain families") {
    for (std::uint64_t l = 1; l <= 9; ++l) {
      auto p = gen_family(FamilySpec::path(l));
      CHECK(p.order() == l + 1);
      CHECK(p.size() == l);
    }
    for (std::uint64_t n = 3; n <= 9; ++n) {
      auto c = gen_family(FamilySpec::cycle(n));
      CHECK(c.order() == n);
      CHECK(c.size() == n);
    }
    for (std::uint64_t n = 1; n <= 9; ++n) {
      CHECK(gen_family(FamilySpec::complete(n)).size() == n * (n - 1) / 2);
    }
    CHECK(gen_family(FamilySpec::trivial(3)).size() == 0);
  }
  SUBCASE("join families match the join edge count") {
    const std::vector<FamilySpec> specs = {
        FamilySpec::wheel(5),           FamilySpec::fan(3, 4),
        FamilySpec::cone(2, 5),         FamilySpec::tent(3, 4),
        FamilySpec::friendship(4),      FamilySpec::path_friendship(3, 3),
        FamilySpec::closed_friendship(2, 5), FamilySpec::windmill(3, 4),
    };
    for (const auto& s : specs) {
      auto parts = family_parts(s);
      auto g = gen_family(s);
      std::size_t vertices = 0;
      for (const auto& p : parts) vertices += p.order();
      CHECK(g.order() == vertices);
      CHECK(g.size() == join_edges_by_definition(parts));
    }
  }
  SUBCASE("out of range") {
    CHECK(code_of([] { gen_family(FamilySpec::cycle(2)); }) == ErrorCode::kParamOutOfRange);
    CHECK(code_of([] { gen_family(FamilySpec::path(0)); }) == ErrorCode::kParamOutOfRange);
    CHECK(code_of([] { gen_family(FamilySpec::windmill(2, 1)); }) == ErrorCode::kParamOutOfRange);
    CHECK(code_of([] { gen_family(FamilySpec::fan(0, 3)); }) == ErrorCode::kParamOutOfRange);
    CHECK(code_of([] { gen_family(FamilySpec::complete(1u << 20)); }) == ErrorCode::kParamOutOfRange);
    CHECK(code_of([] { gen_family(FamilySpec::friendship(~std::uint64_t{0})); }) ==
          ErrorCode::kParamOutOfRange);
  }
  SUBCASE("names round-trip") {
    for (auto f : {Family::kPath, Family::kTent, Family::kClosedFriendship, Family::kWindmill}) {
      CHECK(parse_family(family_name(f)) == f);
    }
    CHECK_FALSE(parse_family("petersen").has_value());
  }
}

TEST_CASE("union and intersection") {
  auto ab = make({"a", "b"}, {{"a", "b"}});
  auto bc = make({"b", "c"}, {{"b", "c"}});
  auto path = graph_union(ab, bc);
  CHECK(path == make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}}));

  auto abc = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto abd = make({"a", "b", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "d"}});
  auto diamond = graph_union(abc, abd);
  CHECK(diamond.order() == 4);
  CHECK(diamond.size() == 5);
  CHECK(graph_intersection(abc, abd) == ab);
  CHECK(graph_intersection(abc, abc) == abc);
  CHECK(graph_union(abc, abc) == abc);
  CHECK(graph_intersection(ab, make({"x", "y"}, {{"x", "y"}})).empty());
}

TEST_CASE("join") {
  auto fan = join(gen_family(FamilySpec::path(3)), gen_family(FamilySpec::trivial(2)));
  CHECK(fan.size() == 11);
  auto a = make({"a"}, {});
  CHECK(code_of([&] { join(a, a); }) == ErrorCode::kVertexCollision);
  const Graph one[] = {a};
  CHECK(code_of([&] { join(std::span<const Graph>(one)); }) == ErrorCode::kInvalidArgument);

  // Associativity of the n-ary join.
  auto x = relabel(gen_family(FamilySpec::cycle(3)), "x_");
  auto y = relabel(gen_family(FamilySpec::path(2)), "y_");
  auto z = relabel(gen_family(FamilySpec::trivial(2)), "z_");
  const Graph xyz[] = {x, y, z};
  CHECK(join(xyz) == join(join(x, y), z));
  CHECK(join(xyz) == join(x, join(y, z)));
}

TEST_CASE("ring sum") {
  auto abc = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
  auto abd = make({"a", "b", "d"}, {{"a", "b"}, {"b", "d"}, {"a", "d"}});
  auto c4 = ring_sum(abc, abd);
  CHECK(c4 == make({"a", "b", "c", "d"}, {{"a", "c"}, {"c", "b"}, {"b", "d"}, {"d", "a"}}));
  CHECK(ring_sum(abc, abc).empty());

  // Isolated vertices are dropped.
  auto with_isolated = make({"a", "b", "z"}, {{"a", "b"}});
  CHECK(ring_sum(with_isolated, make({"c", "d"}, {{"c", "d"}})) ==
        make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}}));
}

TEST_CASE("subtract") {
  auto k3 = gen_family(FamilySpec::complete(3));
  auto one = make({"k0", "k1"}, {{"k0", "k1"}});
  auto rest = subtract(k3, one);
  CHECK(rest.order() == 3);
  CHECK(rest.size() == 2);
  CHECK(subtract(k3, k3).size() == 0);
  CHECK(subtract(k3, k3).order() == 3);
  CHECK(code_of([] { subtract(make({"a", "b"}, {{"a", "b"}}), make({"c", "d"}, {{"c", "d"}})); }) ==
        ErrorCode::kNotSubgraph);
  // Vertex containment alone is not enough.
  CHECK(code_of([] {
          subtract(make({"a", "b", "c"}, {{"a", "b"}}), make({"b", "c"}, {{"b", "c"}}));
        }) == ErrorCode::kNotSubgraph);
}

TEST_CASE("relabel") {
  auto k2 = make({"a", "b"}, {{"a", "b"}});
  CHECK(relabel(k2, "x_") == make({"x_a", "x_b"}, {{"x_a", "x_b"}}));
  auto p = relabel(k2, "p_");
  auto q = relabel(k2, "q_");
  CHECK(graph_intersection(p, q).empty());
  CHECK(relabel(Graph{}, "p").empty());
  CHECK(code_of([&] { relabel(k2, "bad prefix"); }) == ErrorCode::kInvalidToken);
}

TEST_CASE("bipartiteness") {
  CHECK(is_bipartite(gen_family(FamilySpec::cycle(4))));
  CHECK_FALSE(is_bipartite(gen_family(FamilySpec::cycle(5))));
  CHECK(is_bipartite(gen_family(FamilySpec::trivial(3))));
  auto colouring = two_coloring(gen_family(FamilySpec::path(4)));
  REQUIRE(colouring);
  auto p = gen_family(FamilySpec::path(4));
  for (const auto& [i, j] : p.index_edges()) CHECK((*colouring)[i] != (*colouring)[j]);

  // Against brute-force 2-colouring on random small graphs.
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    auto g = iasi::testing::random_graph(rng, 8, 0.3);
    bool any = false;
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << g.order()) && !any; ++mask) {
      bool ok = true;
      for (const auto& [i, j] : g.index_edges()) ok = ok && (((mask >> i) & 1) != ((mask >> j) & 1));
      any = ok;
    }
    CHECK(is_bipartite(g) == any);
  }
}

TEST_CASE("operation properties on random pairs") {
  std::mt19937_64 rng(42);
  for (int t = 0; t < 300; ++t) {
    const double p = (t % 3 + 1) * 0.2;
    auto a = iasi::testing::random_graph(rng, 9, p);
    auto b = iasi::testing::random_graph(rng, 9, p);
    CHECK(graph_union(a, b) == graph_union(b, a));
    CHECK(graph_intersection(a, b) == graph_intersection(b, a));
    CHECK(ring_sum(a, b) == ring_sum(b, a));
    CHECK(graph_union(a, a) == a);
    CHECK(graph_intersection(a, a) == a);
    CHECK(ring_sum(a, a).size() == 0);

    // |E1 (+) E2| = |E1| + |E2| - 2 |E1 n E2|
    auto cap = graph_intersection(a, b);
    CHECK(ring_sum(a, b).size() == a.size() + b.size() - 2 * cap.size());

    // Subtracting a genuine subgraph.
    std::set<Edge> some;
    for (auto& e : a.edges()) {
      if (rng() % 2) some.insert(e);
    }
    auto sub = Graph::from_sets(a.vertex_set(), some);
    auto diff = subtract(a, sub);
    CHECK(diff.size() == a.size() - sub.size());
    for (const auto& e : diff.edges()) CHECK_FALSE(sub.has_edge(e.u, e.v));
    CHECK(diff.order() == a.order());

    auto x = relabel(a, "x_");
    auto y = relabel(b, "y_");
    CHECK(ring_sum(x, y).edge_set() == graph_union(x, y).edge_set());
  }
}

TEST_CASE("graph JSON") {
  auto text = R"({"vertices": ["b", "a", "c"], "edges": [["b", "a"], ["c", "b"]]})";
  auto g = graph_from_json(parse_json_text(text));
  CHECK(dump_canonical(graph_to_json(g)) ==
        "{\n  \"edges\": [\n    [\n      \"a\",\n      \"b\"\n    ],\n    [\n      \"b\",\n      \"c\"\n"
        "    ]\n  ],\n  \"vertices\": [\n    \"a\",\n    \"b\",\n    \"c\"\n  ]\n}\n");

  auto parse = [](const char* s) { return graph_from_json(parse_json_text(s)); };
  CHECK(code_of([&] { parse(R"({"vertices": ["a","b"], "edges": [["a","b"],["b","a"]]})"); }) ==
        ErrorCode::kDuplicateEdge);
  CHECK(code_of([&] { parse(R"({"vertices": ["a"], "edges": [["a"]]})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"vertices": ["a"]})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"vertices": [1], "edges": []})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse("{not json"); }) == ErrorCode::kParse);

  std::mt19937_64 rng(3);
  for (int t = 0; t < 50; ++t) {
    auto r = iasi::testing::random_graph(rng, 10, 0.4);
    auto back = graph_from_json(parse_json_text(dump_canonical(graph_to_json(r))));
    CHECK(back == r);
  }
}

TEST_CASE("DOT export") {
  auto g = make({"b", "a"}, {{"b", "a"}});
  CHECK(graph_to_dot(g) == "graph G {\n  \"a\";\n  \"b\";\n  \"a\" -- \"b\";\n}\n");
}
