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
#include "iasi/labeling.hpp"
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

SetLabel random_label(std::mt19937_64& rng, std::size_t max_size, Element max_elem) {
  std::uniform_int_distribution<std::size_t> size(1, max_size);
  std::uniform_int_distribution<Element> elem(0, max_elem);
  std::vector<Element> xs(size(rng));
  for (auto& x : xs) x = elem(rng);
  return SetLabel(xs);
}

// Sumset by nested loops into a std::set.
std::set<Element> naive_sumset(const SetLabel& a, const SetLabel& b) {
  std::set<Element> out;
  for (auto x : a.elements()) {
    for (auto y : b.elements()) out.insert(x + y);
  }
  return out;
}

}  // namespace

TEST_CASE("SetLabel normalises") {
  SetLabel a{3, 1, 3, 2};
  CHECK(a.elements() == std::vector<Element>{1, 2, 3});
  CHECK(code_of([] { SetLabel(std::vector<Element>{}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { SetLabel::from_strict({1, 1}); }) == ErrorCode::kInvalidArgument);
  CHECK(code_of([] { SetLabel::from_strict({2, 1}); }) == ErrorCode::kInvalidArgument);
  CHECK(SetLabel::from_strict({0, 4, 8}).size() == 3);
}

TEST_CASE("sumset examples") {
  SetLabel a{0, 1};
  CHECK(sumset(SetLabel{0}, a) == a);
  CHECK(sumset(a, SetLabel{2}) == SetLabel{2, 3});
  auto ab = sumset(a, SetLabel{0, 2});
  CHECK(ab == SetLabel{0, 1, 2, 3});
  CHECK(ab.size() == 4);
}

TEST_CASE("sumset overflow is reported") {
  const Element top = ~Element{0};
  CHECK(code_of([&] { sumset(SetLabel{top}, SetLabel{1}); }) == ErrorCode::kCapacityExceeded);
  CHECK(sumset(SetLabel{top - 1}, SetLabel{1}) == SetLabel{top});
}

TEST_CASE("sumset properties") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 2000; ++t) {
    auto a = random_label(rng, 6, 40);
    auto b = random_label(rng, 6, 40);
    auto c = random_label(rng, 4, 40);
    auto ab = sumset(a, b);
    const auto naive = naive_sumset(a, b);
    CHECK(ab.elements() == std::vector<Element>(naive.begin(), naive.end()));
    CHECK(std::max(a.size(), b.size()) <= ab.size());
    CHECK(ab.size() <= a.size() * b.size());
    CHECK(ab == sumset(b, a));
    CHECK(sumset(ab, c) == sumset(a, sumset(b, c)));
    CHECK(sumset(a, SetLabel{0}) == a);
    Element x = rng() % 1000, y = rng() % 1000;
    CHECK(sumset(SetLabel{x}, SetLabel{y}).is_singleton());
  }
}

TEST_CASE("verify examples") {
  SUBCASE("K2 with singletons") {
    auto g = make({"a", "b"}, {{"a", "b"}});
    Labeling f{{V("a"), {1}}, {V("b"), {2}}};
    auto r = verify(g, f);
    CHECK(r.is_iasi);
    CHECK(r.is_weak);
    CHECK(r.is_strong);
    CHECK(r.uniform_k == std::optional<std::size_t>(1));
    CHECK(r.mono_indexed_vertices == std::set<VertexId>{V("a"), V("b")});
    CHECK(r.mono_indexed_edges.size() == 1);
  }
  SUBCASE("path with a two-element middle label") {
    // {1}+{1,2} = {2,3}, {1,2}+{2} = {3,4}: sizes 2 = max = product.
    auto g = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}});
    Labeling f{{V("a"), {1}}, {V("b"), {1, 2}}, {V("c"), {2}}};
    auto r = verify(g, f);
    CHECK(r.is_iasi);
    CHECK(r.is_weak);
    CHECK(r.is_strong);
    CHECK(r.uniform_k == std::optional<std::size_t>(2));
    CHECK(r.mono_indexed_edges.empty());
    CHECK(r.mono_indexed_vertices == std::set<VertexId>{V("a"), V("c")});
  }
  SUBCASE("triangle that is not weak") {
    auto g = make({"a", "b", "c"}, {{"a", "b"}, {"b", "c"}, {"a", "c"}});
    Labeling f{{V("a"), {0, 1}}, {V("b"), {0, 2}}, {V("c"), {5}}};
    auto r = verify(g, f);
    CHECK(r.is_iasi);
    CHECK_FALSE(r.is_weak);
    CHECK(r.is_strong);
    CHECK(r.edge_indexing_numbers.at(Edge(V("a"), V("b"))) == 4);
    CHECK_FALSE(r.uniform_k.has_value());
  }
  SUBCASE("duplicate vertex label") {
    auto g = make({"a", "b"}, {{"a", "b"}});
    Labeling f{{V("a"), {1}}, {V("b"), {1}}};
    auto r = verify(g, f);
    CHECK_FALSE(r.is_iasi);
    CHECK_FALSE(r.is_weak);
    CHECK_FALSE(r.is_strong);
    CHECK(code_of([&] { mono_indexed_edge_count(g, f); }) == ErrorCode::kNotIasi);
  }
  SUBCASE("colliding edge labels") {
    // a+b = {3} = c+d.
    auto g = make({"a", "b", "c", "d"}, {{"a", "b"}, {"c", "d"}});
    Labeling f{{V("a"), {1}}, {V("b"), {2}}, {V("c"), {0}}, {V("d"), {3}}};
    CHECK_FALSE(verify(g, f).is_iasi);
  }
}

TEST_CASE("verify preconditions") {
  auto g = make({"a", "b", "z"}, {{"a", "b"}});
  CHECK(code_of([&] { verify(g, Labeling{{V("a"), {1}}}); }) == ErrorCode::kMissingLabel);
  CHECK(code_of([&] {
          verify(g, Labeling{{V("a"), {1}}, {V("b"), {2}}, {V("q"), {3}}});
        }) == ErrorCode::kUnknownVertex);
  // The isolated vertex may go unlabelled...
  CHECK(verify(g, Labeling{{V("a"), {1}}, {V("b"), {2}}}).is_iasi);
  // ...but a label on it still has to be distinct.
  CHECK_FALSE(verify(g, Labeling{{V("a"), {1}}, {V("b"), {2}}, {V("z"), {2}}}).is_iasi);
}

TEST_CASE("mono-indexed edge count") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 50; ++t) {
    auto g = iasi::testing::random_graph(rng, 9, 0.5);
    Labeling f;
    Element next = 1;
    for (const auto& v : g.vertices()) {
      f.emplace(v, SetLabel{next});
      next *= 3;  // distinct pairwise sums
    }
    CHECK(mono_indexed_edge_count(g, f) == g.size());
  }
  auto k2 = make({"a", "b"}, {{"a", "b"}});
  CHECK(mono_indexed_edge_count(k2, Labeling{{V("a"), {1}}, {V("b"), {0, 4}}}) == 0);
}

TEST_CASE("verify is pure") {
  std::mt19937_64 rng(99);
  for (int t = 0; t < 100; ++t) {
    auto g = iasi::testing::random_graph(rng, 7, 0.5);
    Labeling f;
    for (const auto& v : g.vertices()) f.emplace(v, random_label(rng, 3, 30));
    auto r1 = verify(g, f);
    auto r2 = verify(g, f);
    CHECK(r1 == r2);
  }
}

// If a labeling is weak, its non-singleton vertices form an independent set:
// a sum of two sets of size >= 2 has size > max of the two.
TEST_CASE("weak labelings put non-singletons on an independent set") {
  std::mt19937_64 rng(2024);
  int weak_seen = 0;
  for (int t = 0; t < 4000; ++t) {
    auto g = iasi::testing::random_graph(rng, 6, 0.4);
    Labeling f;
    for (const auto& v : g.vertices()) f.emplace(v, random_label(rng, 3, 60));
    auto r = verify(g, f);
    if (!r.is_weak) continue;
    ++weak_seen;
    for (const auto& [i, j] : g.index_edges()) {
      const bool both = !f.at(g.vertices()[i]).is_singleton() && !f.at(g.vertices()[j]).is_singleton();
      CHECK_FALSE(both);
    }
    CHECK(r.mono_indexed_edges.size() == mono_indexed_edge_count(g, f));
  }
  CHECK(weak_seen > 50);
}

TEST_CASE("labeling JSON") {
  auto f = labeling_from_json(parse_json_text(R"({"labels": {"b": [0,4,8], "a": [1]}})"));
  CHECK(f.at(V("a")) == SetLabel{1});
  CHECK(f.at(V("b")) == SetLabel{0, 4, 8});
  CHECK(dump_canonical(labeling_to_json(f)) ==
        "{\n  \"labels\": {\n    \"a\": [\n      1\n    ],\n    \"b\": [\n      0,\n      4,\n"
        "      8\n    ]\n  }\n}\n");

  auto parse = [](const char* s) { return labeling_from_json(parse_json_text(s)); };
  CHECK(code_of([&] { parse(R"({"labels": {"a": [2, 1]}})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"labels": {"a": [1, 1]}})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"labels": {"a": []}})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"labels": {"a": [-1]}})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"labels": {"a": [1.5]}})"); }) == ErrorCode::kParse);
  CHECK(code_of([&] { parse(R"({"labels": {"a": [18446744073709551616]}})"); }) ==
        ErrorCode::kCapacityExceeded);
  CHECK(code_of([&] { parse(R"({"labels": {"bad name": [1]}})"); }) == ErrorCode::kInvalidToken);
  CHECK(code_of([&] { parse(R"({"label": {}})"); }) == ErrorCode::kParse);
}

TEST_CASE("verify report JSON") {
  auto g = make({"a", "b"}, {{"a", "b"}});
  auto j = verify_report_to_json(verify(g, Labeling{{V("a"), {1}}, {V("b"), {0, 4}}}));
  CHECK(j["is_iasi"] == true);
  CHECK(j["is_weak"] == true);
  CHECK(j["uniform_k"] == 2);
  CHECK(j["mono_indexed_edges"].empty());
  CHECK(j["mono_indexed_vertices"] == Json::array({"a"}));
  CHECK(j["edge_indexing_numbers"][0]["k"] == 2);
}
