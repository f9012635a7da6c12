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


#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>

#include "doctest.h"
#include "iasi/audit.hpp"
#include "iasi/closed_forms.hpp"
#include "iasi/error.hpp"
#include "iasi/serialize.hpp"
#include "iasi/sparing.hpp"
#include "test_support.hpp"

using namespace iasi;

namespace {

std::size_t count_verdict(const std::vector<AuditRow>& rows, Verdict v) {
  std::size_t n = 0;
  for (const auto& r : rows) n += r.verdict == v;
  return n;
}

const AuditRow& find_row(const std::vector<AuditRow>& rows, const std::string& key) {
  for (const auto& r : rows) {
    if (r.key == key) return r;
  }
  FAIL("no row " << key);
  throw std::logic_error("unreachable");
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

struct TempDir {
  std::filesystem::path path;
  TempDir() {
    path = std::filesystem::temp_directory_path() /
           ("iasi_audit_" + std::to_string(std::random_device{}()));
    std::filesystem::create_directories(path);
  }
  ~TempDir() { std::filesystem::remove_all(path); }
};

}  // namespace

TEST_CASE("family audit examples") {
  auto cycles = audit_families(10, {FormulaId::kCycle});
  CHECK(cycles.size() == 8);
  CHECK(count_verdict(cycles, Verdict::kMatch) == 8);
  CHECK(cycles.front().params.at("n") == 3);
  CHECK(cycles.back().params.at("n") == 10);

  auto fans = audit_families(12, {FormulaId::kFan});
  std::size_t expected = 0;
  for (std::uint64_t m = 2; m <= 12; ++m) {
    for (std::uint64_t n = 2; m + n + 1 <= 12; ++n) ++expected;
  }
  CHECK(fans.size() == expected);
  CHECK(count_verdict(fans, Verdict::kMatch) == expected);

  auto complete = audit_families(9, {FormulaId::kComplete});
  CHECK(complete.size() == 8);
  CHECK(count_verdict(complete, Verdict::kMatch) == 8);
}

TEST_CASE("family audit against the brute-force oracle") {
  auto rows = audit_families(11, family_formulas(), {.workers = 3});
  for (const auto& r : rows) {
    REQUIRE(r.operands.size() == 1);
    CAPTURE(r.key);
    CHECK(r.oracle_value == iasi::testing::brute_force_phi(r.operands[0]).phi);
    CHECK((r.verdict == Verdict::kMatch) == (r.formula_value == r.oracle_value));
  }
}

TEST_CASE("family audit mismatches are confined to closed friendship and tent") {
  auto rows = audit_families(14, family_formulas(), {.workers = 4});
  for (const auto& r : rows) {
    CAPTURE(r.key);
    if (r.family == "closed_friendship") {
      CHECK((r.verdict == Verdict::kMismatch) == (r.params.at("n") % 2 == 1));
    } else if (r.family == "tent") {
      const auto m = r.params.at("m"), n = r.params.at("n");
      CHECK((r.verdict == Verdict::kMismatch) == (m == 2 && (n == 6 || n == 8 || n >= 10)));
    } else {
      CHECK(r.verdict == Verdict::kMatch);
    }
  }
  CHECK_THROWS_AS(audit_families(65, {FormulaId::kCycle}), Error);
}

TEST_CASE("identity audit examples") {
  auto u = audit_identity(IdentityKind::kUnion, {named_counterexample(IdentityKind::kUnion)});
  REQUIRE(u.size() == 1);
  CHECK(u[0].formula_value == 2u);
  CHECK(u[0].oracle_value == 1);
  CHECK(u[0].verdict == Verdict::kMismatch);
  CHECK(u[0].key == "union_identity_diamond");

  auto r = audit_identity(IdentityKind::kRingsum, {named_counterexample(IdentityKind::kRingsum)});
  CHECK(r[0].formula_value == 2u);
  CHECK(r[0].oracle_value == 0);
  CHECK(r[0].verdict == Verdict::kMismatch);

  auto c = audit_identity(IdentityKind::kComplement, {named_counterexample(IdentityKind::kComplement)});
  CHECK(c[0].formula_value == 1u);
  CHECK(c[0].oracle_value == 0);
  CHECK(c[0].verdict == Verdict::kMismatch);

  GraphPair c3c5{"c3_c5", "C3 and C5", {},
                 relabel(gen_family(FamilySpec::cycle(3)), "x_"),
                 relabel(gen_family(FamilySpec::cycle(5)), "y_")};
  auto d = audit_identity(IdentityKind::kUnion, {c3c5});
  CHECK(d[0].formula_value == 2u);
  CHECK(d[0].oracle_value == 2);
  CHECK(d[0].verdict == Verdict::kMatch);
}

TEST_CASE("identities hold on vertex-disjoint pairs") {
  auto pairs = vertex_disjoint_pairs();
  CHECK(pairs.size() == 21);
  for (auto kind : {IdentityKind::kUnion, IdentityKind::kRingsum}) {
    auto rows = audit_identity(kind, pairs);
    CHECK(count_verdict(rows, Verdict::kMatch) == pairs.size());
  }
}

// H is a subgraph of G, so phi(H) <= phi(G) and the complement identity
// never has to refuse.
TEST_CASE("complement rows never refuse") {
  auto rows = audit_identity(IdentityKind::kComplement,
                             random_pairs(IdentityKind::kComplement, 100, 9));
  CHECK(count_verdict(rows, Verdict::kFormulaRefused) == 0);
}

TEST_CASE("full identity audit") {
  auto rows = audit_identities(30, 20260101, {.workers = 2});
  std::set<std::string> families;
  for (const auto& r : rows) families.insert(r.family);
  CHECK(families == std::set<std::string>{"union_identity", "union_identity_disjoint",
                                          "ringsum_identity", "ringsum_identity_disjoint",
                                          "complement_identity"});
  for (const auto& r : rows) {
    if (r.family.ends_with("_disjoint")) CHECK(r.verdict == Verdict::kMatch);
  }
  CHECK(find_row(rows, "union_identity_diamond").verdict == Verdict::kMismatch);
  CHECK(find_row(rows, "ringsum_identity_diamond").verdict == Verdict::kMismatch);
  CHECK(find_row(rows, "complement_identity_k3_minus_p2").verdict == Verdict::kMismatch);

  // Every row replays from its operands.
  for (const auto& r : rows) {
    REQUIRE(r.operands.size() == 2);
    const auto& a = r.operands[0];
    const auto& b = r.operands[1];
    Graph composed = r.family.starts_with("union") ? graph_union(a, b)
                     : r.family.starts_with("ringsum") ? ring_sum(a, b)
                                                        : subtract(a, b);
    CHECK(iasi::testing::brute_force_phi(composed).phi == r.oracle_value);
  }
}

TEST_CASE("random pairs are reproducible") {
  auto a = random_pairs(IdentityKind::kUnion, 10, 5);
  auto b = random_pairs(IdentityKind::kUnion, 10, 5);
  REQUIRE(a.size() == b.size());
  for (std::size_t i = 0; i < a.size(); ++i) {
    CHECK(a[i].first == b[i].first);
    CHECK(a[i].second == b[i].second);
  }
  auto shifted = random_pairs(IdentityKind::kUnion, 7, 8);
  for (std::size_t i = 0; i < shifted.size(); ++i) CHECK(shifted[i].first == a[i + 3].first);
  CHECK(random_graph(8, 40, 1) == random_graph(8, 40, 1));
  CHECK(random_graph(8, 0, 1).size() == 0);
  CHECK(random_graph(8, 100, 1).size() == 28);
}

TEST_CASE("overlapping cycles") {
  auto [a, b] = overlapping_cycles(3, 5, 1);
  CHECK(a.order() == 3);
  CHECK(b.order() == 5);
  CHECK(graph_intersection(a, b).size() == 1);
  auto r = ring_sum(a, b);
  CHECK(r.order() == 6);
  CHECK(r.size() == 6);
  auto [c, d] = overlapping_cycles(4, 4, 0);
  CHECK(graph_intersection(c, d).empty());
  for (std::uint64_t m = 3; m <= 8; ++m) {
    for (std::uint64_t n = m; n <= 8; ++n) {
      for (std::uint64_t s = 1; s < m; ++s) {
        if (m == n && s == m - 1) continue;
        auto [x, y] = overlapping_cycles(m, n, s);
        CHECK(graph_intersection(x, y).size() == s);
        auto ring = ring_sum(x, y);
        CHECK(ring.size() == m + n - 2 * s);
        CHECK(ring.order() == m + n - 2 * s);
      }
    }
  }
}

TEST_CASE("cycle ring-sum audit") {
  auto rows = audit_ringsum_cycles(10);
  CHECK(count_verdict(rows, Verdict::kMismatch) == 0);
  CHECK(find_row(rows, "ringsum_cycles_m3_n5_shared1").oracle_value == 0);
  CHECK(find_row(rows, "ringsum_cycles_m3_n4_shared1").oracle_value == 1);
  CHECK(find_row(rows, "ringsum_cycles_m4_n4_shared0").oracle_value == 0);
  for (const auto& r : rows) CHECK(r.params.at("parity_ok") == 1);
  std::size_t expected = 0;
  for (std::uint64_t m = 3; m <= 10; ++m) {
    for (std::uint64_t n = m; n <= 10; ++n) expected += m == n ? m - 1 : m;
  }
  CHECK(rows.size() == expected);
}

TEST_CASE("reports are deterministic") {
  auto serial = audit_families(12, family_formulas(), {.workers = 1});
  auto parallel = audit_families(12, family_formulas(), {.workers = 4});
  CHECK(report_csv(serial) == report_csv(parallel));
  CHECK(report_markdown(serial) == report_markdown(parallel));
  auto id1 = audit_identities(20, 7, {.workers = 1});
  auto id2 = audit_identities(20, 7, {.workers = 3});
  CHECK(report_csv(id1) == report_csv(id2));

  auto csv = report_csv(audit_families(5, {FormulaId::kCycle}));
  CHECK(csv ==
        "family,params,formula,oracle,verdict,runtime_ms\n"
        "cycle,n=3,1,1,match,0\n"
        "cycle,n=4,0,0,match,0\n"
        "cycle,n=5,1,1,match,0\n");
  auto md = report_markdown(audit_families(4, {FormulaId::kCycle}));
  CHECK(md.starts_with("# Sparing number audit\n\n## cycle\n"));
  CHECK(md.find("2 rows, 0 mismatches") != std::string::npos);
}

TEST_CASE("archive writes one file per mismatch") {
  TempDir dir;
  auto rows = audit_identities(0, 1);
  auto written = archive_counterexamples(rows, dir.path);
  CHECK(written.size() == 3);
  auto doc = parse_json_text(slurp(dir.path / "union_identity_diamond.json"));
  CHECK(doc["formula"] == 2);
  CHECK(doc["oracle"] == 1);
  CHECK(doc["operands"].size() == 2);
}

// The counterexample files kept in the source tree replay to the values they
// record.
TEST_CASE("golden counterexamples reproduce") {
  const std::filesystem::path dir = std::filesystem::path(IASI_SOURCE_DIR) / "counterexamples";
  const std::map<std::string, std::pair<std::uint64_t, std::uint64_t>> expected = {
      {"union_identity_diamond.json", {2, 1}},
      {"ringsum_identity_diamond.json", {2, 0}},
      {"complement_identity_k3_minus_p2.json", {1, 0}},
  };
  for (const auto& [name, values] : expected) {
    CAPTURE(name);
    REQUIRE(std::filesystem::exists(dir / name));
    auto doc = parse_json_text(slurp(dir / name));
    auto a = graph_from_json(doc["operands"][0]);
    auto b = graph_from_json(doc["operands"][1]);
    const auto phi_a = phi_exhaustive(a).phi;
    const auto phi_b = phi_exhaustive(b).phi;
    std::uint64_t formula = 0, oracle = 0;
    const std::string family = doc["family"];
    if (family == "complement_identity") {
      formula = phi_complement_identity(phi_a, phi_b);
      oracle = phi_exhaustive(subtract(a, b)).phi;
    } else {
      const auto cap = phi_exhaustive(graph_intersection(a, b)).phi;
      if (family == "union_identity") {
        formula = phi_union_identity(phi_a, phi_b, cap);
        oracle = phi_exhaustive(graph_union(a, b)).phi;
      } else {
        formula = phi_ringsum_identity(phi_a, phi_b, cap);
        oracle = phi_exhaustive(ring_sum(a, b)).phi;
      }
    }
    CHECK(formula == values.first);
    CHECK(oracle == values.second);
    CHECK(doc["formula"] == formula);
    CHECK(doc["oracle"] == oracle);
  }
}
