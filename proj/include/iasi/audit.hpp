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

#ifndef IASI_AUDIT_HPP_
#define IASI_AUDIT_HPP_

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <set>
#include <string>
#include <string_view>
#include <vector>

#include "iasi/closed_forms.hpp"
#include "iasi/graph.hpp"

namespace iasi {

enum class Verdict { kMatch, kMismatch, kFormulaRefused };
std::string_view verdict_name(Verdict v) noexcept;

struct AuditRow {
  std::string family;         // report section, e.g. "fan" or "union_identity_disjoint"
  std::string key;            // unique within a report; names archived files
  std::string instance_desc;
  Params params;
  std::optional<std::uint64_t> formula_value;  // empty when the formula refused
  std::uint64_t oracle_value = 0;
  Verdict verdict = Verdict::kMatch;
  std::uint64_t runtime_ms = 0;
  std::vector<Graph> operands;  // graphs needed to replay the row
};

struct AuditOptions {
  unsigned workers = 1;  // rows are independent; output order never depends on this
};

// Family formulas that audit_families() knows how to instantiate.
std::set<FormulaId> family_formulas();

// One row per in-range parameter tuple whose graph has at most
// max_vertices vertices (max_vertices <= kMaxSolverVertices).
std::vector<AuditRow> audit_families(std::size_t max_vertices, const std::set<FormulaId>& families,
                                     const AuditOptions& opts = {});

enum class IdentityKind { kUnion, kRingsum, kComplement };
std::string_view identity_name(IdentityKind k) noexcept;

struct GraphPair {
  std::string key;
  std::string desc;
  Params params;
  Graph first;
  Graph second;  // for kComplement: a subgraph of `first`
};

// Compares the identity, fed with solver values for the operands and their
// intersection, against the solver value of the composed graph.
std::vector<AuditRow> audit_identity(IdentityKind which, const std::vector<GraphPair>& instances,
                                     std::string_view family_label = {},
                                     const AuditOptions& opts = {});

// The fixed counterexample for each identity: two triangles sharing an edge
// (union, ring sum) and K3 minus a two-edge path (complement).
GraphPair named_counterexample(IdentityKind which);

// Vertex-disjoint copies of every pair drawn from C3..C6, K3, K4.
std::vector<GraphPair> vertex_disjoint_pairs();

// Seeded random instances; trial t uses seed + t.
std::vector<GraphPair> random_pairs(IdentityKind which, std::size_t trials, std::uint64_t seed);

// Named counterexamples, vertex-disjoint pairs (union and ring sum), then
// random trials, for all three identities.
std::vector<AuditRow> audit_identities(std::size_t trials, std::uint64_t seed,
                                       const AuditOptions& opts = {});

// Every 3 <= m <= n <= max_cycle and every realisable shared path length.
std::vector<AuditRow> audit_ringsum_cycles(std::size_t max_cycle, const AuditOptions& opts = {});

// C_m and C_n overlapping in a path of `shared` edges (vertex-disjoint when
// shared == 0).
std::pair<Graph, Graph> overlapping_cycles(std::uint64_t m, std::uint64_t n, std::uint64_t shared);

// G(n, p) on v0..v(n-1), p given in percent.
Graph random_graph(std::size_t n, unsigned p_percent, std::uint64_t seed);

// `family,params,formula,oracle,verdict,runtime_ms`. Without timing the
// runtime column is written as 0 so reports are byte-reproducible.
std::string report_csv(const std::vector<AuditRow>& rows, bool with_timing = false);

// One table per family with a "N rows, M mismatches" summary line.
std::string report_markdown(const std::vector<AuditRow>& rows);

// Writes <dir>/<key>.json for every mismatch row; returns the paths.
std::vector<std::filesystem::path> archive_counterexamples(const std::vector<AuditRow>& rows,
                                                           const std::filesystem::path& dir);

}  // namespace iasi

#endif  // IASI_AUDIT_HPP_
