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

#include "iasi/audit.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <chrono>
#include <exception>
#include <fstream>
#include <functional>
#include <mutex>
#include <random>
#include <sstream>
#include <thread>

#include "iasi/error.hpp"
#include "iasi/serialize.hpp"
#include "iasi/sparing.hpp"

namespace iasi {

namespace {

using Task = std::function<AuditRow()>;

std::vector<AuditRow> run_tasks(const std::vector<Task>& tasks, unsigned workers) {
  std::vector<AuditRow> rows(tasks.size());
  auto timed = [&](std::size_t i) {
    const auto start = std::chrono::steady_clock::now();
    rows[i] = tasks[i]();
    const auto stop = std::chrono::steady_clock::now();
    rows[i].runtime_ms = static_cast<std::uint64_t>(
        std::chrono::duration_cast<std::chrono::milliseconds>(stop - start).count());
  };
  workers = std::max(1u, std::min<unsigned>(workers, static_cast<unsigned>(tasks.size())));
  if (workers <= 1) {
    for (std::size_t i = 0; i < tasks.size(); ++i) timed(i);
    return rows;
  }
  std::atomic<std::size_t> next{0};
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < tasks.size(); i = next++) {
        try {
          timed(i);
        } catch (...) {
          std::lock_guard lock(failure_mutex);
          if (!failure) failure = std::current_exception();
        }
      }
    });
  }
  for (auto& t : pool) t.join();
  if (failure) std::rethrow_exception(failure);
  return rows;
}

std::string params_text(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += ';';
    out += k + "=" + std::to_string(v);
  }
  return out;
}

std::string params_key(const Params& p) {
  std::string out;
  for (const auto& [k, v] : p) {
    if (!out.empty()) out += '_';
    out += k + std::to_string(v);
  }
  return out;
}

std::uint64_t oracle_phi(const Graph& g) { return sparing(g).phi; }

Verdict compare(const std::optional<std::uint64_t>& formula, std::uint64_t oracle) {
  if (!formula) return Verdict::kFormulaRefused;
  return *formula == oracle ? Verdict::kMatch : Verdict::kMismatch;
}

struct FamilyInstance {
  FamilySpec spec;
  Params params;
  std::string desc;
};

std::string spec_desc(const FamilySpec& s) {
  std::string out(family_name(s.family));
  out += '(';
  if (family_uses_m(s.family)) out += "m=" + std::to_string(s.m);
  if (family_uses_m(s.family) && family_uses_n(s.family)) out += ',';
  if (family_uses_n(s.family)) out += "n=" + std::to_string(s.n);
  return out + ')';
}

// Parameter tuples inside each formula's hypotheses, ordered by (m, n).
std::vector<FamilyInstance> instances_for(FormulaId id, std::uint64_t max_v) {
  std::vector<FamilyInstance> out;
  auto add = [&](FamilySpec spec, Params params) {
    out.push_back({spec, std::move(params), spec_desc(spec)});
  };
  auto two_param = [&](std::uint64_t min_m, std::uint64_t min_n, auto vertices, auto make) {
    for (std::uint64_t m = min_m; vertices(m, min_n) <= max_v; ++m) {
      for (std::uint64_t n = min_n; vertices(m, n) <= max_v; ++n) add(make(m, n), {{"m", m}, {"n", n}});
    }
  };
  switch (id) {
    case FormulaId::kCycle:
      for (std::uint64_t n = 3; n <= max_v; ++n) add(FamilySpec::cycle(n), {{"n", n}});
      break;
    case FormulaId::kComplete:
      for (std::uint64_t n = 2; n <= max_v; ++n) add(FamilySpec::complete(n), {{"n", n}});
      break;
    case FormulaId::kBipartite:
      for (std::uint64_t len = 1; len + 1 <= max_v; ++len) add(FamilySpec::path(len), {{"len", len}});
      for (std::uint64_t n = 4; n <= max_v; n += 2) add(FamilySpec::cycle(n), {{"n", n}});
      break;
    case FormulaId::kFan:
      two_param(2, 2, [](auto m, auto n) { return m + n + 1; }, FamilySpec::fan);
      break;
    case FormulaId::kCone:
      two_param(2, 3, [](auto m, auto n) { return m + n; }, FamilySpec::cone);
      break;
    case FormulaId::kTent:
      two_param(2, 3, [](auto m, auto n) { return m + n + 1; }, FamilySpec::tent);
      break;
    case FormulaId::kFriendship:
      for (std::uint64_t m = 2; 2 * m + 1 <= max_v; ++m) add(FamilySpec::friendship(m), {{"m", m}});
      break;
    case FormulaId::kPathFriendship:
      two_param(2, 2, [](auto m, auto n) { return 1 + m * (n + 1); }, FamilySpec::path_friendship);
      break;
    case FormulaId::kClosedFriendship:
      two_param(2, 3, [](auto m, auto n) { return 1 + m * n; }, FamilySpec::closed_friendship);
      break;
    case FormulaId::kWindmill:
      two_param(2, 2, [](auto m, auto n) { return 1 + m * n; }, FamilySpec::windmill);
      break;
    default:
      throw Error(ErrorCode::kInvalidArgument,
                  std::string(formula_name(id)) + " is not a family formula");
  }
  return out;
}

Params with_phis(Params p, std::uint64_t a, std::uint64_t b, std::uint64_t c) {
  p["phi1"] = a;
  p["phi2"] = b;
  p["phi_cap"] = c;
  return p;
}

}  // namespace

std::string_view verdict_name(Verdict v) noexcept {
  switch (v) {
    case Verdict::kMatch: return "match";
    case Verdict::kMismatch: return "mismatch";
    case Verdict::kFormulaRefused: return "formula_refused";
  }
  return "unknown";
}

std::string_view identity_name(IdentityKind k) noexcept {
  switch (k) {
    case IdentityKind::kUnion: return "union_identity";
    case IdentityKind::kRingsum: return "ringsum_identity";
    case IdentityKind::kComplement: return "complement_identity";
  }
  return "unknown";
}

std::set<FormulaId> family_formulas() {
  return {FormulaId::kCycle,      FormulaId::kComplete,        FormulaId::kBipartite,
          FormulaId::kFan,        FormulaId::kCone,            FormulaId::kTent,
          FormulaId::kFriendship, FormulaId::kPathFriendship,  FormulaId::kClosedFriendship,
          FormulaId::kWindmill};
}

std::vector<AuditRow> audit_families(std::size_t max_vertices, const std::set<FormulaId>& families,
                                     const AuditOptions& opts) {
  if (max_vertices > kMaxSolverVertices) {
    throw Error(ErrorCode::kTooLarge, "max_vertices exceeds the solver limit of " +
                                          std::to_string(kMaxSolverVertices));
  }
  std::vector<Task> tasks;
  for (FormulaId id : families) {
    for (auto& inst : instances_for(id, max_vertices)) {
      tasks.push_back([id, inst] {
        AuditRow row;
        row.family = std::string(formula_name(id));
        row.key = row.family + "_" + params_key(inst.params);
        row.instance_desc = inst.desc;
        row.params = inst.params;
        Graph g = gen_family(inst.spec);
        try {
          row.formula_value = phi_formula(id, inst.params);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::kParamOutOfRange) throw;
        }
        row.oracle_value = oracle_phi(g);
        row.verdict = compare(row.formula_value, row.oracle_value);
        row.operands.push_back(std::move(g));
        return row;
      });
    }
  }
  return run_tasks(tasks, opts.workers);
}

std::vector<AuditRow> audit_identity(IdentityKind which, const std::vector<GraphPair>& instances,
                                     std::string_view family_label, const AuditOptions& opts) {
  const std::string family(family_label.empty() ? identity_name(which) : family_label);
  std::vector<Task> tasks;
  for (const auto& pair : instances) {
    tasks.push_back([which, family, pair] {
      AuditRow row;
      row.family = family;
      row.key = family + "_" + pair.key;
      row.operands = {pair.first, pair.second};
      const auto phi1 = oracle_phi(pair.first);
      const auto phi2 = oracle_phi(pair.second);
      Graph composed;
      std::uint64_t phi_cap = 0;
      if (which == IdentityKind::kComplement) {
        composed = subtract(pair.first, pair.second);
        row.params = pair.params;
        row.params["phi_g"] = phi1;
        row.params["phi_h"] = phi2;
      } else {
        phi_cap = oracle_phi(graph_intersection(pair.first, pair.second));
        composed = which == IdentityKind::kUnion ? graph_union(pair.first, pair.second)
                                                 : ring_sum(pair.first, pair.second);
        row.params = with_phis(pair.params, phi1, phi2, phi_cap);
      }
      try {
        switch (which) {
          case IdentityKind::kUnion:
            row.formula_value = phi_union_identity(phi1, phi2, phi_cap);
            break;
          case IdentityKind::kRingsum:
            row.formula_value = phi_ringsum_identity(phi1, phi2, phi_cap);
            break;
          case IdentityKind::kComplement:
            row.formula_value = phi_complement_identity(phi1, phi2);
            break;
        }
      } catch (const Error& e) {
        if (e.code() != ErrorCode::kNegativeResult) throw;
      }
      row.oracle_value = oracle_phi(composed);
      row.verdict = compare(row.formula_value, row.oracle_value);
      row.instance_desc = pair.desc;
      return row;
    });
  }
  return run_tasks(tasks, opts.workers);
}

GraphPair named_counterexample(IdentityKind which) {
  auto triangle = [](const char* x, const char* y, const char* z) {
    return Graph::make({VertexId(x), VertexId(y), VertexId(z)},
                       {{VertexId(x), VertexId(y)}, {VertexId(y), VertexId(z)}, {VertexId(x), VertexId(z)}});
  };
  if (which == IdentityKind::kComplement) {
    Graph k3 = triangle("a", "b", "c");
    Graph p2 = Graph::make({VertexId("a"), VertexId("b"), VertexId("c")},
                           {{VertexId("a"), VertexId("b")}, {VertexId("b"), VertexId("c")}});
    return {"k3_minus_p2", "K3 on {a,b,c} with H = path a-b-c", {}, std::move(k3), std::move(p2)};
  }
  return {"diamond", "K3 on {a,b,c} and K3 on {a,b,d} (shared edge ab)", {},
          triangle("a", "b", "c"), triangle("a", "b", "d")};
}

std::vector<GraphPair> vertex_disjoint_pairs() {
  const std::vector<std::pair<std::string, FamilySpec>> pool = {
      {"C3", FamilySpec::cycle(3)},    {"C4", FamilySpec::cycle(4)},
      {"C5", FamilySpec::cycle(5)},    {"C6", FamilySpec::cycle(6)},
      {"K3", FamilySpec::complete(3)}, {"K4", FamilySpec::complete(4)},
  };
  std::vector<GraphPair> out;
  for (std::size_t i = 0; i < pool.size(); ++i) {
    for (std::size_t j = i; j < pool.size(); ++j) {
      out.push_back({pool[i].first + "_" + pool[j].first,
                     pool[i].first + " and " + pool[j].first + " (vertex-disjoint)",
                     {{"first", i}, {"second", j}},
                     relabel(gen_family(pool[i].second), "x_"),
                     relabel(gen_family(pool[j].second), "y_")});
    }
  }
  return out;
}

Graph random_graph(std::size_t n, unsigned p_percent, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::set<VertexId> vs;
  std::vector<VertexId> names;
  for (std::size_t i = 0; i < n; ++i) {
    names.emplace_back("v" + std::to_string(i));
    vs.insert(names.back());
  }
  std::set<Edge> es;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      if (rng() % 100 < p_percent) es.emplace(names[i], names[j]);
    }
  }
  return Graph::from_sets(std::move(vs), es);
}

std::vector<GraphPair> random_pairs(IdentityKind which, std::size_t trials, std::uint64_t seed) {
  static constexpr unsigned kDensities[] = {20, 40, 60};
  std::vector<GraphPair> out;
  for (std::size_t t = 0; t < trials; ++t) {
    const std::uint64_t s = seed + t;
    std::mt19937_64 rng(s);
    const std::size_t n = 4 + rng() % 6;
    const unsigned p = kDensities[t % 3];
    Graph first = random_graph(n, p, rng());
    Graph second;
    if (which == IdentityKind::kComplement) {
      std::set<Edge> kept;
      for (auto& e : first.edges()) {
        if (rng() % 2 == 0) kept.insert(std::move(e));
      }
      second = Graph::from_sets(first.vertex_set(), kept);
    } else {
      second = random_graph(n, p, rng());
    }
    out.push_back({"seed" + std::to_string(s),
                   "G(" + std::to_string(n) + ", " + std::to_string(p) + "%) seed " + std::to_string(s),
                   {{"n", n}, {"p_pct", p}, {"seed", s}},
                   std::move(first),
                   std::move(second)});
  }
  return out;
}

std::vector<AuditRow> audit_identities(std::size_t trials, std::uint64_t seed, const AuditOptions& opts) {
  std::vector<AuditRow> rows;
  auto append = [&rows](std::vector<AuditRow> more) {
    rows.insert(rows.end(), std::make_move_iterator(more.begin()), std::make_move_iterator(more.end()));
  };
  for (IdentityKind kind : {IdentityKind::kUnion, IdentityKind::kRingsum, IdentityKind::kComplement}) {
    std::vector<GraphPair> instances = {named_counterexample(kind)};
    auto random = random_pairs(kind, trials, seed);
    instances.insert(instances.end(), random.begin(), random.end());
    append(audit_identity(kind, instances, {}, opts));
    if (kind != IdentityKind::kComplement) {
      append(audit_identity(kind, vertex_disjoint_pairs(),
                            std::string(identity_name(kind)) + "_disjoint", opts));
    }
  }
  return rows;
}

std::pair<Graph, Graph> overlapping_cycles(std::uint64_t m, std::uint64_t n, std::uint64_t shared) {
  ringsum_cycles_predict(m, n, shared);  // validates the triple
  if (shared == 0) {
    return {relabel(gen_family(FamilySpec::cycle(m)), "a_"),
            relabel(gen_family(FamilySpec::cycle(n)), "b_")};
  }
  // Common path s0..s_shared, closed by a private section through the
  // cycle's own vertices (a direct edge when the section has length 1).
  auto build = [shared](std::uint64_t length, const std::string& stem) {
    std::vector<VertexId> ring;
    for (std::uint64_t i = 0; i <= shared; ++i) ring.emplace_back("s" + std::to_string(i));
    for (std::uint64_t i = 1; i < length - shared; ++i) ring.emplace_back(stem + std::to_string(i));
    std::set<Edge> es;
    for (std::size_t i = 0; i < ring.size(); ++i) es.emplace(ring[i], ring[(i + 1) % ring.size()]);
    return Graph::from_sets({ring.begin(), ring.end()}, es);
  };
  return {build(m, "a"), build(n, "b")};
}

std::vector<AuditRow> audit_ringsum_cycles(std::size_t max_cycle, const AuditOptions& opts) {
  if (max_cycle > 12) throw Error(ErrorCode::kTooLarge, "max_cycle is limited to 12");
  std::vector<Task> tasks;
  for (std::uint64_t m = 3; m <= max_cycle; ++m) {
    for (std::uint64_t n = m; n <= max_cycle; ++n) {
      for (std::uint64_t shared = 0; shared < m; ++shared) {
        if (m == n && shared == m - 1) continue;
        tasks.push_back([m, n, shared] {
          const auto prediction = ringsum_cycles_predict(m, n, shared);
          auto [a, b] = overlapping_cycles(m, n, shared);
          Graph result = ring_sum(a, b);
          AuditRow row;
          row.family = "ringsum_cycles";
          row.params = {{"m", m}, {"n", n}, {"shared", shared}};
          row.key = row.family + "_" + params_key(row.params);
          row.formula_value = prediction.phi;
          row.oracle_value = oracle_phi(result);

          // Every weak IASI of a union of cycles has mono count equal to
          // |E| - 2|S| for its support S, so all supports share one parity.
          const auto parity_of = [](std::uint64_t x) { return x % 2 == 0 ? Parity::kEven : Parity::kOdd; };
          bool parity_holds = parity_of(row.oracle_value) == prediction.mono_parity;
          const std::uint64_t edges = result.size();
          std::vector<std::uint64_t> degree(result.order());
          for (std::size_t i = 0; i < result.order(); ++i) degree[i] = result.degree(i);
          for_each_independent_set(result, [&](std::uint64_t s) {
            std::uint64_t covered = 0;
            for (std::uint64_t r = s; r; r &= r - 1) covered += degree[std::countr_zero(r)];
            if (parity_of(edges - covered) != prediction.mono_parity) parity_holds = false;
          });
          row.params["parity_ok"] = parity_holds ? 1 : 0;
          row.verdict = parity_holds ? compare(row.formula_value, row.oracle_value) : Verdict::kMismatch;
          row.instance_desc = "C" + std::to_string(m) + " (+) C" + std::to_string(n) + " sharing " +
                              std::to_string(shared) + " edge(s): " + std::to_string(result.order()) +
                              " vertices, " + std::to_string(edges) + " edges, predicted parity " +
                              std::string(parity_name(prediction.mono_parity));
          row.operands = {std::move(a), std::move(b)};
          return row;
        });
      }
    }
  }
  return run_tasks(tasks, opts.workers);
}

std::string report_csv(const std::vector<AuditRow>& rows, bool with_timing) {
  std::string out = "family,params,formula,oracle,verdict,runtime_ms\n";
  for (const auto& r : rows) {
    out += r.family + ',' + params_text(r.params) + ',' +
           (r.formula_value ? std::to_string(*r.formula_value) : std::string("NA")) + ',' +
           std::to_string(r.oracle_value) + ',' + std::string(verdict_name(r.verdict)) + ',' +
           std::to_string(with_timing ? r.runtime_ms : 0) + '\n';
  }
  return out;
}

std::string report_markdown(const std::vector<AuditRow>& rows) {
  std::vector<std::string> order;
  for (const auto& r : rows) {
    if (std::find(order.begin(), order.end(), r.family) == order.end()) order.push_back(r.family);
  }
  std::ostringstream out;
  out << "# Sparing number audit\n";
  for (const auto& family : order) {
    std::size_t count = 0;
    std::size_t mismatches = 0;
    out << "\n## " << family << "\n\n"
        << "| instance | params | formula | oracle | verdict |\n"
        << "|---|---|---|---|---|\n";
    for (const auto& r : rows) {
      if (r.family != family) continue;
      ++count;
      if (r.verdict == Verdict::kMismatch) ++mismatches;
      out << "| " << r.instance_desc << " | " << params_text(r.params) << " | "
          << (r.formula_value ? std::to_string(*r.formula_value) : std::string("NA")) << " | "
          << r.oracle_value << " | " << verdict_name(r.verdict) << " |\n";
    }
    out << "\n" << count << " rows, " << mismatches << " mismatches\n";
  }
  return out.str();
}

std::vector<std::filesystem::path> archive_counterexamples(const std::vector<AuditRow>& rows,
                                                           const std::filesystem::path& dir) {
  std::vector<std::filesystem::path> written;
  std::error_code ec;
  std::filesystem::create_directories(dir, ec);
  if (ec) throw Error(ErrorCode::kIo, "cannot create " + dir.string() + ": " + ec.message());
  for (const auto& r : rows) {
    if (r.verdict != Verdict::kMismatch) continue;
    Json params = Json::object();
    for (const auto& [k, v] : r.params) params[k] = v;
    Json operands = Json::array();
    for (const auto& g : r.operands) operands.push_back(graph_to_json(g));
    Json doc = {
        {"family", r.family},
        {"instance", r.instance_desc},
        {"params", std::move(params)},
        {"formula", r.formula_value ? Json(*r.formula_value) : Json(nullptr)},
        {"oracle", r.oracle_value},
        {"operands", std::move(operands)},
    };
    auto path = dir / (r.key + ".json");
    std::ofstream file(path, std::ios::binary);
    if (!file) throw Error(ErrorCode::kIo, "cannot write " + path.string());
    file << dump_canonical(doc);
    written.push_back(std::move(path));
  }
  return written;
}

}  // namespace iasi
