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

#include "iasi/sparing.hpp"

#include <algorithm>
#include <bit>
#include <limits>
#include <vector>

#include "iasi/error.hpp"

namespace iasi {

namespace {

using Mask = std::uint64_t;

constexpr Mask bit(std::size_t i) { return Mask{1} << i; }

// Bits [0, i).
constexpr Mask below(std::size_t i) { return i >= 64 ? ~Mask{0} : bit(i) - 1; }

struct BitGraph {
  std::size_t n = 0;
  std::uint64_t m = 0;
  Mask all = 0;
  std::vector<Mask> adj;
  std::vector<std::uint64_t> deg;
};

BitGraph to_bits(const Graph& g, std::size_t cap) {
  if (g.order() > cap) {
    throw Error(ErrorCode::kTooLarge, "graph has " + std::to_string(g.order()) +
                                          " vertices; limit is " + std::to_string(cap));
  }
  BitGraph b;
  b.n = g.order();
  b.m = g.size();
  b.all = below(b.n);
  b.adj.assign(b.n, 0);
  b.deg.assign(b.n, 0);
  for (const auto& [i, j] : g.index_edges()) {
    b.adj[i] |= bit(j);
    b.adj[j] |= bit(i);
  }
  for (std::size_t i = 0; i < b.n; ++i) b.deg[i] = std::popcount(b.adj[i]);
  return b;
}

std::size_t lowest(Mask s) { return static_cast<std::size_t>(std::countr_zero(s)); }

// Uncovered edges of an independent set: every covered edge has exactly one
// endpoint in s, so the count is |E| minus the degree sum.
std::uint64_t uncovered_count(const BitGraph& g, Mask s) {
  std::uint64_t covered = 0;
  for (Mask r = s; r; r &= r - 1) covered += g.deg[lowest(r)];
  return g.m - covered;
}

// Compares the sorted member sequences of a and b.
bool lex_less(Mask a, Mask b) {
  while (a && b) {
    auto x = lowest(a);
    auto y = lowest(b);
    if (x != y) return x < y;
    a &= a - 1;
    b &= b - 1;
  }
  return !a && b;
}

Mask neighbourhood(const BitGraph& g, Mask s) {
  Mask out = 0;
  for (Mask r = s; r; r &= r - 1) out |= g.adj[lowest(r)];
  return out;
}

template <typename Visit>
void enumerate_independent(const BitGraph& g, std::size_t i, Mask s, Visit& visit) {
  if (i == g.n) {
    visit(s);
    return;
  }
  enumerate_independent(g, i + 1, s, visit);
  if (!(g.adj[i] & s)) enumerate_independent(g, i + 1, s | bit(i), visit);
}

class BranchAndBound {
 public:
  explicit BranchAndBound(const BitGraph& g) : g_(g) {}

  // Minimises over independent completions of `in` that avoid `out`.
  // With a target, stops at the first completion of value <= target and
  // only explores nodes whose bound does not exceed it.
  std::optional<Mask> solve(Mask in, Mask out, std::uint64_t incumbent_value,
                            std::optional<Mask> incumbent, std::optional<std::uint64_t> target) {
    best_value_ = incumbent_value;
    best_ = incumbent;
    target_ = target;
    done_ = false;
    search(in, out | neighbourhood(g_, in));
    return best_;
  }

  std::uint64_t best_value() const { return best_value_; }

 private:
  void search(Mask in, Mask out) {
    if (done_) return;
    Mask undecided = g_.all & ~in & ~out;

    // A free vertex with no free neighbour can always join the support.
    for (Mask r = undecided; r; r &= r - 1) {
      auto v = lowest(r);
      if (!(g_.adj[v] & undecided)) {
        in |= bit(v);
        out |= g_.adj[v] & undecided;
      }
    }
    undecided = g_.all & ~in & ~out;
    const Mask rest = undecided | out;

    if (!undecided) {
      record(in, uncovered_count(g_, in));
      return;
    }
    if (lower_bound(undecided, out, rest) >= best_value_) return;

    std::size_t branch = lowest(undecided);
    std::uint64_t branch_deg = 0;
    for (Mask r = undecided; r; r &= r - 1) {
      auto v = lowest(r);
      auto d = static_cast<std::uint64_t>(std::popcount(g_.adj[v] & rest));
      if (d > branch_deg) {
        branch = v;
        branch_deg = d;
      }
    }
    search(in | bit(branch), out | (g_.adj[branch] & undecided));
    search(in, out | bit(branch));
  }

  void record(Mask in, std::uint64_t value) {
    if (value < best_value_) {
      best_value_ = value;
      best_ = in;
      if (target_ && value <= *target_) done_ = true;
    }
  }

  // max(edges with both ends already excluded,
  //     |E(rest)| - sum over a greedy clique cover of the undecided
  //     vertices of the largest rest-degree in each clique).
  // At most one vertex per clique can join the support, and a support
  // vertex covers exactly its rest-degree worth of edges.
  std::uint64_t lower_bound(Mask undecided, Mask out, Mask rest) const {
    std::uint64_t forced2 = 0;
    std::uint64_t rest2 = 0;
    for (Mask r = rest; r; r &= r - 1) {
      auto v = lowest(r);
      rest2 += std::popcount(g_.adj[v] & rest);
      if (out & bit(v)) forced2 += std::popcount(g_.adj[v] & out);
    }
    const std::uint64_t forced = forced2 / 2;
    const std::uint64_t rest_edges = rest2 / 2;

    std::uint64_t coverable = 0;
    Mask unassigned = undecided;
    while (unassigned) {
      // Seed each clique with the largest rest-degree vertex left.
      std::size_t seed = lowest(unassigned);
      auto seed_deg = static_cast<std::uint64_t>(std::popcount(g_.adj[seed] & rest));
      for (Mask r = unassigned & (unassigned - 1); r; r &= r - 1) {
        auto v = lowest(r);
        auto d = static_cast<std::uint64_t>(std::popcount(g_.adj[v] & rest));
        if (d > seed_deg) {
          seed = v;
          seed_deg = d;
        }
      }
      coverable += seed_deg;
      unassigned &= ~bit(seed);
      Mask candidates = unassigned & g_.adj[seed];
      while (candidates) {
        auto v = lowest(candidates);
        unassigned &= ~bit(v);
        candidates &= g_.adj[v] & ~bit(v);
      }
      if (coverable >= rest_edges) break;
    }
    const std::uint64_t cover_bound = rest_edges > coverable ? rest_edges - coverable : 0;
    return std::max(forced, cover_bound);
  }

  const BitGraph& g_;
  std::uint64_t best_value_ = 0;
  std::optional<Mask> best_;
  std::optional<std::uint64_t> target_;
  bool done_ = false;
};

Mask greedy_support(const BitGraph& g) {
  Mask s = 0;
  Mask free = g.all;
  while (free) {
    std::size_t pick = lowest(free);
    for (Mask r = free; r; r &= r - 1) {
      auto v = lowest(r);
      if (g.deg[v] > g.deg[pick]) pick = v;
    }
    s |= bit(pick);
    free &= ~(bit(pick) | g.adj[pick]);
  }
  return s;
}

// Smallest optimal support in sorted-sequence order, given the optimum.
// Grows the answer one member at a time: stop as soon as the prefix itself
// is optimal, otherwise take the smallest next vertex that still admits an
// optimal completion.
Mask canonical_support(const BitGraph& g, std::uint64_t phi) {
  Mask prefix = 0;
  std::size_t next = 0;
  while (uncovered_count(g, prefix) != phi) {
    bool extended = false;
    for (std::size_t j = next; j < g.n && !extended; ++j) {
      if (g.adj[j] & prefix) continue;
      const Mask in = prefix | bit(j);
      const Mask out = below(j) & ~prefix;
      BranchAndBound bb(g);
      if (bb.solve(in, out, phi + 1, std::nullopt, phi)) {
        prefix = in;
        next = j + 1;
        extended = true;
      }
    }
    if (!extended) throw Error(ErrorCode::kInternal, "canonical support search failed");
  }
  return prefix;
}

Mask support_mask(const Graph& g, const Support& s) {
  Mask out = 0;
  for (const auto& v : s) {
    auto i = g.index_of(v);
    if (!i) throw Error(ErrorCode::kUnknownVertex, "support vertex '" + v.str() + "' is not in the graph");
    out |= bit(*i);
  }
  return out;
}

SparingResult make_result(const Graph& g, const BitGraph& b, Mask s, Algorithm algorithm) {
  SparingResult r;
  r.algorithm = algorithm;
  r.phi = uncovered_count(b, s);
  const auto vertices = g.vertices();
  for (Mask rem = s; rem; rem &= rem - 1) r.witness.insert(vertices[lowest(rem)]);
  for (const auto& [i, j] : g.index_edges()) {
    if (!(s & (bit(i) | bit(j)))) r.mono_edges.emplace(vertices[i], vertices[j]);
  }
  return r;
}

}  // namespace

std::string_view algorithm_name(Algorithm a) noexcept {
  return a == Algorithm::kExhaustive ? "exhaustive" : "bb";
}

std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept {
  if (name == "exhaustive") return Algorithm::kExhaustive;
  if (name == "bb" || name == "branch_bound") return Algorithm::kBranchBound;
  return std::nullopt;
}

bool is_independent(const Graph& g, const Support& s) {
  for (const auto& e : g.edges()) {
    if (s.contains(e.u) && s.contains(e.v)) return false;
  }
  return true;
}

std::set<Edge> uncovered_edges(const Graph& g, const Support& s) {
  for (const auto& v : s) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::kUnknownVertex, "support vertex '" + v.str() + "' is not in the graph");
    }
  }
  std::set<Edge> out;
  for (auto& e : g.edges()) {
    if (!s.contains(e.u) && !s.contains(e.v)) out.insert(std::move(e));
  }
  return out;
}

SparingResult phi_exhaustive(const Graph& g, std::size_t cap) {
  const BitGraph b = to_bits(g, std::min(cap, kMaxSolverVertices));
  Mask best = 0;
  std::uint64_t best_value = std::numeric_limits<std::uint64_t>::max();
  auto visit = [&](Mask s) {
    const auto value = uncovered_count(b, s);
    if (value < best_value || (value == best_value && lex_less(s, best))) {
      best_value = value;
      best = s;
    }
  };
  enumerate_independent(b, 0, 0, visit);
  return make_result(g, b, best, Algorithm::kExhaustive);
}

SparingResult phi_branch_bound(const Graph& g, bool canonicalize) {
  const BitGraph b = to_bits(g, kMaxSolverVertices);
  const Mask greedy = greedy_support(b);
  BranchAndBound bb(b);
  Mask best = *bb.solve(0, 0, uncovered_count(b, greedy), greedy, std::nullopt);
  if (canonicalize) best = canonical_support(b, uncovered_count(b, best));
  return make_result(g, b, best, Algorithm::kBranchBound);
}

Labeling construct_weak_iasi(const Graph& g, const Support& s) {
  support_mask(g, s);
  if (!is_independent(g, s)) {
    throw Error(ErrorCode::kNotIndependent, "support is not an independent set");
  }
  constexpr Element kBase = 4;
  // 2 * 4^31 = 2^63 is the largest element needed for 32 vertices.
  constexpr std::size_t kMaxVertices = 32;
  if (g.order() > kMaxVertices) {
    throw Error(ErrorCode::kCapacityExceeded,
                "positional labels for " + std::to_string(g.order()) +
                    " vertices exceed 64-bit elements (limit " + std::to_string(kMaxVertices) + ")");
  }
  Labeling f;
  Element power = 1;
  const auto vertices = g.vertices();
  for (std::size_t k = 0; k < vertices.size(); ++k) {
    if (s.contains(vertices[k])) {
      f.emplace(vertices[k], SetLabel{0, power, 2 * power});
    } else {
      f.emplace(vertices[k], SetLabel{power});
    }
    if (k + 1 < vertices.size()) power *= kBase;
  }
  return f;
}

SparingResult sparing(const Graph& g, const SparingOptions& opts) {
  const Algorithm algorithm = opts.algorithm.value_or(
      g.order() <= kAutoExhaustiveLimit ? Algorithm::kExhaustive : Algorithm::kBranchBound);
  SparingResult r = algorithm == Algorithm::kExhaustive
                        ? phi_exhaustive(g, opts.exhaustive_cap)
                        : phi_branch_bound(g, opts.canonical_witness);
  if (opts.with_labeling) r.labeling = construct_weak_iasi(g, r.witness);
  return r;
}

void for_each_independent_set(const Graph& g, const std::function<void(std::uint64_t)>& visit) {
  const BitGraph b = to_bits(g, kMaxSolverVertices);
  auto call = [&](Mask s) { visit(s); };
  enumerate_independent(b, 0, 0, call);
}

}  // namespace iasi
