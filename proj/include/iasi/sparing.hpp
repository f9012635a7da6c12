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

#ifndef IASI_SPARING_HPP_
#define IASI_SPARING_HPP_

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <set>
#include <string_view>

#include "iasi/graph.hpp"
#include "iasi/labeling.hpp"

namespace iasi {

// Vertices designated to carry non-singleton labels. In any weak IASI the
// non-singleton vertices form an independent set, and conversely every
// independent set is realised by construct_weak_iasi(). The sparing number
// is therefore
//
//     phi(G) = min over independent S of |{uv in E : u, v not in S}|
//
// and both solvers compute exactly that quantity.
using Support = std::set<VertexId>;

enum class Algorithm { kExhaustive, kBranchBound };

std::string_view algorithm_name(Algorithm a) noexcept;  // "exhaustive" / "bb"
std::optional<Algorithm> parse_algorithm(std::string_view name) noexcept;

struct SparingResult {
  std::uint64_t phi = 0;
  Support witness;
  std::set<Edge> mono_edges;  // edges with both endpoints outside witness
  std::optional<Labeling> labeling;
  Algorithm algorithm = Algorithm::kExhaustive;
};

inline constexpr std::size_t kDefaultExhaustiveCap = 22;
inline constexpr std::size_t kAutoExhaustiveLimit = 16;
// Both solvers use one machine word per vertex neighbourhood.
inline constexpr std::size_t kMaxSolverVertices = 64;

bool is_independent(const Graph& g, const Support& s);

// Edges with no endpoint in s. Throws UnknownVertex for names outside g.
std::set<Edge> uncovered_edges(const Graph& g, const Support& s);

// Enumerates every independent set over all vertices by backtracking; the
// exact optimum with the lexicographically smallest optimal witness
// (compared as sorted name sequences). Throws TooLarge above `cap`.
SparingResult phi_exhaustive(const Graph& g, std::size_t cap = kDefaultExhaustiveCap);

// Branch and bound on the highest-degree undecided vertex. Returns some
// optimal witness; with `canonicalize` a second constrained search
// re-derives the lexicographically smallest one. Throws TooLarge above
// kMaxSolverVertices.
SparingResult phi_branch_bound(const Graph& g, bool canonicalize = false);

// Positional base-4 construction. With v_0 < v_1 < ... in name order,
// v_k outside s gets {4^k} and v_k in s gets {0, 4^k, 2*4^k}. No carries
// occur in any edge sumset, so the result is an IASI, it is weak, and its
// mono-indexed edges are exactly the uncovered edges of s.
// Throws NotIndependent, UnknownVertex, CapacityExceeded (more than 32
// vertices).
Labeling construct_weak_iasi(const Graph& g, const Support& s);

struct SparingOptions {
  std::optional<Algorithm> algorithm;  // unset: exhaustive up to kAutoExhaustiveLimit vertices
  bool with_labeling = false;
  bool canonical_witness = false;
  std::size_t exhaustive_cap = kDefaultExhaustiveCap;
};

SparingResult sparing(const Graph& g, const SparingOptions& opts = {});

// Calls visit(mask) for every independent set, bit i standing for
// g.vertices()[i]. Throws TooLarge above kMaxSolverVertices.
void for_each_independent_set(const Graph& g,
                              const std::function<void(std::uint64_t)>& visit);

}  // namespace iasi

#endif  // IASI_SPARING_HPP_
