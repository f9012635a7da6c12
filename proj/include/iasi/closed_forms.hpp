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

#ifndef IASI_CLOSED_FORMS_HPP_
#define IASI_CLOSED_FORMS_HPP_

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>

namespace iasi {

// Published sparing-number values and identities, encoded literally. These
// functions are claims, not truths; audit.hpp checks them against the solver.
enum class FormulaId {
  kCycle,
  kComplete,
  kBipartite,
  kFan,
  kCone,
  kTent,
  kFriendship,
  kPathFriendship,
  kClosedFriendship,
  kWindmill,
  kUnionIdentity,
  kRingsumIdentity,
  kComplementIdentity,
  kRingsumCycles,
};

std::string_view formula_name(FormulaId id) noexcept;
std::optional<FormulaId> parse_formula(std::string_view name) noexcept;

using Params = std::map<std::string, std::uint64_t>;

// Family formulas, keyed by "m" and "n" as in the family generators.
// Outside each formula's hypotheses (m, n > 1; n >= 3 for cycles) this
// throws ParamOutOfRange instead of extrapolating. Identity ids throw
// InvalidArgument.
//
//   cycle             n mod 2
//   complete          (n-1)(n-2)/2
//   bipartite         0
//   fan               n
//   cone              n
//   tent              2n
//   friendship        m
//   path_friendship   m * floor((n+1)/2)
//   closed_friendship m * ceil(n/2)
//   windmill          m * n(n-1)/2
std::uint64_t phi_formula(FormulaId id, const Params& params);

// phi1 + phi2 - phi_cap. NegativeResult when phi_cap > phi1 + phi2.
std::uint64_t phi_union_identity(std::uint64_t phi1, std::uint64_t phi2, std::uint64_t phi_cap);

// phi1 + phi2 - 2 phi_cap. NegativeResult when negative.
std::uint64_t phi_ringsum_identity(std::uint64_t phi1, std::uint64_t phi2, std::uint64_t phi_cap);

// phi_g - phi_h. NegativeResult when phi_h > phi_g.
std::uint64_t phi_complement_identity(std::uint64_t phi_g, std::uint64_t phi_h);

enum class Parity { kEven, kOdd };
std::string_view parity_name(Parity p) noexcept;

struct CyclePrediction {
  std::uint64_t phi;
  Parity mono_parity;

  friend bool operator==(const CyclePrediction&, const CyclePrediction&) = default;
};

// Ring sum of C_m and C_n sharing `shared` consecutive edges (0: edge
// disjoint). Requires m, n >= 3 and shared < min(m, n); m == n with
// shared == m - 1 would make the cycles identical and is rejected.
CyclePrediction ringsum_cycles_predict(std::uint64_t m, std::uint64_t n, std::uint64_t shared);

}  // namespace iasi

#endif  // IASI_CLOSED_FORMS_HPP_
