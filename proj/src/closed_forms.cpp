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

#include "iasi/closed_forms.hpp"

#include <array>
#include <limits>
#include <utility>

#include "iasi/error.hpp"

namespace iasi {

namespace {

constexpr std::array<std::pair<FormulaId, std::string_view>, 14> kNames = {{
    {FormulaId::kCycle, "cycle"},
    {FormulaId::kComplete, "complete"},
    {FormulaId::kBipartite, "bipartite"},
    {FormulaId::kFan, "fan"},
    {FormulaId::kCone, "cone"},
    {FormulaId::kTent, "tent"},
    {FormulaId::kFriendship, "friendship"},
    {FormulaId::kPathFriendship, "path_friendship"},
    {FormulaId::kClosedFriendship, "closed_friendship"},
    {FormulaId::kWindmill, "windmill"},
    {FormulaId::kUnionIdentity, "union_identity"},
    {FormulaId::kRingsumIdentity, "ringsum_identity"},
    {FormulaId::kComplementIdentity, "complement_identity"},
    {FormulaId::kRingsumCycles, "ringsum_cycles"},
}};

std::uint64_t mul(std::uint64_t a, std::uint64_t b) {
  if (a != 0 && b > std::numeric_limits<std::uint64_t>::max() / a) {
    throw Error(ErrorCode::kCapacityExceeded, "formula value exceeds 64 bits");
  }
  return a * b;
}

std::uint64_t param(FormulaId id, const Params& p, const char* key, std::uint64_t min) {
  auto it = p.find(key);
  if (it == p.end()) {
    throw Error(ErrorCode::kParamOutOfRange,
                std::string(formula_name(id)) + ": missing parameter " + key);
  }
  if (it->second < min) {
    throw Error(ErrorCode::kParamOutOfRange, std::string(formula_name(id)) + ": " + key +
                                                 " must be >= " + std::to_string(min));
  }
  return it->second;
}

// n(n-1)/2 without overflowing the intermediate product.
std::uint64_t choose2(std::uint64_t n) {
  return n % 2 == 0 ? mul(n / 2, n - 1) : mul(n, (n - 1) / 2);
}

std::uint64_t checked_add(std::uint64_t a, std::uint64_t b) {
  if (a > std::numeric_limits<std::uint64_t>::max() - b) {
    throw Error(ErrorCode::kCapacityExceeded, "identity value exceeds 64 bits");
  }
  return a + b;
}

}  // namespace

std::string_view formula_name(FormulaId id) noexcept {
  for (const auto& [fid, name] : kNames) {
    if (fid == id) return name;
  }
  return "unknown";
}

std::optional<FormulaId> parse_formula(std::string_view name) noexcept {
  for (const auto& [fid, n] : kNames) {
    if (n == name) return fid;
  }
  return std::nullopt;
}

std::uint64_t phi_formula(FormulaId id, const Params& params) {
  switch (id) {
    case FormulaId::kCycle:
      return param(id, params, "n", 3) % 2;
    case FormulaId::kComplete: {
      auto n = param(id, params, "n", 2);
      return choose2(n - 1);
    }
    case FormulaId::kBipartite:
      return 0;
    case FormulaId::kFan:
      param(id, params, "m", 2);
      return param(id, params, "n", 2);
    case FormulaId::kCone:
      param(id, params, "m", 2);
      return param(id, params, "n", 3);
    case FormulaId::kTent:
      param(id, params, "m", 2);
      return mul(2, param(id, params, "n", 3));
    case FormulaId::kFriendship:
      return param(id, params, "m", 2);
    case FormulaId::kPathFriendship: {
      auto m = param(id, params, "m", 2);
      auto n = param(id, params, "n", 2);
      return mul(m, n / 2 + n % 2);  // floor((n+1)/2)
    }
    case FormulaId::kClosedFriendship: {
      auto m = param(id, params, "m", 2);
      auto n = param(id, params, "n", 3);
      return mul(m, n / 2 + n % 2);
    }
    case FormulaId::kWindmill: {
      auto m = param(id, params, "m", 2);
      auto n = param(id, params, "n", 2);
      return mul(m, choose2(n));
    }
    case FormulaId::kUnionIdentity:
    case FormulaId::kRingsumIdentity:
    case FormulaId::kComplementIdentity:
    case FormulaId::kRingsumCycles:
      break;
  }
  throw Error(ErrorCode::kInvalidArgument,
              std::string(formula_name(id)) + " is not a family formula");
}

std::uint64_t phi_union_identity(std::uint64_t phi1, std::uint64_t phi2, std::uint64_t phi_cap) {
  const auto sum = checked_add(phi1, phi2);
  if (phi_cap > sum) throw Error(ErrorCode::kNegativeResult, "union identity is negative");
  return sum - phi_cap;
}

std::uint64_t phi_ringsum_identity(std::uint64_t phi1, std::uint64_t phi2, std::uint64_t phi_cap) {
  const auto sum = checked_add(phi1, phi2);
  const auto twice = mul(2, phi_cap);
  if (twice > sum) throw Error(ErrorCode::kNegativeResult, "ring sum identity is negative");
  return sum - twice;
}

std::uint64_t phi_complement_identity(std::uint64_t phi_g, std::uint64_t phi_h) {
  if (phi_h > phi_g) throw Error(ErrorCode::kNegativeResult, "complement identity is negative");
  return phi_g - phi_h;
}

std::string_view parity_name(Parity p) noexcept { return p == Parity::kEven ? "even" : "odd"; }

CyclePrediction ringsum_cycles_predict(std::uint64_t m, std::uint64_t n, std::uint64_t shared) {
  if (m < 3 || n < 3) throw Error(ErrorCode::kParamOutOfRange, "cycles need at least 3 vertices");
  if (shared >= std::min(m, n)) {
    throw Error(ErrorCode::kParamOutOfRange, "shared path must be shorter than both cycles");
  }
  if (m == n && shared == m - 1) {
    throw Error(ErrorCode::kParamOutOfRange, "cycles sharing all but one edge coincide");
  }
  if (shared == 0) {
    const std::uint64_t phi = m % 2 + n % 2;
    return {phi, phi % 2 == 0 ? Parity::kEven : Parity::kOdd};
  }
  if (m % 2 == n % 2) return {0, Parity::kEven};
  return {1, Parity::kOdd};
}

}  // namespace iasi
