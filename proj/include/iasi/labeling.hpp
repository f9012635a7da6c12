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

#ifndef IASI_LABELING_HPP_
#define IASI_LABELING_HPP_

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <map>
#include <optional>
#include <set>
#include <vector>

#include "iasi/graph.hpp"

namespace iasi {

// Label elements are 64-bit. Every addition is checked; results that do not
// fit raise CapacityExceeded instead of wrapping.
using Element = std::uint64_t;

// Finite non-empty subset of the non-negative integers, kept as a strictly
// increasing sequence so that equality is sequence equality.
class SetLabel {
 public:
  // Sorts and deduplicates. Throws InvalidArgument when empty.
  explicit SetLabel(std::vector<Element> elements);
  SetLabel(std::initializer_list<Element> elements)
      : SetLabel(std::vector<Element>(elements)) {}

  // Requires a strictly increasing, non-empty sequence (the wire format).
  static SetLabel from_strict(std::vector<Element> elements);

  std::size_t size() const noexcept { return elements_.size(); }
  bool is_singleton() const noexcept { return elements_.size() == 1; }
  const std::vector<Element>& elements() const noexcept { return elements_; }

  friend auto operator<=>(const SetLabel&, const SetLabel&) = default;
  friend bool operator==(const SetLabel&, const SetLabel&) = default;

 private:
  std::vector<Element> elements_;
};

// {a + b : a in A, b in B}.
SetLabel sumset(const SetLabel& a, const SetLabel& b);

// Vertex -> set-label assignment. Injectivity is a property the verifier
// reports on, not something the container enforces, so that broken inputs
// can still be loaded and diagnosed.
using Labeling = std::map<VertexId, SetLabel>;

struct VerifyReport {
  bool is_iasi = false;
  bool is_weak = false;
  bool is_strong = false;
  std::optional<std::size_t> uniform_k;
  std::set<VertexId> mono_indexed_vertices;
  std::set<Edge> mono_indexed_edges;
  std::map<Edge, std::size_t> edge_indexing_numbers;

  friend bool operator==(const VerifyReport&, const VerifyReport&) = default;
};

// Classifies f on g. Every vertex with an incident edge needs a label
// (MissingLabel); labels naming vertices outside g are rejected
// (UnknownVertex). Labels on isolated vertices take part in the vertex
// injectivity check only.
VerifyReport verify(const Graph& g, const Labeling& f);

// Number of edges whose induced label is a singleton. Throws NotIasi when f
// is not an IASI of g.
std::size_t mono_indexed_edge_count(const Graph& g, const Labeling& f);

}  // namespace iasi

#endif  // IASI_LABELING_HPP_
