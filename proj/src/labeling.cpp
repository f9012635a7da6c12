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

#include "iasi/labeling.hpp"

#include <algorithm>
#include <limits>

#include "iasi/error.hpp"

namespace iasi {

SetLabel::SetLabel(std::vector<Element> elements) : elements_(std::move(elements)) {
  if (elements_.empty()) throw Error(ErrorCode::kInvalidArgument, "set-label must be non-empty");
  std::sort(elements_.begin(), elements_.end());
  elements_.erase(std::unique(elements_.begin(), elements_.end()), elements_.end());
}

SetLabel SetLabel::from_strict(std::vector<Element> elements) {
  if (elements.empty()) throw Error(ErrorCode::kInvalidArgument, "set-label must be non-empty");
  for (std::size_t i = 1; i < elements.size(); ++i) {
    if (elements[i - 1] >= elements[i]) {
      throw Error(ErrorCode::kInvalidArgument, "set-label elements must be strictly increasing");
    }
  }
  return SetLabel(std::move(elements));
}

SetLabel sumset(const SetLabel& a, const SetLabel& b) {
  constexpr Element kMax = std::numeric_limits<Element>::max();
  std::vector<Element> sums;
  sums.reserve(a.size() * b.size());
  for (Element x : a.elements()) {
    for (Element y : b.elements()) {
      if (x > kMax - y) {
        throw Error(ErrorCode::kCapacityExceeded, "label sum exceeds 64-bit range");
      }
      sums.push_back(x + y);
    }
  }
  return SetLabel(std::move(sums));
}

VerifyReport verify(const Graph& g, const Labeling& f) {
  for (const auto& [v, label] : f) {
    if (!g.contains(v)) {
      throw Error(ErrorCode::kUnknownVertex, "label given for unknown vertex '" + v.str() + "'");
    }
  }
  const auto vertices = g.vertices();
  std::vector<const SetLabel*> label_of(vertices.size(), nullptr);
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    auto it = f.find(vertices[i]);
    if (it != f.end()) {
      label_of[i] = &it->second;
    } else if (g.degree(i) > 0) {
      throw Error(ErrorCode::kMissingLabel, "vertex '" + vertices[i].str() + "' has no label");
    }
  }

  VerifyReport report;
  bool vertex_injective = true;
  std::set<SetLabel> seen_vertex_labels;
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    if (!label_of[i]) continue;
    if (!seen_vertex_labels.insert(*label_of[i]).second) vertex_injective = false;
    if (label_of[i]->is_singleton()) report.mono_indexed_vertices.insert(vertices[i]);
  }

  bool edge_injective = true;
  bool weak = true;
  bool strong = true;
  std::set<SetLabel> seen_edge_labels;
  std::optional<std::size_t> common_k;
  bool uniform = true;
  for (const auto& [i, j] : g.index_edges()) {
    const SetLabel& a = *label_of[i];
    const SetLabel& b = *label_of[j];
    SetLabel s = sumset(a, b);
    const std::size_t k = s.size();
    Edge e(vertices[i], vertices[j]);
    report.edge_indexing_numbers.emplace(e, k);
    if (k == 1) report.mono_indexed_edges.insert(e);
    if (k != std::max(a.size(), b.size())) weak = false;
    if (k != a.size() * b.size()) strong = false;
    if (!common_k) {
      common_k = k;
    } else if (*common_k != k) {
      uniform = false;
    }
    if (!seen_edge_labels.insert(std::move(s)).second) edge_injective = false;
  }

  report.is_iasi = vertex_injective && edge_injective;
  report.is_weak = report.is_iasi && weak;
  report.is_strong = report.is_iasi && strong;
  if (uniform && common_k) report.uniform_k = common_k;
  return report;
}

std::size_t mono_indexed_edge_count(const Graph& g, const Labeling& f) {
  auto report = verify(g, f);
  if (!report.is_iasi) throw Error(ErrorCode::kNotIasi, "labeling is not an IASI of the graph");
  return report.mono_indexed_edges.size();
}

}  // namespace iasi
