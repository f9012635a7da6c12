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

#include "iasi/iasi.h"

#include <cstdlib>
#include <memory>
#include <cstring>
#include <new>
#include <string>
#include <string_view>
#include <utility>

#include "iasi/audit.hpp"
#include "iasi/error.hpp"
#include "iasi/serialize.hpp"
#include "iasi/sparing.hpp"

struct iasi_graph {
  iasi::Graph value;
};
struct iasi_labeling {
  iasi::Labeling value;
};
struct iasi_verify_report {
  iasi::VerifyReport value;
};
struct iasi_sparing_result {
  iasi::SparingResult value;
  std::vector<std::string> witness;  // stable storage for witness_at()
};
struct iasi_audit_report {
  std::vector<iasi::AuditRow> rows;
};

namespace {

thread_local std::string last_error;

iasi_status fail(iasi_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, mapping exceptions to status codes.
template <typename Body>
iasi_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return IASI_OK;
  } catch (const iasi::Error& e) {
    return fail(static_cast<iasi_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(IASI_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(IASI_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.c_str(), s.size() + 1);
  return out;
}

void require(bool ok, const char* what) {
  if (!ok) throw iasi::Error(iasi::ErrorCode::kInvalidArgument, what);
}

std::uint64_t non_negative(int64_t x, const char* name) {
  if (x < 0) {
    throw iasi::Error(iasi::ErrorCode::kParamOutOfRange, std::string(name) + " must be non-negative");
  }
  return static_cast<std::uint64_t>(x);
}

}  // namespace

extern "C" {

const char* iasi_version(void) { return IASI_VERSION_STRING; }

const char* iasi_status_name(iasi_status status) {
  if (status == IASI_OK) return "Ok";
  // Names are string literals, so the view is NUL-terminated.
  return iasi::error_code_name(static_cast<iasi::ErrorCode>(status)).data();
}

const char* iasi_last_error_message(void) { return last_error.c_str(); }

void iasi_string_free(char* s) { std::free(s); }

iasi_status iasi_graph_from_json(const char* json, iasi_graph** out) {
  return guarded([&] {
    require(json && out, "null argument");
    auto g = iasi::graph_from_json(iasi::parse_json_text(json));
    *out = new iasi_graph{std::move(g)};
  });
}

iasi_status iasi_graph_to_json(const iasi_graph* g, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(iasi::dump_canonical(iasi::graph_to_json(g->value)));
  });
}

iasi_status iasi_graph_to_dot(const iasi_graph* g, const iasi_labeling* labeling, char** out) {
  return guarded([&] {
    require(g && out, "null argument");
    *out = copy_string(iasi::graph_to_dot(g->value, labeling ? &labeling->value : nullptr));
  });
}

void iasi_graph_free(iasi_graph* g) { delete g; }

size_t iasi_graph_vertex_count(const iasi_graph* g) { return g ? g->value.order() : 0; }
size_t iasi_graph_edge_count(const iasi_graph* g) { return g ? g->value.size() : 0; }
int iasi_graph_is_bipartite(const iasi_graph* g) { return g && iasi::is_bipartite(g->value) ? 1 : 0; }

iasi_status iasi_graph_generate(const char* family, int64_t m, int64_t n, iasi_graph** out) {
  return guarded([&] {
    require(family && out, "null argument");
    auto f = iasi::parse_family(family);
    if (!f) throw iasi::Error(iasi::ErrorCode::kInvalidArgument, std::string("unknown family '") + family + "'");
    iasi::FamilySpec spec{*f, iasi::family_uses_m(*f) ? non_negative(m, "m") : 0,
                          iasi::family_uses_n(*f) ? non_negative(n, "n") : 0};
    *out = new iasi_graph{iasi::gen_family(spec)};
  });
}

iasi_status iasi_graph_apply(iasi_graph_op op, const iasi_graph* a, const iasi_graph* b, iasi_graph** out) {
  return guarded([&] {
    require(a && b && out, "null argument");
    iasi::Graph result;
    switch (op) {
      case IASI_OP_UNION: result = iasi::graph_union(a->value, b->value); break;
      case IASI_OP_INTERSECTION: result = iasi::graph_intersection(a->value, b->value); break;
      case IASI_OP_JOIN: result = iasi::join(a->value, b->value); break;
      case IASI_OP_RING_SUM: result = iasi::ring_sum(a->value, b->value); break;
      case IASI_OP_SUBTRACT: result = iasi::subtract(a->value, b->value); break;
      default: require(false, "unknown graph operation");
    }
    *out = new iasi_graph{std::move(result)};
  });
}

iasi_status iasi_graph_relabel(const iasi_graph* g, const char* prefix, iasi_graph** out) {
  return guarded([&] {
    require(g && prefix && out, "null argument");
    *out = new iasi_graph{iasi::relabel(g->value, prefix)};
  });
}

iasi_status iasi_labeling_from_json(const char* json, iasi_labeling** out) {
  return guarded([&] {
    require(json && out, "null argument");
    auto f = iasi::labeling_from_json(iasi::parse_json_text(json));
    *out = new iasi_labeling{std::move(f)};
  });
}

iasi_status iasi_labeling_to_json(const iasi_labeling* f, char** out) {
  return guarded([&] {
    require(f && out, "null argument");
    *out = copy_string(iasi::dump_canonical(iasi::labeling_to_json(f->value)));
  });
}

void iasi_labeling_free(iasi_labeling* f) { delete f; }

iasi_status iasi_construct_weak_iasi(const iasi_graph* g, const char* const* support, size_t support_len,
                                     iasi_labeling** out) {
  return guarded([&] {
    require(g && out && (support || support_len == 0), "null argument");
    iasi::Support s;
    for (size_t i = 0; i < support_len; ++i) {
      require(support[i] != nullptr, "null support entry");
      s.emplace(support[i]);
    }
    *out = new iasi_labeling{iasi::construct_weak_iasi(g->value, s)};
  });
}

iasi_status iasi_verify(const iasi_graph* g, const iasi_labeling* f, iasi_verify_report** out) {
  return guarded([&] {
    require(g && f && out, "null argument");
    *out = new iasi_verify_report{iasi::verify(g->value, f->value)};
  });
}

int iasi_verify_report_is_iasi(const iasi_verify_report* r) { return r && r->value.is_iasi; }
int iasi_verify_report_is_weak(const iasi_verify_report* r) { return r && r->value.is_weak; }
int iasi_verify_report_is_strong(const iasi_verify_report* r) { return r && r->value.is_strong; }
size_t iasi_verify_report_uniform_k(const iasi_verify_report* r) {
  return r && r->value.uniform_k ? *r->value.uniform_k : 0;
}
size_t iasi_verify_report_mono_edge_count(const iasi_verify_report* r) {
  return r ? r->value.mono_indexed_edges.size() : 0;
}

iasi_status iasi_verify_report_to_json(const iasi_verify_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = copy_string(iasi::dump_canonical(iasi::verify_report_to_json(r->value)));
  });
}

void iasi_verify_report_free(iasi_verify_report* r) { delete r; }

void iasi_sparing_options_init(iasi_sparing_options* opts) {
  if (!opts) return;
  opts->algorithm = IASI_ALGORITHM_AUTO;
  opts->with_labeling = 0;
  opts->canonical_witness = 0;
  opts->exhaustive_cap = 0;
}

iasi_status iasi_sparing(const iasi_graph* g, const iasi_sparing_options* opts, iasi_sparing_result** out) {
  return guarded([&] {
    require(g && out, "null argument");
    iasi::SparingOptions o;
    if (opts) {
      switch (opts->algorithm) {
        case IASI_ALGORITHM_AUTO: break;
        case IASI_ALGORITHM_EXHAUSTIVE: o.algorithm = iasi::Algorithm::kExhaustive; break;
        case IASI_ALGORITHM_BRANCH_BOUND: o.algorithm = iasi::Algorithm::kBranchBound; break;
        default: require(false, "unknown algorithm");
      }
      o.with_labeling = opts->with_labeling != 0;
      o.canonical_witness = opts->canonical_witness != 0;
      if (opts->exhaustive_cap) o.exhaustive_cap = opts->exhaustive_cap;
    }
    auto result = std::make_unique<iasi_sparing_result>();
    result->value = iasi::sparing(g->value, o);
    for (const auto& v : result->value.witness) result->witness.push_back(v.str());
    *out = result.release();
  });
}

uint64_t iasi_sparing_result_phi(const iasi_sparing_result* r) { return r ? r->value.phi : 0; }
size_t iasi_sparing_result_witness_size(const iasi_sparing_result* r) { return r ? r->witness.size() : 0; }
const char* iasi_sparing_result_witness_at(const iasi_sparing_result* r, size_t i) {
  return r && i < r->witness.size() ? r->witness[i].c_str() : nullptr;
}

iasi_status iasi_sparing_result_to_json(const iasi_sparing_result* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = copy_string(iasi::dump_canonical(iasi::sparing_result_to_json(r->value)));
  });
}

void iasi_sparing_result_free(iasi_sparing_result* r) { delete r; }

iasi_status iasi_audit_families(size_t max_vertices, const char* families, unsigned workers,
                                iasi_audit_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    std::set<iasi::FormulaId> ids;
    if (!families) {
      ids = iasi::family_formulas();
    } else {
      std::string_view rest(families);
      while (!rest.empty()) {
        auto comma = rest.find(',');
        auto name = rest.substr(0, comma);
        auto id = iasi::parse_formula(name);
        if (!id || !iasi::family_formulas().contains(*id)) {
          throw iasi::Error(iasi::ErrorCode::kInvalidArgument, "unknown family formula '" + std::string(name) + "'");
        }
        ids.insert(*id);
        rest = comma == std::string_view::npos ? std::string_view{} : rest.substr(comma + 1);
      }
    }
    *out = new iasi_audit_report{iasi::audit_families(max_vertices, ids, {workers})};
  });
}

iasi_status iasi_audit_identities(size_t trials, uint64_t seed, unsigned workers, iasi_audit_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new iasi_audit_report{iasi::audit_identities(trials, seed, {workers})};
  });
}

iasi_status iasi_audit_ringsum_cycles(size_t max_cycle, unsigned workers, iasi_audit_report** out) {
  return guarded([&] {
    require(out != nullptr, "null argument");
    *out = new iasi_audit_report{iasi::audit_ringsum_cycles(max_cycle, {workers})};
  });
}

size_t iasi_audit_report_row_count(const iasi_audit_report* r) { return r ? r->rows.size() : 0; }

size_t iasi_audit_report_mismatch_count(const iasi_audit_report* r) {
  if (!r) return 0;
  size_t count = 0;
  for (const auto& row : r->rows) count += row.verdict == iasi::Verdict::kMismatch;
  return count;
}

iasi_status iasi_audit_report_to_csv(const iasi_audit_report* r, int with_timing, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = copy_string(iasi::report_csv(r->rows, with_timing != 0));
  });
}

iasi_status iasi_audit_report_to_markdown(const iasi_audit_report* r, char** out) {
  return guarded([&] {
    require(r && out, "null argument");
    *out = copy_string(iasi::report_markdown(r->rows));
  });
}

iasi_status iasi_audit_report_archive(const iasi_audit_report* r, const char* dir, size_t* written) {
  return guarded([&] {
    require(r && dir, "null argument");
    auto paths = iasi::archive_counterexamples(r->rows, dir);
    if (written) *written = paths.size();
  });
}

void iasi_audit_report_free(iasi_audit_report* r) { delete r; }

}  // extern "C"
