/*
 * Copyright 2026 The iasilab Authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef IASI_IASI_H_
#define IASI_IASI_H_

/*
 * C interface to the weak integer additive set-indexer toolkit.
 *
 * Objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an iasi_status;
 * on failure the out-parameter is left untouched and
 * iasi_last_error_message() describes the problem (per thread).
 * Strings returned through char** are heap allocated; release them with
 * iasi_string_free().
 */

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#  if defined(IASI_BUILDING_LIBRARY)
#    define IASI_API __declspec(dllexport)
#  else
#    define IASI_API __declspec(dllimport)
#  endif
#else
#  define IASI_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum iasi_status {
  IASI_OK = 0,
  IASI_ERR_INVALID_ARGUMENT = 1,
  IASI_ERR_PARSE = 2,
  IASI_ERR_IO = 3,
  IASI_ERR_INVALID_TOKEN = 4,
  IASI_ERR_LOOP_EDGE = 5,
  IASI_ERR_UNKNOWN_ENDPOINT = 6,
  IASI_ERR_DUPLICATE_EDGE = 7,
  IASI_ERR_DUPLICATE_VERTEX = 8,
  IASI_ERR_PARAM_OUT_OF_RANGE = 9,
  IASI_ERR_VERTEX_COLLISION = 10,
  IASI_ERR_NOT_SUBGRAPH = 11,
  IASI_ERR_MISSING_LABEL = 12,
  IASI_ERR_UNKNOWN_VERTEX = 13,
  IASI_ERR_NOT_IASI = 14,
  IASI_ERR_NOT_INDEPENDENT = 15,
  IASI_ERR_CAPACITY_EXCEEDED = 16,
  IASI_ERR_TOO_LARGE = 17,
  IASI_ERR_NEGATIVE_RESULT = 18,
  IASI_ERR_INTERNAL = 19
} iasi_status;

typedef struct iasi_graph iasi_graph;
typedef struct iasi_labeling iasi_labeling;
typedef struct iasi_verify_report iasi_verify_report;
typedef struct iasi_sparing_result iasi_sparing_result;
typedef struct iasi_audit_report iasi_audit_report;

IASI_API const char* iasi_version(void);
IASI_API const char* iasi_status_name(iasi_status status);
IASI_API const char* iasi_last_error_message(void);
IASI_API void iasi_string_free(char* s);

/* ---- graphs ------------------------------------------------------------ */

IASI_API iasi_status iasi_graph_from_json(const char* json, iasi_graph** out);
IASI_API iasi_status iasi_graph_to_json(const iasi_graph* g, char** out);
/* labeling may be NULL. */
IASI_API iasi_status iasi_graph_to_dot(const iasi_graph* g, const iasi_labeling* labeling, char** out);
IASI_API void iasi_graph_free(iasi_graph* g);

IASI_API size_t iasi_graph_vertex_count(const iasi_graph* g);
IASI_API size_t iasi_graph_edge_count(const iasi_graph* g);
IASI_API int iasi_graph_is_bipartite(const iasi_graph* g);

/*
 * family: path, cycle, complete, trivial, wheel, fan, cone, tent,
 * friendship, path_friendship, closed_friendship, windmill.
 * Parameters the family does not read are ignored; path takes its length
 * in n, trivial and friendship take m.
 */
IASI_API iasi_status iasi_graph_generate(const char* family, int64_t m, int64_t n, iasi_graph** out);

typedef enum iasi_graph_op {
  IASI_OP_UNION = 0,
  IASI_OP_INTERSECTION = 1,
  IASI_OP_JOIN = 2,
  IASI_OP_RING_SUM = 3,
  IASI_OP_SUBTRACT = 4
} iasi_graph_op;

IASI_API iasi_status iasi_graph_apply(iasi_graph_op op, const iasi_graph* a, const iasi_graph* b,
                                      iasi_graph** out);
IASI_API iasi_status iasi_graph_relabel(const iasi_graph* g, const char* prefix, iasi_graph** out);

/* ---- labelings and verification ---------------------------------------- */

IASI_API iasi_status iasi_labeling_from_json(const char* json, iasi_labeling** out);
IASI_API iasi_status iasi_labeling_to_json(const iasi_labeling* f, char** out);
IASI_API void iasi_labeling_free(iasi_labeling* f);

/* Base-4 weak IASI realising the given support (an independent set). */
IASI_API iasi_status iasi_construct_weak_iasi(const iasi_graph* g, const char* const* support,
                                              size_t support_len, iasi_labeling** out);

IASI_API iasi_status iasi_verify(const iasi_graph* g, const iasi_labeling* f, iasi_verify_report** out);
IASI_API int iasi_verify_report_is_iasi(const iasi_verify_report* r);
IASI_API int iasi_verify_report_is_weak(const iasi_verify_report* r);
IASI_API int iasi_verify_report_is_strong(const iasi_verify_report* r);
/* 0 when the edge indexing numbers are not all equal (or there are no edges). */
IASI_API size_t iasi_verify_report_uniform_k(const iasi_verify_report* r);
IASI_API size_t iasi_verify_report_mono_edge_count(const iasi_verify_report* r);
IASI_API iasi_status iasi_verify_report_to_json(const iasi_verify_report* r, char** out);
IASI_API void iasi_verify_report_free(iasi_verify_report* r);

/* ---- sparing number ---------------------------------------------------- */

typedef enum iasi_algorithm {
  IASI_ALGORITHM_AUTO = 0,
  IASI_ALGORITHM_EXHAUSTIVE = 1,
  IASI_ALGORITHM_BRANCH_BOUND = 2
} iasi_algorithm;

typedef struct iasi_sparing_options {
  iasi_algorithm algorithm;
  int with_labeling;
  int canonical_witness;
  size_t exhaustive_cap; /* 0 selects the default */
} iasi_sparing_options;

IASI_API void iasi_sparing_options_init(iasi_sparing_options* opts);
/* opts may be NULL for defaults. */
IASI_API iasi_status iasi_sparing(const iasi_graph* g, const iasi_sparing_options* opts,
                                  iasi_sparing_result** out);
IASI_API uint64_t iasi_sparing_result_phi(const iasi_sparing_result* r);
IASI_API size_t iasi_sparing_result_witness_size(const iasi_sparing_result* r);
IASI_API const char* iasi_sparing_result_witness_at(const iasi_sparing_result* r, size_t i);
IASI_API iasi_status iasi_sparing_result_to_json(const iasi_sparing_result* r, char** out);
IASI_API void iasi_sparing_result_free(iasi_sparing_result* r);

/* ---- audits ------------------------------------------------------------ */

/* families: comma-separated formula names, or NULL for all of them. */
IASI_API iasi_status iasi_audit_families(size_t max_vertices, const char* families, unsigned workers,
                                         iasi_audit_report** out);
IASI_API iasi_status iasi_audit_identities(size_t trials, uint64_t seed, unsigned workers,
                                           iasi_audit_report** out);
IASI_API iasi_status iasi_audit_ringsum_cycles(size_t max_cycle, unsigned workers,
                                               iasi_audit_report** out);
IASI_API size_t iasi_audit_report_row_count(const iasi_audit_report* r);
IASI_API size_t iasi_audit_report_mismatch_count(const iasi_audit_report* r);
IASI_API iasi_status iasi_audit_report_to_csv(const iasi_audit_report* r, int with_timing, char** out);
IASI_API iasi_status iasi_audit_report_to_markdown(const iasi_audit_report* r, char** out);
/* Writes one JSON file per mismatch row into dir; *written receives the count. */
IASI_API iasi_status iasi_audit_report_archive(const iasi_audit_report* r, const char* dir, size_t* written);
IASI_API void iasi_audit_report_free(iasi_audit_report* r);

#ifdef __cplusplus
}
#endif

#endif /* IASI_IASI_H_ */
