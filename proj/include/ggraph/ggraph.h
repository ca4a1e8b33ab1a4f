/*
 * Copyright 2026 The ggraph Authors
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

/*
 * C interface to the ggraph library.
 *
 * Handles are opaque and owned by the caller. Every function returning
 * gg_status leaves a message for gg_last_error() on failure; the message is
 * per thread and valid until the next failing call on that thread. Strings
 * returned through char** are released with gg_string_free().
 */

#ifndef GGRAPH_GGRAPH_H_
#define GGRAPH_GGRAPH_H_

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#if defined(GGRAPH_BUILDING)
#define GG_API __declspec(dllexport)
#else
#define GG_API __declspec(dllimport)
#endif
#else
#define GG_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gg_status {
  GG_OK = 0,
  GG_ERR_INVALID_PARAMETER = 1,
  GG_ERR_SIZE_LIMIT = 2,
  GG_ERR_CLOSURE_OVERFLOW = 3,
  GG_ERR_NOT_GENERATING = 4,
  GG_ERR_INVALID_PARTITION = 5,
  GG_ERR_INVALID_INPUT = 6,
  GG_ERR_INVALID_MATRIX = 7,
  GG_ERR_INVALID_PAIR = 8,
  GG_ERR_TOO_LARGE = 9,
  GG_ERR_PARSE = 10,
  GG_ERR_IO = 11,
  GG_ERR_OVERFLOW = 12,
  GG_ERR_INTERNAL = 13
} gg_status;

typedef enum gg_verdict {
  GG_VERDICT_ACCEPT = 0,
  GG_VERDICT_REFUSE = 1,
  GG_VERDICT_UNDETERMINED = 2
} gg_verdict;

typedef enum gg_format {
  GG_FORMAT_JSON = 0,
  GG_FORMAT_DOT = 1,
  GG_FORMAT_EDGES = 2
} gg_format;

typedef struct gg_group gg_group;
typedef struct gg_graph gg_graph;

GG_API const char* gg_version(void);
GG_API const char* gg_last_error(void);
GG_API const char* gg_status_name(gg_status status);
GG_API void gg_string_free(char* s);

/* Groups, from the spec language (e.g. "sym:4", "cyclic:3*cyclic:3"). */
GG_API gg_status gg_group_parse(const char* spec, gg_group** out);
GG_API void gg_group_free(gg_group* group);
GG_API size_t gg_group_order(const gg_group* group);

/* G-graph of a comma separated generator list. */
GG_API gg_status gg_graph_build(const gg_group* group, const char* generators, gg_graph** out);
/* JSON document or edge list text. */
GG_API gg_status gg_graph_parse(const char* text, gg_graph** out);
GG_API gg_status gg_graph_load(const char* path, gg_graph** out);
/* Ball of the given radius; group is "sl2z" or "affine". */
GG_API gg_status gg_graph_ball(const char* group, size_t radius, gg_graph** out);
GG_API void gg_graph_free(gg_graph* graph);

GG_API size_t gg_graph_vertex_count(const gg_graph* graph);
GG_API uint64_t gg_graph_edge_multiplicity(const gg_graph* graph);

GG_API gg_status gg_graph_serialize(const gg_graph* graph, gg_format format, char** out);
GG_API gg_status gg_graph_save(const gg_graph* graph, gg_format format, const char* path);

/* Reports, each a JSON object. */
GG_API gg_status gg_graph_stats_json(const gg_graph* graph, char** out);
GG_API gg_status gg_graph_analyze_json(const gg_graph* graph, char** out);
GG_API gg_status gg_graph_spectrum_json(const gg_graph* graph, char** out);
GG_API gg_status gg_graph_matrix_csv(const gg_graph* graph, char** out);

/*
 * partition: NULL uses the graph's own partition when it has one and
 * searches otherwise; "auto" always searches; "bipartite" applies the
 * bipartite criterion; anything else lists one class index per vertex,
 * separated by commas or spaces. With witness != 0 an ACCEPT verdict is
 * followed by a catalog search for a realizing group.
 */
GG_API gg_status gg_graph_characterize_json(const gg_graph* graph, const char* partition, int witness,
                                            gg_verdict* verdict, char** out);
GG_API gg_status gg_turan_verdict_json(size_t n, size_t r, gg_verdict* verdict, char** out);

GG_API gg_status gg_graph_are_isomorphic(const gg_graph* a, const gg_graph* b, int* out);

/* orders[i] <= 0 marks a generator of infinite order. */
GG_API int gg_is_locally_finite(const int64_t* orders, size_t count);

#ifdef __cplusplus
}
#endif

#endif /* GGRAPH_GGRAPH_H_ */
