// Copyright 2026 The ILM Authors
//
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

/* C interface to the ILM library.  All objects are opaque handles owned by
 * the caller and released with the matching *_free function.  Every call
 * returns an ilm_status; on failure ilm_last_error() describes the cause for
 * the calling thread.  Strings returned through out-parameters are allocated
 * by the library and released with ilm_string_free. */

#ifndef ILM_ILM_H
#define ILM_ILM_H

#include <stddef.h>
#include <stdint.h>

#if defined(ILM_BUILDING_LIBRARY)
#define ILM_API __attribute__((visibility("default")))
#else
#define ILM_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ilm_status {
  ILM_OK = 0,
  ILM_ERR_USAGE = 1,    /* bad argument, unknown name, missing file */
  ILM_ERR_PARSE = 2,    /* malformed input text */
  ILM_ERR_CAPACITY = 3, /* size cap or search budget exceeded */
  ILM_ERR_IO = 4,
  ILM_ERR_INTERNAL = 5
} ilm_status;

typedef struct ilm_graph ilm_graph;
typedef struct ilm_corpus ilm_corpus;
typedef struct ilm_report ilm_report;

ILM_API const char* ilm_version(void);
ILM_API const char* ilm_last_error(void);
ILM_API void ilm_string_free(char* s);

ILM_API size_t ilm_max_vertices(void);
ILM_API void ilm_set_max_vertices(size_t n);

/* Graphs. */
ILM_API ilm_status ilm_graph_from_name(const char* name, ilm_graph** out);
/* Edge list, plus the lineage sidecar "<path>.lineage.json" when present. */
ILM_API ilm_status ilm_graph_load(const char* path, ilm_graph** out);
ILM_API ilm_status ilm_graph_save(const ilm_graph* g, const char* path);
ILM_API ilm_status ilm_graph_parse(const char* edge_list, ilm_graph** out);
ILM_API void ilm_graph_free(ilm_graph* g);
ILM_API size_t ilm_graph_order(const ilm_graph* g);
ILM_API size_t ilm_graph_size(const ilm_graph* g);
ILM_API uint32_t ilm_graph_generation(const ilm_graph* g);
ILM_API int ilm_graph_has_edge(const ilm_graph* g, uint32_t u, uint32_t v);
ILM_API ilm_status ilm_graph_edge_list(const ilm_graph* g, char** out);
ILM_API ilm_status ilm_graph_dot(const ilm_graph* g, char** out);

/* ILM_t(sequence, g0).  trace_csv may be NULL. */
ILM_API ilm_status ilm_generate(const ilm_graph* g0, const char* sequence, size_t steps, ilm_graph** out,
                                char** trace_csv);
/* Edge count after one step (bit 1 transitive, bit 0 anti-transitive). */
ILM_API uint64_t ilm_predict_edges(uint64_t n, uint64_t e, int bit);

#define ILM_ANALYZE_METRICS 1u
#define ILM_ANALYZE_PARAMS 2u
#define ILM_ANALYZE_SPECTRAL 4u
#define ILM_ANALYZE_STRUCTURE 8u
#define ILM_ANALYZE_FINAL_ONLY 16u

/* JSON analysis report.  *inconclusive is set to 1 when a section hit a cap
 * or budget (may be NULL). */
ILM_API ilm_status ilm_analyze(const ilm_graph* g, unsigned flags, char** json_out, int* inconclusive);

/* Verification campaigns. */
ILM_API ilm_status ilm_corpus_builtin(ilm_corpus** out);
ILM_API ilm_status ilm_corpus_from_json(const char* json, ilm_corpus** out);
ILM_API ilm_status ilm_corpus_to_json(const ilm_corpus* c, char** out);
ILM_API ilm_status ilm_corpus_set_threads(ilm_corpus* c, size_t threads);
ILM_API ilm_status ilm_corpus_set_timings(ilm_corpus* c, int on);
ILM_API void ilm_corpus_free(ilm_corpus* c);

/* theorems: "all" or a comma separated list of ids. */
ILM_API ilm_status ilm_campaign_run(const ilm_corpus* c, const char* theorems, ilm_report** out);
ILM_API ilm_status ilm_theorem_ids(char** out); /* comma separated */

typedef struct ilm_summary {
  size_t pass;
  size_t fail;
  size_t not_applicable;
  size_t recorded_only;
  size_t inconclusive;
} ilm_summary;

/* format: "json", "csv" or "text". */
ILM_API ilm_status ilm_report_export(const ilm_report* r, const char* format, char** out);
ILM_API ilm_status ilm_report_summary(const ilm_report* r, ilm_summary* out);
ILM_API ilm_status ilm_report_from_json(const char* json, ilm_report** out);
ILM_API void ilm_report_free(ilm_report* r);

/* Writes the density, clustering and gap CSV series for every corpus pair
 * into dir; *files_out (may be NULL) receives the newline separated paths. */
ILM_API ilm_status ilm_export_plots(const ilm_corpus* c, const char* dir, char** files_out);

#ifdef __cplusplus
}
#endif

#endif /* ILM_ILM_H */
