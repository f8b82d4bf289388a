/* Copyright 2026 The pmh Authors.
 *
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

#ifndef PMH_H_
#define PMH_H_

/* C interface to the prism / crossed-prism perfect-matching-Hamiltonicity
 * library. Handles are opaque; every function returns a status code (PMH_OK
 * on success) and reports results through out parameters. Strings returned
 * through char** out parameters are heap-allocated and must be released with
 * pmh_string_free. Handles are immutable after creation and may be shared
 * across threads; pmh_last_error is thread-local.
 *
 * JSON records produced by the pmh_*_record functions carry an elapsed_ms
 * field last; every other field is deterministic for fixed inputs.
 */

#ifdef __cplusplus
extern "C" {
#endif

typedef struct pmh_graph pmh_graph;
typedef struct pmh_edgeset pmh_edgeset;

enum {
  PMH_OK = 0,
  PMH_ERROR_INVALID_ARGUMENT = 1,
  PMH_ERROR_PARSE = 2,
  PMH_ERROR_UNSUPPORTED_DEGREE = 3,
  PMH_ERROR_NOT_A_MATCHING = 4,
  PMH_ERROR_MALFORMED_FACTOR = 5,
  PMH_ERROR_NO_MATCHING_POSSIBLE = 6,
  PMH_ERROR_UNDEFINED_CLASSIFICATION = 7,
  PMH_ERROR_UNSUPPORTED_PARAMETER = 8,
  PMH_ERROR_WRONG_CASE = 9,
  PMH_ERROR_THEOREM_SCOPE = 10,
  PMH_ERROR_LIMIT_EXCEEDED = 11,
  PMH_ERROR_INTERNAL = 12
};

const char* pmh_status_name(int status);

/* Message for the most recent failure on this thread; empty when none. */
const char* pmh_last_error(void);

void pmh_string_free(char* s);

/* ---- families ---- */

int pmh_prism_create(int n, pmh_graph** out);          /* n >= 3 */
int pmh_crossed_prism_create(int n, pmh_graph** out);  /* n >= 1 */
void pmh_graph_destroy(pmh_graph* g);

int pmh_graph_order(const pmh_graph* g); /* |V|, or -1 on bad handle */
int pmh_graph_size(const pmh_graph* g);  /* |E|, or -1 on bad handle */

/* JSON object with vertices, edges, edge_list and the principal cut. */
int pmh_graph_describe(const pmh_graph* g, char** json_out);

/* Deterministic DOT text; highlighted edges get style=bold, principal cut
 * edges color=red. highlight may be NULL. */
int pmh_graph_dot(const pmh_graph* g, const pmh_edgeset* highlight, char** dot_out);

/* ---- edge sets ---- */

/* Parses whitespace-separated "u1-v1" tokens against the graph's labels. */
int pmh_matching_parse(const pmh_graph* g, const char* text, pmh_edgeset** out);
int pmh_matching_format(const pmh_graph* g, const pmh_edgeset* s, char** out);
void pmh_edgeset_destroy(pmh_edgeset* s);

/* ---- witnesses and extensions ---- */

/* The inextensible matching of an even prism, n >= 6. */
int pmh_witness_prism(const pmh_graph* g, pmh_edgeset** out);

/* The pair matching of an odd crossed prism. */
int pmh_witness_crossed_prism_odd(const pmh_graph* g, pmh_edgeset** out);

/* Exhaustive search for a disjoint matching with Hamiltonian union. *found
 * is 0 or 1; *out is set only when found. */
int pmh_find_extension(const pmh_graph* g, const pmh_edgeset* m, int* found, pmh_edgeset** out);

/* Constructive extension for even crossed prisms; JSON with the extension,
 * the Hamiltonian vertex order and the case trace. */
int pmh_extend_record(const pmh_graph* g, const pmh_edgeset* m, char** json_out);

/* ---- decision records ----
 * cap bounds the number of matchings enumerated; timeout_s <= 0 disables the
 * per-instance timeout. Budget overruns surface as PMH_ERROR_LIMIT_EXCEEDED
 * except in pmh_verify_instance, which flags the record as skipped. */

int pmh_enumerate_record(const pmh_graph* g, unsigned long long cap, double timeout_s,
                         char** json_out);
int pmh_check_pmh_record(const pmh_graph* g, int jobs, unsigned long long cap, double timeout_s,
                         char** json_out);
int pmh_e2f_record(const pmh_graph* g, unsigned long long cap, double timeout_s, char** json_out);

/* family is "prism" or "crossed-prism". Runs the PMH check against the
 * built-in expectation table; even crossed prisms additionally cross-check
 * the constructive extension against the exhaustive search per matching. */
int pmh_verify_instance(const char* family, int n, int jobs, unsigned long long cap,
                        double timeout_s, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* PMH_H_ */
