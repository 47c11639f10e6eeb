/* circ: certifying circumference classifier for simple 2-connected
 * graphs. C surface over the C++ core: opaque handles, status codes,
 * caller-owned buffers. All functions are thread-safe; handles are
 * immutable after creation and may be shared across threads.
 */
#ifndef CIRC_H
#define CIRC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct circ_graph circ_graph;
typedef struct circ_verdict circ_verdict;
typedef struct circ_enum circ_enum;

typedef enum circ_status {
  CIRC_OK = 0,
  CIRC_ERR_NULL_ARGUMENT,
  CIRC_ERR_LOOP_EDGE,
  CIRC_ERR_VERTEX_OUT_OF_RANGE,
  CIRC_ERR_MALFORMED_HEADER,
  CIRC_ERR_TRUNCATED_BITS,
  CIRC_ERR_NON_ASCII_BYTE,
  CIRC_ERR_TOO_LARGE,
  CIRC_ERR_EMPTY_GRAPH,
  CIRC_ERR_BAD_PARAMETERS,
  CIRC_ERR_BUDGET_EXCEEDED,
  CIRC_ERR_DISCONNECTED,
  CIRC_ERR_NOT_TWO_CONNECTED,
  CIRC_ERR_NO_FAN,
  CIRC_ERR_NOT_ON_PATH,
  CIRC_ERR_ORDER_VIOLATION,
  CIRC_ERR_THEOREM_VIOLATION,
  CIRC_ERR_BUFFER_TOO_SMALL,
  CIRC_ERR_UNKNOWN
} circ_status;

typedef enum circ_engine {
  CIRC_ENGINE_ORACLE = 0,
  CIRC_ENGINE_PROOF = 1
} circ_engine;

typedef enum circ_verdict_tag {
  CIRC_VERDICT_HAMILTONIAN = 0,
  CIRC_VERDICT_LONG_CYCLE = 1,
  CIRC_VERDICT_JOIN_STRUCTURE = 2
} circ_verdict_tag;

/* Stable snake_case name of a status code. */
const char* circ_status_name(circ_status status);
const char* circ_version(void);
/* Message of the most recent failure on this thread, empty if none. */
const char* circ_last_error(void);

/* --- graphs ------------------------------------------------------- */

/* One graph6 line (short form up to 62 vertices; long-form order
 * header accepted, larger orders rejected). */
circ_status circ_graph_parse_g6(const char* line, circ_graph** out);
/* endpoints holds 2*edge_count vertex ids: u0,v0,u1,v1,... */
circ_status circ_graph_from_edges(int32_t order, const int32_t* endpoints,
                                  int32_t edge_count, circ_graph** out);
/* Hub on `delta` vertices joined with an edgeless part of size m > delta.
 * inner_policy is "empty", "complete" or "random" (seeded). */
circ_status circ_graph_join_family(int32_t delta, int32_t m,
                                   const char* inner_policy, uint64_t seed,
                                   circ_graph** out);
void circ_graph_free(circ_graph* g);

int32_t circ_graph_order(const circ_graph* g);
int32_t circ_graph_edge_count(const circ_graph* g);
int32_t circ_graph_degree(const circ_graph* g, int32_t v);
int32_t circ_graph_min_degree(const circ_graph* g); /* -1 when empty */
int32_t circ_graph_has_edge(const circ_graph* g, int32_t u, int32_t v);
int32_t circ_graph_is_two_connected(const circ_graph* g);
/* NUL-terminated graph6 line into the caller's buffer. */
circ_status circ_graph_encode_g6(const circ_graph* g, char* buffer,
                                 size_t capacity, size_t* length_out);

/* --- exact oracles and the constructive bound --------------------- */

/* Witness vertices go into the caller's buffer. *length_out = 0 means
 * no such cycle (acyclic input / no Hamilton cycle). On
 * CIRC_ERR_BUFFER_TOO_SMALL, *length_out carries the required size. */
circ_status circ_longest_cycle(const circ_graph* g, int32_t* cycle,
                               size_t capacity, size_t* length_out);
circ_status circ_hamilton_cycle(const circ_graph* g, int32_t* cycle,
                                size_t capacity, size_t* length_out);
/* Cycle of length >= min(order, 2*min_degree); needs 2-connectivity. */
circ_status circ_dirac_cycle(const circ_graph* g, int32_t* cycle,
                             size_t capacity, size_t* length_out);

/* --- classification ------------------------------------------------ */

circ_status circ_classify(const circ_graph* g, circ_engine engine,
                          circ_verdict** out);
/* Same with an explicit node budget for the proof engine's path search
 * (0 = default). When the budget runs out the proof engine falls back
 * to the oracles and the verdict says so. */
circ_status circ_classify_with_budget(const circ_graph* g, circ_engine engine,
                                      int64_t search_budget,
                                      circ_verdict** out);
void circ_verdict_free(circ_verdict* v);
circ_verdict_tag circ_verdict_kind(const circ_verdict* v);
/* Engine that actually produced the verdict; a proof run that fell back
 * to the oracles reports CIRC_ENGINE_ORACLE. */
circ_engine circ_verdict_engine(const circ_verdict* v);
circ_status circ_verdict_cycle(const circ_verdict* v, int32_t* buffer,
                               size_t capacity, size_t* length_out);
circ_status circ_verdict_hub(const circ_verdict* v, int32_t* buffer,
                             size_t capacity, size_t* length_out);
circ_status circ_verdict_independent(const circ_verdict* v, int32_t* buffer,
                                     size_t capacity, size_t* length_out);
/* 1 when the certificate independently verifies against g, else 0;
 * -1 on null arguments. Uses adjacency queries only. */
int32_t circ_verify_verdict(const circ_graph* g, const circ_verdict* v);

/* Biconditional check: circumference <= 2*min_degree holds exactly when
 * the join recognizer succeeds. Needs 2-connectivity and
 * order >= 2*min_degree + 1. */
circ_status circ_check_characterization(const circ_graph* g,
                                        int32_t* holds_out);

/* --- labeled enumeration (order <= 7) ------------------------------ */

circ_status circ_enum_total(int32_t order, uint64_t* total_out);
/* Streams edge-mask codes in [begin, end); pass 0, total for all. */
circ_status circ_enum_new(int32_t order, uint64_t begin, uint64_t end,
                          circ_enum** out);
/* 1 = yielded a graph (caller frees), 0 = exhausted, -1 = error. */
int32_t circ_enum_next(circ_enum* e, circ_graph** out);
void circ_enum_free(circ_enum* e);

#ifdef __cplusplus
}
#endif

#endif /* CIRC_H */
