/* latmax C API: exact solvers for budget-bounded influence maximization
 * under the weighted threshold model with a round limit.
 *
 * All functions returning latmax_status report failures through the code
 * and leave out-parameters untouched; latmax_last_error() carries the
 * message for the current thread. Objects are opaque; free them with the
 * matching *_free function. Strings returned through char** out-parameters
 * are heap-allocated and released with latmax_string_free.
 */

#ifndef LATMAX_H
#define LATMAX_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef struct latmax_instance latmax_instance;
typedef struct latmax_solution latmax_solution;

typedef enum latmax_status {
  LATMAX_OK = 0,
  LATMAX_ERROR_PARSE = 1,
  LATMAX_ERROR_PRECONDITION = 2,
  LATMAX_ERROR_UNSUPPORTED_TOPOLOGY = 3,
  LATMAX_ERROR_INVALID_ARGUMENT = 4,
  LATMAX_ERROR_SIZE_GUARD = 5,
  LATMAX_ERROR_IO = 6,
  LATMAX_ERROR_INTERNAL = 7
} latmax_status;

const char* latmax_status_name(latmax_status status);
const char* latmax_last_error(void);
const char* latmax_version(void);
void latmax_string_free(char* s);

/* ---- instances ---- */

latmax_status latmax_instance_parse_json(const char* json, latmax_instance** out);
latmax_status latmax_instance_load_file(const char* path, latmax_instance** out);
latmax_status latmax_instance_to_json(const latmax_instance* instance, char** json_out);
int32_t latmax_instance_node_count(const latmax_instance* instance);
int32_t latmax_instance_lambda(const latmax_instance* instance);
int64_t latmax_instance_budget(const latmax_instance* instance);
void latmax_instance_free(latmax_instance* instance);

/* ---- solving ----
 * topology: "auto", "complete", "tree", "path", "cycle" or "brute".
 */

latmax_status latmax_solve(const latmax_instance* instance, const char* topology,
                           latmax_solution** out);

int64_t latmax_solution_influenced_count(const latmax_solution* solution);
int64_t latmax_solution_cost(const latmax_solution* solution);
size_t latmax_solution_target_set_size(const latmax_solution* solution);
/* Copies up to buf_len ids (sorted ascending); returns the full size. */
size_t latmax_solution_target_set(const latmax_solution* solution, int32_t* buf, size_t buf_len);
latmax_status latmax_solution_to_json(const latmax_solution* solution, char** json_out);
void latmax_solution_free(latmax_solution* solution);

/* ---- diffusion ----
 * lambda < 0 uses the instance's latency bound. The trace JSON holds the
 * activation_round map ("inf" for nodes never influenced), the seeds, and
 * the influenced count.
 */

latmax_status latmax_simulate(const latmax_instance* instance, const int32_t* seeds,
                              size_t n_seeds, int32_t lambda, char** trace_json_out);

/* Minimum cost of influencing at least alpha nodes within the latency
 * bound (paths only). feasible_out is 0 when no target set works, in
 * which case cost_out is untouched. */
latmax_status latmax_min_cost_for_coverage(const latmax_instance* instance, int32_t alpha,
                                           int64_t* cost_out, int32_t* feasible_out);

/* ---- generators ---- */

latmax_status latmax_gen_random(const char* topology, int32_t n, uint64_t seed,
                                int64_t max_weight, int64_t max_threshold, int64_t max_cost,
                                int32_t lambda, int64_t budget, latmax_instance** out);

latmax_status latmax_gen_knapsack_star(const int64_t* profits, const int64_t* weights,
                                       size_t n_items, int64_t capacity, int64_t bound,
                                       latmax_instance** out);

/* graph_json: { "n": int, "edges": [[u,v], ...], "thresholds": [int] } */
latmax_status latmax_gen_clique_embed(const char* graph_json, int32_t lambda, int64_t budget,
                                      latmax_instance** out);

/* ---- introspection & benchmarks ---- */

/* Solves the instance as a tree and renders the DP table as JSON. Node
 * ids refer to the original instance (zero-cost nodes are normalized away
 * and absent). */
latmax_status latmax_dump_tree_tables(const latmax_instance* instance, char** json_out);

/* suite: "path-n", "path-lambda", "tree-beta" or "all". */
latmax_status latmax_bench(const char* suite, char** report_json_out);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* LATMAX_H */
