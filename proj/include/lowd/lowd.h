/* lowd: densest-subgraph detection and locally-dense decomposition.
 *
 * C interface over the C++ core. All functions returning lowd_status set a
 * thread-local error message retrievable via lowd_last_error() on failure.
 * Handles are opaque; every *_new/_load function pairs with a *_free.
 * Node ids in and out of this API are the dense internal ids 0..n-1; use
 * lowd_graph_original_id to translate back to input-file ids.
 */
#ifndef LOWD_H
#define LOWD_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lowd_status {
    LOWD_OK = 0,
    LOWD_ERR_PARSE = 1,      /* malformed input text */
    LOWD_ERR_VALIDATION = 2, /* precondition violated */
    LOWD_ERR_SIZE = 3,       /* instance too large for an exact oracle */
    LOWD_ERR_USAGE = 4,      /* unknown solver or bad call */
    LOWD_ERR_INTERNAL = 5
} lowd_status;

const char* lowd_status_name(lowd_status s);
const char* lowd_last_error(void);

/* ---- graphs ---- */

typedef struct lowd_graph lowd_graph;

lowd_status lowd_graph_load_buffer(const char* data, size_t len, int weighted, lowd_graph** out);
lowd_status lowd_graph_load_file(const char* path, int weighted, lowd_graph** out);
void lowd_graph_free(lowd_graph* g);

uint32_t lowd_graph_node_count(const lowd_graph* g);
uint32_t lowd_graph_edge_count(const lowd_graph* g);
double lowd_graph_total_weight(const lowd_graph* g);
int lowd_graph_is_unweighted(const lowd_graph* g);
uint64_t lowd_graph_original_id(const lowd_graph* g, uint32_t node);

lowd_status lowd_graph_density(const lowd_graph* g, const uint32_t* nodes, uint32_t count,
                               double* out);
lowd_status lowd_graph_induce(const lowd_graph* g, const uint32_t* nodes, uint32_t count,
                              lowd_graph** out);

/* Edge-list text with original ids; free with lowd_buffer_free. */
lowd_status lowd_graph_serialize(const lowd_graph* g, char** out, size_t* len);
void lowd_buffer_free(char* buf);

/* Deterministic G(n,p) edge-list text for corpus generation. */
lowd_status lowd_generate_gnp(uint32_t n, double p, int weighted, uint64_t seed, char** out,
                              size_t* len);

/* ---- pruning ---- */

typedef struct lowd_prune_result lowd_prune_result;

/* round_cap = 0 means unlimited; force_buckets requires a unit-weight graph. */
lowd_status lowd_prune(const lowd_graph* g, uint64_t round_cap, int force_buckets,
                       lowd_prune_result** out);
void lowd_prune_result_free(lowd_prune_result* r);

uint32_t lowd_prune_survivor_count(const lowd_prune_result* r);
const uint32_t* lowd_prune_survivors(const lowd_prune_result* r);
double lowd_prune_delta(const lowd_prune_result* r);
uint64_t lowd_prune_rounds(const lowd_prune_result* r);
const uint64_t* lowd_prune_deleted_per_round(const lowd_prune_result* r, uint64_t* count);
const double* lowd_prune_delta_per_round(const lowd_prune_result* r, uint64_t* count);

/* True iff every node of the set keeps induced degree >= delta inside it. */
lowd_status lowd_is_delta_core(const lowd_graph* g, const uint32_t* nodes, uint32_t count,
                               double delta, int* out);

/* ---- solving ---- */

typedef enum lowd_solver {
    LOWD_SOLVER_LOWD = 0,
    LOWD_SOLVER_GREEDY = 1,
    LOWD_SOLVER_GREEDYPP = 2,
    LOWD_SOLVER_FW = 3,
    LOWD_SOLVER_MWU = 4,
    LOWD_SOLVER_FLOW = 5
} lowd_solver;

lowd_status lowd_solver_from_name(const char* name, lowd_solver* out);
const char* lowd_solver_to_name(lowd_solver s);

typedef struct lowd_solve_options {
    lowd_solver solver;
    uint64_t iters;      /* sweeps, or rounds for greedypp */
    int certify;         /* stop early on the unweighted optimality certificate */
    int record_trace;
    double flow_eps;     /* 0 = automatic */
} lowd_solve_options;

typedef struct lowd_result lowd_result;

typedef struct lowd_trace_row {
    uint64_t sweep;
    uint64_t elapsed_ns;
    double dual;
    double best_density;
    double qp;
} lowd_trace_row;

lowd_status lowd_solve(const lowd_graph* g, const lowd_solve_options* options, lowd_result** out);
void lowd_result_free(lowd_result* r);

double lowd_result_density(const lowd_result* r);
uint32_t lowd_result_member_count(const lowd_result* r);
const uint32_t* lowd_result_members(const lowd_result* r);
uint64_t lowd_result_sweeps(const lowd_result* r);
double lowd_result_certificate_gap(const lowd_result* r);
int lowd_result_certified(const lowd_result* r);
uint64_t lowd_result_trace_len(const lowd_result* r);
lowd_trace_row lowd_result_trace_row(const lowd_result* r, uint64_t i);
/* Final node loads; NULL when the solver has none (greedy, flow). */
const double* lowd_result_loads(const lowd_result* r, uint32_t* count);

/* Exhaustive oracle, up to 20 nodes. */
lowd_status lowd_brute_force_densest(const lowd_graph* g, lowd_result** out);
/* Max density over subsets of exactly k nodes, up to 20 nodes. */
lowd_status lowd_brute_force_dks(const lowd_graph* g, uint32_t k, double* out);

/* ---- decomposition ---- */

typedef struct lowd_decomposition lowd_decomposition;

/* Iterative route: run rebalancing sweeps, then group nodes by load. */
lowd_status lowd_ldd(const lowd_graph* g, uint64_t iters, double tol, lowd_decomposition** out);
/* Enumeration route, up to 15 nodes. */
lowd_status lowd_ldd_exact(const lowd_graph* g, lowd_decomposition** out);
void lowd_decomposition_free(lowd_decomposition* d);

uint32_t lowd_decomposition_level_count(const lowd_decomposition* d);
double lowd_decomposition_lambda(const lowd_decomposition* d, uint32_t level);
uint32_t lowd_decomposition_level_size(const lowd_decomposition* d, uint32_t level);
const uint32_t* lowd_decomposition_level_nodes(const lowd_decomposition* d, uint32_t level);
/* Nested-chain consistency: recomputed level densities strictly decrease. */
int lowd_decomposition_consistent(const lowd_decomposition* d);

lowd_status lowd_dks_upper_bound(const lowd_decomposition* d, uint32_t k, double* out);

/* ---- metrics ---- */

lowd_status lowd_relative_error(double rho_star, double rho, double* out);
double lowd_qp_error(double current, double optimum);

/* ---- benchmarking ---- */

typedef struct lowd_bench_summary {
    int solver;
    uint64_t wall_ns;
    double best_density;
    uint64_t rows;
} lowd_bench_summary;

/* Runs each solver with trace recording and writes <out_dir>/<solver>.csv with
 * columns sweep,elapsed_ns,dual_D,best_density,qp_objective,relative_error.
 * with_timing = 0 zeroes the elapsed column so repeat runs are byte-identical.
 * summaries must hold n_solvers entries. */
lowd_status lowd_bench_run(const lowd_graph* g, const int* solvers, uint32_t n_solvers,
                           uint64_t iters, int with_timing, const char* out_dir,
                           lowd_bench_summary* summaries);

/* 5-column trace (no error column) for a single solve result. */
lowd_status lowd_write_trace_csv(const lowd_result* r, const char* path, int with_timing);

#ifdef __cplusplus
}
#endif

#endif /* LOWD_H */
