#include "lowd/lowd.h"

#include <cstring>
#include <memory>
#include <new>
#include <stdexcept>
#include <string>

#include "bench.hpp"
#include "decomposition.hpp"
#include "errors.hpp"
#include "graph.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "pruner.hpp"
#include "random_graph.hpp"
#include "solver.hpp"

struct lowd_graph {
    explicit lowd_graph(lowd::Graph g) : impl(std::move(g)) {}
    lowd::Graph impl;
};

struct lowd_prune_result {
    lowd::PruneResult impl;
};

struct lowd_result {
    lowd::DensestResult impl;
    std::vector<double> loads;
    std::vector<lowd::TraceRow> trace;
};

struct lowd_decomposition {
    lowd::Decomposition impl;
};

namespace {

thread_local std::string g_last_error;

template <typename Fn>
lowd_status wrap(Fn&& fn) noexcept {
    try {
        fn();
        g_last_error.clear();
        return LOWD_OK;
    } catch (const lowd::ParseError& e) {
        g_last_error = e.what();
        return LOWD_ERR_PARSE;
    } catch (const lowd::ValidationError& e) {
        g_last_error = e.what();
        return LOWD_ERR_VALIDATION;
    } catch (const lowd::SizeError& e) {
        g_last_error = e.what();
        return LOWD_ERR_SIZE;
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return LOWD_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return LOWD_ERR_INTERNAL;
    }
}

char* copy_buffer(const std::string& s, size_t* len) {
    char* buf = new char[s.size() + 1];
    std::memcpy(buf, s.data(), s.size());
    buf[s.size()] = '\0';
    if (len) *len = s.size();
    return buf;
}

lowd::SolverKind to_kind(int solver) {
    switch (solver) {
        case LOWD_SOLVER_LOWD: return lowd::SolverKind::Lowd;
        case LOWD_SOLVER_GREEDY: return lowd::SolverKind::Greedy;
        case LOWD_SOLVER_GREEDYPP: return lowd::SolverKind::GreedyPP;
        case LOWD_SOLVER_FW: return lowd::SolverKind::FrankWolfe;
        case LOWD_SOLVER_MWU: return lowd::SolverKind::Mwu;
        case LOWD_SOLVER_FLOW: return lowd::SolverKind::Flow;
        default: throw lowd::ValidationError("unknown solver id " + std::to_string(solver));
    }
}

}  // namespace

const char* lowd_status_name(lowd_status s) {
    switch (s) {
        case LOWD_OK: return "ok";
        case LOWD_ERR_PARSE: return "parse error";
        case LOWD_ERR_VALIDATION: return "validation error";
        case LOWD_ERR_SIZE: return "size error";
        case LOWD_ERR_USAGE: return "usage error";
        case LOWD_ERR_INTERNAL: return "internal error";
    }
    return "?";
}

const char* lowd_last_error(void) { return g_last_error.c_str(); }

lowd_status lowd_graph_load_buffer(const char* data, size_t len, int weighted, lowd_graph** out) {
    return wrap([&] {
        *out = new lowd_graph(lowd::Graph::from_edge_list({data, len}, weighted != 0));
    });
}

lowd_status lowd_graph_load_file(const char* path, int weighted, lowd_graph** out) {
    return wrap([&] { *out = new lowd_graph(lowd::Graph::from_file(path, weighted != 0)); });
}

void lowd_graph_free(lowd_graph* g) { delete g; }

uint32_t lowd_graph_node_count(const lowd_graph* g) { return g->impl.node_count(); }
uint32_t lowd_graph_edge_count(const lowd_graph* g) { return g->impl.edge_count(); }
double lowd_graph_total_weight(const lowd_graph* g) { return g->impl.total_weight(); }
int lowd_graph_is_unweighted(const lowd_graph* g) { return g->impl.is_unweighted() ? 1 : 0; }
uint64_t lowd_graph_original_id(const lowd_graph* g, uint32_t node) {
    return g->impl.original_id(node);
}

lowd_status lowd_graph_density(const lowd_graph* g, const uint32_t* nodes, uint32_t count,
                               double* out) {
    return wrap([&] { *out = lowd::density(g->impl, {nodes, count}); });
}

lowd_status lowd_graph_induce(const lowd_graph* g, const uint32_t* nodes, uint32_t count,
                              lowd_graph** out) {
    return wrap([&] { *out = new lowd_graph(g->impl.induce({nodes, count})); });
}

lowd_status lowd_graph_serialize(const lowd_graph* g, char** out, size_t* len) {
    return wrap([&] { *out = copy_buffer(g->impl.serialize(), len); });
}

void lowd_buffer_free(char* buf) { delete[] buf; }

lowd_status lowd_generate_gnp(uint32_t n, double p, int weighted, uint64_t seed, char** out,
                              size_t* len) {
    return wrap([&] { *out = copy_buffer(lowd::gnp_edge_list(n, p, weighted != 0, seed), len); });
}

lowd_status lowd_prune(const lowd_graph* g, uint64_t round_cap, int force_buckets,
                       lowd_prune_result** out) {
    return wrap([&] {
        auto r = std::make_unique<lowd_prune_result>();
        if (force_buckets)
            r->impl = lowd::prune_unweighted(g->impl);
        else
            r->impl = lowd::prune(g->impl, {round_cap});
        *out = r.release();
    });
}

void lowd_prune_result_free(lowd_prune_result* r) { delete r; }

uint32_t lowd_prune_survivor_count(const lowd_prune_result* r) {
    return static_cast<uint32_t>(r->impl.survivors.size());
}
const uint32_t* lowd_prune_survivors(const lowd_prune_result* r) {
    return r->impl.survivors.data();
}
double lowd_prune_delta(const lowd_prune_result* r) { return r->impl.delta; }
uint64_t lowd_prune_rounds(const lowd_prune_result* r) { return r->impl.rounds; }
const uint64_t* lowd_prune_deleted_per_round(const lowd_prune_result* r, uint64_t* count) {
    if (count) *count = r->impl.deleted_per_round.size();
    return r->impl.deleted_per_round.data();
}
const double* lowd_prune_delta_per_round(const lowd_prune_result* r, uint64_t* count) {
    if (count) *count = r->impl.delta_per_round.size();
    return r->impl.delta_per_round.data();
}

lowd_status lowd_is_delta_core(const lowd_graph* g, const uint32_t* nodes, uint32_t count,
                               double delta, int* out) {
    return wrap([&] { *out = lowd::is_delta_core(g->impl, {nodes, count}, delta) ? 1 : 0; });
}

lowd_status lowd_solver_from_name(const char* name, lowd_solver* out) {
    auto kind = lowd::parse_solver(name ? name : "");
    if (!kind) {
        g_last_error = std::string("unknown solver '") + (name ? name : "") + "'";
        return LOWD_ERR_USAGE;
    }
    switch (*kind) {
        case lowd::SolverKind::Lowd: *out = LOWD_SOLVER_LOWD; break;
        case lowd::SolverKind::Greedy: *out = LOWD_SOLVER_GREEDY; break;
        case lowd::SolverKind::GreedyPP: *out = LOWD_SOLVER_GREEDYPP; break;
        case lowd::SolverKind::FrankWolfe: *out = LOWD_SOLVER_FW; break;
        case lowd::SolverKind::Mwu: *out = LOWD_SOLVER_MWU; break;
        case lowd::SolverKind::Flow: *out = LOWD_SOLVER_FLOW; break;
    }
    return LOWD_OK;
}

const char* lowd_solver_to_name(lowd_solver s) { return lowd::solver_name(to_kind(s)); }

lowd_status lowd_solve(const lowd_graph* g, const lowd_solve_options* options, lowd_result** out) {
    return wrap([&] {
        lowd::RunOptions ro;
        ro.iters = options->iters;
        ro.certify = options->certify != 0;
        ro.record_trace = options->record_trace != 0;
        ro.flow_eps = options->flow_eps;
        lowd::RunOutput run = lowd::run_solver(g->impl, to_kind(options->solver), ro);
        auto r = std::make_unique<lowd_result>();
        r->impl = std::move(run.result);
        r->loads = std::move(run.loads);
        r->trace = std::move(run.trace);
        *out = r.release();
    });
}

void lowd_result_free(lowd_result* r) { delete r; }

double lowd_result_density(const lowd_result* r) { return r->impl.density; }
uint32_t lowd_result_member_count(const lowd_result* r) {
    return static_cast<uint32_t>(r->impl.members.size());
}
const uint32_t* lowd_result_members(const lowd_result* r) { return r->impl.members.data(); }
uint64_t lowd_result_sweeps(const lowd_result* r) { return r->impl.sweeps; }
double lowd_result_certificate_gap(const lowd_result* r) { return r->impl.certificate_gap; }
int lowd_result_certified(const lowd_result* r) { return r->impl.certified ? 1 : 0; }
uint64_t lowd_result_trace_len(const lowd_result* r) { return r->trace.size(); }

lowd_trace_row lowd_result_trace_row(const lowd_result* r, uint64_t i) {
    const lowd::TraceRow& row = r->trace[i];
    return {row.sweep, row.elapsed_ns, row.dual, row.best_density, row.qp};
}

const double* lowd_result_loads(const lowd_result* r, uint32_t* count) {
    if (count) *count = static_cast<uint32_t>(r->loads.size());
    return r->loads.empty() ? nullptr : r->loads.data();
}

lowd_status lowd_brute_force_densest(const lowd_graph* g, lowd_result** out) {
    return wrap([&] {
        auto r = std::make_unique<lowd_result>();
        r->impl = lowd::brute_force_densest(g->impl);
        *out = r.release();
    });
}

lowd_status lowd_brute_force_dks(const lowd_graph* g, uint32_t k, double* out) {
    return wrap([&] { *out = lowd::brute_force_dks(g->impl, k); });
}

lowd_status lowd_ldd(const lowd_graph* g, uint64_t iters, double tol, lowd_decomposition** out) {
    return wrap([&] {
        lowd::LowdOptions opts;
        opts.max_sweeps = iters;
        lowd::LowdOutput run = lowd::lowd_solve(g->impl, opts);
        auto d = std::make_unique<lowd_decomposition>();
        d->impl = lowd::group_levels(g->impl, run.dist, tol);
        *out = d.release();
    });
}

lowd_status lowd_ldd_exact(const lowd_graph* g, lowd_decomposition** out) {
    return wrap([&] {
        auto d = std::make_unique<lowd_decomposition>();
        d->impl = lowd::exact_ldd(g->impl);
        *out = d.release();
    });
}

void lowd_decomposition_free(lowd_decomposition* d) { delete d; }

uint32_t lowd_decomposition_level_count(const lowd_decomposition* d) {
    return static_cast<uint32_t>(d->impl.levels.size());
}
double lowd_decomposition_lambda(const lowd_decomposition* d, uint32_t level) {
    return d->impl.lambdas[level];
}
uint32_t lowd_decomposition_level_size(const lowd_decomposition* d, uint32_t level) {
    return static_cast<uint32_t>(d->impl.levels[level].size());
}
const uint32_t* lowd_decomposition_level_nodes(const lowd_decomposition* d, uint32_t level) {
    return d->impl.levels[level].data();
}
int lowd_decomposition_consistent(const lowd_decomposition* d) {
    return d->impl.nested_consistent ? 1 : 0;
}

lowd_status lowd_dks_upper_bound(const lowd_decomposition* d, uint32_t k, double* out) {
    return wrap([&] { *out = lowd::dks_upper_bound(d->impl, k); });
}

lowd_status lowd_relative_error(double rho_star, double rho, double* out) {
    return wrap([&] { *out = lowd::relative_error(rho_star, rho); });
}

double lowd_qp_error(double current, double optimum) { return lowd::qp_error(current, optimum); }

lowd_status lowd_bench_run(const lowd_graph* g, const int* solvers, uint32_t n_solvers,
                           uint64_t iters, int with_timing, const char* out_dir,
                           lowd_bench_summary* summaries) {
    return wrap([&] {
        lowd::BenchOptions opts;
        for (uint32_t i = 0; i < n_solvers; ++i) opts.solvers.push_back(to_kind(solvers[i]));
        opts.iters = iters;
        opts.with_timing = with_timing != 0;
        std::vector<lowd::BenchSummary> out = lowd::bench(g->impl, opts, out_dir);
        for (uint32_t i = 0; i < n_solvers; ++i) {
            summaries[i].solver = solvers[i];
            summaries[i].wall_ns = out[i].wall_ns;
            summaries[i].best_density = out[i].best_density;
            summaries[i].rows = out[i].rows;
        }
    });
}

lowd_status lowd_write_trace_csv(const lowd_result* r, const char* path, int with_timing) {
    return wrap([&] { lowd::write_trace_csv(r->trace, path, with_timing != 0); });
}
