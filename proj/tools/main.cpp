// lowd command line: pruning, densest-subgraph solvers, decompositions and
// verification against exact oracles, all through the shared-library C API.

#include <charconv>
#include <cinttypes>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <memory>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "lowd/lowd.h"

namespace {

struct GraphDeleter {
    void operator()(lowd_graph* g) const { lowd_graph_free(g); }
};
struct ResultDeleter {
    void operator()(lowd_result* r) const { lowd_result_free(r); }
};
struct PruneDeleter {
    void operator()(lowd_prune_result* r) const { lowd_prune_result_free(r); }
};
struct DecompositionDeleter {
    void operator()(lowd_decomposition* d) const { lowd_decomposition_free(d); }
};

using GraphPtr = std::unique_ptr<lowd_graph, GraphDeleter>;
using ResultPtr = std::unique_ptr<lowd_result, ResultDeleter>;
using PrunePtr = std::unique_ptr<lowd_prune_result, PruneDeleter>;
using DecompositionPtr = std::unique_ptr<lowd_decomposition, DecompositionDeleter>;

std::string fmt(double x) {
    char buf[32];
    auto [ptr, ec] = std::to_chars(buf, buf + sizeof(buf), x);
    (void)ec;
    return std::string(buf, ptr);
}

[[noreturn]] void fail(lowd_status s) {
    std::fprintf(stderr, "error: %s: %s\n", lowd_status_name(s), lowd_last_error());
    std::exit(s == LOWD_ERR_INTERNAL ? 1 : 2);
}

void check(lowd_status s) {
    if (s != LOWD_OK) fail(s);
}

GraphPtr load_graph(const std::string& path, bool weighted) {
    lowd_graph* g = nullptr;
    check(lowd_graph_load_file(path.c_str(), weighted ? 1 : 0, &g));
    return GraphPtr(g);
}

// Replaces *g with the induced subgraph on its prune survivors.
PrunePtr apply_prune(GraphPtr& g) {
    lowd_prune_result* pr = nullptr;
    check(lowd_prune(g.get(), 0, 0, &pr));
    PrunePtr prune(pr);
    lowd_graph* sub = nullptr;
    check(lowd_graph_induce(g.get(), lowd_prune_survivors(pr), lowd_prune_survivor_count(pr), &sub));
    g.reset(sub);
    return prune;
}

void print_members(const lowd_graph* g, const lowd_result* r) {
    std::printf("members");
    const uint32_t* members = lowd_result_members(r);
    for (uint32_t i = 0; i < lowd_result_member_count(r); ++i)
        std::printf(" %" PRIu64, lowd_graph_original_id(g, members[i]));
    std::printf("\n");
}

int cmd_prune(const std::string& path, bool weighted, bool buckets, std::uint64_t cap,
              const std::string& csv_path) {
    GraphPtr g = load_graph(path, weighted);
    lowd_prune_result* pr = nullptr;
    check(lowd_prune(g.get(), cap, buckets ? 1 : 0, &pr));
    PrunePtr prune(pr);

    std::printf("nodes %u\nedges %u\n", lowd_graph_node_count(g.get()), lowd_graph_edge_count(g.get()));
    std::printf("survivors %u\n", lowd_prune_survivor_count(pr));
    std::printf("delta %s\n", fmt(lowd_prune_delta(pr)).c_str());
    std::printf("rounds %" PRIu64 "\n", lowd_prune_rounds(pr));

    if (!csv_path.empty()) {
        std::ofstream f(csv_path, std::ios::binary);
        if (!f) {
            std::fprintf(stderr, "error: cannot write '%s'\n", csv_path.c_str());
            return 2;
        }
        uint64_t n_deltas = 0, n_deleted = 0;
        const double* deltas = lowd_prune_delta_per_round(pr, &n_deltas);
        const uint64_t* deleted = lowd_prune_deleted_per_round(pr, &n_deleted);
        f << "round,deleted,delta\n";
        for (uint64_t i = 0; i < n_deltas; ++i)
            f << (i + 1) << ',' << (i < n_deleted ? deleted[i] : 0) << ',' << fmt(deltas[i]) << '\n';
    }
    return 0;
}

int cmd_dsp(const std::string& path, bool weighted, const std::string& solver_name,
            std::uint64_t iters, bool certify, bool use_prune, double flow_eps,
            const std::string& trace_path, bool no_timing, bool members) {
    lowd_solver solver;
    check(lowd_solver_from_name(solver_name.c_str(), &solver));

    GraphPtr g = load_graph(path, weighted);
    std::printf("nodes %u\nedges %u\n", lowd_graph_node_count(g.get()), lowd_graph_edge_count(g.get()));
    if (use_prune) {
        PrunePtr prune = apply_prune(g);
        std::printf("pruned_nodes %u\npruned_delta %s\n", lowd_graph_node_count(g.get()),
                    fmt(lowd_prune_delta(prune.get())).c_str());
    }

    lowd_solve_options opts{solver, iters, certify ? 1 : 0, trace_path.empty() ? 0 : 1, flow_eps};
    lowd_result* raw = nullptr;
    check(lowd_solve(g.get(), &opts, &raw));
    ResultPtr result(raw);

    std::printf("solver %s\n", lowd_solver_to_name(solver));
    std::printf("density %s\n", fmt(lowd_result_density(raw)).c_str());
    std::printf("size %u\n", lowd_result_member_count(raw));
    std::printf("sweeps %" PRIu64 "\n", lowd_result_sweeps(raw));
    std::printf("certificate_gap %s\n", fmt(lowd_result_certificate_gap(raw)).c_str());
    std::printf("certified %s\n", lowd_result_certified(raw) ? "yes" : "no");
    if (members) print_members(g.get(), raw);

    if (!trace_path.empty())
        check(lowd_write_trace_csv(raw, trace_path.c_str(), no_timing ? 0 : 1));
    return 0;
}

int cmd_ldd(const std::string& path, bool weighted, bool exact, std::uint64_t iters, double tol) {
    GraphPtr g = load_graph(path, weighted);
    lowd_decomposition* raw = nullptr;
    if (exact)
        check(lowd_ldd_exact(g.get(), &raw));
    else
        check(lowd_ldd(g.get(), iters, tol, &raw));
    DecompositionPtr dec(raw);

    std::printf("level_index,lambda,size,node_ids\n");
    for (uint32_t i = 0; i < lowd_decomposition_level_count(raw); ++i) {
        std::printf("%u,%s,%u,", i + 1, fmt(lowd_decomposition_lambda(raw, i)).c_str(),
                    lowd_decomposition_level_size(raw, i));
        const uint32_t* nodes = lowd_decomposition_level_nodes(raw, i);
        for (uint32_t j = 0; j < lowd_decomposition_level_size(raw, i); ++j)
            std::printf("%s%" PRIu64, j ? " " : "", lowd_graph_original_id(g.get(), nodes[j]));
        std::printf("\n");
    }
    if (!lowd_decomposition_consistent(raw))
        std::fprintf(stderr, "warning: level densities not strictly decreasing; run more sweeps\n");
    return 0;
}

int cmd_dks_bound(const std::string& path, bool weighted, std::uint32_t k, bool exact,
                  std::uint64_t iters, double tol) {
    GraphPtr g = load_graph(path, weighted);
    lowd_decomposition* raw = nullptr;
    if (exact)
        check(lowd_ldd_exact(g.get(), &raw));
    else
        check(lowd_ldd(g.get(), iters, tol, &raw));
    DecompositionPtr dec(raw);

    double bound = 0.0;
    check(lowd_dks_upper_bound(raw, k, &bound));
    std::printf("k %u\ndks_upper_bound %s\n", k, fmt(bound).c_str());
    return 0;
}

int cmd_verify(const std::string& oracle, std::uint64_t seed, std::uint32_t count,
               std::uint64_t max_sweeps) {
    if (oracle != "brute" && oracle != "flow") {
        std::fprintf(stderr, "error: usage error: unknown oracle '%s'\n", oracle.c_str());
        return 2;
    }

    uint32_t certified = 0, failures = 0;
    for (uint32_t i = 0; i < count; ++i) {
        uint32_t n = 3 + i % 8;
        double p = (i / 8) % 3 == 0 ? 0.3 : ((i / 8) % 3 == 1 ? 0.5 : 0.7);
        uint64_t graph_seed = seed * 0x9e3779b97f4a7c15ULL + i;

        char* text = nullptr;
        size_t len = 0;
        check(lowd_generate_gnp(n, p, 0, graph_seed, &text, &len));
        lowd_graph* graw = nullptr;
        lowd_status s = lowd_graph_load_buffer(text, len, 0, &graw);
        lowd_buffer_free(text);
        check(s);
        GraphPtr g(graw);

        lowd_solve_options opts{LOWD_SOLVER_LOWD, max_sweeps, 1, 0, 0.0};
        lowd_result* rraw = nullptr;
        check(lowd_solve(g.get(), &opts, &rraw));
        ResultPtr result(rraw);

        lowd_result* oraw = nullptr;
        if (oracle == "brute") {
            check(lowd_brute_force_densest(g.get(), &oraw));
        } else {
            lowd_solve_options flow_opts{LOWD_SOLVER_FLOW, 0, 0, 0, 0.0};
            check(lowd_solve(g.get(), &flow_opts, &oraw));
        }
        ResultPtr expect(oraw);

        if (!lowd_result_certified(rraw)) {
            std::printf("graph %u: FAIL not certified within %" PRIu64 " sweeps\n", i, max_sweeps);
            ++failures;
            continue;
        }
        ++certified;
        if (lowd_result_density(rraw) != lowd_result_density(oraw)) {
            std::printf("graph %u: FAIL certified density %s but oracle found %s\n", i,
                        fmt(lowd_result_density(rraw)).c_str(), fmt(lowd_result_density(oraw)).c_str());
            ++failures;
        }
    }

    std::printf("checked %u\ncertified %u\nfailures %u\n", count, certified, failures);
    return failures == 0 ? 0 : 3;
}

int cmd_bench(const std::string& path, bool weighted, const std::string& solvers_arg,
              std::uint64_t iters, bool use_prune, const std::string& out_dir, bool no_timing) {
    std::vector<int> solvers;
    std::size_t pos = 0;
    while (pos <= solvers_arg.size()) {
        std::size_t comma = solvers_arg.find(',', pos);
        std::string name = solvers_arg.substr(pos, comma == std::string::npos ? std::string::npos : comma - pos);
        lowd_solver s;
        check(lowd_solver_from_name(name.c_str(), &s));
        solvers.push_back(s);
        if (comma == std::string::npos) break;
        pos = comma + 1;
    }

    GraphPtr g = load_graph(path, weighted);
    if (use_prune) {
        PrunePtr prune = apply_prune(g);
        std::printf("pruned_nodes %u\n", lowd_graph_node_count(g.get()));
    }

    std::vector<lowd_bench_summary> summaries(solvers.size());
    check(lowd_bench_run(g.get(), solvers.data(), static_cast<uint32_t>(solvers.size()), iters,
                         no_timing ? 0 : 1, out_dir.c_str(), summaries.data()));

    for (const lowd_bench_summary& s : summaries)
        std::printf("solver %s wall_ns %" PRIu64 " best_density %s rows %" PRIu64 "\n",
                    lowd_solver_to_name(static_cast<lowd_solver>(s.solver)), s.wall_ns,
                    fmt(s.best_density).c_str(), s.rows);
    std::printf("out_dir %s\n", out_dir.c_str());
    return 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"densest subgraphs and locally-dense decompositions"};
    app.require_subcommand(1);

    std::string path, trace_path, csv_path, solver = "lowd", oracle = "brute";
    std::string solvers = "lowd,greedypp,fw,mwu", out_dir = "bench_out";
    bool weighted = false, certify = false, use_prune = false, buckets = false;
    bool exact = false, no_timing = false, members = false;
    std::uint64_t iters = 1000, cap = 0, seed = 1, max_sweeps = 10000;
    std::uint32_t k = 1, count = 60;
    double tol = 1e-3, flow_eps = 0.0;

    auto* prune_cmd = app.add_subcommand("prune", "density lower-bound pruning");
    prune_cmd->add_option("graph", path)->required();
    prune_cmd->add_flag("--weighted", weighted, "input has a weight column");
    prune_cmd->add_flag("--buckets", buckets, "force the counting-sort variant");
    prune_cmd->add_option("--cap", cap, "max deleting rounds, 0 = unlimited");
    prune_cmd->add_option("--rounds-csv", csv_path, "write per-round counts as CSV");

    auto* dsp_cmd = app.add_subcommand("dsp", "densest subgraph search");
    dsp_cmd->add_option("graph", path)->required();
    dsp_cmd->add_option("--solver", solver, "lowd|greedy|greedypp|fw|mwu|flow");
    dsp_cmd->add_option("--iters", iters, "sweep or round budget");
    dsp_cmd->add_flag("--certify", certify, "stop on the unweighted optimality certificate");
    dsp_cmd->add_flag("--prune", use_prune, "prune before solving");
    dsp_cmd->add_flag("--weighted", weighted);
    dsp_cmd->add_option("--flow-eps", flow_eps, "binary search gap for --solver flow");
    dsp_cmd->add_option("--trace", trace_path, "write per-sweep trace CSV");
    dsp_cmd->add_flag("--no-timing", no_timing, "zero the elapsed_ns trace column");
    dsp_cmd->add_flag("--members", members, "print member nodes (original ids)");

    auto* ldd_cmd = app.add_subcommand("ldd", "locally-dense decomposition");
    ldd_cmd->add_option("graph", path)->required();
    ldd_cmd->add_flag("--weighted", weighted);
    ldd_cmd->add_flag("--exact", exact, "enumeration oracle (<= 15 nodes)");
    ldd_cmd->add_option("--iters", iters, "sweep budget");
    ldd_cmd->add_option("--tol", tol, "level grouping tolerance");

    auto* dks_cmd = app.add_subcommand("dks-bound", "density upper bound for k-subgraphs");
    dks_cmd->add_option("graph", path)->required();
    dks_cmd->add_option("--k", k)->required();
    dks_cmd->add_flag("--weighted", weighted);
    dks_cmd->add_flag("--exact", exact);
    dks_cmd->add_option("--iters", iters);
    dks_cmd->add_option("--tol", tol);

    auto* verify_cmd = app.add_subcommand("verify", "certified solves vs an exact oracle");
    verify_cmd->add_option("--oracle", oracle, "brute|flow");
    verify_cmd->add_option("--seed", seed, "corpus seed");
    verify_cmd->add_option("--count", count, "number of graphs");
    verify_cmd->add_option("--max-sweeps", max_sweeps);

    auto* bench_cmd = app.add_subcommand("bench", "convergence traces for several solvers");
    bench_cmd->add_option("graph", path)->required();
    bench_cmd->add_option("--solvers", solvers, "comma-separated solver list");
    bench_cmd->add_option("--iters", iters);
    bench_cmd->add_flag("--prune", use_prune);
    bench_cmd->add_flag("--weighted", weighted);
    bench_cmd->add_option("--out", out_dir, "directory for per-solver CSVs");
    bench_cmd->add_flag("--no-timing", no_timing, "zero elapsed_ns for byte-stable output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;  // usage problems exit like validation errors
    }

    if (prune_cmd->parsed()) return cmd_prune(path, weighted, buckets, cap, csv_path);
    if (dsp_cmd->parsed())
        return cmd_dsp(path, weighted, solver, iters, certify, use_prune, flow_eps, trace_path,
                       no_timing, members);
    if (ldd_cmd->parsed()) return cmd_ldd(path, weighted, exact, iters, tol);
    if (dks_cmd->parsed()) return cmd_dks_bound(path, weighted, k, exact, iters, tol);
    if (verify_cmd->parsed()) return cmd_verify(oracle, seed, count, max_sweeps);
    if (bench_cmd->parsed()) return cmd_bench(path, weighted, solvers, iters, use_prune, out_dir, no_timing);
    return 2;
}
