#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "solver.hpp"

namespace lowd {

enum class SolverKind { Lowd, Greedy, GreedyPP, FrankWolfe, Mwu, Flow };

const char* solver_name(SolverKind kind);
std::optional<SolverKind> parse_solver(std::string_view name);

struct RunOptions {
    std::uint64_t iters = 1000;
    bool certify = false;
    bool record_trace = false;
    double flow_eps = 0.0;
    std::uint64_t wall_limit_ns = 0;
};

struct RunOutput {
    DensestResult result;
    std::vector<double> loads;  // final node loads; empty for greedy/flow
    std::vector<TraceRow> trace;
};

// Single entry point over all solvers; iters means sweeps for the iterative
// solvers and rounds for repeated peeling.
RunOutput run_solver(const Graph& g, SolverKind kind, const RunOptions& opts);

struct BenchOptions {
    std::vector<SolverKind> solvers;
    std::uint64_t iters = 100;
    bool with_timing = true;  // false writes elapsed_ns as 0 for reproducible bytes
    std::uint64_t wall_limit_ns = 0;
};

struct BenchSummary {
    SolverKind kind;
    std::uint64_t wall_ns;
    double best_density;
    std::uint64_t rows;
};

// Runs every solver with identical initialization on the same graph and writes
// one CSV per solver into out_dir:
//   sweep,elapsed_ns,dual_D,best_density,qp_objective,relative_error
// The relative-error reference is the best final density across the run's
// solvers. iters = 0 emits only the init-state row.
std::vector<BenchSummary> bench(const Graph& g, const BenchOptions& opts, const std::string& out_dir);

// The 5-column per-solver trace without the error column.
void write_trace_csv(const std::vector<TraceRow>& trace, const std::string& path, bool with_timing);

}  // namespace lowd
