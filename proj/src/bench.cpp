#include "bench.hpp"

#include <chrono>
#include <filesystem>
#include <fstream>
#include <limits>
#include <numeric>

#include "baselines.hpp"
#include "errors.hpp"
#include "format.hpp"
#include "metrics.hpp"
#include "oracle.hpp"
#include "peeling.hpp"

namespace lowd {

namespace {

constexpr double kNan = std::numeric_limits<double>::quiet_NaN();

RunOutput init_state_only(const Graph& g, bool record_trace) {
    RunOutput out;
    out.result.members.resize(g.node_count());
    std::iota(out.result.members.begin(), out.result.members.end(), 0);
    out.result.density = g.total_weight() / static_cast<double>(g.node_count());
    if (record_trace) out.trace.push_back({0, 0, kNan, out.result.density, kNan});
    return out;
}

void write_rows(std::ofstream& f, const std::vector<TraceRow>& trace, bool with_timing,
                const double* error_ref) {
    for (const TraceRow& row : trace) {
        f << row.sweep << ',' << (with_timing ? row.elapsed_ns : 0) << ','
          << format_double(row.dual) << ',' << format_double(row.best_density) << ','
          << format_double(row.qp);
        if (error_ref) f << ',' << format_double(relative_error(*error_ref, row.best_density));
        f << '\n';
    }
}

}  // namespace

const char* solver_name(SolverKind kind) {
    switch (kind) {
        case SolverKind::Lowd: return "lowd";
        case SolverKind::Greedy: return "greedy";
        case SolverKind::GreedyPP: return "greedypp";
        case SolverKind::FrankWolfe: return "fw";
        case SolverKind::Mwu: return "mwu";
        case SolverKind::Flow: return "flow";
    }
    return "?";
}

std::optional<SolverKind> parse_solver(std::string_view name) {
    for (SolverKind k : {SolverKind::Lowd, SolverKind::Greedy, SolverKind::GreedyPP,
                         SolverKind::FrankWolfe, SolverKind::Mwu, SolverKind::Flow})
        if (name == solver_name(k)) return k;
    return std::nullopt;
}

RunOutput run_solver(const Graph& g, SolverKind kind, const RunOptions& opts) {
    switch (kind) {
        case SolverKind::Lowd: {
            LowdOutput o = lowd_solve(g, {opts.iters, opts.certify, opts.record_trace, opts.wall_limit_ns});
            return {std::move(o.result), std::move(o.dist.load), std::move(o.trace)};
        }
        case SolverKind::FrankWolfe:
        case SolverKind::Mwu: {
            BaselineKind bk = kind == SolverKind::FrankWolfe ? BaselineKind::FrankWolfe : BaselineKind::Mwu;
            LowdOutput o = baseline_solve(g, bk, {opts.iters, opts.record_trace, opts.wall_limit_ns});
            return {std::move(o.result), std::move(o.dist.load), std::move(o.trace)};
        }
        case SolverKind::GreedyPP: {
            if (opts.iters == 0) return init_state_only(g, opts.record_trace);
            GreedyPPOutput o = greedy_pp(g, opts.iters, opts.record_trace, opts.wall_limit_ns);
            return {std::move(o.result), std::move(o.loads), std::move(o.trace)};
        }
        case SolverKind::Greedy: {
            RunOutput out = init_state_only(g, opts.record_trace);
            DensestResult peeled = greedy_peel(g);
            if (opts.record_trace) out.trace.push_back({1, 0, kNan, peeled.density, kNan});
            out.result = std::move(peeled);
            return out;
        }
        case SolverKind::Flow: {
            RunOutput out = init_state_only(g, opts.record_trace);
            DensestResult exact = maxflow_densest(g, opts.flow_eps);
            if (opts.record_trace) out.trace.push_back({1, 0, kNan, exact.density, kNan});
            out.result = std::move(exact);
            return out;
        }
    }
    throw ValidationError("unknown solver");
}

std::vector<BenchSummary> bench(const Graph& g, const BenchOptions& opts, const std::string& out_dir) {
    if (opts.solvers.empty()) throw ValidationError("bench needs at least one solver");
    std::filesystem::create_directories(out_dir);

    using clock = std::chrono::steady_clock;
    std::vector<RunOutput> runs;
    std::vector<BenchSummary> summaries;
    for (SolverKind kind : opts.solvers) {
        RunOptions ro;
        ro.iters = opts.iters;
        ro.record_trace = true;
        ro.wall_limit_ns = opts.wall_limit_ns;
        auto t0 = clock::now();
        RunOutput out = run_solver(g, kind, ro);
        auto wall = std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - t0).count();
        summaries.push_back({kind, static_cast<std::uint64_t>(wall), out.result.density,
                             out.trace.size()});
        runs.push_back(std::move(out));
    }

    // Reference density for the error column: best final value in this run.
    double ref = 0.0;
    for (const RunOutput& r : runs) ref = std::max(ref, r.result.density);

    for (std::size_t i = 0; i < runs.size(); ++i) {
        std::string path = out_dir + "/" + solver_name(opts.solvers[i]) + ".csv";
        std::ofstream f(path, std::ios::binary);
        if (!f) throw ValidationError("cannot write '" + path + "'");
        f << "sweep,elapsed_ns,dual_D,best_density,qp_objective,relative_error\n";
        write_rows(f, runs[i].trace, opts.with_timing, &ref);
    }
    return summaries;
}

void write_trace_csv(const std::vector<TraceRow>& trace, const std::string& path, bool with_timing) {
    std::ofstream f(path, std::ios::binary);
    if (!f) throw ValidationError("cannot write '" + path + "'");
    f << "sweep,elapsed_ns,dual_D,best_density,qp_objective\n";
    write_rows(f, trace, with_timing, nullptr);
}

}  // namespace lowd
