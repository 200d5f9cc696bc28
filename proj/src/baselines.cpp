#include "baselines.hpp"

#include <chrono>

namespace lowd {

namespace {

void extreme_point_step(const Graph& g, Distribution& d, double gamma) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        double lu = d.load[ed.u];
        double lv = d.load[ed.v];
        double target;  // extreme-point portion on u
        if (lu < lv) target = ed.w;
        else if (lu > lv) target = 0.0;
        else target = ed.w / 2.0;
        d.portion_u[e] = (1.0 - gamma) * d.portion_u[e] + gamma * target;
    }
    recompute_loads(g, d);
    ++d.sweeps;
}

}  // namespace

void frank_wolfe_sweep(const Graph& g, Distribution& d, std::uint64_t t) {
    extreme_point_step(g, d, 2.0 / (static_cast<double>(t) + 2.0));
}

void mwu_sweep(const Graph& g, Distribution& d, std::uint64_t t) {
    extreme_point_step(g, d, 1.0 / (static_cast<double>(t) + 1.0));
}

LowdOutput baseline_solve(const Graph& g, BaselineKind kind, const BaselineOptions& opts) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed_ns = [&] {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count());
    };

    LowdOutput out;
    out.dist = init_distribution(g);
    Distribution& d = out.dist;

    DensestResult best = extract_densest(g, d);
    if (opts.record_trace)
        out.trace.push_back({0, elapsed_ns(), dual_objective(d), best.density, qp_objective(d)});

    for (std::uint64_t t = 1; t <= opts.max_sweeps; ++t) {
        if (kind == BaselineKind::FrankWolfe) frank_wolfe_sweep(g, d, t);
        else mwu_sweep(g, d, t);

        DensestResult cur = extract_densest(g, d);
        if (cur.density > best.density) best = std::move(cur);
        if (opts.record_trace)
            out.trace.push_back({t, elapsed_ns(), dual_objective(d), best.density, qp_objective(d)});
        if (opts.wall_limit_ns && elapsed_ns() >= opts.wall_limit_ns) break;
    }

    best.sweeps = d.sweeps;
    best.certificate_gap = dual_objective(d) - best.density;
    best.certified = g.is_unweighted() && best.certificate_gap < certificate_threshold(g);
    out.result = std::move(best);
    return out;
}

}  // namespace lowd
