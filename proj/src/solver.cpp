#include "solver.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>

namespace lowd {

double certificate_threshold(const Graph& g) {
    double n = static_cast<double>(g.node_count());
    return 1.0 / (n * (n - 1.0));
}

DensestResult extract_densest(const Graph& g, const Distribution& d) {
    const NodeId n = g.node_count();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (d.load[a] != d.load[b]) return d.load[a] < d.load[b];
        return a < b;
    });

    std::vector<double> deg(n);
    for (NodeId u = 0; u < n; ++u) deg[u] = g.weighted_degree(u);
    std::vector<char> alive(n, 1);

    double live_weight = g.total_weight();
    NodeId live_nodes = n;
    double best_density = live_weight / static_cast<double>(live_nodes);
    std::size_t best_removed = 0;

    for (std::size_t i = 0; i + 1 < n; ++i) {
        NodeId u = order[i];
        live_weight -= deg[u];
        alive[u] = 0;
        for (const Incidence& inc : g.neighbors(u))
            if (alive[inc.other]) deg[inc.other] -= g.edge(inc.edge).w;
        --live_nodes;
        double dens = live_weight / static_cast<double>(live_nodes);
        if (dens > best_density) {  // ties keep the earlier, larger set
            best_density = dens;
            best_removed = i + 1;
        }
    }

    DensestResult res;
    res.members.assign(order.begin() + best_removed, order.end());
    std::sort(res.members.begin(), res.members.end());
    res.density = induced_weight(g, res.members) / static_cast<double>(res.members.size());
    res.sweeps = d.sweeps;
    res.certificate_gap = dual_objective(d) - res.density;
    res.certified = g.is_unweighted() && res.certificate_gap < certificate_threshold(g);
    return res;
}

LowdOutput lowd_solve(const Graph& g, const LowdOptions& opts) {
    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed_ns = [&] {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count());
    };

    LowdOutput out;
    out.dist = init_distribution(g);
    Distribution& d = out.dist;

    const bool per_sweep_extract = opts.certify || opts.record_trace;
    const bool unweighted = g.is_unweighted();
    const double threshold = certificate_threshold(g);

    DensestResult best = extract_densest(g, d);
    double qp = qp_objective(d);
    if (opts.record_trace) out.trace.push_back({0, elapsed_ns(), dual_objective(d), best.density, qp});

    bool stop = opts.certify && unweighted && (dual_objective(d) - best.density) < threshold;
    for (std::uint64_t t = 1; t <= opts.max_sweeps && !stop; ++t) {
        sweep(g, d);
        if (per_sweep_extract) {
            DensestResult cur = extract_densest(g, d);
            if (cur.density > best.density) best = std::move(cur);
        }
        double qp_now = qp_objective(d);
        if (opts.record_trace)
            out.trace.push_back({t, elapsed_ns(), dual_objective(d), best.density, qp_now});

        if (opts.certify && unweighted && (dual_objective(d) - best.density) < threshold) stop = true;
        if (!unweighted && qp - qp_now < kQpPlateau) stop = true;
        if (opts.wall_limit_ns && elapsed_ns() >= opts.wall_limit_ns) stop = true;
        qp = qp_now;
    }

    if (!per_sweep_extract) {
        DensestResult final = extract_densest(g, d);
        if (final.density > best.density) best = std::move(final);
    }

    best.sweeps = d.sweeps;
    best.certificate_gap = dual_objective(d) - best.density;
    best.certified = unweighted && best.certificate_gap < threshold;
    out.result = std::move(best);
    return out;
}

}  // namespace lowd
