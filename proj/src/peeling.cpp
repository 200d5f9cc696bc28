#include "peeling.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <set>

#include "errors.hpp"

namespace lowd {

namespace {

// Shared peel loop over an ordered (key, id) set; key is the current induced
// degree plus an optional carried load.
PeelTrace peel_ordered(const Graph& g, const std::vector<double>& carried,
                       std::vector<double>* acc_out) {
    const NodeId n = g.node_count();
    std::vector<double> key(n);
    std::vector<double> deg(n);
    for (NodeId u = 0; u < n; ++u) {
        deg[u] = g.weighted_degree(u);
        key[u] = deg[u] + carried[u];
    }

    std::set<std::pair<double, NodeId>> queue;
    for (NodeId u = 0; u < n; ++u) queue.emplace(key[u], u);

    std::vector<char> alive(n, 1);
    double live_weight = g.total_weight();
    NodeId live_nodes = n;

    PeelTrace trace;
    trace.order.reserve(n);
    trace.densities.reserve(n);
    trace.densities.push_back(live_weight / static_cast<double>(live_nodes));

    while (!queue.empty()) {
        NodeId u = queue.begin()->second;
        queue.erase(queue.begin());
        trace.order.push_back(u);
        alive[u] = 0;
        if (acc_out) (*acc_out)[u] += deg[u];
        live_weight -= deg[u];
        --live_nodes;
        for (const Incidence& inc : g.neighbors(u)) {
            NodeId v = inc.other;
            if (!alive[v]) continue;
            double w = g.edge(inc.edge).w;
            queue.erase({key[v], v});
            deg[v] -= w;
            key[v] -= w;
            queue.emplace(key[v], v);
        }
        if (live_nodes > 0)
            trace.densities.push_back(live_weight / static_cast<double>(live_nodes));
    }
    return trace;
}

PeelTrace peel_buckets(const Graph& g) {
    if (!g.is_unweighted()) throw ValidationError("bucket peeling requires unit weights");

    const NodeId n = g.node_count();
    std::vector<std::uint32_t> deg(n);
    std::uint32_t d_max = 0;
    for (NodeId u = 0; u < n; ++u) {
        deg[u] = static_cast<std::uint32_t>(g.neighbors(u).size());
        d_max = std::max(d_max, deg[u]);
    }
    // std::set buckets keep pops at the lowest id within a degree class.
    std::vector<std::set<NodeId>> buckets(d_max + 1);
    for (NodeId u = 0; u < n; ++u) buckets[deg[u]].insert(u);

    std::vector<char> alive(n, 1);
    std::int64_t live_edges = g.edge_count();
    NodeId live_nodes = n;

    PeelTrace trace;
    trace.order.reserve(n);
    trace.densities.reserve(n);
    trace.densities.push_back(static_cast<double>(live_edges) / static_cast<double>(live_nodes));

    std::uint32_t cur = 0;
    while (live_nodes > 0) {
        while (cur <= d_max && buckets[cur].empty()) ++cur;
        NodeId u = *buckets[cur].begin();
        buckets[cur].erase(buckets[cur].begin());
        trace.order.push_back(u);
        alive[u] = 0;
        live_edges -= deg[u];
        --live_nodes;
        for (const Incidence& inc : g.neighbors(u)) {
            NodeId v = inc.other;
            if (!alive[v]) continue;
            buckets[deg[v]].erase(v);
            --deg[v];
            buckets[deg[v]].insert(v);
        }
        if (cur > 0) --cur;  // neighbor degrees dropped by at most one
        if (live_nodes > 0)
            trace.densities.push_back(static_cast<double>(live_edges) / static_cast<double>(live_nodes));
    }
    return trace;
}

DensestResult result_from_trace(const Graph& g, const PeelTrace& trace) {
    std::size_t best_removed = 0;
    double best_density = trace.densities[0];
    for (std::size_t i = 1; i < trace.densities.size(); ++i) {
        if (trace.densities[i] > best_density) {
            best_density = trace.densities[i];
            best_removed = i;
        }
    }
    DensestResult res;
    res.members.assign(trace.order.begin() + best_removed, trace.order.end());
    std::sort(res.members.begin(), res.members.end());
    res.density = induced_weight(g, res.members) / static_cast<double>(res.members.size());
    res.sweeps = 1;
    return res;
}

}  // namespace

PeelTrace greedy_peel_trace(const Graph& g, PeelImpl impl) {
    if (impl == PeelImpl::Auto) impl = g.is_unweighted() ? PeelImpl::Buckets : PeelImpl::Ordered;
    if (impl == PeelImpl::Buckets) return peel_buckets(g);
    std::vector<double> zero(g.node_count(), 0.0);
    return peel_ordered(g, zero, nullptr);
}

DensestResult greedy_peel(const Graph& g, PeelImpl impl) {
    return result_from_trace(g, greedy_peel_trace(g, impl));
}

std::vector<NodeId> greedy_prefix_at_first_nonincrease(const Graph& g) {
    PeelTrace trace = greedy_peel_trace(g);
    std::size_t stop = trace.densities.size() - 1;
    for (std::size_t i = 1; i < trace.densities.size(); ++i) {
        if (!(trace.densities[i] > trace.densities[i - 1])) {
            stop = i - 1;
            break;
        }
    }
    // densities end before the empty set, so a non-increase always exists.
    std::vector<NodeId> live(trace.order.begin() + stop, trace.order.end());
    std::sort(live.begin(), live.end());
    return live;
}

GreedyPPOutput greedy_pp(const Graph& g, std::uint64_t rounds, bool record_trace,
                         std::uint64_t wall_limit_ns) {
    if (rounds < 1) throw ValidationError("greedy_pp needs at least one round");

    using clock = std::chrono::steady_clock;
    const auto start = clock::now();
    auto elapsed_ns = [&] {
        return static_cast<std::uint64_t>(
            std::chrono::duration_cast<std::chrono::nanoseconds>(clock::now() - start).count());
    };

    const NodeId n = g.node_count();
    std::vector<double> acc(n, 0.0);

    GreedyPPOutput out;
    bool have_best = false;
    for (std::uint64_t r = 1; r <= rounds; ++r) {
        PeelTrace trace = peel_ordered(g, acc, &acc);
        DensestResult cur = result_from_trace(g, trace);
        if (!have_best || cur.density > out.result.density) {
            out.result = std::move(cur);
            have_best = true;
        }
        if (record_trace) {
            double inv = 1.0 / static_cast<double>(r);
            double dual = 0.0, qp = 0.0;
            for (double a : acc) {
                dual = std::max(dual, a * inv);
                qp += (a * inv) * (a * inv);
            }
            out.trace.push_back({r, elapsed_ns(), dual, out.result.density, qp});
        }
        if (wall_limit_ns && elapsed_ns() >= wall_limit_ns && r < rounds) {
            rounds = r;
            break;
        }
    }

    out.result.sweeps = rounds;
    out.loads.resize(n);
    for (NodeId u = 0; u < n; ++u) out.loads[u] = acc[u] / static_cast<double>(rounds);
    return out;
}

}  // namespace lowd
