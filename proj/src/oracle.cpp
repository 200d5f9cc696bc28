#include "oracle.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <limits>

#include "errors.hpp"
#include "pruner.hpp"

namespace lowd {

namespace {

constexpr NodeId kBruteLimit = 20;
constexpr NodeId kLddLimit = 15;

// table[mask] = induced weight of the subset encoded by mask.
std::vector<double> subset_weights(const Graph& g) {
    const NodeId n = g.node_count();
    std::vector<double> table(std::size_t{1} << n, 0.0);
    for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
        NodeId low = static_cast<NodeId>(std::countr_zero(mask));
        std::uint32_t rest = mask & (mask - 1);
        double w = table[rest];
        for (const Incidence& inc : g.neighbors(low))
            if (rest >> inc.other & 1u) w += g.edge(inc.edge).w;
        table[mask] = w;
    }
    return table;
}

std::vector<NodeId> mask_nodes(std::uint32_t mask) {
    std::vector<NodeId> nodes;
    for (std::uint32_t m = mask; m; m &= m - 1) nodes.push_back(static_cast<NodeId>(std::countr_zero(m)));
    return nodes;
}

struct Dinic {
    struct Arc {
        int to;
        double cap;
        int rev;
    };

    explicit Dinic(int n) : arcs(n), level(n), iter(n) {}

    void add_edge(int from, int to, double cap) {
        arcs[from].push_back({to, cap, static_cast<int>(arcs[to].size())});
        arcs[to].push_back({from, 0.0, static_cast<int>(arcs[from].size()) - 1});
    }

    static constexpr double kResidual = 1e-11;

    bool bfs(int s, int t) {
        std::fill(level.begin(), level.end(), -1);
        std::vector<int> queue{s};
        level[s] = 0;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            int u = queue[qi];
            for (const Arc& a : arcs[u]) {
                if (a.cap > kResidual && level[a.to] < 0) {
                    level[a.to] = level[u] + 1;
                    queue.push_back(a.to);
                }
            }
        }
        return level[t] >= 0;
    }

    double dfs(int u, int t, double pushed) {
        if (u == t) return pushed;
        for (int& i = iter[u]; i < static_cast<int>(arcs[u].size()); ++i) {
            Arc& a = arcs[u][i];
            if (a.cap > kResidual && level[a.to] == level[u] + 1) {
                double got = dfs(a.to, t, std::min(pushed, a.cap));
                if (got > 0.0) {
                    a.cap -= got;
                    arcs[a.to][a.rev].cap += got;
                    return got;
                }
            }
        }
        return 0.0;
    }

    double max_flow(int s, int t) {
        double flow = 0.0;
        while (bfs(s, t)) {
            std::fill(iter.begin(), iter.end(), 0);
            for (;;) {
                double got = dfs(s, t, std::numeric_limits<double>::infinity());
                if (got <= 0.0) break;
                flow += got;
            }
        }
        return flow;
    }

    std::vector<char> residual_reachable(int s) {
        std::vector<char> seen(arcs.size(), 0);
        std::vector<int> queue{s};
        seen[s] = 1;
        for (std::size_t qi = 0; qi < queue.size(); ++qi) {
            for (const Arc& a : arcs[queue[qi]]) {
                if (a.cap > kResidual && !seen[a.to]) {
                    seen[a.to] = 1;
                    queue.push_back(a.to);
                }
            }
        }
        return seen;
    }

    std::vector<std::vector<Arc>> arcs;
    std::vector<int> level;
    std::vector<int> iter;
};

// Source side of a min cut in the guess-density network: source->v with the
// weighted degree, v->sink with 2*gamma, each edge as two arcs of weight w.
// Non-empty iff some subgraph is denser than gamma.
std::vector<NodeId> min_cut_source_side(const Graph& g, double gamma) {
    const int n = static_cast<int>(g.node_count());
    const int s = n, t = n + 1;
    Dinic din(n + 2);
    for (int v = 0; v < n; ++v) {
        din.add_edge(s, v, g.weighted_degree(static_cast<NodeId>(v)));
        din.add_edge(v, t, 2.0 * gamma);
    }
    for (const Edge& e : g.edges()) {
        din.add_edge(static_cast<int>(e.u), static_cast<int>(e.v), e.w);
        din.add_edge(static_cast<int>(e.v), static_cast<int>(e.u), e.w);
    }
    din.max_flow(s, t);
    std::vector<char> seen = din.residual_reachable(s);
    std::vector<NodeId> side;
    for (int v = 0; v < n; ++v)
        if (seen[v]) side.push_back(static_cast<NodeId>(v));
    return side;
}

}  // namespace

DensestResult brute_force_densest(const Graph& g) {
    if (g.node_count() > kBruteLimit) throw SizeError("brute force limited to 20 nodes");

    std::vector<double> table = subset_weights(g);
    const std::uint32_t full = (1u << g.node_count()) - 1;

    double best_density = -1.0;
    int best_size = 0;
    std::uint32_t best_mask = 0;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        int size = std::popcount(mask);
        double dens = table[mask] / static_cast<double>(size);
        if (dens > best_density || (dens == best_density && size > best_size)) {
            best_density = dens;
            best_size = size;
            best_mask = mask;
        }
    }

    DensestResult res;
    res.members = mask_nodes(best_mask);
    res.density = induced_weight(g, res.members) / static_cast<double>(res.members.size());
    res.certificate_gap = 0.0;
    res.certified = g.is_unweighted();
    return res;
}

double brute_force_dks(const Graph& g, std::uint32_t k) {
    if (g.node_count() > kBruteLimit) throw SizeError("brute force limited to 20 nodes");
    if (k < 1 || k > g.node_count()) throw ValidationError("k out of range");

    std::vector<double> table = subset_weights(g);
    const std::uint32_t full = (1u << g.node_count()) - 1;
    double best = 0.0;
    for (std::uint32_t mask = 1; mask <= full; ++mask)
        if (std::popcount(mask) == static_cast<int>(k))
            best = std::max(best, table[mask] / static_cast<double>(k));
    return best;
}

Decomposition exact_ldd(const Graph& g) {
    if (g.node_count() > kLddLimit) throw SizeError("exact decomposition limited to 15 nodes");

    std::vector<double> table = subset_weights(g);
    const std::uint32_t full = (1u << g.node_count()) - 1;

    std::vector<std::vector<NodeId>> levels;
    std::vector<double> level_values;
    std::uint32_t base = 0;
    while (base != full) {
        std::uint32_t comp = full ^ base;
        double best_val = -std::numeric_limits<double>::infinity();
        int best_size = 0;
        std::uint32_t best_sub = 0;
        // Descending submask walk sees larger sets first, so equal values keep
        // the maximal extension.
        for (std::uint32_t sub = comp; sub; sub = (sub - 1) & comp) {
            int size = std::popcount(sub);
            double val = (table[base | sub] - table[base]) / static_cast<double>(size);
            if (val > best_val || (val == best_val && size > best_size)) {
                best_val = val;
                best_size = size;
                best_sub = sub;
            }
        }
        levels.push_back(mask_nodes(best_sub));
        level_values.push_back(best_val);
        base |= best_sub;
    }
    return make_decomposition(g, std::move(levels), std::move(level_values));
}

DensestResult maxflow_densest(const Graph& g, double eps) {
    PruneResult pr = prune(g);
    const bool unweighted = g.is_unweighted();
    if (eps <= 0.0) eps = unweighted ? certificate_threshold(g) : 1e-10 * pr.delta;

    std::vector<NodeId> best_members = pr.survivors;
    double best_weight = induced_weight(g, best_members);
    double best_density = best_weight / static_cast<double>(best_members.size());
    // Exact rational compare for unit weights: induced weights are integers.
    auto denser = [&](double cand_w, std::size_t cand_n) {
        if (unweighted)
            return static_cast<std::int64_t>(std::llround(cand_w)) * static_cast<std::int64_t>(best_members.size()) >
                   static_cast<std::int64_t>(std::llround(best_weight)) * static_cast<std::int64_t>(cand_n);
        return cand_w / static_cast<double>(cand_n) > best_density;
    };

    double lo = best_density;
    double hi = std::max(lo, g.max_weighted_degree() / 2.0);
    std::uint64_t probes = 0;
    while (hi - lo >= eps) {
        double gamma = 0.5 * (lo + hi);
        std::vector<NodeId> side = min_cut_source_side(g, gamma);
        ++probes;
        if (side.empty()) {
            hi = gamma;
            continue;
        }
        double w = induced_weight(g, side);
        double dens = w / static_cast<double>(side.size());
        if (denser(w, side.size())) {
            best_weight = w;
            best_density = dens;
            best_members = std::move(side);
        }
        lo = std::max(gamma, dens);
    }

    DensestResult res;
    res.members = std::move(best_members);
    std::sort(res.members.begin(), res.members.end());
    res.density = induced_weight(g, res.members) / static_cast<double>(res.members.size());
    res.sweeps = probes;
    res.certificate_gap = hi - res.density;
    res.certified = unweighted && res.certificate_gap < certificate_threshold(g);
    return res;
}

}  // namespace lowd
