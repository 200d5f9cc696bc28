#include "pruner.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "errors.hpp"

namespace lowd {

namespace {

// Largest integer strictly below x.
std::int64_t int_below(double x) {
    auto f = static_cast<std::int64_t>(std::floor(x));
    return (static_cast<double>(f) == x) ? f - 1 : f;
}

}  // namespace

BucketState::BucketState(const std::vector<std::uint32_t>& deg, std::uint32_t max_deg)
    : buckets_(max_deg + 1), bucket_of_(deg.size()), pos_(deg.size()) {
    for (NodeId u = 0; u < deg.size(); ++u) {
        bucket_of_[u] = deg[u];
        pos_[u] = static_cast<std::uint32_t>(buckets_[deg[u]].size());
        buckets_[deg[u]].push_back(u);
    }
}

void BucketState::detach(NodeId u) {
    std::vector<NodeId>& b = buckets_[bucket_of_[u]];
    NodeId moved = b.back();
    b[pos_[u]] = moved;
    pos_[moved] = pos_[u];
    b.pop_back();
}

void BucketState::move(NodeId u, std::uint32_t to) {
    if (bucket_of_[u] == to) return;
    detach(u);
    bucket_of_[u] = to;
    pos_[u] = static_cast<std::uint32_t>(buckets_[to].size());
    buckets_[to].push_back(u);
}

PruneResult prune(const Graph& g, const PruneOptions& opts) {
    const NodeId n = g.node_count();
    std::vector<double> deg(n);
    for (NodeId u = 0; u < n; ++u) deg[u] = g.weighted_degree(u);

    std::vector<char> alive(n, 1), in_batch(n, 0);
    double live_weight = g.total_weight();
    NodeId live_nodes = n;

    PruneResult res;
    std::vector<NodeId> batch;
    for (;;) {
        ++res.rounds;
        double delta = live_weight / static_cast<double>(live_nodes);
        res.delta_per_round.push_back(delta);

        batch.clear();
        for (NodeId u = 0; u < n; ++u)
            if (alive[u] && deg[u] < delta) batch.push_back(u);
        if (batch.empty()) break;
        if (batch.size() == live_nodes)
            throw std::logic_error("pruning deleted every node; density must increase");

        res.deleted_per_round.push_back(batch.size());
        for (NodeId u : batch) {
            alive[u] = 0;
            in_batch[u] = 1;
        }
        for (NodeId u : batch) {
            for (const Incidence& inc : g.neighbors(u)) {
                double w = g.edge(inc.edge).w;
                if (alive[inc.other]) {
                    deg[inc.other] -= w;
                    live_weight -= w;
                } else if (in_batch[inc.other] && u < inc.other) {
                    live_weight -= w;  // edge interior to the batch, count once
                }
            }
        }
        for (NodeId u : batch) in_batch[u] = 0;
        live_nodes -= static_cast<NodeId>(batch.size());

        if (opts.round_cap && res.deleted_per_round.size() >= opts.round_cap) break;
    }

    res.survivors.reserve(live_nodes);
    for (NodeId u = 0; u < n; ++u)
        if (alive[u]) res.survivors.push_back(u);
    res.delta = density(g, res.survivors);
    return res;
}

PruneResult prune_unweighted(const Graph& g) {
    if (!g.is_unweighted()) throw ValidationError("prune_unweighted requires unit weights");

    const NodeId n = g.node_count();
    std::vector<std::uint32_t> deg(n);
    std::uint32_t d_max = 0;
    for (NodeId u = 0; u < n; ++u) {
        deg[u] = static_cast<std::uint32_t>(g.neighbors(u).size());
        d_max = std::max(d_max, deg[u]);
    }
    BucketState bs(deg, d_max);

    std::vector<char> alive(n, 1), in_batch(n, 0);
    std::int64_t live_edges = g.edge_count();
    NodeId live_nodes = n;
    std::int64_t floor_bucket = 0;  // scan starts here; parked nodes live here

    PruneResult res;
    std::vector<NodeId> batch;
    for (;;) {
        ++res.rounds;
        double delta = static_cast<double>(live_edges) / static_cast<double>(live_nodes);
        res.delta_per_round.push_back(delta);

        std::int64_t top = std::min<std::int64_t>(int_below(delta), d_max);
        batch.clear();
        for (std::int64_t b = floor_bucket; b <= top; ++b)
            for (NodeId u : bs.bucket(static_cast<std::uint32_t>(b))) batch.push_back(u);
        if (batch.empty()) break;
        if (batch.size() == live_nodes)
            throw std::logic_error("pruning deleted every node; density must increase");

        res.deleted_per_round.push_back(batch.size());
        std::int64_t park = static_cast<std::int64_t>(std::floor(delta));
        for (NodeId u : batch) {
            bs.detach(u);
            alive[u] = 0;
            in_batch[u] = 1;
        }
        for (NodeId u : batch) {
            for (const Incidence& inc : g.neighbors(u)) {
                NodeId v = inc.other;
                if (alive[v]) {
                    --deg[v];
                    --live_edges;
                    bs.move(v, static_cast<std::uint32_t>(std::max<std::int64_t>(park, deg[v])));
                } else if (in_batch[v] && u < v) {
                    --live_edges;
                }
            }
        }
        for (NodeId u : batch) in_batch[u] = 0;
        live_nodes -= static_cast<NodeId>(batch.size());
        floor_bucket = park;
    }

    res.survivors.reserve(live_nodes);
    for (NodeId u = 0; u < n; ++u)
        if (alive[u]) res.survivors.push_back(u);
    res.delta = density(g, res.survivors);
    return res;
}

bool is_delta_core(const Graph& g, std::span<const NodeId> s, double delta) {
    for (const auto& [u, d] : induced_degrees(g, s)) {
        (void)u;
        if (d < delta) return false;
    }
    return true;
}

}  // namespace lowd
