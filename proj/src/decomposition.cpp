#include "decomposition.hpp"

#include <algorithm>
#include <numeric>

#include "errors.hpp"

namespace lowd {

Decomposition make_decomposition(const Graph& g, std::vector<std::vector<NodeId>> levels,
                                 std::vector<double> load_means) {
    Decomposition dec;
    dec.levels = std::move(levels);
    dec.load_means = std::move(load_means);

    std::vector<std::uint32_t> level_of(g.node_count(), 0);
    for (std::size_t i = 0; i < dec.levels.size(); ++i) {
        std::sort(dec.levels[i].begin(), dec.levels[i].end());
        for (NodeId u : dec.levels[i]) level_of[u] = static_cast<std::uint32_t>(i);
    }

    // W(B_i) via one pass: each edge belongs to the innermost level containing
    // both endpoints.
    std::vector<double> weight_at(dec.levels.size(), 0.0);
    for (const Edge& e : g.edges())
        weight_at[std::max(level_of[e.u], level_of[e.v])] += e.w;

    std::uint32_t cum_n = 0;
    double cum_w = 0.0;
    for (std::size_t i = 0; i < dec.levels.size(); ++i) {
        cum_n += static_cast<std::uint32_t>(dec.levels[i].size());
        cum_w += weight_at[i];
        dec.cum_sizes.push_back(cum_n);
        dec.cum_weights.push_back(cum_w);
        dec.lambdas.push_back(weight_at[i] / static_cast<double>(dec.levels[i].size()));
    }
    for (std::size_t i = 1; i < dec.lambdas.size(); ++i)
        if (!(dec.lambdas[i] < dec.lambdas[i - 1])) dec.nested_consistent = false;
    return dec;
}

Decomposition group_levels(const Graph& g, const Distribution& d, double tol) {
    if (!(tol > 0.0)) throw ValidationError("level tolerance must be positive");

    const NodeId n = g.node_count();
    std::vector<NodeId> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](NodeId a, NodeId b) {
        if (d.load[a] != d.load[b]) return d.load[a] > d.load[b];
        return a < b;
    });

    std::vector<std::vector<NodeId>> levels;
    std::vector<double> means;
    double level_sum = 0.0;
    for (NodeId i = 0; i < n; ++i) {
        NodeId u = order[i];
        if (i == 0 || d.load[order[i - 1]] - d.load[u] > tol) {
            if (!levels.empty()) means.push_back(level_sum / static_cast<double>(levels.back().size()));
            levels.emplace_back();
            level_sum = 0.0;
        }
        levels.back().push_back(u);
        level_sum += d.load[u];
    }
    means.push_back(level_sum / static_cast<double>(levels.back().size()));
    return make_decomposition(g, std::move(levels), std::move(means));
}

bool verify_one_way(const Graph& g, const Distribution& d, const Decomposition& dec, double tol) {
    std::vector<std::uint32_t> level_of(g.node_count(), 0);
    for (std::size_t i = 0; i < dec.levels.size(); ++i)
        for (NodeId u : dec.levels[i]) level_of[u] = static_cast<std::uint32_t>(i);

    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if (level_of[ed.u] < level_of[ed.v] && portion(g, d, e, ed.u) > tol) return false;
        if (level_of[ed.v] < level_of[ed.u] && portion(g, d, e, ed.v) > tol) return false;
    }
    return true;
}

double dks_upper_bound(const Decomposition& dec, std::uint32_t k) {
    if (dec.cum_sizes.empty()) throw ValidationError("empty decomposition");
    std::uint32_t n = dec.cum_sizes.back();
    if (k < 1 || k > n) throw ValidationError("k out of range");

    std::size_t j = 0;
    while (dec.cum_sizes[j] < k) ++j;
    if (dec.cum_sizes[j] == k) return dec.cum_weights[j] / static_cast<double>(k);

    double sum = 0.0;
    for (std::size_t i = 0; i < j; ++i)
        sum += dec.lambdas[i] * static_cast<double>(dec.levels[i].size());
    std::uint32_t prior = j == 0 ? 0 : dec.cum_sizes[j - 1];
    sum += static_cast<double>(k - prior) * dec.lambdas[j];
    return sum / static_cast<double>(k);
}

}  // namespace lowd
