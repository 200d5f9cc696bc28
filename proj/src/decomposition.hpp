#pragma once

#include <cstdint>
#include <vector>

#include "distribution.hpp"
#include "graph.hpp"

namespace lowd {

// Nested level decomposition: cumulative unions of `levels` form the chain
// B_1 c B_2 c ... c B_k = V with strictly decreasing level densities.
struct Decomposition {
    std::vector<std::vector<NodeId>> levels;  // densest level first, ids ascending
    std::vector<double> lambdas;              // (W(B_i) - W(B_{i-1})) / |level i|, from the graph
    std::vector<double> load_means;           // raw mean load per level, diagnostics
    std::vector<std::uint32_t> cum_sizes;     // |B_i|
    std::vector<double> cum_weights;          // W(B_i)
    bool nested_consistent = true;            // lambdas strictly decreasing
};

// Assembles a Decomposition from level node sets: recomputes level densities
// from the graph and checks they strictly decrease.
Decomposition make_decomposition(const Graph& g, std::vector<std::vector<NodeId>> levels,
                                 std::vector<double> load_means);

// Splits nodes into levels by sorted load, starting a new level whenever
// consecutive loads differ by more than tol. Meaningful once the distribution
// has converged.
Decomposition group_levels(const Graph& g, const Distribution& d, double tol);

// True iff every edge crossing levels puts at most tol of its weight on the
// endpoint in the denser level.
bool verify_one_way(const Graph& g, const Distribution& d, const Decomposition& dec, double tol);

// Density upper bound for subgraphs of exactly (or at least) k nodes; tight
// whenever k hits a cumulative level size.
double dks_upper_bound(const Decomposition& dec, std::uint32_t k);

}  // namespace lowd
