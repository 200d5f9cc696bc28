#pragma once

#include <cstdint>

#include "decomposition.hpp"
#include "graph.hpp"
#include "solver.hpp"

namespace lowd {

// Exhaustive ground truth over all non-empty subsets; ties prefer the larger
// set. Limited to 20 nodes.
DensestResult brute_force_densest(const Graph& g);

// Maximum density over subsets of exactly k nodes. Limited to 20 nodes.
double brute_force_dks(const Graph& g, std::uint32_t k);

// Exact nested decomposition by enumeration. Limited to 15 nodes.
Decomposition exact_ldd(const Graph& g);

// Binary search on a guess density with a source/sink flow network per probe.
// eps <= 0 picks the default: the optimality threshold on unweighted graphs
// and a relative gap tied to the pruning bound otherwise. Exact on unweighted
// graphs by construction of the threshold.
DensestResult maxflow_densest(const Graph& g, double eps = 0.0);

}  // namespace lowd
