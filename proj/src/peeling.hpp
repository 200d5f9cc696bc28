#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"
#include "solver.hpp"

namespace lowd {

enum class PeelImpl {
    Auto,     // Buckets on unweighted graphs, Ordered otherwise
    Buckets,  // integer bucket queue, unit weights only
    Ordered,  // ordered priority structure, any weights
};

// Full min-degree peel order plus the density after each removal.
// densities[0] = rho(V); densities[i] = density after removing order[0..i-1]
// for i in 1..n-1 (the last remaining singleton has density 0).
struct PeelTrace {
    std::vector<NodeId> order;
    std::vector<double> densities;
};

PeelTrace greedy_peel_trace(const Graph& g, PeelImpl impl = PeelImpl::Auto);

// Charikar peeling: repeatedly delete a minimum-degree node (ties to the
// lowest id), return the best-density set seen along the way.
DensestResult greedy_peel(const Graph& g, PeelImpl impl = PeelImpl::Auto);

// Live set right before the first deletion that fails to strictly increase
// density, i.e. the end of the maximal strictly-increasing density prefix.
std::vector<NodeId> greedy_prefix_at_first_nonincrease(const Graph& g);

struct GreedyPPOutput {
    DensestResult result;        // best over all prefixes of all rounds
    std::vector<double> loads;   // accumulator / rounds, per node
    std::vector<TraceRow> trace; // one row per round when requested
};

// Repeated peeling with carried loads: each round peels by accumulator plus
// current induced degree, and a deleted node's accumulator grows by its
// induced degree at deletion time.
GreedyPPOutput greedy_pp(const Graph& g, std::uint64_t rounds, bool record_trace = false,
                         std::uint64_t wall_limit_ns = 0);

}  // namespace lowd
