#pragma once

#include <cstdint>
#include <vector>

#include "graph.hpp"

namespace lowd {

// Per-edge weight split plus per-node loads. Only the portion assigned to the
// edge's first endpoint is stored; the other side is w_e minus that, so the
// two portions sum to w_e by construction. Loads are maintained incrementally
// and re-derived periodically to cap drift.
struct Distribution {
    std::vector<double> portion_u;  // weight of edge e on edges()[e].u
    std::vector<double> load;
    std::uint64_t sweeps = 0;
};

// How often sweep() re-derives loads from the edge portions.
inline constexpr std::uint64_t kLoadRefreshPeriod = 1024;

// Every edge split in half; each load is half the weighted degree.
Distribution init_distribution(const Graph& g);

// f_e(end) for either endpoint of e.
double portion(const Graph& g, const Distribution& d, EdgeId e, NodeId end);

// Moves min{(l_hi - l_lo)/2, f_e(hi)} of edge e's weight from the higher-load
// endpoint to the lower-load one; no-op on balanced edges. Returns the step.
double edge_update(const Graph& g, Distribution& d, EdgeId e);

// One pass over all edges in edge-id order.
void sweep(const Graph& g, Distribution& d);

void recompute_loads(const Graph& g, Distribution& d);

// Max node load: the objective the rebalancing drives down.
double dual_objective(const Distribution& d);

// Sum of squared loads; strictly decreases on every nonzero step.
double qp_objective(const Distribution& d);

}  // namespace lowd
