#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "distribution.hpp"
#include "graph.hpp"

namespace lowd {

struct DensestResult {
    std::vector<NodeId> members;  // ascending
    double density = 0.0;
    std::uint64_t sweeps = 0;
    double certificate_gap = std::numeric_limits<double>::quiet_NaN();
    bool certified = false;  // only ever set on unweighted graphs
};

// Optimality gap below which an unweighted extraction is provably optimal:
// two distinct subgraph densities differ by at least 1/(n(n-1)).
double certificate_threshold(const Graph& g);

// Sorts nodes by load ascending (ties by id) and peels one at a time, keeping
// the best-density remaining set; density ties favor the larger set.
DensestResult extract_densest(const Graph& g, const Distribution& d);

struct TraceRow {
    std::uint64_t sweep;
    std::uint64_t elapsed_ns;
    double dual;
    double best_density;
    double qp;
};

struct LowdOptions {
    std::uint64_t max_sweeps = 1000;
    bool certify = false;       // stop once the unweighted certificate holds
    bool record_trace = false;  // one TraceRow per sweep, incl. sweep 0
    std::uint64_t wall_limit_ns = 0;  // 0 = no wall-clock budget
};

struct LowdOutput {
    DensestResult result;
    Distribution dist;
    std::vector<TraceRow> trace;
};

// Change in the sum of squared loads below which a weighted run is treated as
// converged.
inline constexpr double kQpPlateau = 1e-12;

// Iterated edge rebalancing. Unweighted runs with certify stop as soon as
// dual - best density < certificate_threshold; weighted runs stop on a qp
// plateau; otherwise the sweep budget applies.
LowdOutput lowd_solve(const Graph& g, const LowdOptions& opts = {});

}  // namespace lowd
