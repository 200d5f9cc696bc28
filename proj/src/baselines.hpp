#pragma once

#include <cstdint>

#include "distribution.hpp"
#include "graph.hpp"
#include "solver.hpp"

namespace lowd {

// Both baselines build the same extreme point: each edge's full weight goes to
// its lower-load endpoint, balanced edges split evenly. They differ only in
// the step schedule, and both keep the split feasible by construction.

// d <- (1-gamma) d + gamma y_hat with gamma = 2/(t+2).
void frank_wolfe_sweep(const Graph& g, Distribution& d, std::uint64_t t);

// Running average of extreme points: gamma = 1/(t+1).
void mwu_sweep(const Graph& g, Distribution& d, std::uint64_t t);

enum class BaselineKind { FrankWolfe, Mwu };

struct BaselineOptions {
    std::uint64_t max_sweeps = 1000;
    bool record_trace = false;
    std::uint64_t wall_limit_ns = 0;
};

// Budgeted iteration; unlike the rebalancing solver there is no certificate
// and no monotonicity to stop on, so the budget is the only stop.
LowdOutput baseline_solve(const Graph& g, BaselineKind kind, const BaselineOptions& opts);

}  // namespace lowd
