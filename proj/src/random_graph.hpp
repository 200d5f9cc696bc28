#pragma once

#include <cstdint>
#include <string>

namespace lowd {

// G(n,p) edge-list text over node ids 0..n-1, optionally with weights drawn
// uniformly from (0,2]. Uses mt19937_64 with a manual uint-to-double map, so
// identical seeds give identical text on every platform. Regenerates until
// every node is incident to at least one edge.
std::string gnp_edge_list(std::uint32_t n, double p, bool weighted, std::uint64_t seed);

// splitmix64 step, handy for deriving per-instance seeds from a master seed.
std::uint64_t mix_seed(std::uint64_t x);

}  // namespace lowd
