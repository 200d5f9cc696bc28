#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "graph.hpp"

namespace lowd {

// Output of the density-lower-bound pruning. The survivors form a delta-core
// with delta = rho(survivors), and delta never decreases across rounds.
struct PruneResult {
    std::vector<NodeId> survivors;                   // ascending
    double delta = 0.0;                              // final bound, rho(survivors)
    std::uint64_t rounds = 0;                        // scan rounds, incl. the final empty one
    std::vector<std::uint64_t> deleted_per_round;    // one entry per deleting round
    std::vector<double> delta_per_round;             // bound used in each scan round
};

struct PruneOptions {
    std::uint64_t round_cap = 0;  // 0 = unlimited deleting rounds
};

// Repeatedly removes every node whose induced degree is below the current
// remaining-graph density. Works on weighted and unweighted graphs.
PruneResult prune(const Graph& g, const PruneOptions& opts = {});

// Counting-sort variant, unit weights only. Behaviorally identical to prune():
// same survivors, bounds and round structure.
PruneResult prune_unweighted(const Graph& g);

// True iff every node of s has induced degree >= delta within s.
bool is_delta_core(const Graph& g, std::span<const NodeId> s, double delta);

// Bucket structure for the unweighted scan. Each live node sits in exactly one
// bucket; normally at index = its current degree, except that nodes whose
// degree falls below the current scan floor are parked in the floor bucket.
class BucketState {
public:
    BucketState(const std::vector<std::uint32_t>& deg, std::uint32_t max_deg);

    void move(NodeId u, std::uint32_t to);
    void detach(NodeId u);  // removal from the structure; at most once per node
    const std::vector<NodeId>& bucket(std::uint32_t d) const { return buckets_[d]; }
    std::uint32_t bucket_of(NodeId u) const { return bucket_of_[u]; }
    std::uint32_t bucket_count() const { return static_cast<std::uint32_t>(buckets_.size()); }

private:
    std::vector<std::vector<NodeId>> buckets_;
    std::vector<std::uint32_t> bucket_of_;
    std::vector<std::uint32_t> pos_;
};

}  // namespace lowd
