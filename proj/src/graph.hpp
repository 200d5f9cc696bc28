#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace lowd {

using NodeId = std::uint32_t;
using EdgeId = std::uint32_t;

struct Edge {
    NodeId u;
    NodeId v;
    double w;
};

// One incidence as seen from a node: edge id plus the opposite endpoint.
struct Incidence {
    EdgeId edge;
    NodeId other;
};

// Immutable undirected weighted graph in adjacency-array form. Node ids are
// dense 0..n-1; the ids from the input file are kept in a remap table so
// results can be reported in the caller's id space. Self-loops and duplicate
// unordered pairs are dropped at load time (first occurrence wins).
class Graph {
public:
    // Parses edge-list text, one edge per line: "u v" or "u v w". Lines
    // starting with '#' or '%' are comments. With weighted=false any third
    // column is ignored and every edge gets weight 1.
    static Graph from_edge_list(std::string_view text, bool weighted);
    static Graph from_file(const std::string& path, bool weighted);

    // Builds directly from canonical edges over dense ids 0..n-1 with
    // n = original_ids.size(). Validates the same invariants the loader
    // guarantees.
    static Graph from_edges(std::vector<Edge> edges, std::vector<std::uint64_t> original_ids);

    NodeId node_count() const { return n_; }
    EdgeId edge_count() const { return static_cast<EdgeId>(edges_.size()); }
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(EdgeId e) const { return edges_[e]; }

    std::span<const Incidence> neighbors(NodeId u) const {
        return {adj_.data() + adj_offset_[u], adj_.data() + adj_offset_[u + 1]};
    }

    double weighted_degree(NodeId u) const { return wdeg_[u]; }
    double max_weighted_degree() const;
    double total_weight() const { return total_weight_; }
    bool is_unweighted() const { return unweighted_; }
    std::uint64_t original_id(NodeId u) const { return original_ids_[u]; }
    const std::vector<std::uint64_t>& original_ids() const { return original_ids_; }

    // Induced subgraph on `members` (need not be sorted; duplicates ignored).
    // Original ids carry over from this graph.
    Graph induce(std::span<const NodeId> members) const;

    // Edge-list text with original ids, loadable via from_edge_list with
    // weighted = !is_unweighted().
    std::string serialize() const;

private:
    Graph() = default;
    void finalize();

    NodeId n_ = 0;
    std::vector<Edge> edges_;
    std::vector<std::uint64_t> original_ids_;
    std::vector<std::size_t> adj_offset_;
    std::vector<Incidence> adj_;
    std::vector<double> wdeg_;
    double total_weight_ = 0.0;
    bool unweighted_ = true;
};

// Sorted, deduplicated copy of a node set; throws ValidationError if any id
// is out of range.
std::vector<NodeId> canonical_node_set(const Graph& g, std::span<const NodeId> s);

// Total weight of edges with both endpoints in s (s must be sorted unique).
double induced_weight(const Graph& g, std::span<const NodeId> s);

// rho(S) = W(S)/|S|. Throws ValidationError on an empty set.
double density(const Graph& g, std::span<const NodeId> s);

// For each u in s (ascending), the total weight of edges from u into s.
std::vector<std::pair<NodeId, double>> induced_degrees(const Graph& g, std::span<const NodeId> s);

// Materialized induced subgraph statistics over a parent graph.
struct SubgraphView {
    const Graph* parent = nullptr;
    std::vector<NodeId> members;          // ascending
    double induced_weight = 0.0;          // W(S)
    std::vector<double> induced_degree;   // aligned with members
};

SubgraphView make_subgraph_view(const Graph& g, std::span<const NodeId> s);

}  // namespace lowd
