#pragma once

#include <algorithm>
#include <functional>
#include <string>
#include <vector>

#include "graph.hpp"
#include "random_graph.hpp"

namespace lowd::test {

inline Graph k3() { return Graph::from_edge_list("0 1\n1 2\n2 0\n", false); }

inline Graph k4() { return Graph::from_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n", false); }

// 4-clique on 0..3 plus pendant node 4 hanging off node 0; rho(V) = 7/5.
inline Graph k4_pendant() {
    return Graph::from_edge_list("0 1\n0 2\n0 3\n1 2\n1 3\n2 3\n0 4\n", false);
}

inline Graph single_edge() { return Graph::from_edge_list("0 1\n", false); }

// Node 0 is the hub.
inline Graph star(unsigned leaves) {
    std::string text;
    for (unsigned i = 1; i <= leaves; ++i) text += "0 " + std::to_string(i) + "\n";
    return Graph::from_edge_list(text, false);
}

// Path a-b-c-d plus chord b-d: greedy's first deletion keeps density at 1.
inline Graph path4_plus_bd() { return Graph::from_edge_list("0 1\n1 2\n2 3\n1 3\n", false); }

inline Graph two_triangles() {
    return Graph::from_edge_list("0 1\n1 2\n2 0\n3 4\n4 5\n5 3\n", false);
}

// Shared randomized corpus: n in [3,10], p in {0.3,0.5,0.7}, unweighted and
// weighted, `reps` instances per cell.
constexpr std::uint64_t kCorpusSeed = 0x10d0000c0ffeeULL;

inline void for_each_corpus(unsigned reps,
                            const std::function<void(const Graph&, bool weighted)>& fn) {
    const double ps[] = {0.3, 0.5, 0.7};
    for (unsigned n = 3; n <= 10; ++n)
        for (unsigned pi = 0; pi < 3; ++pi)
            for (int weighted = 0; weighted < 2; ++weighted)
                for (unsigned rep = 0; rep < reps; ++rep) {
                    std::uint64_t seed = mix_seed(kCorpusSeed ^ (n * 1000003ULL) ^ (pi * 10007ULL) ^
                                                  (weighted * 101ULL) ^ rep);
                    Graph g = Graph::from_edge_list(gnp_edge_list(n, ps[pi], weighted != 0, seed),
                                                    weighted != 0);
                    fn(g, weighted != 0);
                }
}

// Independent maximal k-core: delete below-k nodes until stable. Empty result
// means the k-core is empty.
inline std::vector<NodeId> kcore(const Graph& g, double k) {
    std::vector<char> alive(g.node_count(), 1);
    std::vector<double> deg(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) deg[u] = g.weighted_degree(u);
    bool changed = true;
    while (changed) {
        changed = false;
        for (NodeId u = 0; u < g.node_count(); ++u) {
            if (!alive[u] || deg[u] >= k) continue;
            alive[u] = 0;
            changed = true;
            for (const Incidence& inc : g.neighbors(u))
                if (alive[inc.other]) deg[inc.other] -= g.edge(inc.edge).w;
        }
    }
    std::vector<NodeId> core;
    for (NodeId u = 0; u < g.node_count(); ++u)
        if (alive[u]) core.push_back(u);
    return core;
}

inline std::vector<NodeId> all_nodes(const Graph& g) {
    std::vector<NodeId> v(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) v[u] = u;
    return v;
}

inline bool same_set(std::vector<NodeId> a, std::vector<NodeId> b) {
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
    return a == b;
}

}  // namespace lowd::test
