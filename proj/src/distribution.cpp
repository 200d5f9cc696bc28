#include "distribution.hpp"

#include <algorithm>
#include <cassert>

namespace lowd {

Distribution init_distribution(const Graph& g) {
    Distribution d;
    d.portion_u.resize(g.edge_count());
    for (EdgeId e = 0; e < g.edge_count(); ++e) d.portion_u[e] = g.edge(e).w / 2.0;
    d.load.resize(g.node_count());
    for (NodeId u = 0; u < g.node_count(); ++u) d.load[u] = g.weighted_degree(u) / 2.0;
    return d;
}

double portion(const Graph& g, const Distribution& d, EdgeId e, NodeId end) {
    const Edge& ed = g.edge(e);
    assert(end == ed.u || end == ed.v);
    return end == ed.u ? d.portion_u[e] : ed.w - d.portion_u[e];
}

double edge_update(const Graph& g, Distribution& d, EdgeId e) {
    const Edge& ed = g.edge(e);
    double lu = d.load[ed.u];
    double lv = d.load[ed.v];
    if (lu == lv) return 0.0;

    if (lu > lv) {
        double avail = std::max(d.portion_u[e], 0.0);
        double step = std::min((lu - lv) / 2.0, avail);
        d.portion_u[e] -= step;
        d.load[ed.u] = lu - step;
        d.load[ed.v] = lv + step;
        return step;
    }
    double avail = std::max(ed.w - d.portion_u[e], 0.0);
    double step = std::min((lv - lu) / 2.0, avail);
    d.portion_u[e] += step;
    d.load[ed.u] = lu + step;
    d.load[ed.v] = lv - step;
    return step;
}

void sweep(const Graph& g, Distribution& d) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) edge_update(g, d, e);
    ++d.sweeps;
    if (d.sweeps % kLoadRefreshPeriod == 0) recompute_loads(g, d);
}

void recompute_loads(const Graph& g, Distribution& d) {
    std::fill(d.load.begin(), d.load.end(), 0.0);
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        d.load[ed.u] += d.portion_u[e];
        d.load[ed.v] += ed.w - d.portion_u[e];
    }
}

double dual_objective(const Distribution& d) {
    double m = 0.0;
    for (double l : d.load) m = std::max(m, l);
    return m;
}

double qp_objective(const Distribution& d) {
    double s = 0.0;
    for (double l : d.load) s += l * l;
    return s;
}

}  // namespace lowd
