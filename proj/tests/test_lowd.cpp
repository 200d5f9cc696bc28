#include <doctest.h>

#include <cmath>

#include "distribution.hpp"
#include "oracle.hpp"
#include "solver.hpp"
#include "support.hpp"

using namespace lowd;
using namespace lowd::test;

namespace {

EdgeId find_edge(const Graph& g, NodeId a, NodeId b) {
    for (EdgeId e = 0; e < g.edge_count(); ++e) {
        const Edge& ed = g.edge(e);
        if ((ed.u == a && ed.v == b) || (ed.u == b && ed.v == a)) return e;
    }
    REQUIRE(false);
    return 0;
}

}  // namespace

TEST_CASE("init splits every edge in half") {
    Graph g3 = k3();
    Distribution d = init_distribution(g3);
    for (double l : d.load) CHECK(l == 1.0);

    Graph se = single_edge();
    Distribution ds = init_distribution(se);
    CHECK(ds.load[0] == 0.5);
    CHECK(ds.load[1] == 0.5);

    Graph gp = k4_pendant();
    Distribution dp = init_distribution(gp);
    CHECK(dp.load[0] == 2.0);
    CHECK(dp.load[1] == 1.5);
    CHECK(dp.load[2] == 1.5);
    CHECK(dp.load[3] == 1.5);
    CHECK(dp.load[4] == 0.5);
}

TEST_CASE("edge update balances or drains the edge") {
    Graph gp = k4_pendant();
    Distribution d = init_distribution(gp);

    // pendant edge: loads 2.0 vs 0.5 but only 0.5 sits on the high side
    EdgeId pe = find_edge(gp, 0, 4);
    double step = edge_update(gp, d, pe);
    CHECK(step == 0.5);
    CHECK(d.load[0] == 1.5);
    CHECK(d.load[4] == 1.0);
    CHECK(portion(gp, d, pe, 0) == 0.0);
    CHECK(portion(gp, d, pe, 4) == 1.0);

    // balanced edge is a no-op
    EdgeId be = find_edge(gp, 1, 2);
    CHECK(edge_update(gp, d, be) == 0.0);

    // plain halving when the split allows it: loads 2 and 1 meet at 1.5
    Graph two = Graph::from_edge_list("0 1 2\n1 2 2\n0 2 1\n", true);
    Distribution dt = init_distribution(two);
    dt.load = {2.0, 1.0, 1.5};
    EdgeId e01 = find_edge(two, 0, 1);
    CHECK(edge_update(two, dt, e01) == 0.5);
    CHECK(dt.load[0] == 1.5);
    CHECK(dt.load[1] == 1.5);

    // capped by the available portion
    Distribution dc = init_distribution(two);
    dc.load = {3.0, 1.0, 1.5};
    dc.portion_u[e01] = 0.25;  // only 0.25 left on the high side
    CHECK(edge_update(two, dc, e01) == 0.25);
    CHECK(dc.load[0] == 2.75);
    CHECK(dc.load[1] == 1.25);
}

TEST_CASE("sweep is a fixed point on balanced graphs") {
    Graph g3 = k3();
    Distribution d = init_distribution(g3);
    sweep(g3, d);
    CHECK(d.sweeps == 1);
    for (double l : d.load) CHECK(l == 1.0);
    CHECK(qp_objective(d) == 3.0);
}

TEST_CASE("objectives on hand states") {
    Graph gp = k4_pendant();
    Distribution d = init_distribution(gp);
    CHECK(dual_objective(d) == 2.0);

    Graph se = single_edge();
    Distribution ds = init_distribution(se);
    CHECK(qp_objective(ds) == 0.5);

    // converged state: four loads of 1.5 and the pendant at 1.0
    for (int i = 0; i < 200; ++i) sweep(gp, d);
    CHECK(dual_objective(d) == doctest::Approx(1.5).epsilon(1e-9));
    CHECK(qp_objective(d) == doctest::Approx(10.0).epsilon(1e-9));
    for (NodeId u = 0; u < 4; ++u) CHECK(d.load[u] == doctest::Approx(1.5).epsilon(1e-6));
    CHECK(d.load[4] == doctest::Approx(1.0).epsilon(1e-6));
}

TEST_CASE("extraction peels lowest loads first") {
    Graph gp = k4_pendant();
    Distribution d = init_distribution(gp);
    for (int i = 0; i < 200; ++i) sweep(gp, d);
    DensestResult r = extract_densest(gp, d);
    CHECK(same_set(r.members, {0, 1, 2, 3}));
    CHECK(r.density == 1.5);

    Graph g3 = k3();
    Distribution d3 = init_distribution(g3);
    DensestResult r3 = extract_densest(g3, d3);
    CHECK(r3.members.size() == 3);
    CHECK(r3.density == 1.0);
    CHECK(r3.certificate_gap == 0.0);
    CHECK(r3.certified);

    Graph se = single_edge();
    Distribution dse = init_distribution(se);
    DensestResult rse = extract_densest(se, dse);
    CHECK(rse.members.size() == 2);
    CHECK(rse.density == 0.5);
    CHECK(rse.certified);
}

TEST_CASE("solve certifies small graphs") {
    Graph g3 = k3();
    LowdOutput o = lowd_solve(g3, {.max_sweeps = 100, .certify = true});
    CHECK(o.result.certified);
    CHECK(o.result.sweeps == 0);  // already optimal at init
    CHECK(o.result.density == 1.0);

    Graph gp = k4_pendant();
    LowdOutput op = lowd_solve(gp, {.max_sweeps = 10000, .certify = true});
    CHECK(op.result.certified);
    CHECK(op.result.density == 1.5);
    CHECK(op.result.density == brute_force_densest(gp).density);
    CHECK(op.result.certificate_gap < certificate_threshold(gp));

    // init-state extraction: the pendant already has the lowest load
    LowdOutput zero = lowd_solve(gp, {.max_sweeps = 0});
    CHECK(zero.result.sweeps == 0);
    CHECK(zero.result.density == 1.5);
}

TEST_CASE("certified corpus solves match brute force exactly") {
    for_each_corpus(2, [](const Graph& g, bool weighted) {
        if (weighted) return;
        LowdOutput o = lowd_solve(g, {.max_sweeps = 10000, .certify = true});
        REQUIRE(o.result.certified);
        CHECK(o.result.density == brute_force_densest(g).density);
    });
}

TEST_CASE("per-update monotonicity, conservation and strict qp decrease") {
    for_each_corpus(1, [](const Graph& g, bool) {
        Distribution d = init_distribution(g);
        double dual_prev = dual_objective(d);
        for (int s = 0; s < 60; ++s) {
            for (EdgeId e = 0; e < g.edge_count(); ++e) {
                const Edge& edge_ref = g.edge(e);
                double gap_before = std::abs(d.load[edge_ref.u] - d.load[edge_ref.v]);
                double qp_before = qp_objective(d);
                double step = edge_update(g, d, e);
                double qp_after = qp_objective(d);
                CHECK(step >= 0.0);
                if (step > 0.0) {
                    // the derivation's change, strictly negative for any step
                    double expected = 2.0 * step * (step - gap_before);
                    CHECK(expected < 0.0);
                    CHECK(qp_after - qp_before ==
                          doctest::Approx(expected).epsilon(1e-6).scale(1.0));
                    if (-expected > 1e-9)
                        CHECK(qp_after < qp_before);
                    else
                        CHECK(qp_after <= qp_before + 1e-12);
                } else {
                    CHECK(qp_after == qp_before);
                }

                const Edge& ed = g.edge(e);
                CHECK(portion(g, d, e, ed.u) + portion(g, d, e, ed.v)
                      == doctest::Approx(ed.w).epsilon(1e-12));
                CHECK(portion(g, d, e, ed.u) >= -1e-12);
                CHECK(portion(g, d, e, ed.v) >= -1e-12);
            }
            ++d.sweeps;
            double dual_now = dual_objective(d);
            CHECK(dual_now <= dual_prev + 1e-12);
            dual_prev = dual_now;

            double total = 0.0;
            for (double l : d.load) total += l;
            CHECK(total == doctest::Approx(g.total_weight()).epsilon(1e-9));
        }

        // incremental loads agree with a fresh recomputation
        Distribution fresh = d;
        recompute_loads(g, fresh);
        for (NodeId u = 0; u < g.node_count(); ++u)
            CHECK(d.load[u] == doctest::Approx(fresh.load[u]).epsilon(1e-9));
    });
}

TEST_CASE("progress: a non-optimal dual strictly drops within n sweeps") {
    for_each_corpus(1, [](const Graph& g, bool weighted) {
        if (weighted) return;
        double opt = brute_force_densest(g).density;
        double threshold = certificate_threshold(g);
        Distribution d = init_distribution(g);
        for (int s = 0; s < 200; ++s) {
            double before = dual_objective(d);
            if (before <= opt + threshold) break;
            double lowest = before;
            for (NodeId k = 0; k < g.node_count(); ++k) {
                sweep(g, d);
                lowest = std::min(lowest, dual_objective(d));
            }
            CHECK(lowest < before);
        }
    });
}

TEST_CASE("converged splits are one-way") {
    for_each_corpus(1, [](const Graph& g, bool) {
        Distribution d = init_distribution(g);
        double qp_prev = qp_objective(d);
        for (int s = 0; s < 20000; ++s) {
            sweep(g, d);
            double qp_now = qp_objective(d);
            if (qp_prev - qp_now < 1e-12) break;
            qp_prev = qp_now;
        }
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            const Edge& ed = g.edge(e);
            if (std::abs(d.load[ed.u] - d.load[ed.v]) <= 1e-6) continue;
            NodeId hi = d.load[ed.u] > d.load[ed.v] ? ed.u : ed.v;
            CHECK(portion(g, d, e, hi) <= 1e-6);
        }
    });
}

TEST_CASE("trace records monotone dual and best density") {
    Graph gp = k4_pendant();
    LowdOutput o = lowd_solve(gp, {.max_sweeps = 50, .record_trace = true});
    REQUIRE(!o.trace.empty());
    CHECK(o.trace.front().sweep == 0);
    for (std::size_t i = 1; i < o.trace.size(); ++i) {
        CHECK(o.trace[i].sweep == o.trace[i - 1].sweep + 1);
        CHECK(o.trace[i].dual <= o.trace[i - 1].dual + 1e-12);
        CHECK(o.trace[i].best_density >= o.trace[i - 1].best_density);
        CHECK(o.trace[i].qp <= o.trace[i - 1].qp + 1e-12);
    }
}
