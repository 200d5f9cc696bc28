#include <doctest.h>

#include "errors.hpp"
#include "graph.hpp"
#include "random_graph.hpp"
#include "support.hpp"

using namespace lowd;
using namespace lowd::test;

TEST_CASE("loader builds the smallest cycle") {
    Graph g = Graph::from_edge_list("0 1\n1 2\n2 0\n", false);
    CHECK(g.node_count() == 3);
    CHECK(g.edge_count() == 3);
    CHECK(g.total_weight() == 3.0);
    CHECK(g.is_unweighted());
    for (const Edge& e : g.edges()) CHECK(e.w == 1.0);
}

TEST_CASE("loader drops self-loops and duplicates, remaps first-seen") {
    Graph g = Graph::from_edge_list("5 5\n5 7\n7 5\n", false);
    CHECK(g.node_count() == 2);
    CHECK(g.edge_count() == 1);
    CHECK(g.original_id(0) == 5);
    CHECK(g.original_id(1) == 7);
}

TEST_CASE("loader reads weights") {
    Graph g = Graph::from_edge_list("0 1 2.5\n1 2 0.5\n", true);
    CHECK(g.edge_count() == 2);
    CHECK(g.total_weight() == 3.0);
    CHECK_FALSE(g.is_unweighted());
}

TEST_CASE("loader skips comments and blank lines") {
    Graph g = Graph::from_edge_list("# header\n% other\n\n0 1\n", false);
    CHECK(g.edge_count() == 1);
}

TEST_CASE("loader error paths") {
    CHECK_THROWS_AS(Graph::from_edge_list("0\n", false), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list("0 x\n", false), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list("0 1 1 1\n", false), ParseError);
    CHECK_THROWS_AS(Graph::from_edge_list("0 1\n", true), ParseError);  // missing weight
    CHECK_THROWS_AS(Graph::from_edge_list("0 1 0\n", true), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list("0 1 -2\n", true), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list("", false), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list("# only comments\n", false), ValidationError);
    CHECK_THROWS_AS(Graph::from_edge_list("3 3\n", false), ValidationError);  // loop only

    try {
        Graph::from_edge_list("0 1\nbroken\n", false);
        CHECK(false);
    } catch (const ParseError& e) {
        CHECK(e.line() == 2);
    }
}

TEST_CASE("density on hand graphs") {
    Graph g4 = k4();
    CHECK(density(g4, all_nodes(g4)) == 1.5);

    Graph se = single_edge();
    CHECK(density(se, all_nodes(se)) == 0.5);

    Graph gp = k4_pendant();
    CHECK(density(gp, all_nodes(gp)) == 1.4);

    CHECK_THROWS_AS(density(gp, {}), ValidationError);
    std::vector<NodeId> bad{99};
    CHECK_THROWS_AS(density(gp, bad), ValidationError);
}

TEST_CASE("induced degrees") {
    Graph g3 = k3();
    std::vector<NodeId> pair{0, 1};
    auto degs = induced_degrees(g3, pair);
    REQUIRE(degs.size() == 2);
    CHECK(degs[0].second == 1.0);
    CHECK(degs[1].second == 1.0);

    Graph gp = k4_pendant();
    auto full = induced_degrees(gp, all_nodes(gp));
    CHECK(full[0].second == 4.0);
    CHECK(full[1].second == 3.0);
    CHECK(full[4].second == 1.0);

    CHECK(induced_degrees(gp, {}).empty());
}

TEST_CASE("subgraph view invariants") {
    Graph gp = k4_pendant();
    SubgraphView view = make_subgraph_view(gp, all_nodes(gp));
    double sum = 0.0;
    for (double d : view.induced_degree) sum += d;
    CHECK(sum == 2.0 * view.induced_weight);
    for (std::size_t i = 0; i < view.members.size(); ++i)
        CHECK(view.induced_degree[i] <= gp.weighted_degree(view.members[i]));
}

TEST_CASE("handshake and full-graph density over the corpus") {
    for_each_corpus(2, [](const Graph& g, bool weighted) {
        SubgraphView view = make_subgraph_view(g, all_nodes(g));
        double sum = 0.0;
        for (double d : view.induced_degree) sum += d;
        if (weighted) {
            CHECK(sum == doctest::Approx(2.0 * view.induced_weight).epsilon(1e-9));
            CHECK(density(g, all_nodes(g)) ==
                  doctest::Approx(g.total_weight() / g.node_count()).epsilon(1e-9));
        } else {
            CHECK(sum == 2.0 * view.induced_weight);
            CHECK(density(g, all_nodes(g)) == g.total_weight() / g.node_count());
        }
    });
}

TEST_CASE("serialize round-trips") {
    for_each_corpus(1, [](const Graph& g, bool weighted) {
        Graph back = Graph::from_edge_list(g.serialize(), !g.is_unweighted());
        (void)weighted;
        REQUIRE(back.node_count() == g.node_count());
        REQUIRE(back.edge_count() == g.edge_count());
        CHECK(back.original_ids() == g.original_ids());
        for (EdgeId e = 0; e < g.edge_count(); ++e) {
            CHECK(back.edge(e).u == g.edge(e).u);
            CHECK(back.edge(e).v == g.edge(e).v);
            CHECK(back.edge(e).w == g.edge(e).w);
        }
        CHECK(back.serialize() == g.serialize());
    });
}

TEST_CASE("induce keeps original ids") {
    Graph g = Graph::from_edge_list("10 11\n10 12\n11 12\n12 13\n", false);
    std::vector<NodeId> tri{0, 1, 2};
    Graph sub = g.induce(tri);
    CHECK(sub.node_count() == 3);
    CHECK(sub.edge_count() == 3);
    CHECK(sub.original_id(0) == 10);
    CHECK(sub.original_id(2) == 12);

    std::vector<NodeId> disconnected{0, 3};
    CHECK_THROWS_AS(g.induce(disconnected), ValidationError);
}

TEST_CASE("gnp generator is deterministic and covers all nodes") {
    std::string a = gnp_edge_list(8, 0.5, true, 42);
    std::string b = gnp_edge_list(8, 0.5, true, 42);
    CHECK(a == b);
    CHECK(a != gnp_edge_list(8, 0.5, true, 43));

    Graph g = Graph::from_edge_list(a, true);
    CHECK(g.node_count() == 8);
    for (const Edge& e : g.edges()) {
        CHECK(e.w > 0.0);
        CHECK(e.w <= 2.0);
    }
}
