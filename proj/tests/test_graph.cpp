#include "doctest.h"
#include "test_helpers.hpp"

#include "etg/canon.hpp"
#include "etg/graph.hpp"
#include "etg/graph6.hpp"

#include <random>

using namespace etg;
using namespace etg::testhelp;

TEST_SUITE_BEGIN("graph");

TEST_CASE("basic structure") {
    Graph g = Graph::from_edges(4, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(g.edge_count() == 3);
    CHECK(g.adjacent(0, 1));
    CHECK_FALSE(g.adjacent(0, 2));
    CHECK(g.degree(1) == 2);
    CHECK(g.neighbors(1) == std::vector<int>{0, 2});
    CHECK_THROWS_AS(g.add_edge(0, 0), std::invalid_argument);
    CHECK_THROWS_AS(g.add_edge(0, 4), std::invalid_argument);
}

TEST_CASE("connectivity and bipartiteness") {
    CHECK(is_connected(Graph(1)));
    CHECK_FALSE(is_connected(Graph(2)));
    Graph five_k2(10);
    for (int i = 0; i < 5; ++i) five_k2.add_edge(2 * i, 2 * i + 1);
    CHECK_FALSE(is_connected(five_k2)); // 5K_2
    CHECK(is_connected(cycle_graph(10)));
    CHECK(is_bipartite(cycle_graph(10)));
    CHECK_FALSE(is_bipartite(cycle_graph(5)));
    CHECK(is_bipartite(complete_bipartite(3, 4)));
}

TEST_CASE("worthiness and twins") {
    CHECK(is_worthy(complete_graph(4)));
    CHECK(is_worthy(cycle_graph(6)));
    CHECK_FALSE(is_worthy(cycle_graph(4)));       // opposite vertices are twins
    CHECK_FALSE(is_worthy(star_graph(9)));        // nine twin leaves
    CHECK_FALSE(is_worthy(complete_bipartite(2, 3)));

    auto classes = twin_classes(star_graph(9));
    CHECK(classes.size() == 2);
    CHECK(classes[1].size() == 9);
}

TEST_CASE("bipartition designation is validated") {
    Graph g = complete_bipartite(2, 3);
    CHECK(g.has_bipartition());
    CHECK(g.part(0).size() == 2);
    Graph bad = cycle_graph(5);
    CHECK_THROWS_AS(bad.set_bipartition({0, 2}, {1, 3, 4}), std::invalid_argument);
    Graph uncovered = path_graph(3);
    CHECK_THROWS_AS(uncovered.set_bipartition({0}, {1}), std::invalid_argument);
}

TEST_CASE("twin quotient") {
    // K_{k,m} collapses to a single edge
    Graph q = twin_quotient(complete_bipartite(3, 5));
    CHECK(q.vertex_count() == 2);
    CHECK(q.edge_count() == 1);

    // worthy graphs are their own quotient
    Graph c6 = cycle_graph(6);
    CHECK(twin_quotient(c6).vertex_count() == 6);

    // quotient of a blow-up recovers the base graph
    Graph base = complete_bipartite(1, 1);
    Graph blown = blow_up(base, 4, 6);
    CHECK(blown.vertex_count() == 10);
    Graph back = twin_quotient(blown);
    CHECK(back.vertex_count() == 2);
    CHECK(back.edge_count() == 1);
}

TEST_CASE("blow-up") {
    Graph k11 = complete_bipartite(1, 1);
    Graph k46 = blow_up(k11, 4, 6);
    CHECK(canonical_form(k46).canonical_string ==
          canonical_form(complete_bipartite(4, 6)).canonical_string);

    Graph c6 = cycle_graph(6);
    c6.set_bipartition({0, 2, 4}, {1, 3, 5});
    CHECK(blow_up(c6, 1, 1).edge_count() == 6); // identity blow-up

    CHECK_THROWS_AS(blow_up(c6, 0, 1), std::invalid_argument);
    CHECK_THROWS_AS(blow_up(cycle_graph(6), 1, 1), std::invalid_argument); // no parts

    // order and block structure
    Graph b = blow_up(c6, 2, 3);
    CHECK(b.vertex_count() == 2 * 3 + 3 * 3);
    CHECK(b.edge_count() == 6 * 2 * 3);
}

TEST_CASE("valency multisets") {
    CHECK(valency_multiset(star_graph(3)) == std::vector<int>{1, 1, 1, 3});
    CHECK(valency_multiset(cycle_graph(4)) == std::vector<int>{2, 2, 2, 2});
}

TEST_CASE("graph6 round trip") {
    CHECK(graph6_encode(complete_bipartite(1, 1)) == "A_");
    CHECK(graph6_decode("A_").edge_count() == 1);

    std::mt19937 rng(12345);
    for (int trial = 0; trial < 40; ++trial) {
        int n = 1 + static_cast<int>(rng() % 70); // crosses the 62-vertex format switch
        Graph g(n);
        for (int u = 0; u < n; ++u)
            for (int v = u + 1; v < n; ++v)
                if (rng() % 3 == 0) g.add_edge(u, v);
        Graph h = graph6_decode(graph6_encode(g));
        CHECK(h == g);
    }

    CHECK_THROWS_AS(graph6_decode(""), std::invalid_argument);
    CHECK_THROWS_AS(graph6_decode("I"), std::invalid_argument);      // truncated
    CHECK_THROWS_AS(graph6_decode("A_x"), std::invalid_argument);    // trailing bytes
    CHECK_THROWS_AS(graph6_decode(std::string(1, 10)), std::invalid_argument);
}

TEST_CASE("edge list text round trip") {
    Graph g = petersen_graph();
    Graph h = edge_list_parse(edge_list_text(g));
    CHECK(h == g);
}

TEST_SUITE_END();
