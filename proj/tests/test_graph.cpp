#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hadwiger7/graph.hpp"
#include "hadwiger7/graph6.hpp"
#include "hadwiger7/patterns.hpp"
#include "testutil.hpp"

using namespace hadwiger7;

TEST_CASE("from_edge_list basics") {
    Graph tri = Graph::from_edge_list(3, {{0, 1}, {1, 2}, {0, 2}});
    CHECK(tri.n() == 3);
    CHECK(tri.edge_count() == 3);
    for (int v = 0; v < 3; ++v) CHECK(tri.degree(v) == 2);

    // duplicates and reversed pairs collapse
    Graph dup = Graph::from_edge_list(3, {{0, 1}, {1, 0}, {0, 1}});
    CHECK(dup.edge_count() == 1);

    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 0}}), input_error);
    CHECK_THROWS_AS(Graph::from_edge_list(2, {{0, 2}}), input_error);
}

TEST_CASE("circulant C8(1,2)") {
    Graph c = circulant_graph(8, {1, 2});
    CHECK(c.n() == 8);
    CHECK(c.edge_count() == 16);
    for (int v = 0; v < 8; ++v) CHECK(c.degree(v) == 4);
}

TEST_CASE("identify_vertices") {
    Graph path = path_graph(3); // a-b-c
    Graph merged = path.identify_vertices({0, 2});
    CHECK(merged.n() == 2);
    CHECK(merged.edge_count() == 1);

    Graph k4 = complete_graph(4);
    Graph k3 = k4.identify_vertices({0, 1});
    CHECK(k3.n() == 3);
    CHECK(k3.is_complete());

    // merged degree equals |N(v0) ∪ N(v4)| in C8(1,2):
    // N(0)={1,2,6,7}, N(4)={2,3,5,6}, union has 6 vertices
    Graph c = circulant_graph(8, {1, 2});
    Bitset uni = c.neighbors(0) | c.neighbors(4);
    CHECK(uni.count() == 6);
    Graph idd = c.identify_vertices({0, 4});
    CHECK(idd.n() == 7);
    CHECK(idd.degree(0) == 6);
    CHECK(idd.label(0) == "0+4");
}

TEST_CASE("contract_edge") {
    Graph k4 = complete_graph(4);
    CHECK(isomorphic_brute(k4.contract_edge(0, 1), complete_graph(3)));

    Graph c4 = cycle_graph(4);
    CHECK(isomorphic_brute(c4.contract_edge(0, 1), complete_graph(3)));

    // C8(1,2): endpoints of a jump-1 edge share 2 neighbors, 16-1-2 = 13
    Graph c = circulant_graph(8, {1, 2});
    Graph contracted = c.contract_edge(0, 1);
    CHECK(contracted.n() == 7);
    CHECK(contracted.edge_count() == 13);

    CHECK_THROWS_AS(c.contract_edge(0, 4), input_error);
}

TEST_CASE("contract edge count formula on random graphs") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 50; ++round) {
        Graph g = h7test::random_graph(9, 0.45, rng);
        auto es = g.edges();
        if (es.empty()) continue;
        auto [u, v] = es[rng() % es.size()];
        int common = (g.neighbors(u) & g.neighbors(v)).count();
        CHECK(g.contract_edge(u, v).edge_count() == g.edge_count() - 1 - common);
    }
}

TEST_CASE("induced_subgraph") {
    Graph k5 = complete_graph(5);
    auto [k4, map] = k5.induced_subgraph(std::vector<int>{0, 1, 2, 4});
    CHECK(k4.n() == 4);
    CHECK(k4.is_complete());
    CHECK(map[4] == 3);
    CHECK(map[3] == -1);

    // C8(1,2) on {0..3}: path chords 0-2 and 1-3, 5 edges
    Graph c = circulant_graph(8, {1, 2});
    auto [sub, m2] = c.induced_subgraph(std::vector<int>{0, 1, 2, 3});
    (void)m2;
    CHECK(sub.n() == 4);
    CHECK(sub.edge_count() == 5);

    auto [empty, m3] = c.induced_subgraph(std::vector<int>{});
    (void)m3;
    CHECK(empty.n() == 0);
    CHECK(empty.edge_count() == 0);
}

TEST_CASE("complement") {
    Graph c5 = cycle_graph(5);
    CHECK(isomorphic_brute(c5.complement(), c5)); // self-complementary

    Graph k5 = complete_graph(5);
    CHECK(k5.complement().edge_count() == 0);

    Graph c = circulant_graph(8, {1, 2});
    Graph cc = c.complement();
    CHECK(cc.edge_count() == 12);
    CHECK(isomorphic_brute(cc, circulant_graph(8, {3, 4})));
}

TEST_CASE("complement is an involution") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 30; ++round) {
        Graph g = h7test::random_graph(8, 0.4, rng);
        Graph back = g.complement().complement();
        CHECK(g.n() == back.n());
        CHECK(g.edges() == back.edges());
    }
}

TEST_CASE("graph6 known strings") {
    CHECK(to_graph6(complete_graph(4)) == "C~");
    CHECK(to_graph6(complete_graph(5)) == "D~{");
    CHECK(from_graph6("C~").is_complete());
    CHECK(from_graph6("D~{").n() == 5);

    Graph empty0 = Graph::from_edge_list(0, {});
    CHECK(to_graph6(empty0) == "?");
    CHECK(from_graph6("?").n() == 0);

    CHECK(from_graph6(">>graph6<<C~").is_complete());
    CHECK_THROWS_AS(from_graph6(""), input_error);
    CHECK_THROWS_AS(from_graph6("C"), input_error);
}

TEST_CASE("graph6 round trips") {
    std::mt19937_64 rng(23);
    for (int n : {0, 1, 2, 5, 8, 13, 40, 70}) {
        for (int round = 0; round < 8; ++round) {
            Graph g = h7test::random_graph(n, 0.3, rng);
            Graph back = from_graph6(to_graph6(g));
            CHECK(back.n() == g.n());
            CHECK(back.edges() == g.edges());
        }
    }
}

TEST_CASE("sparse6 decode") {
    // formats.txt example: ':Fa@x^' is the 7-vertex graph with edges
    // 0-1, 0-2, 1-2, 5-6
    Graph g = from_sparse6(":Fa@x^");
    CHECK(g.n() == 7);
    CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {0, 2}, {1, 2}, {5, 6}});
    CHECK(from_g6_line(":Fa@x^").n() == 7);
}

TEST_CASE("edge list text format") {
    Graph c = circulant_graph(8, {1, 2});
    Graph back = from_edge_list_text(to_edge_list(c));
    CHECK(back.n() == 8);
    CHECK(back.edges() == c.edges());
    CHECK_THROWS_AS(from_edge_list_text("3"), input_error);
}

TEST_CASE("labels survive reductions") {
    Graph p4 = path_graph(4);
    Graph g = p4.identify_vertices({1, 2});
    CHECK(g.label(1) == "1+2");
    Graph h = g.identify_vertices({0, 1});
    CHECK(h.label(0) == "0+1+2");
}
