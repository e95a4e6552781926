#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "hadwiger7/planarity.hpp"
#include "testutil.hpp"

using namespace hadwiger7;

TEST_CASE("K5 and K33 are nonplanar with verified subdivisions") {
    auto r5 = is_planar(complete_graph(5));
    CHECK_FALSE(r5.planar);
    REQUIRE(r5.kuratowski.has_value());
    CHECK(r5.kuratowski->k5);
    CHECK(subdivision_witness_valid(complete_graph(5), *r5.kuratowski));

    Graph k33 = complete_multipartite({3, 3});
    auto r33 = is_planar(k33);
    CHECK_FALSE(r33.planar);
    REQUIRE(r33.kuratowski.has_value());
    CHECK_FALSE(r33.kuratowski->k5);
    CHECK(subdivision_witness_valid(k33, *r33.kuratowski));
}

TEST_CASE("C8(1,2) is planar with a verified embedding") {
    Graph c = circulant_graph(8, {1, 2});
    auto r = is_planar(c);
    CHECK(r.planar);
    REQUIRE(r.embedding.has_value());
    CHECK(embedding_valid(c, *r.embedding));
}

TEST_CASE("planar classics") {
    CHECK(is_planar(h7test::icosahedron()).planar);
    CHECK(is_planar(complete_graph(4)).planar);
    CHECK(is_planar(cycle_graph(9)).planar);
    CHECK(is_planar(path_graph(6)).planar);
    CHECK(is_planar(Graph::from_edge_list(5, {})).planar);
    CHECK_FALSE(is_planar(h7test::petersen()).planar);
    CHECK_FALSE(is_planar(complete_graph(6)).planar);
    CHECK(is_planar(Graph::from_edge_list(7, {{0, 1}, {2, 3}, {4, 5}})).planar);
}

TEST_CASE("subdivided Kuratowski graphs are caught") {
    // subdivide each edge of K5 once: 5 + 10 vertices
    std::vector<std::pair<int, int>> es;
    int next = 5;
    for (int u = 0; u < 5; ++u)
        for (int v = u + 1; v < 5; ++v) {
            es.emplace_back(u, next);
            es.emplace_back(next, v);
            ++next;
        }
    Graph sub = Graph::from_edge_list(next, es);
    auto r = is_planar(sub);
    CHECK_FALSE(r.planar);
    REQUIRE(r.kuratowski.has_value());
    CHECK(subdivision_witness_valid(sub, *r.kuratowski));
}

TEST_CASE("embedding Euler identity on random planar graphs") {
    // random outerplanar-ish constructions: fans plus random chords kept planar
    std::mt19937_64 rng(5);
    for (int round = 0; round < 20; ++round) {
        int n = 4 + (int)(rng() % 12);
        std::vector<std::pair<int, int>> es;
        for (int v = 1; v < n; ++v) es.emplace_back(v - 1, v);
        Graph g = Graph::from_edge_list(n, es);
        // add random edges as long as planarity survives
        for (int tries = 0; tries < 3 * n; ++tries) {
            int u = (int)(rng() % n), v = (int)(rng() % n);
            if (u == v || g.has_edge(u, v)) continue;
            GraphBuilder b(n);
            for (auto [x, y] : g.edges()) b.add_edge(x, y);
            b.add_edge(u, v);
            Graph cand = b.build();
            if (detail::planar_decision(cand)) g = cand;
        }
        auto r = is_planar(g);
        REQUIRE(r.planar);
        CHECK(embedding_valid(g, *r.embedding));
        CHECK(g.edge_count() <= 3 * g.n() - 6);
    }
}

TEST_CASE("four_color_planar") {
    Graph empty5 = Graph::from_edge_list(5, {});
    Coloring c0 = four_color_planar(empty5);
    CHECK(c0.count == 1);
    for (int x : c0.color) CHECK(x == 0);

    Graph c8 = circulant_graph(8, {1, 2});
    // the example classes {0,4},{1,5},{2,6},{3,7} are proper
    Coloring example;
    example.color = {0, 1, 2, 3, 0, 1, 2, 3};
    example.count = 4;
    CHECK(coloring_proper(c8, example));
    // alpha = 2 forces 4 classes; exhaustive search agrees
    CHECK_FALSE(exact_k_color(c8, 3).has_value());
    Coloring c = four_color_planar(c8);
    CHECK(c.count == 4);
    CHECK(coloring_proper(c8, c));

    Coloring ico = four_color_planar(h7test::icosahedron());
    CHECK(ico.count <= 4);
    CHECK(coloring_proper(h7test::icosahedron(), ico));
    CHECK_FALSE(exact_k_color(h7test::icosahedron(), 3).has_value());

    CHECK_THROWS_AS(four_color_planar(complete_graph(5)), input_error);
}

TEST_CASE("exact_k_color basics") {
    Graph c5 = cycle_graph(5);
    CHECK_FALSE(exact_k_color(c5, 2).has_value());
    auto c3 = exact_k_color(c5, 3);
    REQUIRE(c3.has_value());
    CHECK(coloring_proper(c5, *c3));

    CHECK_FALSE(exact_k_color(complete_graph(7), 6).has_value());
    auto k7c = exact_k_color(complete_graph(7), 7);
    REQUIRE(k7c.has_value());
    CHECK(k7c->count == 7);

    auto c8c = exact_k_color(circulant_graph(8, {1, 2}), 4);
    REQUIRE(c8c.has_value());
    CHECK(coloring_proper(circulant_graph(8, {1, 2}), *c8c));
}
