#include <doctest.h>

#include "sombor/generators.hpp"
#include "sombor/products.hpp"
#include "sombor/random_graphs.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

TEST_CASE("join") {
    Graph w5 = join(Graph(1), cycle_graph(4));
    CHECK(w5.vertex_count() == 5);
    CHECK(w5.edge_count() == 8);
    CHECK(w5 == generate({Family::Wheel, 5}));

    CHECK(join(Graph(1), Graph(1)) == path_graph(2));
    Graph k34 = join(Graph(3), Graph(4));
    CHECK(k34.edge_count() == 12);
    CHECK(degree_census(k34) == degree_census(complete_bipartite_graph(3, 4)));
}

TEST_CASE("corona") {
    Graph c3k1 = corona(cycle_graph(3), Graph(1));
    CHECK(c3k1.vertex_count() == 6);
    CHECK(c3k1.edge_count() == 6);
    DegreeCensus expected;
    expected.counts[{1, 3}] = 3;
    expected.counts[{3, 3}] = 3;
    CHECK(degree_census(c3k1) == expected);

    CHECK(corona(Graph(1), Graph(1)) == path_graph(2));
    CHECK(degree_census(corona(path_graph(2), Graph(1))) == degree_census(path_graph(4)));
    CHECK_THROWS_AS(corona(Graph(0), Graph(2)), std::invalid_argument);
}

TEST_CASE("cartesian product") {
    CHECK(degree_census(cartesian_product(path_graph(2), path_graph(2))) ==
          degree_census(cycle_graph(4)));
    Graph g33 = cartesian_product(path_graph(3), path_graph(3));
    CHECK(g33.vertex_count() == 9);
    CHECK(g33.edge_count() == 12);
    Graph b3 = cartesian_product(path_graph(2), star_graph(3));
    CHECK(b3.vertex_count() == 8);
    CHECK(b3.edge_count() == 10);
    CHECK(degree_census(b3) == degree_census(generate({Family::Book, 3})));
    // row-major layout
    CHECK(g33.has_edge(0, 1));
    CHECK(g33.has_edge(0, 3));
    CHECK_FALSE(g33.has_edge(2, 3));
}

TEST_CASE("k-subdivision") {
    CHECK(degree_census(k_subdivision(cycle_graph(3), 2)) == degree_census(cycle_graph(6)));
    // new vertices are appended, so K_2 with k = 3 is the path 0-2-3-1
    Graph p4(4);
    p4.add_edge(0, 2);
    p4.add_edge(2, 3);
    p4.add_edge(3, 1);
    CHECK(k_subdivision(path_graph(2), 3) == p4);
    Graph k4 = k_subdivision(complete_graph(4), 2);
    CHECK(k4.vertex_count() == 10);
    CHECK(k4.edge_count() == 12);
    DegreeCensus expected;
    expected.counts[{2, 3}] = 12;
    CHECK(degree_census(k4) == expected);
    CHECK(k_subdivision(cycle_graph(5), 1) == cycle_graph(5));
    CHECK_THROWS_AS(k_subdivision(cycle_graph(5), 0), std::invalid_argument);
}

TEST_CASE("property: degree laws of the products") {
    RandomGraphs rng(99);
    for (int i = 0; i < 40; ++i) {
        Graph g = rng.gnp_half(rng.order(1, 6));
        Graph h = rng.gnp_half(rng.order(1, 6));
        const std::size_t ng = g.vertex_count();
        const std::size_t nh = h.vertex_count();

        Graph j = join(g, h);
        CHECK(j.edge_count() == g.edge_count() + h.edge_count() + ng * nh);
        for (Vertex u = 0; u < ng; ++u) CHECK(j.degree(u) == g.degree(u) + nh);
        for (Vertex v = 0; v < nh; ++v) CHECK(j.degree(ng + v) == h.degree(v) + ng);

        Graph c = corona(g, h);
        CHECK(c.vertex_count() == ng * (1 + nh));
        CHECK(c.edge_count() == g.edge_count() + ng * h.edge_count() + ng * nh);
        for (Vertex u = 0; u < ng; ++u) CHECK(c.degree(u) == g.degree(u) + nh);
        for (Vertex i2 = 0; i2 < ng; ++i2) {
            for (Vertex v = 0; v < nh; ++v) {
                CHECK(c.degree(ng + i2 * nh + v) == h.degree(v) + 1);
                CHECK(c.has_edge(i2, ng + i2 * nh + v));
            }
        }

        Graph p = cartesian_product(g, h);
        CHECK(p.edge_count() == ng * h.edge_count() + nh * g.edge_count());
        for (Vertex u = 0; u < ng; ++u) {
            for (Vertex v = 0; v < nh; ++v) CHECK(p.degree(u * nh + v) == g.degree(u) + h.degree(v));
        }

        const std::size_t k = rng.order(1, 5);
        Graph s = k_subdivision(g, k);
        CHECK(s.vertex_count() == ng + g.edge_count() * (k - 1));
        CHECK(s.edge_count() == g.edge_count() * k);
        for (Vertex u = 0; u < ng; ++u) CHECK(s.degree(u) == g.degree(u));
        for (Vertex w = ng; w < s.vertex_count(); ++w) CHECK(s.degree(w) == 2);
    }
}

TEST_CASE("ladder as a product") {
    for (std::size_t n = 2; n <= 12; ++n) {
        Graph l = cartesian_product(path_graph(n), path_graph(2));
        Graph ladder = generate({Family::Ladder, static_cast<std::uint32_t>(n)});
        CHECK(degree_census(l) == degree_census(ladder));
        CHECK(sombor_index(l) == sombor_index(ladder));
    }
}
