#include <doctest.h>

#include <numeric>

#include "sombor/generators.hpp"
#include "sombor/graph.hpp"
#include "sombor/random_graphs.hpp"

using namespace sombor;

namespace {

GraphError::Kind error_kind(auto&& fn) {
    try {
        fn();
    } catch (const GraphError& e) {
        return e.kind();
    }
    FAIL("expected GraphError");
    return GraphError::Kind::Loop;
}

void check_handshake(const Graph& g) {
    auto d = g.degrees();
    CHECK(std::accumulate(d.begin(), d.end(), std::size_t{0}) == 2 * g.edge_count());
}

}  // namespace

TEST_CASE("construction") {
    CHECK(Graph(0).vertex_count() == 0);
    Graph five(5);
    CHECK(five.vertex_count() == 5);
    CHECK(five.edge_count() == 0);
    CHECK(Graph(1).edges().empty());
}

TEST_CASE("add_edge and its errors") {
    Graph k2(2);
    k2.add_edge(0, 1);
    CHECK(k2.has_edge(1, 0));
    CHECK(k2.degree(0) == 1);
    CHECK(k2.degree(1) == 1);

    CHECK(error_kind([&] { k2.add_edge(0, 0); }) == GraphError::Kind::Loop);
    CHECK(error_kind([&] { k2.add_edge(0, 1); }) == GraphError::Kind::DuplicateEdge);
    CHECK(error_kind([&] { k2.add_edge(1, 0); }) == GraphError::Kind::DuplicateEdge);
    CHECK(error_kind([&] { k2.add_edge(0, 2); }) == GraphError::Kind::OutOfRange);
    CHECK(k2.edge_count() == 1);
}

TEST_CASE("remove_edge and remove_vertex") {
    Graph k3 = complete_graph(3);
    k3.remove_edge(0, 2);
    CHECK(k3 == path_graph(3));
    CHECK(error_kind([&] { k3.remove_edge(0, 2); }) == GraphError::Kind::MissingEdge);

    Graph p3 = path_graph(3);
    p3.remove_vertex(1);
    CHECK(p3 == Graph(2));

    for (Vertex v = 0; v < 4; ++v) {
        Graph c4 = cycle_graph(4);
        c4.remove_vertex(v);
        CHECK(c4.vertex_count() == 3);
        CHECK(degree_census(c4) == degree_census(path_graph(3)));
        check_handshake(c4);
    }
    // order-preserving shift
    Graph p4 = path_graph(4);
    p4.remove_vertex(0);
    CHECK(p4 == path_graph(3));
    CHECK(error_kind([&] { p4.remove_vertex(3); }) == GraphError::Kind::MissingVertex);
}

TEST_CASE("complement") {
    CHECK(complement(complete_graph(3)) == Graph(3));
    CHECK(degree_census(complement(cycle_graph(5))) == degree_census(cycle_graph(5)));

    RandomGraphs rng(11);
    for (int i = 0; i < 50; ++i) {
        Graph g = rng.gnp_half(rng.order(0, 9));
        CHECK(complement(complement(g)) == g);
        CHECK(g.edge_count() + complement(g).edge_count() ==
              g.vertex_count() * (g.vertex_count() - (g.vertex_count() ? 1 : 0)) / 2);
    }
}

TEST_CASE("complement of a regular graph has a single census class") {
    for (std::size_t n = 5; n <= 9; ++n) {
        Graph c = cycle_graph(n);
        Graph cc = complement(c);
        DegreeCensus expected;
        expected.counts[{n - 3, n - 3}] = cc.edge_count();
        CHECK(degree_census(cc) == expected);
    }
}

TEST_CASE("degree census") {
    DegreeCensus p4;
    p4.counts[{1, 2}] = 2;
    p4.counts[{2, 2}] = 1;
    CHECK(degree_census(path_graph(4)) == p4);

    DegreeCensus k34;
    k34.counts[{3, 4}] = 12;
    CHECK(degree_census(complete_bipartite_graph(3, 4)) == k34);

    // 3x3 grid built from coordinates: corners have degree 2, side midpoints 3,
    // the centre 4.
    Graph grid(9);
    for (std::size_t r = 0; r < 3; ++r) {
        for (std::size_t c = 0; c < 3; ++c) {
            if (c + 1 < 3) grid.add_edge(r * 3 + c, r * 3 + c + 1);
            if (r + 1 < 3) grid.add_edge(r * 3 + c, (r + 1) * 3 + c);
        }
    }
    DegreeCensus g33;
    g33.counts[{2, 3}] = 8;
    g33.counts[{3, 4}] = 4;
    CHECK(degree_census(grid) == g33);
    CHECK(to_string(g33) == "{(2,3):8, (3,4):4}");
}

TEST_CASE("connectivity") {
    CHECK(is_connected(path_graph(5)));
    CHECK_FALSE(is_connected(Graph(2)));
    Graph k3_k2(5);
    k3_k2.add_edge(0, 1);
    k3_k2.add_edge(1, 2);
    k3_k2.add_edge(0, 2);
    k3_k2.add_edge(3, 4);
    CHECK_FALSE(is_connected(k3_k2));
    CHECK(is_connected(Graph(0)));
    CHECK(is_connected(Graph(1)));
}

TEST_CASE("property: handshake and census total on random graphs") {
    RandomGraphs rng(3);
    for (int i = 0; i < 100; ++i) {
        Graph g = rng.gnp_half(rng.order(1, 12));
        check_handshake(g);
        CHECK(degree_census(g).total() == g.edge_count());
        if (g.vertex_count() > 1) {
            Vertex v = rng.order(0, g.vertex_count() - 1);
            Graph h = g;
            h.remove_vertex(v);
            CHECK(h.vertex_count() == g.vertex_count() - 1);
            CHECK(h.edge_count() == g.edge_count() - g.degree(v));
            check_handshake(h);
        }
    }
}
