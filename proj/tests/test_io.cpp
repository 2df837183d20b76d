#include <doctest.h>

#include <string>

#include "sombor/generators.hpp"
#include "sombor/io.hpp"
#include "sombor/random_graphs.hpp"
#include "sombor/sombor.hpp"

using namespace sombor;

namespace {

std::size_t error_line(const std::string& text) {
    try {
        parse_edge_list(text);
    } catch (const ParseError& e) {
        return e.line();
    }
    FAIL("expected ParseError for: " << text);
    return 0;
}

}  // namespace

TEST_CASE("edge list parsing") {
    CHECK(parse_edge_list("p edge 3 2\ne 1 2\ne 2 3") == path_graph(3));
    CHECK(parse_edge_list("c a comment\n\np edge 3 2\nc another\ne 2 3\ne 1 2\n") == path_graph(3));
    CHECK(parse_edge_list("p edge 4 0\n") == Graph(4));

    std::string k34 = "p edge 7 12\n";
    for (int a = 1; a <= 3; ++a) {
        for (int b = 4; b <= 7; ++b) k34 += "e " + std::to_string(a) + " " + std::to_string(b) + "\n";
    }
    Graph g = parse_edge_list(k34);
    CHECK(g == complete_bipartite_graph(3, 4));
    CHECK(sombor_index(g).to_string() == "60");
}

TEST_CASE("edge list errors carry line numbers") {
    CHECK(error_line("p edge 2 1\ne 1 1") == 2);
    CHECK(error_line("c x\ne 1 2\np edge 2 1") == 2);
    CHECK(error_line("p edge 2 1\ne 1 3") == 2);
    CHECK(error_line("p edge 3 2\ne 1 2\ne 2 1") == 3);
    CHECK(error_line("p edge 3 2\ne 1 2\np edge 3 2") == 3);
    CHECK(error_line("p edge three 2") == 1);
    CHECK(error_line("p edge 3 2\ne 1") == 2);
    CHECK(error_line("p edge 3 2\ne 1 x") == 2);
    CHECK(error_line("p edge 3 2\nx 1 2") == 2);
    CHECK(error_line("c\np edge 3 2\ne 1 2") == 2);
    CHECK(error_line("c only comments\n") == 1);
    CHECK(error_line("p edge 3 1\ne 0 2") == 2);
    CHECK(error_line("") == 1);

    try {
        parse_edge_list("p edge 2 1\ne 1 1");
    } catch (const ParseError& e) {
        CHECK(std::string(e.what()).rfind("line 2: ", 0) == 0);
    }
}

TEST_CASE("edge list rendering round trip") {
    CHECK(render_edge_list(path_graph(3)) == "p edge 3 2\ne 1 2\ne 2 3\n");
    RandomGraphs rng(8);
    for (int i = 0; i < 50; ++i) {
        Graph g = rng.gnp_half(rng.order(0, 15));
        CHECK(parse_edge_list(render_edge_list(g)) == g);
    }
}

TEST_CASE("graph6 parsing") {
    CHECK(parse_graph6("C~") == complete_graph(4));
    CHECK(parse_graph6("?") == Graph(0));
    CHECK(parse_graph6("@") == Graph(1));
    CHECK(parse_graph6(">>graph6<<C~\n") == complete_graph(4));

    // five vertices, edges 0-2 0-4 1-3 3-4
    Graph five(5);
    five.add_edge(0, 2);
    five.add_edge(0, 4);
    five.add_edge(1, 3);
    five.add_edge(3, 4);
    CHECK(parse_graph6("DQc") == five);
    CHECK(to_graph6(five) == "DQc");

    CHECK_THROWS_AS(parse_graph6("C ~"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);
    CHECK_THROWS_AS(parse_graph6("C~~"), ParseError);
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("~?"), ParseError);
    // K_3 uses three of six bits; a set padding bit is rejected
    CHECK(parse_graph6("Bw") == complete_graph(3));
    CHECK_THROWS_AS(parse_graph6("Bx"), ParseError);
}

TEST_CASE("property: graph6 round trip") {
    RandomGraphs rng(12);
    for (int i = 0; i < 100; ++i) {
        Graph g = rng.gnp_half(rng.order(0, 20));
        std::string s = to_graph6(g);
        for (char c : s) CHECK((c >= 63 && c <= 126));
        CHECK(parse_graph6(s) == g);
    }
    Graph big = path_graph(70);
    std::string s = to_graph6(big);
    CHECK(s.substr(0, 4) == "~?@E");  // 70 = 0b000000'000001'000110
    CHECK(parse_graph6(s) == big);
}
