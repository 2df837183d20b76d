#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "sombor/cli.hpp"
#include "sombor/generators.hpp"
#include "sombor/io.hpp"

using namespace sombor;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
};

Result run(std::vector<std::string> args) {
    std::ostringstream out;
    std::ostringstream err;
    int code = cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

std::string temp_file(const std::string& name, const std::string& content) {
    auto path = std::filesystem::temp_directory_path() / ("sombor_cli_" + name);
    std::ofstream(path) << content;
    return path.string();
}

std::string line_with(const std::string& text, const std::string& prefix) {
    std::istringstream in(text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind(prefix, 0) == 0) return line;
    }
    return {};
}

}  // namespace

TEST_CASE("range parsing") {
    CHECK(cli::parse_range("3..7") == std::pair<std::uint32_t, std::uint32_t>{3, 7});
    CHECK(cli::parse_range("5") == std::pair<std::uint32_t, std::uint32_t>{5, 5});
    CHECK_THROWS_AS(cli::parse_range("7..3"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_range("a..b"), std::invalid_argument);
    CHECK_THROWS_AS(cli::parse_range(""), std::invalid_argument);
}

TEST_CASE("complete bipartite recognition") {
    CHECK(cli::complete_bipartite_parts(complete_bipartite_graph(4, 3)) ==
          std::pair<std::size_t, std::size_t>{3, 4});
    CHECK_FALSE(cli::complete_bipartite_parts(cycle_graph(5)));
    CHECK(cli::complete_bipartite_parts(cycle_graph(4)) == std::pair<std::size_t, std::size_t>{2, 2});
}

TEST_CASE("compute") {
    auto file = temp_file("k34.txt", render_edge_list(complete_bipartite_graph(3, 4)));
    auto r = run({"compute", file});
    CHECK(r.code == 0);
    CHECK(line_with(r.out, "SO: ") == "SO: 60");
    CHECK(line_with(r.out, "vertices: ") == "vertices: 7");
    CHECK(r.out.find("(3,4): 12") != std::string::npos);

    auto g6 = temp_file("k4.g6", "C~\n");
    r = run({"compute", g6, "--format", "graph6", "--digits", "3"});
    CHECK(r.code == 0);
    CHECK(line_with(r.out, "SO: ") == "SO: 18*sqrt(2)");
    CHECK(line_with(r.out, "decimal: ") == "decimal: 25.456");

    auto bad = temp_file("loop.txt", "p edge 2 1\ne 1 1\n");
    r = run({"compute", bad});
    CHECK(r.code == 2);
    CHECK(r.err.find("line 2") != std::string::npos);
}

TEST_CASE("generate then compute agrees with verify-family") {
    auto out = (std::filesystem::temp_directory_path() / "sombor_cli_grid.txt").string();
    auto r = run({"generate", "grid:4,5", "--out", out});
    CHECK(r.code == 0);
    auto c = run({"compute", out});
    auto v = run({"verify-family", "grid", "--range", "4", "--range2", "5"});
    CHECK(v.code == 0);
    std::string so = line_with(c.out, "SO: ").substr(4);
    CHECK(v.out.find("grid:4,5 | " + so + " | " + so + " | Equal") != std::string::npos);
    CHECK(v.out.find("1 of 1 parameter sets match") != std::string::npos);

    r = run({"generate", "path:3"});
    CHECK(r.out == "p edge 3 2\ne 1 2\ne 2 3\n");
    CHECK(run({"generate", "cycle:2"}).code == 2);
}

TEST_CASE("verify-family exit codes") {
    auto ok = run({"verify-family", "ladder", "--range", "3..10"});
    CHECK(ok.code == 0);
    CHECK(ok.out.find("8 of 8 parameter sets match") != std::string::npos);

    auto printed = run({"verify-family", "ladder", "--range", "3..10", "--as-printed"});
    CHECK(printed.code == 0);
    CHECK(printed.out.find("0 of 8 parameter sets match") != std::string::npos);
    CHECK(printed.out.find("MISMATCH (formula - oracle = -2*sqrt(2))") != std::string::npos);

    CHECK(run({"verify-family", "nosuch", "--range", "3"}).code == 2);
    CHECK(run({"verify-family", "path", "--range", "1..4"}).code == 2);
}

TEST_CASE("bounds") {
    auto p3 = temp_file("p3.txt", "p edge 3 2\ne 1 2\ne 2 3\n");
    auto r = run({"bounds", p3, "--check", "edge", "--edge", "1", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rhs: -1/2*sqrt(2) + 2*sqrt(5)") != std::string::npos);
    CHECK(r.out.find("holds: true") != std::string::npos);

    r = run({"bounds", p3, "--check", "subdivision", "--k", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("rhs: 3*sqrt(5)") != std::string::npos);

    auto k1 = temp_file("k1.txt", "p edge 1 0\n");
    auto e3 = temp_file("e3.txt", "p edge 3 0\n");
    r = run({"bounds", k1, "--check", "corona", "--with", e3});
    CHECK(r.out.find("holds: false") != std::string::npos);
    CHECK(r.out.find("holds: true") != std::string::npos);
    CHECK(r.code == 1);

    r = run({"bounds", "--check", "ng", "--random", "20", "--seed", "4"});
    CHECK(r.code == 0);
    CHECK(r.out.find("ng: 20 of 20 instances hold") != std::string::npos);

    CHECK(run({"bounds", "--check", "ng", "--random", "5"}).code == 2);
    CHECK(run({"bounds", p3, "--check", "bogus"}).code != 0);
}

TEST_CASE("search") {
    auto r = run({"search", "--max-n", "7", "--threads", "2"});
    CHECK(r.code == 0);
    CHECK(r.out.find("hits: 35") != std::string::npos);
    CHECK(r.out.find("minimum natural Sombor index: 60 (K_{3,4})") != std::string::npos);

    r = run({"search", "--max-n", "5"});
    CHECK(r.out.find("no graph of order <= 5 has a natural Sombor index") != std::string::npos);
    CHECK(run({"search", "--max-n", "9"}).code != 0);
}

TEST_CASE("census") {
    auto p4 = temp_file("p4.txt", render_edge_list(path_graph(4)));
    auto csv = run({"census", p4, "--emit", "csv"});
    CHECK(csv.code == 0);
    CHECK(csv.out == "degree_u,degree_v,edges,contribution\n1,2,2,2*sqrt(5)\n2,2,1,2*sqrt(2)\n");
    auto md = run({"census", p4});
    CHECK(md.out.find("| 1 | 2 | 2 | 2*sqrt(5) |") != std::string::npos);
    CHECK(md.out.find("| | | 3 | 2*sqrt(2) + 2*sqrt(5) |") != std::string::npos);
}
