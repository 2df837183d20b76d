#include "sombor/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include <CLI11.hpp>

#include "sombor/generators.hpp"
#include "sombor/io.hpp"
#include "sombor/products.hpp"
#include "sombor/random_graphs.hpp"
#include "sombor/search.hpp"

namespace sombor::cli {

namespace {

std::string read_input(const std::string& path) {
    if (path == "-") {
        return std::string(std::istreambuf_iterator<char>(std::cin), {});
    }
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw std::runtime_error("cannot open '" + path + "'");
    }
    return std::string(std::istreambuf_iterator<char>(in), {});
}

Graph load_graph(const std::string& path, const std::string& format) {
    std::string text = read_input(path);
    if (format == "graph6") {
        return parse_graph6(text);
    }
    return parse_edge_list(text);
}

std::string yes_no(bool b) { return b ? "yes" : "no"; }

int cmd_compute(const Graph& g, unsigned digits, std::ostream& out) {
    RadicalSum so = sombor_index(g);
    out << "vertices: " << g.vertex_count() << '\n';
    out << "edges: " << g.edge_count() << '\n';
    out << "SO: " << so.to_string() << '\n';
    out << "decimal: " << to_decimal(so, digits) << '\n';
    out << "census:\n";
    for (const auto& [key, count] : degree_census(g).counts) {
        out << "  (" << key.first << "," << key.second << "): " << count << '\n';
    }
    return 0;
}

int cmd_generate(const std::string& spec_text, const std::string& out_path, std::ostream& out) {
    Graph g = generate(parse_family_spec(spec_text));
    std::string text = render_edge_list(g);
    if (out_path.empty()) {
        out << text;
        return 0;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        throw std::runtime_error("cannot write '" + out_path + "'");
    }
    file << text;
    return 0;
}

int cmd_verify_family(const std::string& family_name_text, const std::string& range_text,
                      const std::string& range2_text, bool as_printed, std::ostream& out) {
    auto family = family_from_name(family_name_text);
    if (!family) {
        throw std::invalid_argument("unknown family '" + family_name_text + "'");
    }
    auto [lo, hi] = parse_range(range_text);
    auto [lo2, hi2] = range2_text.empty() ? std::pair{lo, hi} : parse_range(range2_text);
    if (parameter_count(*family) == 1) {
        lo2 = hi2 = 0;
    }

    std::size_t rows = 0;
    std::size_t mismatches = 0;
    out << "params | " << (as_printed ? "printed formula" : "closed form")
        << " | oracle | verdict\n";
    for (std::uint32_t a = lo; a <= hi; ++a) {
        for (std::uint32_t b = lo2; b <= hi2; ++b) {
            FamilySpec spec{*family, a, b};
            RadicalSum formula = as_printed ? closed_form_as_printed(spec) : closed_form(spec);
            RadicalSum oracle = sombor_index(generate(spec));
            bool equal = compare(formula, oracle) == Ordering::Equal;
            ++rows;
            out << to_string(spec) << " | " << formula.to_string() << " | " << oracle.to_string()
                << " | ";
            if (equal) {
                out << "Equal\n";
            } else {
                ++mismatches;
                out << "MISMATCH (formula - oracle = " << (formula - oracle).to_string() << ")\n";
            }
        }
    }
    out << (rows - mismatches) << " of " << rows << " parameter sets match\n";
    if (as_printed) {
        return 0;
    }
    return mismatches == 0 ? 0 : 1;
}

struct BoundsArgs {
    std::string file;
    std::string format = "edgelist";
    std::string check;
    std::vector<std::size_t> edge;
    std::optional<std::size_t> vertex;
    std::string with;
    std::size_t k = 2;
    std::optional<std::size_t> random_count;
    std::uint64_t seed = 0;
    unsigned digits = 6;
};

std::vector<BoundReport> evaluate_bounds(const BoundsArgs& a, const Graph& g, const Graph* h) {
    std::vector<BoundReport> reports;
    if (a.check == "edge") {
        if (!a.edge.empty()) {
            reports.push_back(edge_removal_bound(g, a.edge[0] - 1, a.edge[1] - 1));
        } else {
            for (const auto& [u, v] : g.edges()) {
                reports.push_back(edge_removal_bound(g, u, v));
            }
        }
    } else if (a.check == "vertex") {
        if (a.vertex) {
            reports.push_back(vertex_removal_bound(g, *a.vertex - 1));
        } else {
            for (Vertex v = 0; v < g.vertex_count(); ++v) {
                reports.push_back(vertex_removal_bound(g, v));
            }
        }
    } else if (a.check == "ng") {
        reports.push_back(nordhaus_gaddum_lower(g));
    } else if (a.check == "join") {
        reports.push_back(join_lower_bound(g, *h));
    } else if (a.check == "corona") {
        reports.push_back(corona_lower_bound(g, *h));
        reports.push_back(corona_lower_bound_corrected(g, *h));
    } else if (a.check == "subdivision") {
        auto b = subdivision_bounds(g, a.k);
        reports.push_back(std::move(b.lower));
        reports.push_back(std::move(b.upper));
    }
    return reports;
}

int cmd_bounds(const BoundsArgs& a, std::ostream& out) {
    const bool pair_check = a.check == "join" || a.check == "corona";
    if (a.edge.size() != 0 && a.edge.size() != 2) {
        throw std::invalid_argument("--edge takes two 1-based vertex indices");
    }

    if (a.random_count) {
        RandomGraphs rng(a.seed);
        std::size_t total = 0;
        std::size_t failed = 0;
        std::map<std::string, std::pair<std::size_t, std::size_t>> by_note;
        for (std::size_t i = 0; i < *a.random_count; ++i) {
            Graph g = pair_check ? rng.gnp_half(rng.order(1, 8)) : rng.connected(rng.order(2, 12));
            Graph h = pair_check ? rng.gnp_half(rng.order(1, 8)) : Graph{};
            if (a.check == "subdivision" && g.edge_count() == 0) {
                continue;
            }
            for (const auto& r : evaluate_bounds(a, g, &h)) {
                ++total;
                auto& tally = by_note[r.note];
                ++tally.second;
                if (!r.holds) {
                    ++failed;
                    ++tally.first;
                    out << "FAILED on graph6 " << to_graph6(g);
                    if (pair_check) {
                        out << " with " << to_graph6(h);
                    }
                    out << (r.note.empty() ? "" : " [" + r.note + "]") << '\n';
                }
            }
        }
        for (const auto& [note, tally] : by_note) {
            out << (note.empty() ? a.check : a.check + " (" + note + ")") << ": "
                << tally.second - tally.first << " of " << tally.second << " instances hold\n";
        }
        return failed == 0 ? 0 : 1;
    }

    if (a.file.empty()) {
        throw std::invalid_argument("bounds needs a graph file or --random");
    }
    Graph g = load_graph(a.file, a.format);
    Graph h;
    if (pair_check) {
        if (a.with.empty()) {
            throw std::invalid_argument("--check " + a.check + " needs --with <file>");
        }
        h = load_graph(a.with, a.format);
    }
    bool all_hold = true;
    for (const auto& r : evaluate_bounds(a, g, &h)) {
        out << render(r, a.digits) << '\n';
        all_hold = all_hold && r.holds;
    }
    return all_hold ? 0 : 1;
}

int cmd_search(std::size_t max_n, bool connected_only, unsigned threads, std::ostream& out) {
    auto hits = natural_sombor_search(max_n, SearchOptions{connected_only, threads});
    out << "value | order | connected | census | graph6\n";
    for (const auto& h : hits) {
        out << h.value << " | " << h.order << " | " << yes_no(h.connected) << " | "
            << to_string(degree_census(h.graph)) << " | " << to_graph6(h.graph) << '\n';
    }
    out << "hits: " << hits.size() << '\n';
    if (hits.empty()) {
        out << "no graph of order <= " << max_n << " has a natural Sombor index\n";
        return 0;
    }
    const auto& best = hits.front();
    out << "minimum natural Sombor index: " << best.value;
    if (auto parts = complete_bipartite_parts(best.graph)) {
        out << " (K_{" << parts->first << "," << parts->second << "})";
    } else {
        out << " (graph6 " << to_graph6(best.graph) << ")";
    }
    out << '\n';
    return 0;
}

int cmd_census(const Graph& g, const std::string& emit, std::ostream& out) {
    const auto census = degree_census(g);
    if (emit == "csv") {
        out << "degree_u,degree_v,edges,contribution\n";
        for (const auto& [key, count] : census.counts) {
            DegreeCensus single;
            single.counts[key] = count;
            out << key.first << ',' << key.second << ',' << count << ','
                << sombor_from_census(single).to_string() << '\n';
        }
        return 0;
    }
    out << "| d_u | d_v | edges | contribution |\n";
    out << "|----:|----:|------:|:-------------|\n";
    for (const auto& [key, count] : census.counts) {
        DegreeCensus single;
        single.counts[key] = count;
        out << "| " << key.first << " | " << key.second << " | " << count << " | "
            << sombor_from_census(single).to_string() << " |\n";
    }
    out << "| | | " << census.total() << " | " << sombor_from_census(census).to_string()
        << " |\n";
    return 0;
}

}  // namespace

std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text) {
    auto dots = text.find("..");
    try {
        std::size_t used = 0;
        if (dots == std::string::npos) {
            auto v = static_cast<std::uint32_t>(std::stoul(text, &used));
            if (used != text.size()) {
                throw std::invalid_argument(text);
            }
            return {v, v};
        }
        std::string a = text.substr(0, dots);
        std::string b = text.substr(dots + 2);
        auto lo = static_cast<std::uint32_t>(std::stoul(a, &used));
        if (used != a.size()) {
            throw std::invalid_argument(text);
        }
        auto hi = static_cast<std::uint32_t>(std::stoul(b, &used));
        if (used != b.size() || hi < lo) {
            throw std::invalid_argument(text);
        }
        return {lo, hi};
    } catch (const std::logic_error&) {
        throw std::invalid_argument("bad range '" + text + "', expected a..b");
    }
}

std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n < 2 || !is_connected(g)) {
        return std::nullopt;
    }
    std::vector<int> side(n, -1);
    side[0] = 0;
    std::vector<Vertex> stack{0};
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (side[v] < 0) {
                side[v] = 1 - side[u];
                stack.push_back(v);
            } else if (side[v] == side[u]) {
                return std::nullopt;
            }
        }
    }
    std::size_t a = static_cast<std::size_t>(std::count(side.begin(), side.end(), 0));
    std::size_t b = n - a;
    if (g.edge_count() != a * b) {
        return std::nullopt;
    }
    return std::pair{std::min(a, b), std::max(a, b)};
}

std::string render(const BoundReport& report, unsigned digits) {
    std::ostringstream out;
    out << "lhs: " << report.lhs.to_string() << "  (~ " << to_decimal(report.lhs, digits) << ")\n";
    out << "rhs: " << report.rhs.to_string() << "  (~ " << to_decimal(report.rhs, digits) << ")\n";
    out << "relation: lhs " << to_string(report.relation) << " rhs\n";
    out << "holds: " << (report.holds ? "true" : "false") << '\n';
    if (!report.note.empty()) {
        out << "note: " << report.note << '\n';
    }
    return out.str();
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Exact Sombor index computations on simple graphs", "sombor"};
    app.require_subcommand(1);

    const std::vector<std::string> formats{"edgelist", "graph6"};

    std::string compute_file;
    std::string compute_format = "edgelist";
    unsigned compute_digits = 6;
    auto* compute = app.add_subcommand("compute", "Sombor index, decimal value and degree census");
    compute->add_option("file", compute_file, "graph file, '-' for stdin")->required();
    compute->add_option("--format", compute_format)->check(CLI::IsMember(formats));
    compute->add_option("--digits", compute_digits, "decimal places")->check(CLI::Range(1U, 1000U));

    std::string generate_spec;
    std::string generate_out;
    auto* gen = app.add_subcommand("generate", "Write a family member as an edge list");
    gen->add_option("familyspec", generate_spec, "e.g. grid:7,9 or dutchwindmill:5,3")->required();
    gen->add_option("--out", generate_out, "output file (default stdout)");

    std::string verify_family;
    std::string verify_range;
    std::string verify_range2;
    bool verify_as_printed = false;
    auto* verify = app.add_subcommand("verify-family", "Compare closed forms against the oracle");
    verify->add_option("family", verify_family)->required();
    verify->add_option("--range", verify_range, "a..b")->required();
    verify->add_option("--range2", verify_range2, "a..b for the second parameter");
    verify->add_flag("--as-printed", verify_as_printed,
                     "use the printed ladder/book/grid expressions");

    BoundsArgs bounds_args;
    auto* bounds = app.add_subcommand("bounds", "Evaluate an inequality exactly");
    bounds->add_option("file", bounds_args.file, "graph file");
    bounds->add_option("--format", bounds_args.format)->check(CLI::IsMember(formats));
    bounds->add_option("--check", bounds_args.check)
        ->required()
        ->check(CLI::IsMember({"edge", "vertex", "ng", "join", "corona", "subdivision"}));
    bounds->add_option("--edge", bounds_args.edge, "u v (1-based)")->expected(2);
    bounds->add_option("--vertex", bounds_args.vertex, "v (1-based)");
    bounds->add_option("--with", bounds_args.with, "second graph for join/corona");
    bounds->add_option("--k", bounds_args.k, "subdivision length")->check(CLI::Range(2, 1000));
    bounds->add_option("--random", bounds_args.random_count, "fuzz on this many random graphs");
    bounds->add_option("--seed", bounds_args.seed, "seed for --random");
    bounds->add_option("--digits", bounds_args.digits)->check(CLI::Range(1U, 1000U));

    std::size_t search_max_n = 7;
    bool search_connected = false;
    unsigned search_threads = 0;
    auto* search = app.add_subcommand("search", "Exhaustive search for natural Sombor indices");
    search->add_option("--max-n", search_max_n)->required()->check(CLI::Range(1, 8));
    search->add_flag("--connected-only", search_connected);
    search->add_option("--threads", search_threads, "worker threads (0 = all cores)");

    std::string census_file;
    std::string census_format = "edgelist";
    std::string census_emit = "markdown";
    auto* census = app.add_subcommand("census", "Degree census table");
    census->add_option("file", census_file)->required();
    census->add_option("--format", census_format)->check(CLI::IsMember(formats));
    census->add_option("--emit", census_emit)->check(CLI::IsMember({"csv", "markdown"}));

    try {
        std::vector<std::string> reversed(args.rbegin(), args.rend());
        app.parse(reversed);
    } catch (const CLI::ParseError& e) {
        return app.exit(e, out, err);
    }

    try {
        if (*compute) {
            return cmd_compute(load_graph(compute_file, compute_format), compute_digits, out);
        }
        if (*gen) {
            return cmd_generate(generate_spec, generate_out, out);
        }
        if (*verify) {
            return cmd_verify_family(verify_family, verify_range, verify_range2,
                                     verify_as_printed, out);
        }
        if (*bounds) {
            if (bounds_args.random_count && bounds_args.seed == 0 &&
                bounds->count("--seed") == 0) {
                throw std::invalid_argument("--random requires an explicit --seed");
            }
            return cmd_bounds(bounds_args, out);
        }
        if (*search) {
            return cmd_search(search_max_n, search_connected, search_threads, out);
        }
        if (*census) {
            return cmd_census(load_graph(census_file, census_format), census_emit, out);
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 0;
}

}  // namespace sombor::cli
