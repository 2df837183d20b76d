#include "sombor/generators.hpp"

#include <array>
#include <charconv>

#include "sombor/products.hpp"

namespace sombor {

namespace {

struct FamilyInfo {
    Family family;
    std::string_view name;
    int params;
    std::uint32_t min_first;
    std::uint32_t min_second;
};

// Generator domains. Closed forms may require more (see sombor.hpp).
constexpr std::array kFamilies = {
    FamilyInfo{Family::Path, "path", 1, 1, 0},
    FamilyInfo{Family::Cycle, "cycle", 1, 3, 0},
    FamilyInfo{Family::Complete, "complete", 1, 1, 0},
    FamilyInfo{Family::Star, "star", 1, 1, 0},
    FamilyInfo{Family::CompleteBipartite, "completebipartite", 2, 1, 1},
    FamilyInfo{Family::Wheel, "wheel", 1, 4, 0},
    FamilyInfo{Family::Ladder, "ladder", 1, 1, 0},
    FamilyInfo{Family::Friendship, "friendship", 1, 1, 0},
    FamilyInfo{Family::Book, "book", 1, 1, 0},
    FamilyInfo{Family::DutchWindmill, "dutchwindmill", 2, 3, 2},
    FamilyInfo{Family::Grid, "grid", 2, 3, 3},
    FamilyInfo{Family::TriangularChain, "triangularchain", 1, 1, 0},
    FamilyInfo{Family::ParaSquareChain, "parasquarechain", 1, 1, 0},
    FamilyInfo{Family::OrthoSquareChain, "orthosquarechain", 1, 1, 0},
    FamilyInfo{Family::OrthoHexChain, "orthohexchain", 1, 1, 0},
    FamilyInfo{Family::ParaHexChain, "parahexchain", 1, 1, 0},
    FamilyInfo{Family::MetaHexChain, "metahexchain", 1, 1, 0},
    FamilyInfo{Family::PathCorona, "pathcorona", 1, 1, 0},
    FamilyInfo{Family::CycleCorona, "cyclecorona", 1, 3, 0},
};

const FamilyInfo& info(Family f) {
    for (const auto& i : kFamilies) {
        if (i.family == f) {
            return i;
        }
    }
    throw FamilyError("unknown family");
}

std::uint32_t parse_u32(std::string_view text, std::string_view whole) {
    std::uint32_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (ec != std::errc() || ptr != text.data() + text.size() || text.empty()) {
        throw FamilyError("bad parameter in family spec '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

const std::vector<Family>& all_families() {
    static const std::vector<Family> families = [] {
        std::vector<Family> out;
        for (const auto& i : kFamilies) {
            out.push_back(i.family);
        }
        return out;
    }();
    return families;
}

std::string_view family_name(Family f) { return info(f).name; }

std::optional<Family> family_from_name(std::string_view name) {
    for (const auto& i : kFamilies) {
        if (i.name == name) {
            return i.family;
        }
    }
    return std::nullopt;
}

int parameter_count(Family f) { return info(f).params; }

std::string to_string(const FamilySpec& spec) {
    std::string out(family_name(spec.family));
    out += ":" + std::to_string(spec.first);
    if (parameter_count(spec.family) == 2) {
        out += "," + std::to_string(spec.second);
    }
    return out;
}

FamilySpec parse_family_spec(std::string_view text) {
    auto colon = text.find(':');
    if (colon == std::string_view::npos) {
        throw FamilyError("family spec '" + std::string(text) + "' lacks ':'");
    }
    auto family = family_from_name(text.substr(0, colon));
    if (!family) {
        throw FamilyError("unknown family '" + std::string(text.substr(0, colon)) + "'");
    }
    std::string_view params = text.substr(colon + 1);
    FamilySpec spec{*family};
    auto comma = params.find(',');
    if (parameter_count(*family) == 1) {
        if (comma != std::string_view::npos) {
            throw FamilyError("family '" + std::string(family_name(*family)) +
                              "' takes one parameter");
        }
        spec.first = parse_u32(params, text);
    } else {
        if (comma == std::string_view::npos) {
            throw FamilyError("family '" + std::string(family_name(*family)) +
                              "' takes two parameters");
        }
        spec.first = parse_u32(params.substr(0, comma), text);
        spec.second = parse_u32(params.substr(comma + 1), text);
    }
    validate(spec);
    return spec;
}

void validate(const FamilySpec& spec) {
    const auto& i = info(spec.family);
    bool ok = spec.first >= i.min_first;
    if (i.params == 2) {
        ok = ok && spec.second >= i.min_second;
    }
    if (!ok) {
        throw FamilyError("parameters out of domain for " + to_string(spec));
    }
}

Graph path_graph(std::size_t n) {
    Graph g(n);
    for (Vertex v = 1; v < n; ++v) {
        g.add_edge(v - 1, v);
    }
    return g;
}

Graph cycle_graph(std::size_t n) {
    if (n < 3) {
        throw FamilyError("cycle needs at least 3 vertices");
    }
    Graph g = path_graph(n);
    g.add_edge(0, n - 1);
    return g;
}

Graph complete_graph(std::size_t n) {
    return complement(Graph(n));
}

Graph star_graph(std::size_t leaves) {
    return join(Graph(1), Graph(leaves));
}

Graph complete_bipartite_graph(std::size_t m, std::size_t n) {
    return join(Graph(m), Graph(n));
}

Graph cycle_chain(std::size_t block_size, std::size_t blocks, std::size_t cut_distance) {
    if (block_size < 3 || blocks == 0 || cut_distance == 0 || cut_distance >= block_size) {
        throw FamilyError("invalid cycle chain shape");
    }
    Graph g;
    Vertex entry = g.add_vertex();
    for (std::size_t b = 0; b < blocks; ++b) {
        std::vector<Vertex> ring{entry};
        for (std::size_t i = 1; i < block_size; ++i) {
            ring.push_back(g.add_vertex());
        }
        for (std::size_t i = 0; i < block_size; ++i) {
            g.add_edge(ring[i], ring[(i + 1) % block_size]);
        }
        entry = ring[cut_distance];
    }
    return g;
}

Graph generate(const FamilySpec& spec) {
    validate(spec);
    const std::size_t n = spec.first;
    const std::size_t m = spec.second;
    switch (spec.family) {
        case Family::Path: return path_graph(n);
        case Family::Cycle: return cycle_graph(n);
        case Family::Complete: return complete_graph(n);
        case Family::Star: return star_graph(n);
        case Family::CompleteBipartite: return complete_bipartite_graph(n, m);
        case Family::Wheel: return join(Graph(1), cycle_graph(n - 1));
        case Family::Ladder: return cartesian_product(path_graph(n), path_graph(2));
        case Family::Friendship: {
            Graph matching(2 * n);
            for (Vertex i = 0; i < n; ++i) {
                matching.add_edge(2 * i, 2 * i + 1);
            }
            return join(Graph(1), matching);
        }
        case Family::Book: return cartesian_product(star_graph(n), path_graph(2));
        case Family::DutchWindmill: {
            // n = cycle length, m = number of cycles; vertex 0 is shared.
            Graph g(1);
            for (std::size_t c = 0; c < m; ++c) {
                Vertex prev = 0;
                for (std::size_t i = 1; i < n; ++i) {
                    Vertex v = g.add_vertex();
                    g.add_edge(prev, v);
                    prev = v;
                }
                g.add_edge(prev, 0);
            }
            return g;
        }
        case Family::Grid: return cartesian_product(path_graph(n), path_graph(m));
        case Family::TriangularChain: return cycle_chain(3, n, 1);
        case Family::ParaSquareChain: return cycle_chain(4, n, 2);
        case Family::OrthoSquareChain: return cycle_chain(4, n, 1);
        case Family::OrthoHexChain: return cycle_chain(6, n, 1);
        case Family::ParaHexChain: return cycle_chain(6, n, 3);
        case Family::MetaHexChain: return cycle_chain(6, n, 2);
        case Family::PathCorona: return corona(path_graph(n), Graph(1));
        case Family::CycleCorona: return corona(cycle_graph(n), Graph(1));
    }
    throw FamilyError("unknown family");
}

}  // namespace sombor
