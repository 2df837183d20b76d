#include "sombor/io.hpp"

#include <algorithm>
#include <charconv>
#include <sstream>
#include <vector>

namespace sombor {

namespace {

std::vector<std::string_view> split_ws(std::string_view line) {
    std::vector<std::string_view> out;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == '\r')) {
            ++i;
        }
        std::size_t start = i;
        while (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != '\r') {
            ++i;
        }
        if (i > start) {
            out.push_back(line.substr(start, i - start));
        }
    }
    return out;
}

std::size_t to_count(std::string_view token, std::size_t line, const char* what) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError(line, std::string("malformed ") + what + " '" + std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph parse_edge_list(std::string_view text) {
    Graph g;
    bool have_header = false;
    std::size_t declared_edges = 0;
    std::size_t header_line = 0;
    std::size_t line_no = 0;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t eol = text.find('\n', pos);
        if (eol == std::string_view::npos) {
            eol = text.size();
        }
        std::string_view line = text.substr(pos, eol - pos);
        pos = eol + 1;
        ++line_no;

        auto tokens = split_ws(line);
        if (tokens.empty() || tokens[0] == "c") {
            continue;
        }
        if (tokens[0] == "p") {
            if (have_header) {
                throw ParseError(line_no, "duplicate header");
            }
            if (tokens.size() != 4 || tokens[1] != "edge") {
                throw ParseError(line_no, "malformed header, expected 'p edge <n> <m>'");
            }
            g = Graph(to_count(tokens[2], line_no, "vertex count"));
            declared_edges = to_count(tokens[3], line_no, "edge count");
            have_header = true;
            header_line = line_no;
            continue;
        }
        if (tokens[0] == "e") {
            if (!have_header) {
                throw ParseError(line_no, "edge before header");
            }
            if (tokens.size() != 3) {
                throw ParseError(line_no, "malformed edge, expected 'e <u> <v>'");
            }
            std::size_t u = to_count(tokens[1], line_no, "vertex");
            std::size_t v = to_count(tokens[2], line_no, "vertex");
            if (u < 1 || v < 1 || u > g.vertex_count() || v > g.vertex_count()) {
                throw ParseError(line_no, "vertex index out of range [1, " +
                                              std::to_string(g.vertex_count()) + "]");
            }
            if (u == v) {
                throw ParseError(line_no, "loop at vertex " + std::to_string(u));
            }
            if (g.has_edge(u - 1, v - 1)) {
                throw ParseError(line_no, "duplicate edge " + std::to_string(u) + " " +
                                              std::to_string(v));
            }
            g.add_edge(u - 1, v - 1);
            continue;
        }
        throw ParseError(line_no, "unknown line type '" + std::string(tokens[0]) + "'");
    }
    if (!have_header) {
        throw ParseError(std::max<std::size_t>(line_no, 1), "missing 'p edge' header");
    }
    if (g.edge_count() != declared_edges) {
        throw ParseError(header_line, "header declares " + std::to_string(declared_edges) +
                                          " edges but " + std::to_string(g.edge_count()) +
                                          " were listed");
    }
    return g;
}

std::string render_edge_list(const Graph& g) {
    std::ostringstream out;
    out << "p edge " << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (const auto& [u, v] : g.edges()) {
        out << "e " << u + 1 << ' ' << v + 1 << '\n';
    }
    return out.str();
}

Graph parse_graph6(std::string_view text) {
    constexpr std::string_view header = ">>graph6<<";
    if (text.substr(0, header.size()) == header) {
        text.remove_prefix(header.size());
    }
    while (!text.empty() && (text.back() == '\n' || text.back() == '\r')) {
        text.remove_suffix(1);
    }
    for (char c : text) {
        if (c < 63 || c > 126) {
            throw ParseError(0, "graph6: invalid character code " +
                                    std::to_string(static_cast<unsigned char>(c)));
        }
    }
    if (text.empty()) {
        throw ParseError(0, "graph6: empty input");
    }

    std::size_t pos = 0;
    auto take = [&](std::size_t count) {
        if (text.size() - pos < count) {
            throw ParseError(0, "graph6: truncated size field");
        }
        std::size_t value = 0;
        for (std::size_t i = 0; i < count; ++i) {
            value = value << 6 | static_cast<std::size_t>(text[pos++] - 63);
        }
        return value;
    };
    std::size_t n = 0;
    if (text[0] != 126) {
        n = take(1);
    } else if (text.size() > 1 && text[1] != 126) {
        ++pos;
        n = take(3);
    } else {
        pos += 2;
        n = take(6);
    }

    const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
    const std::size_t bytes = (bits + 5) / 6;
    const std::size_t available = text.size() - pos;
    if (available < bytes) {
        throw ParseError(0, "graph6: bad length, expected " + std::to_string(bytes) +
                                " data bytes, found " + std::to_string(available));
    }
    if (available > bytes) {
        throw ParseError(0, "graph6: trailing bytes after adjacency data");
    }

    Graph g(n);
    std::size_t k = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u, ++k) {
            const auto chunk = static_cast<unsigned>(text[pos + k / 6] - 63);
            if (chunk >> (5 - k % 6) & 1U) {
                g.add_edge(u, v);
            }
        }
    }
    // padding bits must be zero
    if (bits % 6 != 0) {
        const auto last = static_cast<unsigned>(text.back() - 63);
        if ((last & ((1U << (6 - bits % 6)) - 1)) != 0) {
            throw ParseError(0, "graph6: nonzero padding bits");
        }
    }
    return g;
}

std::string to_graph6(const Graph& g) {
    const std::size_t n = g.vertex_count();
    std::string out;
    auto put = [&](std::size_t value, int groups) {
        for (int i = groups - 1; i >= 0; --i) {
            out.push_back(static_cast<char>(63 + (value >> (6 * i) & 63U)));
        }
    };
    if (n <= 62) {
        put(n, 1);
    } else if (n <= 258047) {
        out.push_back(126);
        put(n, 3);
    } else {
        out.append(2, static_cast<char>(126));
        put(n, 6);
    }
    unsigned chunk = 0;
    int filled = 0;
    for (std::size_t v = 1; v < n; ++v) {
        for (std::size_t u = 0; u < v; ++u) {
            chunk = chunk << 1 | (g.has_edge(u, v) ? 1U : 0U);
            if (++filled == 6) {
                out.push_back(static_cast<char>(63 + chunk));
                chunk = 0;
                filled = 0;
            }
        }
    }
    if (filled > 0) {
        out.push_back(static_cast<char>(63 + (chunk << (6 - filled))));
    }
    return out;
}

}  // namespace sombor
