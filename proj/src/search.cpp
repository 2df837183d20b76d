#include "sombor/search.hpp"

#include <algorithm>
#include <array>
#include <bit>
#include <cmath>
#include <stdexcept>
#include <string>
#include <thread>
#include <tuple>

#include "sombor/sombor.hpp"

namespace sombor {

namespace {

struct PairTable {
    std::vector<Edge> pairs;
};

PairTable pair_table(std::size_t n) {
    PairTable t;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            t.pairs.push_back({u, v});
        }
    }
    return t;
}

void check_order(std::size_t n) {
    if (n < 1 || n > kMaxSearchOrder) {
        throw std::out_of_range("graph order must be in [1, " + std::to_string(kMaxSearchOrder) +
                                "], got " + std::to_string(n));
    }
}

bool is_square(std::uint64_t x) {
    auto r = static_cast<std::uint64_t>(std::sqrt(static_cast<double>(x)));
    while (r * r > x) {
        --r;
    }
    while ((r + 1) * (r + 1) <= x) {
        ++r;
    }
    return r * r == x;
}

// d_u^2 + d_v^2 is a square, for degrees below kMaxSearchOrder.
constexpr std::size_t kDegreeLimit = kMaxSearchOrder;
using SquareTable = std::array<std::array<bool, kDegreeLimit>, kDegreeLimit>;

SquareTable square_table() {
    SquareTable t{};
    for (std::size_t a = 0; a < kDegreeLimit; ++a) {
        for (std::size_t b = 0; b < kDegreeLimit; ++b) {
            t[a][b] = is_square(a * a + b * b);
        }
    }
    return t;
}

struct RawHit {
    std::size_t order;
    std::uint64_t mask;
};

// Walks Gray codes g(i) for i in [begin, end) so that successive masks differ
// in one edge and the degree vector updates in O(1).
void scan_range(std::size_t n, const PairTable& table, const SquareTable& squares,
                std::uint64_t begin, std::uint64_t end, std::vector<RawHit>& out) {
    std::array<std::uint8_t, kMaxSearchOrder> deg{};
    std::uint64_t mask = begin ^ (begin >> 1);
    for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
        const Edge& e = table.pairs[static_cast<std::size_t>(std::countr_zero(bits))];
        ++deg[e.u];
        ++deg[e.v];
    }
    for (std::uint64_t i = begin;;) {
        if (mask != 0) {
            bool pass = true;
            for (std::uint64_t bits = mask; bits != 0; bits &= bits - 1) {
                const Edge& e = table.pairs[static_cast<std::size_t>(std::countr_zero(bits))];
                if (!squares[deg[e.u]][deg[e.v]]) {
                    pass = false;
                    break;
                }
            }
            if (pass) {
                out.push_back({n, mask});
            }
        }
        if (++i == end) {
            break;
        }
        const auto flip = static_cast<std::size_t>(std::countr_zero(i));
        const Edge& e = table.pairs[flip];
        const std::uint64_t bit = std::uint64_t{1} << flip;
        if (mask & bit) {
            --deg[e.u];
            --deg[e.v];
        } else {
            ++deg[e.u];
            ++deg[e.v];
        }
        mask ^= bit;
    }
}

}  // namespace

Graph graph_from_mask(std::size_t n, std::uint64_t mask) {
    Graph g(n);
    std::size_t bit = 0;
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v, ++bit) {
            if (mask >> bit & 1U) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

void enumerate_graphs(std::size_t n, bool connected_only,
                      const std::function<void(const Graph&)>& visit) {
    check_order(n);
    const std::size_t pairs = n * (n - 1) / 2;
    const std::uint64_t limit = std::uint64_t{1} << pairs;
    for (std::uint64_t mask = 0; mask < limit; ++mask) {
        Graph g = graph_from_mask(n, mask);
        if (!connected_only || is_connected(g)) {
            visit(g);
        }
    }
}

bool pythagorean_edge_filter(const Graph& g) {
    for (const auto& [u, v] : g.edges()) {
        const std::uint64_t a = g.degree(u);
        const std::uint64_t b = g.degree(v);
        if (!is_square(a * a + b * b)) {
            return false;
        }
    }
    return true;
}

std::vector<SearchHit> natural_sombor_search(std::size_t max_n, SearchOptions options) {
    check_order(max_n);
    unsigned threads = options.threads != 0 ? options.threads : std::thread::hardware_concurrency();
    threads = std::max(1U, threads);
    const SquareTable squares = square_table();

    std::vector<RawHit> raw;
    for (std::size_t n = 1; n <= max_n; ++n) {
        const PairTable table = pair_table(n);
        const std::uint64_t total = std::uint64_t{1} << table.pairs.size();
        const std::uint64_t workers = std::min<std::uint64_t>(threads, total);
        std::vector<std::vector<RawHit>> partial(workers);
        std::vector<std::thread> pool;
        for (std::uint64_t w = 0; w < workers; ++w) {
            const std::uint64_t begin = total * w / workers;
            const std::uint64_t end = total * (w + 1) / workers;
            pool.emplace_back([&, w, begin, end] {
                scan_range(n, table, squares, begin, end, partial[w]);
            });
        }
        for (auto& t : pool) {
            t.join();
        }
        for (auto& part : partial) {
            raw.insert(raw.end(), part.begin(), part.end());
        }
    }

    std::vector<SearchHit> hits;
    for (const auto& r : raw) {
        Graph g = graph_from_mask(r.order, r.mask);
        const bool connected = is_connected(g);
        if (options.connected_only && !connected) {
            continue;
        }
        RadicalSum value = sombor_index(g);
        if (!is_positive_integer(value)) {
            throw std::logic_error("Pythagorean filter admitted a graph with irrational index");
        }
        const std::uint64_t v = value.terms().front().coefficient.get_num().get_ui();
        hits.push_back(SearchHit{std::move(g), v, r.order, connected, r.mask});
    }
    std::sort(hits.begin(), hits.end(), [](const SearchHit& a, const SearchHit& b) {
        return std::tie(a.value, a.order, a.mask) < std::tie(b.value, b.order, b.mask);
    });
    return hits;
}

}  // namespace sombor
