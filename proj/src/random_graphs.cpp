#include "sombor/random_graphs.hpp"

namespace sombor {

std::size_t RandomGraphs::order(std::size_t lo, std::size_t hi) {
    const std::uint64_t span = hi - lo + 1;
    return lo + static_cast<std::size_t>(engine_() % span);
}

Graph RandomGraphs::gnp_half(std::size_t n) {
    Graph g(n);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (engine_() >> 63) {
                g.add_edge(u, v);
            }
        }
    }
    return g;
}

Graph RandomGraphs::connected(std::size_t n) {
    for (;;) {
        Graph g = gnp_half(n);
        if (is_connected(g)) {
            return g;
        }
    }
}

}  // namespace sombor
