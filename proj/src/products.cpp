#include "sombor/products.hpp"

#include <stdexcept>

namespace sombor {

Graph disjoint_union(const Graph& g, const Graph& h) {
    const std::size_t ng = g.vertex_count();
    Graph out(ng + h.vertex_count());
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    for (const auto& [u, v] : h.edges()) {
        out.add_edge(ng + u, ng + v);
    }
    return out;
}

Graph join(const Graph& g, const Graph& h) {
    Graph out = disjoint_union(g, h);
    const std::size_t ng = g.vertex_count();
    for (Vertex u = 0; u < ng; ++u) {
        for (Vertex v = 0; v < h.vertex_count(); ++v) {
            out.add_edge(u, ng + v);
        }
    }
    return out;
}

Graph corona(const Graph& g, const Graph& h) {
    const std::size_t ng = g.vertex_count();
    const std::size_t nh = h.vertex_count();
    if (ng == 0) {
        throw std::invalid_argument("corona: first graph must have at least one vertex");
    }
    Graph out(ng * (1 + nh));
    for (const auto& [u, v] : g.edges()) {
        out.add_edge(u, v);
    }
    const auto h_edges = h.edges();
    for (Vertex i = 0; i < ng; ++i) {
        const std::size_t base = ng + i * nh;
        for (const auto& [u, v] : h_edges) {
            out.add_edge(base + u, base + v);
        }
        for (Vertex v = 0; v < nh; ++v) {
            out.add_edge(i, base + v);
        }
    }
    return out;
}

Graph cartesian_product(const Graph& g, const Graph& h) {
    const std::size_t ng = g.vertex_count();
    const std::size_t nh = h.vertex_count();
    Graph out(ng * nh);
    const auto g_edges = g.edges();
    const auto h_edges = h.edges();
    for (Vertex u = 0; u < ng; ++u) {
        for (const auto& [a, b] : h_edges) {
            out.add_edge(u * nh + a, u * nh + b);
        }
    }
    for (Vertex v = 0; v < nh; ++v) {
        for (const auto& [a, b] : g_edges) {
            out.add_edge(a * nh + v, b * nh + v);
        }
    }
    return out;
}

Graph k_subdivision(const Graph& g, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("k_subdivision: k must be at least 1");
    }
    if (k == 1) {
        return g;
    }
    const auto edges = g.edges();
    Graph out(g.vertex_count() + edges.size() * (k - 1));
    Vertex next = g.vertex_count();
    for (const auto& [u, v] : edges) {
        Vertex prev = u;
        for (std::size_t step = 1; step < k; ++step) {
            out.add_edge(prev, next);
            prev = next++;
        }
        out.add_edge(prev, v);
    }
    return out;
}

}  // namespace sombor
