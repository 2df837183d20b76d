#include "sombor/graph.hpp"

#include <algorithm>
#include <numeric>

namespace sombor {

void Graph::check_vertex(Vertex v) const {
    if (v >= adjacency_.size()) {
        throw GraphError(GraphError::Kind::OutOfRange,
                         "vertex " + std::to_string(v) + " out of range [0, " +
                             std::to_string(adjacency_.size()) + ")");
    }
}

void Graph::add_edge(Vertex u, Vertex v) {
    check_vertex(u);
    check_vertex(v);
    if (u == v) {
        throw GraphError(GraphError::Kind::Loop, "loop at vertex " + std::to_string(u));
    }
    auto& nu = adjacency_[u];
    auto it = std::lower_bound(nu.begin(), nu.end(), v);
    if (it != nu.end() && *it == v) {
        throw GraphError(GraphError::Kind::DuplicateEdge,
                         "duplicate edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    nu.insert(it, v);
    auto& nv = adjacency_[v];
    nv.insert(std::lower_bound(nv.begin(), nv.end(), u), u);
    ++edge_count_;
}

void Graph::remove_edge(Vertex u, Vertex v) {
    if (u >= adjacency_.size() || v >= adjacency_.size() || !has_edge(u, v)) {
        throw GraphError(GraphError::Kind::MissingEdge,
                         "no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    }
    auto& nu = adjacency_[u];
    nu.erase(std::lower_bound(nu.begin(), nu.end(), v));
    auto& nv = adjacency_[v];
    nv.erase(std::lower_bound(nv.begin(), nv.end(), u));
    --edge_count_;
}

void Graph::remove_vertex(Vertex v) {
    if (v >= adjacency_.size()) {
        throw GraphError(GraphError::Kind::MissingVertex, "no vertex " + std::to_string(v));
    }
    edge_count_ -= adjacency_[v].size();
    adjacency_.erase(adjacency_.begin() + static_cast<std::ptrdiff_t>(v));
    for (auto& list : adjacency_) {
        auto it = std::lower_bound(list.begin(), list.end(), v);
        if (it != list.end() && *it == v) {
            it = list.erase(it);
        }
        for (; it != list.end(); ++it) {
            --*it;
        }
    }
}

Vertex Graph::add_vertex() {
    adjacency_.emplace_back();
    return adjacency_.size() - 1;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    check_vertex(u);
    check_vertex(v);
    return std::binary_search(adjacency_[u].begin(), adjacency_[u].end(), v);
}

std::size_t Graph::degree(Vertex v) const {
    check_vertex(v);
    return adjacency_[v].size();
}

std::span<const Vertex> Graph::neighbors(Vertex v) const {
    check_vertex(v);
    return adjacency_[v];
}

std::vector<std::size_t> Graph::degrees() const {
    std::vector<std::size_t> out(adjacency_.size());
    std::transform(adjacency_.begin(), adjacency_.end(), out.begin(),
                   [](const auto& list) { return list.size(); });
    return out;
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adjacency_.size(); ++u) {
        for (Vertex v : adjacency_[u]) {
            if (u < v) {
                out.push_back({u, v});
            }
        }
    }
    return out;
}

Graph complement(const Graph& g) {
    const std::size_t n = g.vertex_count();
    Graph out(n);
    for (Vertex u = 0; u < n; ++u) {
        auto nbrs = g.neighbors(u);
        auto it = nbrs.begin();
        for (Vertex v = u + 1; v < n; ++v) {
            it = std::lower_bound(it, nbrs.end(), v);
            if (it == nbrs.end() || *it != v) {
                out.add_edge(u, v);
            }
        }
    }
    return out;
}

bool is_connected(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) {
        return true;
    }
    std::vector<bool> seen(n, false);
    std::vector<Vertex> stack{0};
    seen[0] = true;
    std::size_t reached = 1;
    while (!stack.empty()) {
        Vertex u = stack.back();
        stack.pop_back();
        for (Vertex v : g.neighbors(u)) {
            if (!seen[v]) {
                seen[v] = true;
                ++reached;
                stack.push_back(v);
            }
        }
    }
    return reached == n;
}

std::size_t min_degree(const Graph& g) {
    auto d = g.degrees();
    return d.empty() ? 0 : *std::min_element(d.begin(), d.end());
}

std::size_t max_degree(const Graph& g) {
    auto d = g.degrees();
    return d.empty() ? 0 : *std::max_element(d.begin(), d.end());
}

bool is_regular(const Graph& g) {
    return min_degree(g) == max_degree(g);
}

std::size_t DegreeCensus::total() const {
    return std::accumulate(counts.begin(), counts.end(), std::size_t{0},
                           [](std::size_t acc, const auto& kv) { return acc + kv.second; });
}

DegreeCensus degree_census(const Graph& g) {
    DegreeCensus census;
    for (const auto& [u, v] : g.edges()) {
        std::size_t a = g.degree(u);
        std::size_t b = g.degree(v);
        ++census.counts[{std::min(a, b), std::max(a, b)}];
    }
    return census;
}

std::string to_string(const DegreeCensus& census) {
    std::string out = "{";
    bool first = true;
    for (const auto& [key, count] : census.counts) {
        if (!first) {
            out += ", ";
        }
        first = false;
        out += "(" + std::to_string(key.first) + "," + std::to_string(key.second) +
               "):" + std::to_string(count);
    }
    return out + "}";
}

}  // namespace sombor
