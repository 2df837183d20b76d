#pragma once

#include <cstddef>
#include <map>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace sombor {

using Vertex = std::size_t;

struct Edge {
    Vertex u;
    Vertex v;

    auto operator<=>(const Edge&) const = default;
};

class GraphError : public std::invalid_argument {
public:
    enum class Kind { Loop, OutOfRange, DuplicateEdge, MissingEdge, MissingVertex };

    GraphError(Kind kind, const std::string& what) : std::invalid_argument(what), kind_(kind) {}
    Kind kind() const { return kind_; }

private:
    Kind kind_;
};

/// Finite simple undirected graph on vertices 0..n-1. Neighbor lists are kept
/// sorted so edge iteration order is deterministic.
class Graph {
public:
    Graph() = default;
    explicit Graph(std::size_t vertex_count) : adjacency_(vertex_count) {}

    std::size_t vertex_count() const { return adjacency_.size(); }
    std::size_t edge_count() const { return edge_count_; }

    void add_edge(Vertex u, Vertex v);
    void remove_edge(Vertex u, Vertex v);
    /// Deletes v and its incident edges. Vertices above v shift down by one.
    void remove_vertex(Vertex v);
    /// Appends an isolated vertex and returns its index.
    Vertex add_vertex();

    bool has_edge(Vertex u, Vertex v) const;
    std::size_t degree(Vertex v) const;
    std::span<const Vertex> neighbors(Vertex v) const;
    std::vector<std::size_t> degrees() const;
    /// All edges with u < v, lexicographically ordered.
    std::vector<Edge> edges() const;

    bool operator==(const Graph&) const = default;

private:
    void check_vertex(Vertex v) const;

    std::vector<std::vector<Vertex>> adjacency_;
    std::size_t edge_count_ = 0;
};

Graph complement(const Graph& g);
bool is_connected(const Graph& g);
bool is_regular(const Graph& g);
std::size_t min_degree(const Graph& g);
std::size_t max_degree(const Graph& g);

/// Edge counts keyed by unordered endpoint-degree pair (smaller degree first).
struct DegreeCensus {
    using Key = std::pair<std::size_t, std::size_t>;
    std::map<Key, std::size_t> counts;

    std::size_t total() const;
    bool operator==(const DegreeCensus&) const = default;
};

DegreeCensus degree_census(const Graph& g);

/// "{(1,2):2, (2,2):1}"
std::string to_string(const DegreeCensus& census);

}  // namespace sombor
