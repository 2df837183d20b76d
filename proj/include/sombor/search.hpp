#pragma once

#include <cstdint>
#include <functional>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/radical.hpp"

namespace sombor {

/// Largest order the labeled enumeration accepts.
inline constexpr std::size_t kMaxSearchOrder = 8;

/// Graph on n vertices whose edge set is given by `mask`; bit i stands for
/// the i-th pair (u, v), u < v, in lexicographic order.
Graph graph_from_mask(std::size_t n, std::uint64_t mask);

/// Visits every labeled graph on n vertices once, in ascending edge-mask
/// order. Throws std::out_of_range unless 1 <= n <= kMaxSearchOrder.
void enumerate_graphs(std::size_t n, bool connected_only,
                      const std::function<void(const Graph&)>& visit);

/// True iff d_u^2 + d_v^2 is a perfect square for every edge uv.
bool pythagorean_edge_filter(const Graph& g);

struct SearchHit {
    Graph graph;
    std::uint64_t value;
    std::size_t order;
    bool connected;
    std::uint64_t mask;
};

struct SearchOptions {
    bool connected_only = false;
    /// 0 picks std::thread::hardware_concurrency().
    unsigned threads = 0;
};

/// All labeled graphs of order 1..max_n with at least one edge whose Sombor
/// index is a positive integer, sorted by (value, order, mask).
std::vector<SearchHit> natural_sombor_search(std::size_t max_n, SearchOptions options = {});

}  // namespace sombor
