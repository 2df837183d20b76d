#pragma once

#include <cstddef>

#include "sombor/graph.hpp"

namespace sombor {

/// Disjoint union plus every edge between the two sides. Vertices of `h`
/// are shifted by g.vertex_count().
Graph join(const Graph& g, const Graph& h);

/// One copy of `g` and g.vertex_count() copies of `h`; vertex i of `g` is
/// adjacent to all of copy i, which occupies indices n_g + i*n_h onwards.
/// Throws std::invalid_argument when `g` has no vertices.
Graph corona(const Graph& g, const Graph& h);

/// Vertex (u, v) has index u * h.vertex_count() + v.
Graph cartesian_product(const Graph& g, const Graph& h);

/// Replaces every edge by a path with k edges. New path vertices are appended
/// in edge order. k == 1 returns g unchanged; k == 0 throws.
Graph k_subdivision(const Graph& g, std::size_t k);

/// n vertices, no edges.
inline Graph empty_graph(std::size_t n) { return Graph(n); }

/// Disjoint union, `h` shifted by g.vertex_count().
Graph disjoint_union(const Graph& g, const Graph& h);

}  // namespace sombor
