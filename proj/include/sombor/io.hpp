#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>

#include "sombor/graph.hpp"

namespace sombor {

class ParseError : public std::runtime_error {
public:
    /// line is 1-based; 0 when the error is not tied to a line (graph6).
    ParseError(std::size_t line, const std::string& what)
        : std::runtime_error(line ? "line " + std::to_string(line) + ": " + what : what),
          line_(line) {}
    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

// Edge-list format:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v>        (1-based, m lines)
// Blank lines and 'c' lines may appear anywhere.
Graph parse_edge_list(std::string_view text);
/// Header plus edges with u < v in ascending order.
std::string render_edge_list(const Graph& g);

// graph6: N(n) followed by the upper triangle of the adjacency matrix,
// column by column, packed six bits per printable byte (value + 63).
Graph parse_graph6(std::string_view text);
std::string to_graph6(const Graph& g);

}  // namespace sombor
