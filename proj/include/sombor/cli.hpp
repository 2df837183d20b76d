#pragma once

#include <iosfwd>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "sombor/graph.hpp"
#include "sombor/sombor.hpp"

namespace sombor::cli {

/// Runs the command line front end. Returns the process exit code.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// "a..b" or a single "a". Throws std::invalid_argument.
std::pair<std::uint32_t, std::uint32_t> parse_range(const std::string& text);

/// {a, b} with a <= b when g is K_{a,b} (no isolated vertices), else nullopt.
std::optional<std::pair<std::size_t, std::size_t>> complete_bipartite_parts(const Graph& g);

/// Multi-line rendering: lhs, rhs, relation, verdict, decimal values.
std::string render(const BoundReport& report, unsigned digits);

}  // namespace sombor::cli
