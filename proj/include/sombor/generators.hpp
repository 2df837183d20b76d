#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "sombor/graph.hpp"

namespace sombor {

enum class Family {
    Path,
    Cycle,
    Complete,
    Star,
    CompleteBipartite,
    Wheel,
    Ladder,
    Friendship,
    Book,
    DutchWindmill,
    Grid,
    TriangularChain,
    ParaSquareChain,
    OrthoSquareChain,
    OrthoHexChain,
    ParaHexChain,
    MetaHexChain,
    PathCorona,
    CycleCorona,
};

/// Raised for parameters outside a family's domain and for malformed specs.
class FamilyError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/// A graph family member. `first` is n for one-parameter families; the pair
/// is (m, n) for CompleteBipartite and Grid and (n, m) for DutchWindmill
/// (cycle length, cycle count).
struct FamilySpec {
    Family family;
    std::uint32_t first = 0;
    std::uint32_t second = 0;

    bool operator==(const FamilySpec&) const = default;
};

const std::vector<Family>& all_families();
std::string_view family_name(Family f);
std::optional<Family> family_from_name(std::string_view name);
/// 1 or 2.
int parameter_count(Family f);

/// Canonical text form "grid:7,9", "path:5".
std::string to_string(const FamilySpec& spec);
FamilySpec parse_family_spec(std::string_view text);

/// Throws FamilyError when spec is outside the generator domain.
void validate(const FamilySpec& spec);
Graph generate(const FamilySpec& spec);

// Direct constructors, also used by the products/sombor tests.
Graph path_graph(std::size_t n);
Graph cycle_graph(std::size_t n);
Graph complete_graph(std::size_t n);
Graph star_graph(std::size_t leaves);
Graph complete_bipartite_graph(std::size_t m, std::size_t n);

/// `blocks` cycles of length `block_size`, consecutive cycles sharing one cut
/// vertex. Inside an internal block the two cut vertices sit `cut_distance`
/// steps apart along the cycle.
Graph cycle_chain(std::size_t block_size, std::size_t blocks, std::size_t cut_distance);

}  // namespace sombor
