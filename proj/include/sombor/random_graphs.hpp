#pragma once

#include <cstddef>
#include <cstdint>
#include <random>

#include "sombor/graph.hpp"

namespace sombor {

/// Seeded source of random graphs. Draws use the raw engine output so the
/// sequence for a seed is the same on every standard library.
class RandomGraphs {
public:
    explicit RandomGraphs(std::uint64_t seed) : engine_(seed) {}

    /// Uniform in [lo, hi].
    std::size_t order(std::size_t lo, std::size_t hi);
    /// Every pair present independently with probability 1/2.
    Graph gnp_half(std::size_t n);
    /// gnp_half resampled until connected.
    Graph connected(std::size_t n);

private:
    std::mt19937_64 engine_;
};

}  // namespace sombor
