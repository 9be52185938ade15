#ifndef NIBBLE_INSTANCES_HPP
#define NIBBLE_INSTANCES_HPP

#include <cstdint>
#include <utility>
#include <vector>

#include "nibble/hypergraph.hpp"

namespace nibble::instances {

/// m distinct uniform-random k-sets on n vertices. Deterministic given seed.
Hypergraph gen_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

/// Union of per-size uniform samples; sizes_counts holds (edge size, count).
Hypergraph gen_mixed(std::size_t n, std::size_t rank,
                     const std::vector<std::pair<std::size_t, std::size_t>>& sizes_counts,
                     std::uint64_t seed);

/// Deletes one uniformly chosen edge of the first-found triangle until no
/// triangle remains.
Hypergraph make_triangle_free(const Hypergraph& h, std::uint64_t seed);

struct LinearResult {
    Hypergraph h;
    bool reached_target;
};

/// k-uniform with pairwise edge intersections <= 1, built by randomized
/// greedy with rejection and restarts. May fall short of m; the status says
/// whether the target was reached.
LinearResult gen_linear(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed);

} // namespace nibble::instances

#endif
