#ifndef NIBBLE_COMPLETION_HPP
#define NIBBLE_COMPLETION_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "nibble/coloring.hpp"
#include "nibble/nibble.hpp"

namespace nibble {

struct CompletionConfig {
    std::size_t max_resample_rounds = 100000;
    enum class Fallback { Greedy, Fail } fallback = Fallback::Greedy;
};

struct CompletionResult {
    Coloring coloring;
    bool success = false;
    std::size_t resamples = 0;
    bool used_greedy = false;
    std::vector<VertexId> failed_vertices;
    std::string failure_reason;
};

/// Colors the vertices left over by the rounds: uniform random assignment
/// from the final palettes, then resampling of violated constraint edges in
/// a fixed order until none remain. Vertices deferred with empty palettes
/// are colored greedily from their original lists against the original
/// hypergraph. Deterministic given the state's seed.
CompletionResult complete(const NibbleState& state, const CompletionConfig& cfg = {});

} // namespace nibble

#endif
