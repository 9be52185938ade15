#include "nibble/completion.hpp"

#include <algorithm>

#include "nibble/rng.hpp"

namespace nibble {

namespace {

// first (color, edge) pair whose edge is fully colored in its own color;
// scan order is fixed: ascending color, then lexicographic edge order
struct Violation {
    ColorId color;
    std::size_t edge_idx;
};

std::optional<Violation> first_violation(const ConstraintFamily& fam, const Coloring& col) {
    for (ColorId c = 0; c < fam.num_colors(); ++c) {
        const auto& edges = fam.edges(c);
        for (std::size_t idx = 0; idx < edges.size(); ++idx) {
            bool mono = true;
            for (VertexId v : edges[idx])
                if (col.colors[v] != c) {
                    mono = false;
                    break;
                }
            if (mono) return Violation{c, idx};
        }
    }
    return std::nullopt;
}

// true iff assigning c to v completes no constraint edge of color c
bool family_allows(const ConstraintFamily& fam, const Coloring& col, VertexId v, ColorId c) {
    const auto& edges = fam.edges(c);
    for (std::uint32_t idx : fam.incident(c, v)) {
        bool others_all_c = true;
        for (VertexId x : edges[idx]) {
            if (x == v) continue;
            if (col.colors[x] != c) {
                others_all_c = false;
                break;
            }
        }
        if (others_all_c) return false;
    }
    return true;
}

// true iff assigning c to v completes no original edge monochromatically
bool original_allows(const Hypergraph& h, const Coloring& col, VertexId v, ColorId c) {
    for (std::uint32_t idx : h.incident_edges(v)) {
        bool others_all_c = true;
        for (VertexId x : h.edge(idx)) {
            if (x == v) continue;
            if (col.colors[x] != c) {
                others_all_c = false;
                break;
            }
        }
        if (others_all_c) return false;
    }
    return true;
}

} // namespace

CompletionResult complete(const NibbleState& state, const CompletionConfig& cfg) {
    if (cfg.max_resample_rounds < 1) throw InputError("need at least one resample round");

    CompletionResult result;
    result.coloring = state.partial;

    if (cfg.fallback == CompletionConfig::Fallback::Fail && !state.deferred.empty()) {
        result.failed_vertices = state.deferred;
        result.failure_reason = "vertex " + std::to_string(state.deferred.front()) +
                                " has an empty palette and fallback is fail";
        return result;
    }

    rng::Stream stream(rng::key(state.seed, rng::Channel::Completion));

    // uniform assignment from the final palettes
    for (VertexId u : state.uncolored) {
        const auto& pal = state.palettes[u];
        result.coloring.assign(u, pal[stream.next_below(pal.size())], kProvenanceCompletion);
    }

    // resample the first violated constraint edge until none is violated
    bool resolved = false;
    while (result.resamples < cfg.max_resample_rounds) {
        auto violation = first_violation(state.constraints, result.coloring);
        if (!violation) {
            resolved = true;
            break;
        }
        const Edge& e = state.constraints.edges(violation->color)[violation->edge_idx];
        for (VertexId v : e) {
            const auto& pal = state.palettes[v];
            result.coloring.assign(v, pal[stream.next_below(pal.size())],
                                   kProvenanceCompletion);
        }
        ++result.resamples;
    }

    if (!resolved) {
        if (cfg.fallback == CompletionConfig::Fallback::Fail) {
            result.failure_reason = "resample budget exhausted";
            return result;
        }
        // greedy pass over the same vertices, smallest palette color that
        // completes no constraint edge
        result.used_greedy = true;
        for (VertexId u : state.uncolored) result.coloring.colors[u] = kNoColor;
        for (VertexId u : state.uncolored) {
            bool assigned = false;
            for (ColorId c : state.palettes[u]) {
                if (family_allows(state.constraints, result.coloring, u, c)) {
                    result.coloring.assign(u, c, kProvenanceCompletion);
                    assigned = true;
                    break;
                }
            }
            if (!assigned) result.failed_vertices.push_back(u);
        }
        if (!result.failed_vertices.empty()) {
            result.failure_reason = "greedy fallback found no palette color for vertex " +
                                    std::to_string(result.failed_vertices.front());
            return result;
        }
    }

    // deferred vertices have no palette left; color them from the original
    // lists, rechecking directly against the original hypergraph
    for (VertexId u : state.deferred) {
        bool assigned = false;
        for (ColorId c : state.lists->lists[u]) {
            if (original_allows(*state.instance, result.coloring, u, c)) {
                result.coloring.assign(u, c, kProvenanceCompletion);
                assigned = true;
                break;
            }
        }
        if (!assigned) {
            result.failed_vertices.push_back(u);
            result.failure_reason = "no list color works for deferred vertex " +
                                    std::to_string(u);
            return result;
        }
    }

    result.success = true;
    return result;
}

} // namespace nibble
