#ifndef NIBBLE_HYPERGRAPH_HPP
#define NIBBLE_HYPERGRAPH_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

namespace nibble {

using VertexId = std::uint32_t;
// always sorted ascending, no repeated vertices
using Edge = std::vector<VertexId>;

struct InputError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Maximum degrees and codegrees by edge size. Entries exist only for sizes
/// that actually occur.
struct DegreeProfile {
    std::map<std::size_t, std::size_t> max_degree;   // ell -> Delta_ell
    std::map<std::pair<std::size_t, std::size_t>, std::size_t> max_codegree;  // (s, ell) -> delta_{s, ell}
};

/// Three distinct edges e, f, g and distinct vertices u, v, w with
/// {u,v} <= e, {v,w} <= f, {w,u} <= g and {u,v,w} `intersect` e^f^g empty.
struct TriangleWitness {
    Edge e, f, g;
    VertexId u = 0, v = 0, w = 0;

    bool valid() const;
};

/// Rank-k hypergraph: every edge has between 2 and rank() vertices.
/// Immutable after construction; queries are safe to run concurrently.
class Hypergraph {
public:
    Hypergraph(std::size_t num_vertices, std::size_t rank, std::vector<Edge> edges);

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t rank() const { return rank_; }
    std::size_t num_edges() const { return edges_.size(); }
    // edges are normalized: each sorted ascending, the list sorted
    // lexicographically, duplicates removed
    const std::vector<Edge>& edges() const { return edges_; }
    const Edge& edge(std::size_t idx) const { return edges_[idx]; }
    const std::vector<std::uint32_t>& incident_edges(VertexId v) const;

    bool contains_edge(const Edge& e) const;

    /// Number of size-ell edges containing v.
    std::size_t degree(VertexId v, std::size_t ell) const;

    /// Number of size-ell edges containing every vertex of S. Requires
    /// 1 <= |S| < ell <= rank.
    std::size_t codegree(std::span<const VertexId> S, std::size_t ell) const;

    DegreeProfile degree_profile() const;

    /// First triangle in the fixed edge order, or nullopt if triangle-free.
    std::optional<TriangleWitness> find_triangle() const;

    /// depth 1: vertices sharing an edge with v (v excluded).
    /// depth 2: union of depth-1 neighborhoods of those vertices (may
    /// re-include v).
    std::vector<VertexId> neighborhood(VertexId v, int depth) const;

private:
    std::size_t num_vertices_;
    std::size_t rank_;
    std::vector<Edge> edges_;
    std::vector<std::vector<std::uint32_t>> incidence_;  // vertex -> edge indices, ascending
};

/// Validates and canonicalizes one edge: sorts, rejects repeats, size and
/// vertex-range violations.
Edge normalize_edge(Edge e, std::size_t num_vertices, std::size_t rank);

bool edge_contains(const Edge& e, VertexId v);
bool is_subset(const Edge& small, const Edge& big);

} // namespace nibble

#endif
