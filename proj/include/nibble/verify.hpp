#ifndef NIBBLE_VERIFY_HPP
#define NIBBLE_VERIFY_HPP

#include <json.hpp>

#include "nibble/coloring.hpp"
#include "nibble/hypergraph.hpp"

// Deliberately naive oracles. They re-derive everything from definitions and
// share no code with the optimized query paths they are used to check.
namespace nibble::verify {

struct ProperReport {
    bool partial = false;                          // some vertex uncolored
    std::vector<std::size_t> monochromatic_edges;  // indices into h.edges()

    bool clean() const { return monochromatic_edges.empty(); }
    nlohmann::json to_json(const Hypergraph& h) const;
};

struct ListReport {
    ProperReport proper;
    std::vector<VertexId> off_list;  // vertices colored outside their list

    bool clean() const { return proper.clean() && off_list.empty(); }
    nlohmann::json to_json(const Hypergraph& h) const;
};

/// Lists every monochromatic edge. Edges with uncolored vertices are skipped
/// and the report is flagged partial.
ProperReport verify_proper(const Hypergraph& h, const Coloring& coloring);

/// verify_proper plus the check that every assigned color is on the vertex's
/// list.
ListReport verify_list(const Hypergraph& h, const ListAssignment& lists,
                       const Coloring& coloring);

/// Exhaustive triangle enumeration over all ordered edge triples and vertex
/// triples. One witness per unordered edge triple. Intended for small inputs.
std::vector<TriangleWitness> brute_triangles(const Hypergraph& h);

/// Brute-force recount of deg_ell(S, h) by scanning every edge.
std::size_t brute_codegree(const Hypergraph& h, const Edge& S, std::size_t ell);

/// Brute-force recount of the number of size-ell edges at v.
std::size_t brute_degree(const Hypergraph& h, VertexId v, std::size_t ell);

} // namespace nibble::verify

#endif
