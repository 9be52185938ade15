#ifndef NIBBLE_CONSTRAINT_FAMILY_HPP
#define NIBBLE_CONSTRAINT_FAMILY_HPP

#include <cstdint>
#include <vector>

#include "nibble/coloring.hpp"
#include "nibble/hypergraph.hpp"

namespace nibble {

/// Per-color families of constraint edges. An edge e in the family of color
/// c means "not all vertices of e may receive c". Invariants kept by the
/// round logic: every vertex of an edge has c on its palette, and no edge of
/// a color strictly contains another edge of the same color.
class ConstraintFamily {
public:
    ConstraintFamily() = default;
    ConstraintFamily(std::size_t num_vertices, std::size_t num_colors);

    /// H^0: for each color c, the input edges whose vertices all carry c,
    /// superset-pruned per color.
    static ConstraintFamily initial(const Hypergraph& h,
                                    const std::vector<std::vector<ColorId>>& palettes,
                                    std::size_t num_colors);

    std::size_t num_vertices() const { return num_vertices_; }
    std::size_t num_colors() const { return per_color_.size(); }

    const std::vector<Edge>& edges(ColorId c) const { return per_color_[c].edges; }
    const std::vector<std::uint32_t>& incident(ColorId c, VertexId u) const {
        return per_color_[c].incidence[u];
    }

    /// d_ell(u, c) for ell = 2..max_size, returned as counts[ell].
    std::vector<std::size_t> degree_by_size(ColorId c, VertexId u, std::size_t max_size) const;

    /// sum over ell of base^(k - ell) * d_ell(u, c)
    double weighted_degree(ColorId c, VertexId u, double base, std::size_t k) const;

    /// replaces a color's edges (sorted lex, deduplicated) and rebuilds its
    /// incidence index
    void set_edges(ColorId c, std::vector<Edge> edges);

    std::size_t total_edges() const;

    /// true if some edge of color c strictly contains another
    bool has_superset_pair(ColorId c) const;

private:
    struct PerColor {
        std::vector<Edge> edges;  // sorted lexicographically
        std::vector<std::vector<std::uint32_t>> incidence;
    };

    std::size_t num_vertices_ = 0;
    std::vector<PerColor> per_color_;
};

/// Removes every edge that strictly contains another edge of the list.
/// Input may be unsorted; output is sorted lex and deduplicated.
std::vector<Edge> prune_supersets(std::vector<Edge> edges);

} // namespace nibble

#endif
