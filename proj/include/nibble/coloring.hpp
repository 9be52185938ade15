#ifndef NIBBLE_COLORING_HPP
#define NIBBLE_COLORING_HPP

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "nibble/hypergraph.hpp"

namespace nibble {

using ColorId = std::uint32_t;
constexpr ColorId kNoColor = 0xFFFFFFFFu;

/// Interned color names. Ids are lexicographic ranks of the names, so the
/// table is canonical for a given name set.
class ColorTable {
public:
    ColorTable() = default;
    explicit ColorTable(std::vector<std::string> names);

    ColorId id(const std::string& name) const;
    const std::string& name(ColorId c) const { return names_.at(c); }
    std::size_t size() const { return names_.size(); }
    const std::vector<std::string>& names() const { return names_; }

private:
    std::vector<std::string> names_;
    std::map<std::string, ColorId> by_name_;
};

/// Per-vertex color lists over an interned table.
struct ListAssignment {
    ColorTable table;
    std::vector<std::vector<ColorId>> lists;  // per vertex, sorted ascending

    std::size_t num_vertices() const { return lists.size(); }
};

/// Shared lists: every vertex gets colors c0..c{size-1}.
ListAssignment make_shared_lists(std::size_t num_vertices, std::size_t list_size);

constexpr std::int32_t kProvenanceCompletion = -1;
constexpr std::int32_t kProvenanceNone = -2;

/// Total or partial vertex coloring plus provenance (which nibble round
/// colored the vertex, or completion).
struct Coloring {
    std::vector<ColorId> colors;          // kNoColor = uncolored
    std::vector<std::int32_t> provenance; // round >= 0, kProvenanceCompletion, kProvenanceNone

    explicit Coloring(std::size_t n = 0)
        : colors(n, kNoColor), provenance(n, kProvenanceNone) {}

    bool is_colored(VertexId v) const { return colors[v] != kNoColor; }
    std::size_t colored_count() const;
    void assign(VertexId v, ColorId c, std::int32_t prov);
};

} // namespace nibble

#endif
