#include "nibble/coloring.hpp"

#include <algorithm>

namespace nibble {

ColorTable::ColorTable(std::vector<std::string> names) {
    std::sort(names.begin(), names.end());
    names.erase(std::unique(names.begin(), names.end()), names.end());
    names_ = std::move(names);
    for (ColorId i = 0; i < names_.size(); ++i) by_name_[names_[i]] = i;
}

ColorId ColorTable::id(const std::string& name) const {
    auto it = by_name_.find(name);
    if (it == by_name_.end()) throw InputError("unknown color name: " + name);
    return it->second;
}

ListAssignment make_shared_lists(std::size_t num_vertices, std::size_t list_size) {
    std::vector<std::string> names;
    names.reserve(list_size);
    for (std::size_t i = 0; i < list_size; ++i) names.push_back("c" + std::to_string(i));
    ListAssignment out;
    out.table = ColorTable(names);
    std::vector<ColorId> full(list_size);
    for (std::size_t i = 0; i < list_size; ++i) full[i] = out.table.id(names[i]);
    std::sort(full.begin(), full.end());
    out.lists.assign(num_vertices, full);
    return out;
}

std::size_t Coloring::colored_count() const {
    std::size_t n = 0;
    for (ColorId c : colors)
        if (c != kNoColor) ++n;
    return n;
}

void Coloring::assign(VertexId v, ColorId c, std::int32_t prov) {
    colors[v] = c;
    provenance[v] = prov;
}

} // namespace nibble
