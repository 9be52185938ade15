#include "nibble/constraint_family.hpp"

#include <algorithm>
#include <cmath>

namespace nibble {

std::vector<Edge> prune_supersets(std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end(), [](const Edge& a, const Edge& b) {
        if (a.size() != b.size()) return a.size() < b.size();
        return a < b;
    });
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());

    // kept edges indexed by their smallest vertex; any subset of e shares
    // some vertex of e as its own minimum, so probing the buckets of e's
    // vertices finds every kept subset
    std::vector<Edge> kept;
    std::vector<std::vector<std::uint32_t>> by_min_vertex;
    for (Edge& e : edges) {
        bool subsumed = false;
        for (VertexId v : e) {
            if (v >= by_min_vertex.size()) break;
            for (std::uint32_t idx : by_min_vertex[v]) {
                if (kept[idx].size() < e.size() && is_subset(kept[idx], e)) {
                    subsumed = true;
                    break;
                }
            }
            if (subsumed) break;
        }
        if (subsumed) continue;
        VertexId mn = e[0];
        if (mn >= by_min_vertex.size()) by_min_vertex.resize(mn + 1);
        by_min_vertex[mn].push_back(static_cast<std::uint32_t>(kept.size()));
        kept.push_back(std::move(e));
    }
    std::sort(kept.begin(), kept.end());
    return kept;
}

ConstraintFamily::ConstraintFamily(std::size_t num_vertices, std::size_t num_colors)
    : num_vertices_(num_vertices), per_color_(num_colors) {
    for (auto& pc : per_color_) pc.incidence.resize(num_vertices);
}

ConstraintFamily ConstraintFamily::initial(const Hypergraph& h,
                                           const std::vector<std::vector<ColorId>>& palettes,
                                           std::size_t num_colors) {
    ConstraintFamily fam(h.num_vertices(), num_colors);
    std::vector<std::vector<Edge>> buckets(num_colors);
    std::vector<ColorId> common;
    for (const Edge& e : h.edges()) {
        common = palettes[e[0]];
        for (std::size_t i = 1; i < e.size() && !common.empty(); ++i) {
            const auto& other = palettes[e[i]];
            std::vector<ColorId> next;
            std::set_intersection(common.begin(), common.end(), other.begin(), other.end(),
                                  std::back_inserter(next));
            common = std::move(next);
        }
        for (ColorId c : common) buckets[c].push_back(e);
    }
    for (ColorId c = 0; c < num_colors; ++c) fam.set_edges(c, prune_supersets(std::move(buckets[c])));
    return fam;
}

std::vector<std::size_t> ConstraintFamily::degree_by_size(ColorId c, VertexId u,
                                                          std::size_t max_size) const {
    std::vector<std::size_t> counts(max_size + 1, 0);
    const PerColor& pc = per_color_[c];
    for (std::uint32_t idx : pc.incidence[u]) {
        std::size_t sz = pc.edges[idx].size();
        if (sz <= max_size) ++counts[sz];
    }
    return counts;
}

double ConstraintFamily::weighted_degree(ColorId c, VertexId u, double base,
                                         std::size_t k) const {
    double sum = 0.0;
    const PerColor& pc = per_color_[c];
    for (std::uint32_t idx : pc.incidence[u]) {
        std::size_t sz = pc.edges[idx].size();
        sum += std::pow(base, static_cast<double>(k - sz));
    }
    return sum;
}

void ConstraintFamily::set_edges(ColorId c, std::vector<Edge> edges) {
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    PerColor& pc = per_color_[c];
    pc.edges = std::move(edges);
    pc.incidence.assign(num_vertices_, {});
    for (std::uint32_t idx = 0; idx < pc.edges.size(); ++idx)
        for (VertexId v : pc.edges[idx]) pc.incidence[v].push_back(idx);
}

std::size_t ConstraintFamily::total_edges() const {
    std::size_t n = 0;
    for (const auto& pc : per_color_) n += pc.edges.size();
    return n;
}

bool ConstraintFamily::has_superset_pair(ColorId c) const {
    const auto& edges = per_color_[c].edges;
    for (std::size_t i = 0; i < edges.size(); ++i)
        for (std::size_t j = 0; j < edges.size(); ++j)
            if (i != j && edges[i].size() < edges[j].size() && is_subset(edges[i], edges[j]))
                return true;
    return false;
}

} // namespace nibble
