#include "nibble/hypergraph.hpp"

#include <algorithm>
#include <unordered_map>

namespace nibble {

bool edge_contains(const Edge& e, VertexId v) {
    return std::binary_search(e.begin(), e.end(), v);
}

bool is_subset(const Edge& small, const Edge& big) {
    return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

Edge normalize_edge(Edge e, std::size_t num_vertices, std::size_t rank) {
    std::sort(e.begin(), e.end());
    if (e.size() < 2 || e.size() > rank)
        throw InputError("edge size " + std::to_string(e.size()) + " outside [2, " +
                         std::to_string(rank) + "]");
    for (std::size_t i = 0; i + 1 < e.size(); ++i)
        if (e[i] == e[i + 1]) throw InputError("edge has a repeated vertex");
    if (!e.empty() && e.back() >= num_vertices)
        throw InputError("vertex id " + std::to_string(e.back()) + " out of range");
    return e;
}

Hypergraph::Hypergraph(std::size_t num_vertices, std::size_t rank, std::vector<Edge> edges)
    : num_vertices_(num_vertices), rank_(rank) {
    if (rank < 2) throw InputError("rank must be at least 2");
    for (auto& e : edges) e = normalize_edge(std::move(e), num_vertices, rank);
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    edges_ = std::move(edges);

    incidence_.resize(num_vertices_);
    for (std::uint32_t idx = 0; idx < edges_.size(); ++idx)
        for (VertexId v : edges_[idx]) incidence_[v].push_back(idx);
}

const std::vector<std::uint32_t>& Hypergraph::incident_edges(VertexId v) const {
    if (v >= num_vertices_) throw InputError("vertex id out of range");
    return incidence_[v];
}

bool Hypergraph::contains_edge(const Edge& e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
}

std::size_t Hypergraph::degree(VertexId v, std::size_t ell) const {
    if (v >= num_vertices_) throw InputError("vertex id out of range");
    if (ell < 2 || ell > rank_) throw InputError("edge size out of range");
    std::size_t cnt = 0;
    for (std::uint32_t idx : incidence_[v])
        if (edges_[idx].size() == ell) ++cnt;
    return cnt;
}

std::size_t Hypergraph::codegree(std::span<const VertexId> S, std::size_t ell) const {
    if (S.empty() || S.size() >= ell) throw InputError("need 1 <= |S| < ell");
    if (ell > rank_) throw InputError("edge size out of range");
    Edge s(S.begin(), S.end());
    std::sort(s.begin(), s.end());
    for (std::size_t i = 0; i + 1 < s.size(); ++i)
        if (s[i] == s[i + 1]) throw InputError("set has a repeated vertex");
    if (s.back() >= num_vertices_) throw InputError("vertex id out of range");
    std::size_t cnt = 0;
    for (std::uint32_t idx : incidence_[s[0]]) {
        const Edge& e = edges_[idx];
        if (e.size() == ell && is_subset(s, e)) ++cnt;
    }
    return cnt;
}

namespace {

// visits every s-subset of e
template <typename Fn>
void for_each_subset(const Edge& e, std::size_t s, Fn&& fn) {
    std::vector<std::size_t> pick(s);
    for (std::size_t i = 0; i < s; ++i) pick[i] = i;
    Edge sub(s);
    while (true) {
        for (std::size_t i = 0; i < s; ++i) sub[i] = e[pick[i]];
        fn(sub);
        std::size_t i = s;
        while (i > 0) {
            --i;
            if (pick[i] != i + e.size() - s) break;
            if (i == 0) return;
        }
        ++pick[i];
        for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
    }
}

struct EdgeHash {
    std::size_t operator()(const Edge& e) const {
        std::size_t h = 1469598103934665603ull;
        for (VertexId v : e) {
            h ^= v;
            h *= 1099511628211ull;
        }
        return h;
    }
};

} // namespace

DegreeProfile Hypergraph::degree_profile() const {
    DegreeProfile p;
    std::vector<std::size_t> sizes;
    for (const Edge& e : edges_)
        if (std::find(sizes.begin(), sizes.end(), e.size()) == sizes.end())
            sizes.push_back(e.size());
    std::sort(sizes.begin(), sizes.end());

    for (std::size_t ell : sizes) {
        std::size_t best = 0;
        for (VertexId v = 0; v < num_vertices_; ++v) {
            std::size_t cnt = 0;
            for (std::uint32_t idx : incidence_[v])
                if (edges_[idx].size() == ell) ++cnt;
            best = std::max(best, cnt);
        }
        p.max_degree[ell] = best;
    }

    for (std::size_t ell : sizes) {
        for (std::size_t s = 2; s < ell; ++s) {
            std::unordered_map<Edge, std::size_t, EdgeHash> counts;
            for (const Edge& e : edges_) {
                if (e.size() != ell) continue;
                for_each_subset(e, s, [&](const Edge& sub) { ++counts[sub]; });
            }
            std::size_t best = 0;
            for (const auto& [sub, cnt] : counts) best = std::max(best, cnt);
            p.max_codegree[{s, ell}] = best;
        }
    }
    return p;
}

bool TriangleWitness::valid() const {
    if (e == f || f == g || e == g) return false;
    if (u == v || v == w || u == w) return false;
    if (!edge_contains(e, u) || !edge_contains(e, v)) return false;
    if (!edge_contains(f, v) || !edge_contains(f, w)) return false;
    if (!edge_contains(g, w) || !edge_contains(g, u)) return false;
    for (VertexId x : {u, v, w})
        if (edge_contains(e, x) && edge_contains(f, x) && edge_contains(g, x)) return false;
    return true;
}

std::optional<TriangleWitness> Hypergraph::find_triangle() const {
    // pair index: {a,b} -> edges containing both, in edge order
    std::unordered_map<std::uint64_t, std::vector<std::uint32_t>> pair_index;
    auto pair_key = [](VertexId a, VertexId b) {
        if (a > b) std::swap(a, b);
        return (static_cast<std::uint64_t>(a) << 32) | b;
    };
    for (std::uint32_t idx = 0; idx < edges_.size(); ++idx) {
        const Edge& e = edges_[idx];
        for (std::size_t i = 0; i < e.size(); ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                pair_index[pair_key(e[i], e[j])].push_back(idx);
    }

    for (VertexId v = 0; v < num_vertices_; ++v) {
        const auto& inc = incidence_[v];
        for (std::uint32_t ei : inc) {
            for (std::uint32_t fi : inc) {
                if (ei == fi) continue;
                const Edge& e = edges_[ei];
                const Edge& f = edges_[fi];
                for (VertexId u : e) {
                    if (u == v) continue;
                    for (VertexId w : f) {
                        if (w == v || w == u) continue;
                        auto it = pair_index.find(pair_key(u, w));
                        if (it == pair_index.end()) continue;
                        for (std::uint32_t gi : it->second) {
                            if (gi == ei || gi == fi) continue;
                            const Edge& g = edges_[gi];
                            // {u,v,w} must avoid the triple intersection;
                            // u in e,g and v in e,f and w in f,g hold already
                            if (edge_contains(f, u)) continue;
                            if (edge_contains(g, v)) continue;
                            if (edge_contains(e, w)) continue;
                            return TriangleWitness{e, f, g, u, v, w};
                        }
                    }
                }
            }
        }
    }
    return std::nullopt;
}

std::vector<VertexId> Hypergraph::neighborhood(VertexId v, int depth) const {
    if (v >= num_vertices_) throw InputError("vertex id out of range");
    if (depth != 1 && depth != 2) throw InputError("depth must be 1 or 2");

    auto depth1 = [&](VertexId x) {
        std::vector<VertexId> out;
        for (std::uint32_t idx : incidence_[x])
            for (VertexId y : edges_[idx])
                if (y != x) out.push_back(y);
        std::sort(out.begin(), out.end());
        out.erase(std::unique(out.begin(), out.end()), out.end());
        return out;
    };

    std::vector<VertexId> n1 = depth1(v);
    if (depth == 1) return n1;

    std::vector<VertexId> out;
    for (VertexId x : n1) {
        auto nx = depth1(x);
        out.insert(out.end(), nx.begin(), nx.end());
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

} // namespace nibble
