#include "nibble/verify.hpp"

#include <algorithm>
#include <set>

namespace nibble::verify {

using nlohmann::json;

ProperReport verify_proper(const Hypergraph& h, const Coloring& coloring) {
    ProperReport rep;
    for (VertexId v = 0; v < h.num_vertices(); ++v)
        if (coloring.colors[v] == kNoColor) rep.partial = true;

    for (std::size_t idx = 0; idx < h.num_edges(); ++idx) {
        const Edge& e = h.edge(idx);
        bool full = true;
        for (VertexId v : e)
            if (coloring.colors[v] == kNoColor) full = false;
        if (!full) continue;
        bool mono = true;
        for (VertexId v : e)
            if (coloring.colors[v] != coloring.colors[e[0]]) mono = false;
        if (mono) rep.monochromatic_edges.push_back(idx);
    }
    return rep;
}

ListReport verify_list(const Hypergraph& h, const ListAssignment& lists,
                       const Coloring& coloring) {
    ListReport rep;
    rep.proper = verify_proper(h, coloring);
    for (VertexId v = 0; v < h.num_vertices(); ++v) {
        ColorId c = coloring.colors[v];
        if (c == kNoColor) continue;
        const auto& lst = lists.lists[v];
        if (std::find(lst.begin(), lst.end(), c) == lst.end()) rep.off_list.push_back(v);
    }
    return rep;
}

std::vector<TriangleWitness> brute_triangles(const Hypergraph& h) {
    std::vector<TriangleWitness> out;
    std::set<std::array<std::size_t, 3>> seen_triples;
    const auto& edges = h.edges();
    const std::size_t m = edges.size();

    auto in = [](const Edge& e, VertexId x) {
        for (VertexId y : e)
            if (y == x) return true;
        return false;
    };

    for (std::size_t ei = 0; ei < m; ++ei)
        for (std::size_t fi = 0; fi < m; ++fi)
            for (std::size_t gi = 0; gi < m; ++gi) {
                if (ei == fi || fi == gi || ei == gi) continue;
                std::array<std::size_t, 3> key{ei, fi, gi};
                std::sort(key.begin(), key.end());
                if (seen_triples.count(key)) continue;
                const Edge& e = edges[ei];
                const Edge& f = edges[fi];
                const Edge& g = edges[gi];
                for (VertexId u : e)
                    for (VertexId v : e) {
                        if (u == v || !in(f, v)) continue;
                        if (!in(g, u)) continue;
                        for (VertexId w : f) {
                            if (w == u || w == v || !in(g, w)) continue;
                            bool bad = false;
                            for (VertexId x : {u, v, w})
                                if (in(e, x) && in(f, x) && in(g, x)) bad = true;
                            if (bad) continue;
                            if (!seen_triples.count(key)) {
                                seen_triples.insert(key);
                                out.push_back(TriangleWitness{e, f, g, u, v, w});
                            }
                        }
                    }
            }
    return out;
}

std::size_t brute_codegree(const Hypergraph& h, const Edge& S, std::size_t ell) {
    std::size_t cnt = 0;
    for (const Edge& e : h.edges()) {
        if (e.size() != ell) continue;
        bool contains_all = true;
        for (VertexId v : S) {
            bool found = false;
            for (VertexId x : e)
                if (x == v) found = true;
            if (!found) contains_all = false;
        }
        if (contains_all) ++cnt;
    }
    return cnt;
}

std::size_t brute_degree(const Hypergraph& h, VertexId v, std::size_t ell) {
    std::size_t cnt = 0;
    for (const Edge& e : h.edges()) {
        if (e.size() != ell) continue;
        for (VertexId x : e)
            if (x == v) ++cnt;
    }
    return cnt;
}

json ProperReport::to_json(const Hypergraph& h) const {
    json j;
    j["proper"] = clean();
    j["partial"] = partial;
    json edges = json::array();
    for (std::size_t idx : monochromatic_edges) edges.push_back(h.edge(idx));
    j["monochromatic_edges"] = std::move(edges);
    return j;
}

json ListReport::to_json(const Hypergraph& h) const {
    json j = proper.to_json(h);
    j["list_respecting"] = off_list.empty();
    j["off_list_vertices"] = off_list;
    j["clean"] = clean();
    return j;
}

} // namespace nibble::verify
