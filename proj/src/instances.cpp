#include "nibble/instances.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "nibble/rng.hpp"

namespace nibble::instances {

namespace {

// binomial(n, k) clamped to avoid overflow
double choose(std::size_t n, std::size_t k) {
    if (k > n) return 0.0;
    double r = 1.0;
    for (std::size_t i = 0; i < k; ++i) {
        r *= static_cast<double>(n - i) / static_cast<double>(i + 1);
        if (r > 1e18) return 1e18;
    }
    return r;
}

Edge random_subset(std::size_t n, std::size_t k, rng::Stream& s) {
    // Floyd's algorithm
    std::set<VertexId> picked;
    for (std::size_t j = n - k; j < n; ++j) {
        auto t = static_cast<VertexId>(s.next_below(j + 1));
        if (!picked.insert(t).second) picked.insert(static_cast<VertexId>(j));
    }
    return Edge(picked.begin(), picked.end());
}

} // namespace

Hypergraph gen_uniform(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
    if (k < 2 || k > n) throw InputError("need 2 <= k <= n");
    if (static_cast<double>(m) > choose(n, k))
        throw InputError("requested edge count exceeds the number of distinct k-sets");
    rng::Stream s(rng::key(seed, rng::Channel::GenUniform, n, k, m));
    std::set<Edge> edges;
    while (edges.size() < m) edges.insert(random_subset(n, k, s));
    return Hypergraph(n, k, std::vector<Edge>(edges.begin(), edges.end()));
}

Hypergraph gen_mixed(std::size_t n, std::size_t rank,
                     const std::vector<std::pair<std::size_t, std::size_t>>& sizes_counts,
                     std::uint64_t seed) {
    std::vector<Edge> all;
    std::uint64_t salt = 0;
    for (auto [size, count] : sizes_counts) {
        if (size > rank) throw InputError("edge size exceeds rank");
        Hypergraph part = gen_uniform(n, size, count, seed + 0x9E37 * ++salt);
        for (const Edge& e : part.edges()) all.push_back(e);
    }
    return Hypergraph(n, rank, std::move(all));
}

Hypergraph make_triangle_free(const Hypergraph& h, std::uint64_t seed) {
    rng::Stream s(rng::key(seed, rng::Channel::TriangleFree));
    std::vector<Edge> edges = h.edges();
    Hypergraph cur(h.num_vertices(), h.rank(), edges);
    while (auto wit = cur.find_triangle()) {
        const Edge* victim = nullptr;
        switch (s.next_below(3)) {
            case 0: victim = &wit->e; break;
            case 1: victim = &wit->f; break;
            default: victim = &wit->g; break;
        }
        edges = cur.edges();
        edges.erase(std::find(edges.begin(), edges.end(), *victim));
        cur = Hypergraph(h.num_vertices(), h.rank(), std::move(edges));
    }
    return cur;
}

LinearResult gen_linear(std::size_t n, std::size_t k, std::size_t m, std::uint64_t seed) {
    if (k < 2 || k > n) throw InputError("need 2 <= k <= n");
    const std::size_t kMaxPasses = 64;
    const std::size_t kAttemptsPerPass = 200 * std::max<std::size_t>(m, 1) + 200;

    std::vector<Edge> best;
    for (std::size_t pass = 0; pass < kMaxPasses && best.size() < m; ++pass) {
        rng::Stream s(rng::key(seed, rng::Channel::GenLinear, pass));
        std::vector<Edge> picked;
        std::set<std::pair<VertexId, VertexId>> covered;
        std::size_t attempts = 0;
        while (picked.size() < m && attempts < kAttemptsPerPass) {
            ++attempts;
            Edge cand = random_subset(n, k, s);
            bool ok = true;
            for (std::size_t i = 0; i < cand.size() && ok; ++i)
                for (std::size_t j = i + 1; j < cand.size() && ok; ++j)
                    if (covered.count({cand[i], cand[j]})) ok = false;
            if (!ok) continue;
            for (std::size_t i = 0; i < cand.size(); ++i)
                for (std::size_t j = i + 1; j < cand.size(); ++j)
                    covered.insert({cand[i], cand[j]});
            picked.push_back(std::move(cand));
        }
        if (picked.size() > best.size()) best = std::move(picked);
    }
    bool reached = best.size() >= m;
    return LinearResult{Hypergraph(n, k, std::move(best)), reached};
}

} // namespace nibble::instances
