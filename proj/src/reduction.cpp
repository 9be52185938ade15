#include "nibble/reduction.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <set>
#include <unordered_map>

#include "nibble/verify.hpp"

namespace nibble::reduction {

using nlohmann::json;

ReductionPolicy::ReductionPolicy(std::size_t k,
                                 std::map<std::pair<std::size_t, std::size_t>, double> table)
    : k_(k), table_(std::move(table)) {
    if (k < 2) throw InputError("policy rank must be at least 2");
    for (std::size_t ell = 3; ell <= k; ++ell) {
        double prev = 1.0;  // f(ell, ell)
        for (std::size_t s = ell - 1; s >= 2; --s) {
            auto it = table_.find({s, ell});
            if (it == table_.end())
                throw InputError("policy missing f(" + std::to_string(s) + ", " +
                                 std::to_string(ell) + ")");
            if (it->second <= prev)
                throw InputError("policy must be strictly decreasing in s with f(ell, ell) = 1");
            prev = it->second;
        }
    }
}

ReductionPolicy ReductionPolicy::geometric(std::size_t k, double base) {
    if (base <= 1.0) throw InputError("geometric policy needs base > 1");
    std::map<std::pair<std::size_t, std::size_t>, double> table;
    for (std::size_t ell = 3; ell <= k; ++ell)
        for (std::size_t s = 2; s < ell; ++s)
            table[{s, ell}] = std::pow(base, static_cast<double>(ell - s));
    return ReductionPolicy(k, std::move(table));
}

double ReductionPolicy::threshold(std::size_t s, std::size_t ell) const {
    if (s == ell) return 1.0;
    auto it = table_.find({s, ell});
    if (it == table_.end()) throw InputError("policy has no entry for (s, ell)");
    return it->second;
}

ReductionPolicy ReductionPolicy::from_json(const json& j) {
    if (!j.contains("k") || !j.contains("entries"))
        throw InputError("policy needs k and entries");
    std::size_t k = j.at("k").get<std::size_t>();
    std::map<std::pair<std::size_t, std::size_t>, double> table;
    for (const auto& entry : j.at("entries")) {
        std::size_t s = entry.at("s").get<std::size_t>();
        std::size_t ell = entry.at("ell").get<std::size_t>();
        table[{s, ell}] = entry.at("value").get<double>();
    }
    return ReductionPolicy(k, std::move(table));
}

json ReductionPolicy::to_json() const {
    json entries = json::array();
    for (const auto& [key, value] : table_)
        entries.push_back({{"s", key.first}, {"ell", key.second}, {"value", value}});
    json j;
    j["k"] = k_;
    j["entries"] = std::move(entries);
    return j;
}

namespace {

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

// One contraction round targeting size-s sets. Qualifying sets are collected
// against a snapshot of `edges` first; removals and additions then apply all
// at once.
ReductionRound contraction_round(std::vector<Edge>& edges, std::size_t round, std::size_t s,
                                 const std::function<double(std::size_t)>& threshold_for_ell) {
    ReductionRound rec{round, s, {}};

    std::map<std::size_t, std::unordered_map<Edge, std::size_t, EdgeHash>> counts;
    for (const Edge& e : edges) {
        if (e.size() <= s) continue;
        for_each_subset(e, s, [&](const Edge& sub) { ++counts[e.size()][sub]; });
    }

    std::map<std::size_t, std::set<Edge>> qualifying;  // ell -> sets
    std::set<Edge> to_add;
    for (const auto& [ell, per_set] : counts) {
        const double thr = threshold_for_ell(ell);
        for (const auto& [sub, cnt] : per_set) {
            if (static_cast<double>(cnt) >= thr) {
                qualifying[ell].insert(sub);
                to_add.insert(sub);
                rec.contractions.push_back(Contraction{sub, ell, cnt});
            }
        }
    }
    std::sort(rec.contractions.begin(), rec.contractions.end(),
              [](const Contraction& a, const Contraction& b) {
                  return std::tie(a.set, a.ell) < std::tie(b.set, b.ell);
              });

    if (!to_add.empty()) {
        std::vector<Edge> next;
        next.reserve(edges.size());
        for (Edge& e : edges) {
            bool removed = false;
            auto it = qualifying.find(e.size());
            if (it != qualifying.end()) {
                for_each_subset(e, s, [&](const Edge& sub) {
                    if (!removed && it->second.count(sub)) removed = true;
                });
            }
            if (!removed) next.push_back(std::move(e));
        }
        for (const Edge& sub : to_add) next.push_back(sub);
        std::sort(next.begin(), next.end());
        next.erase(std::unique(next.begin(), next.end()), next.end());
        edges = std::move(next);
    }
    return rec;
}

} // namespace

ReductionTrace f_reduce(const Hypergraph& h, const ReductionPolicy& policy) {
    const std::size_t k = policy.k();
    if (h.rank() > k) throw InputError("hypergraph rank exceeds policy rank");

    std::vector<Edge> current = h.edges();
    ReductionTrace trace;
    for (std::size_t round = 1; round + 1 < k; ++round) {
        const std::size_t s = k - round;
        trace.rounds.push_back(contraction_round(
            current, round, s, [&](std::size_t ell) { return policy.threshold(s, ell); }));
    }
    trace.final_edges = std::move(current);
    return trace;
}

bool check_soundness(const Hypergraph& original, const Hypergraph& reduced,
                     const Coloring& coloring) {
    bool proper_reduced = verify::verify_proper(reduced, coloring).clean();
    if (!proper_reduced) return true;
    return verify::verify_proper(original, coloring).clean();
}

double lambda_forward(double lambda, std::size_t k, std::size_t i) {
    const double km1 = static_cast<double>(k - 1);
    const double scale = std::pow(static_cast<double>(k) * std::exp2(static_cast<double>(k)),
                                  static_cast<double>(k - i));
    const double a = 1.0 - static_cast<double>(i) / km1;
    const double b = static_cast<double>(i) / km1;
    return std::pow(lambda, a) * std::pow(std::log(lambda), b) / scale;
}

LambdaSolution solve_lambda(double observed_degree, std::size_t k, std::size_t i) {
    if (k < 2) throw InputError("need k >= 2");
    if (i > k - 2) throw InputError("need 0 <= i <= k-2");
    if (observed_degree < 0) throw InputError("degree must be nonnegative");

    const double e = std::exp(1.0);
    if (observed_degree == 0.0) return LambdaSolution{e, 0, true};

    if (i == 0) {
        // log exponent is zero, the map is linear
        const double scale =
            std::pow(static_cast<double>(k) * std::exp2(static_cast<double>(k)),
                     static_cast<double>(k));
        return LambdaSolution{observed_degree * scale, 0, false};
    }

    std::size_t iters = 0;
    double at_min = lambda_forward(e, k, i);
    if (at_min >= observed_degree) return LambdaSolution{e, iters, at_min > observed_degree};

    double lo = e, hi = e;
    while (lambda_forward(hi, k, i) < observed_degree) {
        lo = hi;
        hi *= 2.0;
        ++iters;
        if (iters > 4000) throw std::runtime_error("lambda bracket failed to close");
    }

    const double tol = 1e-9 * observed_degree;
    double mid = hi;
    for (; iters < 4000; ++iters) {
        mid = 0.5 * (lo + hi);
        double val = lambda_forward(mid, k, i);
        if (std::abs(val - observed_degree) <= tol) break;
        if (val < observed_degree)
            lo = mid;
        else
            hi = mid;
    }
    return LambdaSolution{mid, iters, false};
}

BalancedResult balanced_reduce(const Hypergraph& h) {
    const std::size_t k = h.rank();
    if (k < 3) throw InputError("nothing to reduce at rank 2");

    auto max_degree = [&h](const std::vector<Edge>& edges, std::size_t ell) {
        std::vector<std::size_t> deg(h.num_vertices(), 0);
        std::size_t best = 0;
        for (const Edge& e : edges) {
            if (e.size() != ell) continue;
            for (VertexId v : e) best = std::max(best, ++deg[v]);
        }
        return best;
    };

    std::vector<Edge> current = h.edges();
    std::vector<double> lambdas(k + 1, 0.0);
    lambdas[k] = solve_lambda(static_cast<double>(max_degree(current, k)), k, 0).lambda;

    ReductionTrace trace;
    for (std::size_t round = 1; round + 1 < k; ++round) {
        const std::size_t s = k - round;
        trace.rounds.push_back(contraction_round(current, round, s, [&](std::size_t ell) {
            double lam = lambdas[ell];
            double base = lam / std::log(lam);
            return std::pow(base,
                            static_cast<double>(ell - s) / static_cast<double>(k - 1));
        }));
        lambdas[s] = solve_lambda(static_cast<double>(max_degree(current, s)), k, round).lambda;
    }

    trace.final_edges = current;
    double delta = 0.0;
    for (std::size_t s = 2; s <= k; ++s) delta = std::max(delta, lambdas[s]);
    return BalancedResult{Hypergraph(h.num_vertices(), k, std::move(current)), delta,
                          std::move(lambdas), std::move(trace)};
}

json ReductionTrace::to_json() const {
    json rounds_json = json::array();
    for (const auto& round : rounds) {
        json contractions = json::array();
        for (const auto& c : round.contractions)
            contractions.push_back(
                {{"set", c.set}, {"ell", c.ell}, {"removed_edges", c.removed_edges}});
        rounds_json.push_back({{"round", round.round},
                               {"target_size", round.target_size},
                               {"contractions", std::move(contractions)}});
    }
    json final_json = json::array();
    for (const Edge& e : final_edges) final_json.push_back(e);
    json j;
    j["rounds"] = std::move(rounds_json);
    j["final_edges"] = std::move(final_json);
    return j;
}

} // namespace nibble::reduction
