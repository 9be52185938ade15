#include "nibble/nibble.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>
#include <unordered_map>

#include "nibble/json_io.hpp"
#include "nibble/parallel.hpp"
#include "nibble/reduction.hpp"
#include "nibble/rng.hpp"

namespace nibble {

using nlohmann::json;

NibbleState init_state(std::shared_ptr<const Hypergraph> h,
                       std::shared_ptr<const ListAssignment> lists, Params params,
                       std::uint64_t seed) {
    if (!h || !lists) throw InputError("instance and lists are required");
    const std::size_t n = h->num_vertices();
    if (lists->num_vertices() != n) throw InputError("lists do not match the vertex count");
    if (params.k() != h->rank()) throw InputError("params rank does not match the instance");

    const std::size_t cap = params.colors();
    const bool relaxed = params.relaxed();
    NibbleState state(std::move(params));
    state.palettes.resize(n);
    for (VertexId u = 0; u < n; ++u) {
        const auto& lst = lists->lists[u];
        if (lst.size() < cap && !relaxed)
            throw InputError("vertex " + std::to_string(u) + " has " +
                             std::to_string(lst.size()) + " colors, needs " +
                             std::to_string(cap));
        std::size_t take = std::min(cap, lst.size());
        state.palettes[u].assign(lst.begin(), lst.begin() + take);
    }

    state.round = 0;
    state.uncolored.resize(n);
    for (VertexId u = 0; u < n; ++u) state.uncolored[u] = u;
    state.constraints =
        ConstraintFamily::initial(*h, state.palettes, lists->table.size());
    state.partial = Coloring(n);
    state.seed = seed;
    state.instance = std::move(h);
    state.lists = std::move(lists);
    return state;
}

double weighted_cdegree(const NibbleState& state, VertexId u, ColorId c) {
    return state.constraints.weighted_degree(c, u, state.params.weight_base(state.round),
                                             state.params.k());
}

double derive_relaxed_delta(const Hypergraph& h, const ListAssignment& lists, double phi1,
                            std::size_t colors) {
    const std::size_t n = h.num_vertices();
    const std::size_t k = h.rank();
    std::vector<std::vector<ColorId>> palettes(n);
    for (VertexId u = 0; u < n; ++u) {
        const auto& lst = lists.lists[u];
        palettes[u].assign(lst.begin(), lst.begin() + std::min(colors, lst.size()));
    }
    ConstraintFamily fam = ConstraintFamily::initial(h, palettes, lists.table.size());
    const double base = phi1 * static_cast<double>(colors);
    double max_degree = 0.0;
    for (VertexId u = 0; u < n; ++u)
        for (ColorId c : palettes[u])
            max_degree = std::max(max_degree, fam.weighted_degree(c, u, base, k));
    return std::max(3.0, max_degree / static_cast<double>(k - 1));
}

namespace {

// probability that no edge (given as vertex masks over two 64-bit words) has
// all its vertices activated, by inclusion-exclusion over edge subsets
double ie_recurse(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& masks,
                  const double* pi_powers, std::size_t idx, std::uint64_t lo, std::uint64_t hi,
                  int parity) {
    if (idx == masks.size()) {
        int bits = __builtin_popcountll(lo) + __builtin_popcountll(hi);
        return parity * pi_powers[bits];
    }
    return ie_recurse(masks, pi_powers, idx + 1, lo, hi, parity) +
           ie_recurse(masks, pi_powers, idx + 1, lo | masks[idx].first,
                      hi | masks[idx].second, -parity);
}

double exact_union_probability(const std::vector<std::pair<std::uint64_t, std::uint64_t>>& masks,
                               double pi) {
    double pi_powers[129];
    pi_powers[0] = 1.0;
    for (int i = 1; i <= 128; ++i) pi_powers[i] = pi_powers[i - 1] * pi;
    return ie_recurse(masks, pi_powers, 0, 0, 0, +1);
}

struct IncidentSets {
    // per incident edge, the vertices other than u remapped to small indices
    std::vector<std::vector<std::uint32_t>> others;
    std::size_t universe = 0;  // number of distinct remapped vertices
};

IncidentSets collect_incident(const ConstraintFamily& fam, VertexId u, ColorId c) {
    IncidentSets out;
    std::unordered_map<VertexId, std::uint32_t> slot_of;
    for (std::uint32_t idx : fam.incident(c, u)) {
        const Edge& e = fam.edges(c)[idx];
        std::vector<std::uint32_t> others;
        others.reserve(e.size() - 1);
        for (VertexId v : e) {
            if (v == u) continue;
            auto it = slot_of.try_emplace(v, static_cast<std::uint32_t>(slot_of.size())).first;
            others.push_back(it->second);
        }
        out.others.push_back(std::move(others));
    }
    out.universe = slot_of.size();
    return out;
}

double exact_q_all(const IncidentSets& inc, double pi) {
    std::vector<std::pair<std::uint64_t, std::uint64_t>> masks;
    masks.reserve(inc.others.size());
    for (const auto& others : inc.others) {
        std::uint64_t lo = 0, hi = 0;
        for (std::uint32_t slot : others) {
            if (slot < 64)
                lo |= 1ull << slot;
            else if (slot < 128)
                hi |= 1ull << (slot - 64);
            else
                throw std::runtime_error("incident vertex universe too large for exact q");
        }
        masks.push_back({lo, hi});
    }
    return exact_union_probability(masks, pi);
}

double monte_carlo_q(const IncidentSets& inc, double pi, std::size_t samples,
                     std::uint64_t stream_key) {
    if (samples == 0) throw InputError("need at least one sample");
    std::vector<std::uint8_t> active(inc.universe);
    rng::Stream stream(stream_key);
    std::size_t not_lost = 0;
    for (std::size_t s = 0; s < samples; ++s) {
        for (std::size_t v = 0; v < inc.universe; ++v)
            active[v] = stream.next_unit() < pi ? 1 : 0;
        bool lost = false;
        for (const auto& others : inc.others) {
            bool all = true;
            for (std::uint32_t slot : others)
                if (!active[slot]) {
                    all = false;
                    break;
                }
            if (all) {
                lost = true;
                break;
            }
        }
        if (!lost) ++not_lost;
    }
    return static_cast<double>(not_lost) / static_cast<double>(samples);
}

// connected components of incident edges under shared vertices
std::vector<std::vector<std::size_t>> incident_components(const IncidentSets& inc) {
    const std::size_t m = inc.others.size();
    std::vector<std::size_t> parent(m);
    for (std::size_t i = 0; i < m; ++i) parent[i] = i;
    std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    std::vector<std::size_t> owner(inc.universe, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i)
        for (std::uint32_t slot : inc.others[i]) {
            if (owner[slot] == SIZE_MAX)
                owner[slot] = i;
            else
                parent[find(i)] = find(owner[slot]);
        }
    std::vector<std::vector<std::size_t>> comps;
    std::vector<std::size_t> comp_of(m, SIZE_MAX);
    for (std::size_t i = 0; i < m; ++i) {
        std::size_t r = find(i);
        if (comp_of[r] == SIZE_MAX) {
            comp_of[r] = comps.size();
            comps.emplace_back();
        }
        comps[comp_of[r]].push_back(i);
    }
    return comps;
}

constexpr std::size_t kExactEdgeLimit = 20;

// q for one (u, c): loss events in different connected components of the
// incident edges touch disjoint activation indicators, so q factors over
// components. Small components get exact inclusion-exclusion, oversized
// ones Monte Carlo.
double auto_q(const IncidentSets& inc, double pi, std::size_t samples,
              std::uint64_t stream_key) {
    if (inc.others.empty()) return 1.0;
    auto comps = incident_components(inc);
    double q = 1.0;
    std::vector<std::uint32_t> remap(inc.universe, 0);
    std::vector<bool> seen(inc.universe, false);
    for (std::size_t ci = 0; ci < comps.size(); ++ci) {
        IncidentSets sub;
        std::size_t next = 0;
        for (std::size_t idx : comps[ci]) {
            std::vector<std::uint32_t> others;
            for (std::uint32_t slot : inc.others[idx]) {
                if (!seen[slot]) {
                    seen[slot] = true;
                    remap[slot] = static_cast<std::uint32_t>(next++);
                }
                others.push_back(remap[slot]);
            }
            sub.others.push_back(std::move(others));
        }
        sub.universe = next;
        if (comps[ci].size() <= kExactEdgeLimit)
            q *= exact_q_all(sub, pi);
        else
            q *= monte_carlo_q(sub, pi, samples, rng::mix(stream_key ^ (ci + 1)));
    }
    return q;
}

double compute_q(const ConstraintFamily& fam, VertexId u, ColorId c, double pi, QMethod method,
                 std::size_t samples, std::uint64_t stream_key, bool refuse_large_exact) {
    IncidentSets inc = collect_incident(fam, u, c);
    if (inc.others.empty()) return 1.0;
    switch (method) {
        case QMethod::Exact:
            if (inc.others.size() > kExactEdgeLimit) {
                if (refuse_large_exact)
                    throw InputError("exact q needs at most " +
                                     std::to_string(kExactEdgeLimit) + " incident edges");
                return monte_carlo_q(inc, pi, samples, stream_key);
            }
            return exact_q_all(inc, pi);
        case QMethod::MonteCarlo:
            return monte_carlo_q(inc, pi, samples, stream_key);
        case QMethod::Auto:
        default:
            return auto_q(inc, pi, samples, stream_key);
    }
}

std::string format_double(double x) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", x);
    return buf;
}

} // namespace

double estimate_q(const NibbleState& state, VertexId u, ColorId c, QMethod method,
                  std::size_t mc_samples) {
    if (u >= state.instance->num_vertices()) throw InputError("vertex id out of range");
    if (c >= state.constraints.num_colors()) throw InputError("color id out of range");
    const std::size_t next_round = state.round + 1;
    const double pi = state.params.round(next_round).pi_activation;
    return compute_q(state.constraints, u, c, pi, method, mc_samples,
                     rng::key(state.seed, rng::Channel::QSample, next_round, u, c),
                     /*refuse_large_exact=*/true);
}

RoundTrace run_round(NibbleState& state, const RunConfig& cfg) {
    const std::size_t n = state.instance->num_vertices();
    const std::size_t k = state.params.k();
    const std::size_t num_colors = state.constraints.num_colors();
    const std::size_t i = state.round + 1;
    const RoundParams& rp = state.params.round(i);
    const double beta = state.params.beta();
    const double pi = rp.pi_activation;

    RoundTrace trace;
    trace.round = i;
    trace.p = rp.p;
    trace.p_prime = rp.p_prime;
    trace.t = rp.t;
    trace.t_prime = rp.t_prime;
    trace.zeta = rp.zeta;

    // step 1: activation indicators, one per (uncolored vertex, palette color)
    std::vector<std::vector<std::uint8_t>> active(num_colors);
    for (auto& row : active) row.assign(n, 0);
    parallel_for(0, state.uncolored.size(), cfg.threads, [&](std::size_t idx) {
        VertexId u = state.uncolored[idx];
        for (ColorId c : state.palettes[u])
            active[c][u] =
                rng::unit_at(rng::key(state.seed, rng::Channel::Activation, i, u, c), 0) < pi
                    ? 1
                    : 0;
    });

    // step 2: lost colors. c is lost at u when some incident constraint edge
    // has every other vertex activated.
    std::vector<std::vector<std::uint8_t>> lost(num_colors);
    for (auto& row : lost) row.assign(n, 0);
    parallel_for(0, num_colors, cfg.threads, [&](std::size_t c) {
        const auto& edges = state.constraints.edges(static_cast<ColorId>(c));
        for (const Edge& e : edges) {
            std::size_t cnt = 0;
            VertexId inactive = 0;
            for (VertexId v : e)
                if (active[c][v])
                    ++cnt;
                else
                    inactive = v;
            if (cnt == e.size())
                for (VertexId v : e) lost[c][v] = 1;
            else if (cnt + 1 == e.size())
                lost[c][inactive] = 1;
        }
    });

    // steps 3 and 4: selection with probability min(1, beta / q) and the
    // temporary palettes. Lost colors never enter the temporary palette, so
    // q is only evaluated where it matters.
    std::vector<std::vector<ColorId>> phat(n);
    parallel_for(0, state.uncolored.size(), cfg.threads, [&](std::size_t idx) {
        VertexId u = state.uncolored[idx];
        for (ColorId c : state.palettes[u]) {
            if (lost[c][u]) continue;
            double q = compute_q(state.constraints, u, c, pi, cfg.q_method, cfg.q_samples,
                                 rng::key(state.seed, rng::Channel::QSample, i, u, c),
                                 /*refuse_large_exact=*/false);
            double p_select = q > 0.0 ? std::min(1.0, beta / q) : 1.0;
            if (rng::unit_at(rng::key(state.seed, rng::Channel::Selection, i, u, c), 0) <
                p_select)
                phat[u].push_back(c);
        }
    });

    std::shared_ptr<RoundAudit> audit;
    if (cfg.audit) {
        audit = std::make_shared<RoundAudit>();
        audit->temp_palettes.assign(n, {});
        for (VertexId u : state.uncolored) audit->temp_palettes[u] = phat[u];
        audit->temp_degrees.assign(n, {});
    }

    // step 5: permanently color every vertex with an activated temporary
    // color
    std::vector<ColorId> colored_now(n, kNoColor);
    parallel_for(0, state.uncolored.size(), cfg.threads, [&](std::size_t idx) {
        VertexId u = state.uncolored[idx];
        std::vector<ColorId> candidates;
        for (ColorId c : phat[u])
            if (active[c][u]) candidates.push_back(c);
        if (candidates.empty()) return;
        if (cfg.deterministic_tiebreak) {
            colored_now[u] = candidates.front();
        } else {
            std::uint64_t pick = rng::u64_at(rng::key(state.seed, rng::Channel::Pick, i, u), 0);
            colored_now[u] = candidates[pick % candidates.size()];
        }
    });

    std::vector<VertexId> u_next;
    u_next.reserve(state.uncolored.size());
    std::vector<std::uint8_t> in_next(n, 0);
    for (VertexId u : state.uncolored) {
        if (colored_now[u] != kNoColor) {
            state.partial.assign(u, colored_now[u], static_cast<std::int32_t>(i));
            state.palettes[u].clear();
        } else {
            u_next.push_back(u);
            in_next[u] = 1;
        }
    }

    // step 6: rebuild the families against the new uncolored set. Every old
    // edge leaves a residual S = e minus its vertices colored c this round;
    // the residual survives when it sits inside the new uncolored set and c
    // is on every temporary palette. Size-1 residuals are hard exclusions
    // and knock c off that vertex's temporary palette.
    std::vector<std::vector<std::uint8_t>> phat_mask(num_colors);
    for (auto& row : phat_mask) row.assign(n, 0);
    for (VertexId u : u_next)
        for (ColorId c : phat[u]) phat_mask[c][u] = 1;

    std::vector<std::vector<Edge>> candidates(num_colors);
    std::vector<std::pair<ColorId, VertexId>> knockouts;
    for (ColorId c = 0; c < num_colors; ++c) {
        Edge residual;
        for (const Edge& e : state.constraints.edges(c)) {
            residual.clear();
            bool ok = true;
            for (VertexId v : e) {
                if (colored_now[v] == c) continue;
                if (!in_next[v] || !phat_mask[c][v]) {
                    ok = false;
                    break;
                }
                residual.push_back(v);
            }
            if (!ok) continue;
            if (residual.empty())
                throw std::logic_error("constraint edge became monochromatic in a round");
            if (residual.size() == 1)
                knockouts.push_back({c, residual[0]});
            else
                candidates[c].push_back(residual);
        }
    }
    for (auto [c, v] : knockouts) {
        phat_mask[c][v] = 0;
        auto& pv = phat[v];
        pv.erase(std::remove(pv.begin(), pv.end(), c), pv.end());
    }
    if (!knockouts.empty()) {
        for (ColorId c = 0; c < num_colors; ++c) {
            auto& edges = candidates[c];
            edges.erase(std::remove_if(edges.begin(), edges.end(),
                                       [&](const Edge& e) {
                                           for (VertexId v : e)
                                               if (!phat_mask[c][v]) return true;
                                           return false;
                                       }),
                        edges.end());
        }
    }
    for (ColorId c = 0; c < num_colors; ++c) {
        auto& edges = candidates[c];
        std::sort(edges.begin(), edges.end());
        edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    }

    // temporary c-degrees over the candidate families, weighted with the new
    // palette scale
    const double wb = state.params.weight_base(i);
    std::vector<std::vector<std::uint32_t>> dhat_counts(num_colors);
    for (auto& row : dhat_counts) row.assign(n * (k + 1), 0);
    for (ColorId c = 0; c < num_colors; ++c)
        for (const Edge& e : candidates[c])
            for (VertexId v : e) ++dhat_counts[c][v * (k + 1) + e.size()];
    auto dhat = [&](VertexId u, ColorId c) {
        double sum = 0.0;
        for (std::size_t ell = 2; ell <= k; ++ell) {
            std::uint32_t cnt = dhat_counts[c][u * (k + 1) + ell];
            if (cnt) sum += std::pow(wb, static_cast<double>(k - ell)) * cnt;
        }
        return sum;
    };

    if (audit) {
        // degrees over the colors the filter actually sees (post-knockout)
        for (VertexId u : u_next)
            for (ColorId c : phat[u]) audit->temp_degrees[u].push_back({c, dhat(u, c)});
    }

    // step 7: keep colors with small temporary c-degree, then cut to the
    // ideal palette size dropping the largest degrees first
    const double t_cap = 2.0 * rp.t;
    const std::size_t p_cap =
        rp.p >= 1.0 ? static_cast<std::size_t>(std::floor(rp.p)) : 0;
    std::vector<VertexId> newly_deferred;
    for (VertexId u : u_next) {
        std::vector<std::pair<double, ColorId>> keep;
        for (ColorId c : phat[u]) {
            double d = dhat(u, c);
            if (d <= t_cap) keep.push_back({d, c});
        }
        if (keep.size() > p_cap) {
            std::sort(keep.begin(), keep.end());
            keep.resize(p_cap);
        }
        auto& pal = state.palettes[u];
        pal.clear();
        for (auto& [d, c] : keep) pal.push_back(c);
        std::sort(pal.begin(), pal.end());
        if (pal.empty()) newly_deferred.push_back(u);
    }

    if (!newly_deferred.empty()) {
        std::vector<VertexId> still;
        still.reserve(u_next.size());
        for (VertexId u : u_next)
            if (!state.palettes[u].empty())
                still.push_back(u);
            else
                in_next[u] = 0;
        u_next = std::move(still);
        state.deferred.insert(state.deferred.end(), newly_deferred.begin(),
                              newly_deferred.end());
        std::sort(state.deferred.begin(), state.deferred.end());
        trace.warnings.push_back(std::to_string(newly_deferred.size()) +
                                 " vertices deferred with empty palettes");
    }

    // steps 8 and 9: keep edges whose vertices all retained c, then reduce
    // codegrees per color and prune strict supersets
    std::vector<std::vector<std::uint8_t>> pal_mask(num_colors);
    for (auto& row : pal_mask) row.assign(n, 0);
    for (VertexId u : u_next)
        for (ColorId c : state.palettes[u]) pal_mask[c][u] = 1;

    bool base_valid = wb > 1.0;
    if (!base_valid)
        trace.warnings.push_back("weight base phi1*p_i <= 1, per-color reduction skipped");
    ConstraintFamily next_family(n, num_colors);
    parallel_for(0, num_colors, cfg.threads, [&](std::size_t ci) {
        auto c = static_cast<ColorId>(ci);
        std::vector<Edge> filtered;
        filtered.reserve(candidates[c].size());
        for (Edge& e : candidates[c]) {
            bool ok = true;
            for (VertexId v : e)
                if (!pal_mask[c][v]) {
                    ok = false;
                    break;
                }
            if (ok) filtered.push_back(std::move(e));
        }
        if (base_valid && !filtered.empty()) {
            auto policy = reduction::ReductionPolicy::geometric(k, wb);
            auto rt = reduction::f_reduce(Hypergraph(n, k, std::move(filtered)), policy);
            filtered = std::move(rt.final_edges);
        }
        next_family.set_edges(c, prune_supersets(std::move(filtered)));
    });
    state.constraints = std::move(next_family);
    state.uncolored = std::move(u_next);
    state.round = i;

    // trajectory bookkeeping
    trace.rows.assign(n, VertexTraceRow{});
    const double two_t = 2.0 * rp.t;
    for (VertexId u : state.uncolored) {
        auto& row = trace.rows[u];
        const auto& pal = state.palettes[u];
        row.palette_size = pal.size();
        double sum = 0.0;
        for (ColorId c : pal) sum += state.constraints.weighted_degree(c, u, wb, k);
        row.avg_degree = pal.empty() ? 0.0 : sum / static_cast<double>(pal.size());
        row.lambda =
            pal.empty() ? 0.0
                        : std::min(1.0, static_cast<double>(pal.size()) / rp.p_prime);
        row.balance = row.lambda * row.avg_degree + (1.0 - row.lambda) * two_t;
    }
    for (VertexId u : state.deferred) {
        auto& row = trace.rows[u];
        row.palette_size = 0;
        row.lambda = 0.0;
        row.avg_degree = 0.0;
        row.balance = two_t;
    }
    trace.colored_total = state.partial.colored_count();
    trace.deferred_total = state.deferred.size();
    trace.audit = std::move(audit);
    return trace;
}

RunResult run_to_termination(NibbleState& state, std::size_t max_rounds, const RunConfig& cfg) {
    RunResult result;
    const double threshold = state.params.termination_threshold();
    const double step =
        state.params.beta() * state.params.phi2() / (24.0 * state.params.phi1());
    while (state.params.zeta(state.round) > threshold) {
        if (result.traces.size() >= max_rounds) return result;
        double zeta_prev = state.params.zeta(state.round);
        RoundTrace trace = run_round(state, cfg);
        double expected = zeta_prev - step;
        if (std::abs(trace.zeta - expected) > 1e-9 * std::abs(zeta_prev))
            throw std::logic_error("zeta recurrence violated at round " +
                                   std::to_string(trace.round));
        result.traces.push_back(std::move(trace));
    }
    result.reached_termination = true;
    return result;
}

TrajectoryReport trajectory_check(const std::vector<RoundTrace>& traces, const Params& params) {
    TrajectoryReport report;
    for (const RoundTrace& trace : traces) {
        TrajectoryRound tr{trace.round, 0, 0.0, 0.0};
        const double palette_floor =
            (1.0 - std::pow(1.0 + params.eps(), static_cast<double>(trace.round)) / 2.0) *
            trace.p_prime;
        std::size_t within = 0, large = 0;
        for (const auto& row : trace.rows) {
            bool uncolored_row = row.palette_size > 0 || row.balance > 0.0;
            if (!uncolored_row) continue;
            ++tr.uncolored;
            if (row.balance <= trace.t_prime) ++within;
            if (static_cast<double>(row.palette_size) >= palette_floor) ++large;
        }
        if (tr.uncolored > 0) {
            tr.frac_balance_within = static_cast<double>(within) / tr.uncolored;
            tr.frac_palette_large = static_cast<double>(large) / tr.uncolored;
        }
        report.rounds.push_back(tr);
    }
    return report;
}

json TrajectoryReport::to_json() const {
    json rounds_json = json::array();
    for (const auto& r : rounds)
        rounds_json.push_back({{"round", r.round},
                               {"uncolored", r.uncolored},
                               {"frac_balance_within", r.frac_balance_within},
                               {"frac_palette_large", r.frac_palette_large}});
    json j;
    j["rounds"] = std::move(rounds_json);
    return j;
}

void write_trace_csv(const std::vector<RoundTrace>& traces, const std::string& path) {
    std::ofstream out(path);
    if (!out) throw InputError("cannot write file: " + path);
    out << "round,vertex,palette_size,lambda,Lambda,D\n";
    for (const RoundTrace& trace : traces) {
        for (std::size_t v = 0; v < trace.rows.size(); ++v) {
            const auto& row = trace.rows[v];
            out << trace.round << ',' << v << ',' << row.palette_size << ','
                << format_double(row.lambda) << ',' << format_double(row.avg_degree) << ','
                << format_double(row.balance) << '\n';
        }
    }
}

json globals_to_json(const std::vector<RoundTrace>& traces, const Params& params) {
    json rounds_json = json::array();
    for (const RoundTrace& trace : traces) {
        rounds_json.push_back({{"round", trace.round},
                               {"p", trace.p},
                               {"p_prime", trace.p_prime},
                               {"t", trace.t},
                               {"t_prime", trace.t_prime},
                               {"zeta", trace.zeta},
                               {"colored", trace.colored_total},
                               {"deferred", trace.deferred_total},
                               {"warnings", trace.warnings}});
    }
    json j;
    j["params"] = params.to_json();
    j["rounds"] = std::move(rounds_json);
    return j;
}

json state_to_json(const NibbleState& state) {
    json j;
    j["round"] = state.round;
    j["seed"] = state.seed;
    j["uncolored"] = state.uncolored;
    j["deferred"] = state.deferred;
    j["instance"] = instance_to_json(*state.instance);
    j["lists"] = lists_to_json(*state.lists)["lists"];
    j["params"] = state.params.to_json();

    json palettes = json::object();
    for (VertexId u = 0; u < state.palettes.size(); ++u) {
        if (state.palettes[u].empty()) continue;
        json names = json::array();
        for (ColorId c : state.palettes[u]) names.push_back(state.lists->table.name(c));
        palettes[std::to_string(u)] = std::move(names);
    }
    j["palettes"] = std::move(palettes);

    json families = json::object();
    for (ColorId c = 0; c < state.constraints.num_colors(); ++c) {
        if (state.constraints.edges(c).empty()) continue;
        json edges = json::array();
        for (const Edge& e : state.constraints.edges(c)) edges.push_back(e);
        families[state.lists->table.name(c)] = std::move(edges);
    }
    j["constraints"] = std::move(families);
    j["partial"] = coloring_to_json(state.partial, state.lists->table);
    return j;
}

NibbleState state_from_json(const json& j) {
    auto instance = std::make_shared<Hypergraph>(instance_from_json(j.at("instance"), true));
    json lists_wrap;
    lists_wrap["lists"] = j.at("lists");
    auto lists = std::make_shared<ListAssignment>(
        lists_from_json(lists_wrap, instance->num_vertices()));

    const json& pj = j.at("params");
    RelaxOverrides relax;
    if (pj.at("relaxed").get<bool>()) {
        relax.phi1 = pj.at("phi1").get<double>();
        relax.phi2 = pj.at("phi2").get<double>();
        relax.colors = pj.at("colors").get<std::size_t>();
    }
    Params params(pj.at("k").get<std::size_t>(), pj.at("delta").get<double>(), relax);

    NibbleState state(std::move(params));
    state.round = j.at("round").get<std::size_t>();
    state.seed = j.at("seed").get<std::uint64_t>();
    state.uncolored = j.at("uncolored").get<std::vector<VertexId>>();
    state.deferred = j.at("deferred").get<std::vector<VertexId>>();
    state.partial =
        coloring_from_json(j.at("partial"), lists->table, instance->num_vertices());
    state.palettes.assign(instance->num_vertices(), {});
    for (const auto& [key, value] : j.at("palettes").items()) {
        VertexId u = static_cast<VertexId>(std::stoul(key));
        for (const auto& name : value)
            state.palettes[u].push_back(lists->table.id(name.get<std::string>()));
        std::sort(state.palettes[u].begin(), state.palettes[u].end());
    }
    state.constraints = ConstraintFamily(instance->num_vertices(), lists->table.size());
    for (const auto& [name, edges] : j.at("constraints").items()) {
        ColorId c = lists->table.id(name);
        std::vector<Edge> es;
        for (const auto& je : edges) es.push_back(je.get<Edge>());
        state.constraints.set_edges(c, std::move(es));
    }
    state.instance = std::move(instance);
    state.lists = std::move(lists);
    return state;
}

} // namespace nibble
