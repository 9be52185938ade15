#ifndef NIBBLE_REDUCTION_HPP
#define NIBBLE_REDUCTION_HPP

#include <cstdint>
#include <map>
#include <vector>

#include <json.hpp>

#include "nibble/coloring.hpp"
#include "nibble/hypergraph.hpp"

namespace nibble::reduction {

/// Threshold table f(s, ell) for 2 <= s < ell <= k, with the implied
/// diagonal f(ell, ell) = 1. Valid tables have every entry > 1 and are
/// strictly decreasing in s for fixed ell.
class ReductionPolicy {
public:
    ReductionPolicy(std::size_t k, std::map<std::pair<std::size_t, std::size_t>, double> table);

    /// f(s, ell) = base^(ell - s). Requires base > 1.
    static ReductionPolicy geometric(std::size_t k, double base);

    std::size_t k() const { return k_; }
    double threshold(std::size_t s, std::size_t ell) const;

    static ReductionPolicy from_json(const nlohmann::json& j);
    nlohmann::json to_json() const;

private:
    std::size_t k_;
    std::map<std::pair<std::size_t, std::size_t>, double> table_;
};

struct Contraction {
    Edge set;
    std::size_t ell;
    std::size_t removed_edges;  // size-ell superedges present when the set qualified
};

struct ReductionRound {
    std::size_t round;        // 1-based
    std::size_t target_size;  // k - round
    std::vector<Contraction> contractions;
};

struct ReductionTrace {
    std::vector<ReductionRound> rounds;  // exactly k-2 rounds
    std::vector<Edge> final_edges;

    nlohmann::json to_json() const;
};

/// Runs k-2 contraction rounds, round i targeting vertex sets of size k-i.
/// Qualifying sets are collected against a snapshot of the previous round's
/// hypergraph, then all removals and additions are applied at once.
/// The result satisfies delta_{s,ell} <= f(s,ell) for all 2 <= s < ell <= k,
/// any proper coloring of it is proper for the input, and triangle-freeness
/// is preserved.
ReductionTrace f_reduce(const Hypergraph& h, const ReductionPolicy& policy);

inline Hypergraph reduced_hypergraph(const Hypergraph& h, const ReductionTrace& trace) {
    return Hypergraph(h.num_vertices(), h.rank(), trace.final_edges);
}

/// True iff (coloring proper on reduced) implies (coloring proper on
/// original). Used as a sampled test predicate.
bool check_soundness(const Hypergraph& original, const Hypergraph& reduced,
                     const Coloring& coloring);

struct LambdaSolution {
    double lambda;
    std::size_t iterations;
    bool clamped_at_bracket_min;  // observed degree too small to invert
};

/// Forward map inverted by solve_lambda:
/// degree = lambda^(1 - i/(k-1)) * ln(lambda)^(i/(k-1)) / (k 2^k)^(k-i).
double lambda_forward(double lambda, std::size_t k, std::size_t i);

/// Inverts lambda_forward by monotone bisection on [e, inf) with a doubling
/// upper bracket; the map is strictly increasing there. Residual is at most
/// 1e-9 relative. observed_degree = 0 returns e, flagged.
LambdaSolution solve_lambda(double observed_degree, std::size_t k, std::size_t i);

struct BalancedResult {
    Hypergraph h;
    double delta;                 // max over rounds of the fitted Lambda
    std::vector<double> lambdas;  // lambdas[s] for s = 2..k (index by set size)
    ReductionTrace trace;
};

/// Adaptive reduction: Lambda_k = (k 2^k)^k Delta_k; round i contracts
/// (k-i)-sets over thresholds (Lambda_ell / ln Lambda_ell)^((ell-(k-i))/(k-1))
/// and then fits Lambda_{k-i} to the observed max (k-i)-degree.
BalancedResult balanced_reduce(const Hypergraph& h);

} // namespace nibble::reduction

#endif
