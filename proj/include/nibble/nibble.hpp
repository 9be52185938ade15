#ifndef NIBBLE_NIBBLE_HPP
#define NIBBLE_NIBBLE_HPP

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include <json.hpp>

#include "nibble/coloring.hpp"
#include "nibble/constraint_family.hpp"
#include "nibble/hypergraph.hpp"
#include "nibble/params.hpp"

namespace nibble {

enum class QMethod {
    Exact,       // inclusion-exclusion over the incident edge set (<= 20 edges)
    MonteCarlo,  // empirical frequency over independent activation samples
    Auto,        // exact per independent component, Monte Carlo when a
                 // component is too large
};

struct RunConfig {
    QMethod q_method = QMethod::Auto;
    std::size_t q_samples = 10000;
    bool deterministic_tiebreak = false;  // smallest color id instead of a random pick
    std::size_t threads = 1;
    bool audit = false;  // capture temporary palettes and temporary c-degrees
};

/// Extra per-round data for tests and calibration, captured only on request.
struct RoundAudit {
    // temporary palette of each vertex: selected colors minus lost colors,
    // as defined, before residual knockouts
    std::vector<std::vector<ColorId>> temp_palettes;
    // temporary c-degree per (vertex, color) as seen by the filtering step
    std::vector<std::vector<std::pair<ColorId, double>>> temp_degrees;
};

struct VertexTraceRow {
    std::size_t palette_size = 0;
    double lambda = 0.0;    // min(1, |P_i(u)| / p'_i), 0 for empty palettes
    double avg_degree = 0.0;  // average weighted c-degree over the palette
    double balance = 0.0;   // lambda * avg + (1 - lambda) * 2 t_i
};

struct RoundTrace {
    std::size_t round = 0;
    std::vector<VertexTraceRow> rows;  // one row per vertex; colored rows are zero
    double p = 0, p_prime = 0, t = 0, t_prime = 0, zeta = 0;
    std::size_t colored_total = 0;   // cumulative permanently colored
    std::size_t deferred_total = 0;  // cumulative empty-palette vertices
    std::vector<std::string> warnings;
    std::shared_ptr<RoundAudit> audit;  // null unless RunConfig::audit
};

struct NibbleState {
    explicit NibbleState(Params p) : params(std::move(p)) {}

    std::size_t round = 0;
    std::vector<VertexId> uncolored;             // sorted
    std::vector<std::vector<ColorId>> palettes;  // per vertex, sorted; empty once colored
    ConstraintFamily constraints;
    Coloring partial;
    std::vector<VertexId> deferred;  // palette emptied, waiting for completion
    Params params;
    std::uint64_t seed = 0;
    std::shared_ptr<const Hypergraph> instance;
    std::shared_ptr<const ListAssignment> lists;
};

/// Round-0 state: full uncolored set, palettes cut to the first C list
/// colors, initial constraint families, c-degrees implied by them.
/// Lists smaller than C are rejected unless params are relaxed.
NibbleState init_state(std::shared_ptr<const Hypergraph> h,
                       std::shared_ptr<const ListAssignment> lists, Params params,
                       std::uint64_t seed);

/// Weighted c-degree of (u, c) against the current families and round.
double weighted_cdegree(const NibbleState& state, VertexId u, ColorId c);

/// Degree scale for relaxed runs when the caller does not fix one:
/// max(3, max initial weighted c-degree / (k-1)), which makes the round-0
/// degree bound hold on the given instance.
double derive_relaxed_delta(const Hypergraph& h, const ListAssignment& lists, double phi1,
                            std::size_t colors);

/// Probability that color c is not lost at u in the coming round, i.e. that
/// no incident constraint edge has all of its other vertices activated.
/// Exact refuses more than 20 incident edges.
double estimate_q(const NibbleState& state, VertexId u, ColorId c, QMethod method,
                  std::size_t mc_samples = 10000);

/// One full round: activation, loss, selection, temporary palettes,
/// permanent coloring, constraint rebuild, degree filtering, per-color
/// reduction, superset pruning. Mutates the state and returns the trace.
RoundTrace run_round(NibbleState& state, const RunConfig& cfg = {});

struct RunResult {
    std::vector<RoundTrace> traces;
    bool reached_termination = false;  // false when max_rounds hit first
};

/// Runs rounds until zeta_i <= 1/(8k) or max_rounds, checking the zeta
/// recurrence each round.
RunResult run_to_termination(NibbleState& state, std::size_t max_rounds,
                             const RunConfig& cfg = {});

struct TrajectoryRound {
    std::size_t round;
    std::size_t uncolored;
    double frac_balance_within;  // fraction with balance <= t'_i
    double frac_palette_large;   // fraction with |P| >= (1 - (1+eps)^i / 2) p'_i
};

struct TrajectoryReport {
    std::vector<TrajectoryRound> rounds;
    nlohmann::json to_json() const;
};

/// Observational report over recorded traces.
TrajectoryReport trajectory_check(const std::vector<RoundTrace>& traces, const Params& params);

/// CSV with one row per (round, vertex):
/// round,vertex,palette_size,lambda,Lambda,D
void write_trace_csv(const std::vector<RoundTrace>& traces, const std::string& path);

/// Per-round globals plus a parameter echo.
nlohmann::json globals_to_json(const std::vector<RoundTrace>& traces, const Params& params);

// state snapshot, self-contained (includes instance and lists)
nlohmann::json state_to_json(const NibbleState& state);
NibbleState state_from_json(const nlohmann::json& j);

} // namespace nibble

#endif
