#ifndef NIBBLE_PARAMS_HPP
#define NIBBLE_PARAMS_HPP

#include <cstdint>
#include <optional>
#include <vector>

#include <json.hpp>

#include "nibble/hypergraph.hpp"

namespace nibble {

/// Optional overrides for desk-scale runs. The theoretical constants make
/// small instances vacuous (the required palette size usually exceeds n), so
/// relaxed mode accepts user phi1, phi2 and C while keeping every recurrence
/// structurally identical.
struct RelaxOverrides {
    std::optional<double> phi1;
    std::optional<double> phi2;
    std::optional<std::size_t> colors;  // C
};

/// One round's derived values.
struct RoundParams {
    double pi_activation;  // activation probability for this round
    double alpha;          // 1 - beta * pi * p_{i-1} / 5
    double alpha_prime;    // 1 - beta * pi * p_{i-1} / 6
    double p;              // ideal palette size after the round
    double t;              // ideal c-degree after the round
    double p_prime;        // (1 - eps/8)^i * p
    double t_prime;        // (1 + eps)^i * t
    double zeta;           // t / (phi1 * p)^(k-1)
};

/// All run constants and the per-round recurrences
///   pi_i    = phi2 (phi1 p_{i-1})^(k-2) / (4 t_{i-1})
///   p_i     = beta p_{i-1},  t_i = alpha'_i beta^(k-1) t_{i-1}
///   zeta_i  = zeta_{i-1} - beta phi2 / (24 phi1)     (exactly)
/// with termination at the first round where zeta <= 1/(8k).
class Params {
public:
    Params(std::size_t k, double delta, const RelaxOverrides& relax = {});

    std::size_t k() const { return k_; }
    double delta() const { return delta_; }
    double phi1() const { return phi1_; }
    double phi2() const { return phi2_; }
    double theta() const { return theta_; }
    double eps() const { return eps_; }
    double beta() const { return beta_; }
    std::size_t colors() const { return colors_; }  // C = p_0
    double t0() const { return t0_; }
    bool relaxed() const { return relaxed_; }

    /// Weight base phi1 * p_i used by c-degrees and per-color codegree
    /// thresholds.
    double weight_base(std::size_t round) const;

    double p(std::size_t round) const;
    double t(std::size_t round) const;
    double zeta(std::size_t round) const;

    /// round >= 1
    const RoundParams& round(std::size_t round) const;

    double termination_threshold() const;  // 1/(8k)
    /// First i with zeta_i <= 1/(8k).
    std::size_t predicted_rounds() const;
    /// 24 (k-1) phi1 ln(delta) / ((1 - phi2) phi2), the closed-form round
    /// bound.
    double round_bound() const;

    nlohmann::json to_json() const;

private:
    void extend(std::size_t round) const;

    std::size_t k_;
    double delta_;
    double phi1_, phi2_, theta_, eps_, beta_;
    std::size_t colors_;
    double t0_;
    bool relaxed_;
    mutable std::vector<RoundParams> rounds_;  // rounds_[i-1] holds round i
};

} // namespace nibble

#endif
