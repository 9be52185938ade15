#include "nibble/params.hpp"

#include <cmath>

namespace nibble {

Params::Params(std::size_t k, double delta, const RelaxOverrides& relax) : k_(k), delta_(delta) {
    if (k < 2) throw InputError("need k >= 2");
    if (!(delta > 1.0)) throw InputError("need delta > 1");

    relaxed_ = relax.phi1.has_value() || relax.phi2.has_value() || relax.colors.has_value();
    phi1_ = relax.phi1.value_or(1.0 / (60.0 * std::exp2(static_cast<double>(k))));
    phi2_ = relax.phi2.value_or(1.0 / std::pow(static_cast<double>(k), 4.0));
    if (!(phi1_ > 0.0)) throw InputError("phi1 must be positive");
    if (!(phi2_ > 0.0 && phi2_ < 1.0)) throw InputError("phi2 must be in (0, 1)");

    theta_ = 1.0 / (4.0 * static_cast<double>(k));
    eps_ = 4.0 * std::pow(delta_, -theta_) *
           std::pow(std::log(delta_), 2.0 * static_cast<double>(k));
    beta_ = 1.0 - phi2_;

    if (relax.colors) {
        colors_ = *relax.colors;
    } else {
        double c = std::ceil(std::pow(delta_ / std::log(delta_),
                                      1.0 / static_cast<double>(k - 1)) /
                             phi1_);
        colors_ = static_cast<std::size_t>(c);
    }
    if (colors_ == 0) throw InputError("palette size C must be positive");
    t0_ = static_cast<double>(k - 1) * delta_;
}

void Params::extend(std::size_t round) const {
    while (rounds_.size() < round) {
        const std::size_t i = rounds_.size() + 1;
        const double p_prev = p(i - 1);
        const double t_prev = t(i - 1);
        RoundParams r;
        r.pi_activation = phi2_ * std::pow(phi1_ * p_prev, static_cast<double>(k_) - 2.0) /
                          (4.0 * t_prev);
        if (r.pi_activation > 1.0) r.pi_activation = 1.0;
        const double drift = beta_ * r.pi_activation * p_prev;
        r.alpha = 1.0 - drift / 5.0;
        r.alpha_prime = 1.0 - drift / 6.0;
        r.p = beta_ * p_prev;
        r.t = r.alpha_prime * std::pow(beta_, static_cast<double>(k_ - 1)) * t_prev;
        r.p_prime = std::pow(1.0 - eps_ / 8.0, static_cast<double>(i)) * r.p;
        r.t_prime = std::pow(1.0 + eps_, static_cast<double>(i)) * r.t;
        r.zeta = r.t / std::pow(phi1_ * r.p, static_cast<double>(k_ - 1));
        rounds_.push_back(r);
    }
}

double Params::weight_base(std::size_t round) const { return phi1_ * p(round); }

double Params::p(std::size_t round) const {
    if (round == 0) return static_cast<double>(colors_);
    extend(round);
    return rounds_[round - 1].p;
}

double Params::t(std::size_t round) const {
    if (round == 0) return t0_;
    extend(round);
    return rounds_[round - 1].t;
}

double Params::zeta(std::size_t round) const {
    if (round == 0)
        return t0_ / std::pow(phi1_ * static_cast<double>(colors_),
                              static_cast<double>(k_ - 1));
    extend(round);
    return rounds_[round - 1].zeta;
}

const RoundParams& Params::round(std::size_t round) const {
    if (round == 0) throw InputError("round params start at round 1");
    extend(round);
    return rounds_[round - 1];
}

double Params::termination_threshold() const { return 1.0 / (8.0 * static_cast<double>(k_)); }

std::size_t Params::predicted_rounds() const {
    const double threshold = termination_threshold();
    std::size_t i = 0;
    while (zeta(i) > threshold) {
        ++i;
        if (i > 2000000) throw std::runtime_error("zeta does not reach the threshold");
    }
    return i;
}

double Params::round_bound() const {
    return 24.0 * static_cast<double>(k_ - 1) * phi1_ * std::log(delta_) /
           ((1.0 - phi2_) * phi2_);
}

nlohmann::json Params::to_json() const {
    nlohmann::json j;
    j["k"] = k_;
    j["delta"] = delta_;
    j["phi1"] = phi1_;
    j["phi2"] = phi2_;
    j["theta"] = theta_;
    j["eps"] = eps_;
    j["beta"] = beta_;
    j["colors"] = colors_;
    j["t0"] = t0_;
    j["relaxed"] = relaxed_;
    return j;
}

} // namespace nibble
