#include <doctest.h>

#include <cmath>

#include "nibble/instances.hpp"
#include "nibble/reduction.hpp"
#include "nibble/verify.hpp"

using namespace nibble;
using namespace nibble::reduction;

namespace {

// every (s, ell) codegree of h is within the policy thresholds, checked by
// brute recount
bool within_policy(const Hypergraph& h, const ReductionPolicy& policy) {
    for (std::size_t ell = 3; ell <= h.rank(); ++ell) {
        for (std::size_t s = 2; s < ell; ++s) {
            // candidate sets are the s-subsets of size-ell edges
            for (const Edge& e : h.edges()) {
                if (e.size() != ell) continue;
                std::vector<std::size_t> pick(s);
                for (std::size_t i = 0; i < s; ++i) pick[i] = i;
                while (true) {
                    Edge sub(s);
                    for (std::size_t i = 0; i < s; ++i) sub[i] = e[pick[i]];
                    if (static_cast<double>(verify::brute_codegree(h, sub, ell)) >
                        policy.threshold(s, ell))
                        return false;
                    std::size_t i = s;
                    bool done = false;
                    while (i > 0) {
                        --i;
                        if (pick[i] != i + e.size() - s) break;
                        if (i == 0) done = true;
                    }
                    if (done) break;
                    ++pick[i];
                    for (std::size_t j = i + 1; j < s; ++j) pick[j] = pick[j - 1] + 1;
                }
            }
        }
    }
    return true;
}

} // namespace

TEST_CASE("policy validation") {
    CHECK_NOTHROW(ReductionPolicy::geometric(4, 2.0));
    CHECK_THROWS_AS(ReductionPolicy::geometric(3, 1.0), InputError);
    // increasing in s is rejected
    CHECK_THROWS_AS(ReductionPolicy(3, {{{2, 3}, 0.5}}), InputError);
    // missing entry
    CHECK_THROWS_AS(ReductionPolicy(4, {{{2, 3}, 2.0}}), InputError);
    auto p = ReductionPolicy::geometric(3, 2.0);
    CHECK(p.threshold(3, 3) == 1.0);
    CHECK(p.threshold(2, 3) == 2.0);
}

TEST_CASE("f_reduce leaves a compliant hypergraph untouched") {
    Hypergraph h(6, 3, {{0, 1, 2}, {3, 4, 5}});  // no pair in two edges
    auto trace = f_reduce(h, ReductionPolicy::geometric(3, 2.0));
    REQUIRE(trace.rounds.size() == 1);  // k-2 rounds
    CHECK(trace.rounds[0].contractions.empty());
    CHECK(trace.final_edges == h.edges());
}

TEST_CASE("f_reduce contracts the worked pair example") {
    Hypergraph h(5, 3, {{1, 2, 3}, {1, 2, 4}});
    auto trace = f_reduce(h, ReductionPolicy::geometric(3, 2.0));  // f(2,3) = 2
    REQUIRE(trace.rounds.size() == 1);
    REQUIRE(trace.rounds[0].contractions.size() == 1);
    const auto& c = trace.rounds[0].contractions[0];
    CHECK(c.set == Edge{1, 2});
    CHECK(c.ell == 3);
    CHECK(c.removed_edges == 2);
    CHECK(trace.final_edges == std::vector<Edge>{{1, 2}});
}

TEST_CASE("f_reduce output satisfies the thresholds, oracle-checked") {
    auto policy = ReductionPolicy::geometric(4, 2.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Hypergraph h = instances::gen_mixed(10, 4, {{3, 20}, {4, 12}}, seed);
        auto trace = f_reduce(h, policy);
        CHECK(within_policy(reduced_hypergraph(h, trace), policy));
    }
}

TEST_CASE("each contraction removed at least the threshold count") {
    auto policy = ReductionPolicy::geometric(4, 2.0);
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Hypergraph h = instances::gen_mixed(9, 4, {{3, 25}, {4, 10}}, seed + 50);
        auto trace = f_reduce(h, policy);
        for (const auto& round : trace.rounds)
            for (const auto& c : round.contractions) {
                CHECK(static_cast<double>(c.removed_edges) >=
                      policy.threshold(round.target_size, c.ell));
                CHECK(c.removed_edges >= 2);
            }
    }
}

TEST_CASE("f_reduce preserves triangle-freeness, oracle-checked") {
    auto policy = ReductionPolicy::geometric(3, 2.0);
    for (std::uint64_t seed = 0; seed < 12; ++seed) {
        Hypergraph raw = instances::gen_uniform(10, 3, 28, seed);
        Hypergraph h = instances::make_triangle_free(raw, seed);
        REQUIRE(verify::brute_triangles(h).empty());
        Hypergraph out = reduced_hypergraph(h, f_reduce(h, policy));
        CHECK(verify::brute_triangles(out).empty());
    }
}

TEST_CASE("proper on reduced implies proper on original, enumerated") {
    auto policy = ReductionPolicy::geometric(3, 2.0);
    for (std::uint64_t seed = 0; seed < 4; ++seed) {
        const std::size_t n = 8;
        Hypergraph h = instances::gen_uniform(n, 3, 22, seed + 7);
        Hypergraph red = reduced_hypergraph(h, f_reduce(h, policy));
        const std::size_t colors = 3;
        std::vector<ColorId> assignment(n, 0);
        // enumerate all colorings in base `colors`
        std::size_t total = 1;
        for (std::size_t i = 0; i < n; ++i) total *= colors;
        for (std::size_t code = 0; code < total; ++code) {
            std::size_t x = code;
            Coloring col(n);
            for (VertexId v = 0; v < n; ++v) {
                col.assign(v, static_cast<ColorId>(x % colors), 0);
                x /= colors;
            }
            CHECK(check_soundness(h, red, col));
        }
    }
}

TEST_CASE("check_soundness is vacuously true for improper-on-reduced colorings") {
    Hypergraph h(5, 3, {{1, 2, 3}, {1, 2, 4}});
    Hypergraph red(5, 3, {{1, 2}});
    Coloring mono(5);
    for (VertexId v = 0; v < 5; ++v) mono.assign(v, 0, 0);
    CHECK(check_soundness(h, red, mono));

    Coloring split(5);
    for (VertexId v = 0; v < 5; ++v) split.assign(v, v == 1 ? 1 : 0, 0);
    CHECK(verify::verify_proper(red, split).clean());
    CHECK(check_soundness(h, red, split));
}

TEST_CASE("solve_lambda closed form at i = 0") {
    auto sol = solve_lambda(37.0, 3, 0);
    CHECK(!sol.clamped_at_bracket_min);
    CHECK(sol.lambda == doctest::Approx(37.0 * 24.0 * 24.0 * 24.0).epsilon(1e-12));
    CHECK(lambda_forward(sol.lambda, 3, 0) == doctest::Approx(37.0).epsilon(1e-12));
}

TEST_CASE("solve_lambda recovers a forward-generated point") {
    // k=3, i=1: degree = e^2 * 2 / 576 corresponds to lambda = e^4
    const double degree = std::exp(2.0) * 2.0 / 576.0;
    auto sol = solve_lambda(degree, 3, 1);
    CHECK(std::abs(sol.lambda - std::exp(4.0)) / std::exp(4.0) <= 1e-6);
}

TEST_CASE("solve_lambda doubling bracket handles huge degrees") {
    auto sol = solve_lambda(1e9, 3, 1);
    CHECK(sol.iterations <= 200);
    double residual = std::abs(lambda_forward(sol.lambda, 3, 1) - 1e9);
    CHECK(residual <= 1e-9 * 1e9);
}

TEST_CASE("solve_lambda degenerate degrees clamp to the bracket minimum") {
    auto sol = solve_lambda(0.0, 3, 1);
    CHECK(sol.clamped_at_bracket_min);
    CHECK(sol.lambda == doctest::Approx(std::exp(1.0)));
}

TEST_CASE("balanced_reduce rejects rank 2") {
    Hypergraph h(4, 2, {{0, 1}});
    CHECK_THROWS_AS(balanced_reduce(h), InputError);
}

TEST_CASE("balanced_reduce leaves sparse inputs untouched") {
    Hypergraph h = instances::gen_uniform(12, 3, 25, 1);
    auto res = balanced_reduce(h);
    CHECK(res.h.edges() == h.edges());
    // delta equals the fitted Lambda_3 since nothing was contracted
    CHECK(res.delta == doctest::Approx(res.lambdas[3]));
}

TEST_CASE("balanced_reduce contracts one overloaded pair") {
    // 1100 edges through the pair {0,1}: the pair's 3-degree crosses the
    // round-1 threshold sqrt(Lambda_3 / ln Lambda_3)
    std::vector<Edge> edges;
    for (VertexId x = 2; x < 1102; ++x) edges.push_back({0, 1, x});
    Hypergraph h(1102, 3, edges);

    double lambda3 = solve_lambda(1100.0, 3, 0).lambda;
    REQUIRE(1100.0 >= std::sqrt(lambda3 / std::log(lambda3)));  // threshold crossed

    auto res = balanced_reduce(h);
    CHECK(res.h.edges() == std::vector<Edge>{{0, 1}});
    REQUIRE(res.trace.rounds.size() == 1);
    CHECK(res.trace.rounds[0].contractions.size() == 1);
    CHECK(res.trace.rounds[0].contractions[0].removed_edges == 1100);
    // observed max 2-degree after the round is 1
    CHECK(lambda_forward(res.lambdas[2], 3, 1) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(res.delta == doctest::Approx(std::max(res.lambdas[2], res.lambdas[3])));
}

TEST_CASE("balanced_reduce output meets its own codegree thresholds") {
    for (std::uint64_t seed = 0; seed < 6; ++seed) {
        Hypergraph h = instances::gen_uniform(11, 3, 30, seed + 100);
        auto res = balanced_reduce(h);
        double lam = res.lambdas[3];
        double thr = std::pow(lam / std::log(lam), 0.5);
        for (VertexId x = 0; x < 11; ++x)
            for (VertexId y = x + 1; y < 11; ++y)
                CHECK(static_cast<double>(verify::brute_codegree(res.h, {x, y}, 3)) <= thr);
    }
}

TEST_CASE("trace serializes") {
    Hypergraph h(5, 3, {{1, 2, 3}, {1, 2, 4}});
    auto trace = f_reduce(h, ReductionPolicy::geometric(3, 2.0));
    auto j = trace.to_json();
    CHECK(j.at("rounds").size() == 1);
    CHECK(j.at("rounds")[0].at("contractions").size() == 1);
    CHECK(j.at("final_edges").size() == 1);
}
