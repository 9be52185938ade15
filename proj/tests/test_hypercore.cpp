#include <doctest.h>

#include <algorithm>

#include "nibble/hypergraph.hpp"
#include "nibble/instances.hpp"
#include "nibble/verify.hpp"

using namespace nibble;

namespace {

Hypergraph make(std::size_t n, std::size_t rank, std::vector<Edge> edges) {
    return Hypergraph(n, rank, std::move(edges));
}

// a..f = 0..5
const VertexId a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;

} // namespace

TEST_CASE("construction normalizes and validates") {
    Hypergraph h = make(5, 3, {{2, 0, 1}, {0, 1, 2}, {3, 4}});
    CHECK(h.num_edges() == 2);  // duplicate collapsed
    CHECK(h.edges()[0] == Edge{0, 1, 2});
    CHECK(h.contains_edge({3, 4}));

    CHECK_THROWS_AS(make(5, 3, {{1, 1}}), InputError);        // repeated vertex
    CHECK_THROWS_AS(make(5, 3, {{0, 1, 2, 3}}), InputError);  // above rank
    CHECK_THROWS_AS(make(5, 3, {{4, 5}}), InputError);        // vertex out of range
    CHECK_THROWS_AS(make(5, 3, {{2}}), InputError);           // too small
}

TEST_CASE("degree basics") {
    Hypergraph empty = make(4, 3, {});
    for (VertexId v = 0; v < 4; ++v)
        for (std::size_t ell = 2; ell <= 3; ++ell) CHECK(empty.degree(v, ell) == 0);

    Hypergraph h = make(5, 3, {{1, 2, 3}, {1, 2, 4}});
    CHECK(h.degree(1, 3) == 2);
    CHECK(h.degree(1, 2) == 0);
    CHECK(h.degree(3, 3) == 1);
    CHECK_THROWS_AS(h.degree(9, 3), InputError);
    CHECK_THROWS_AS(h.degree(1, 4), InputError);
}

TEST_CASE("degree matches brute recount on random instances") {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
        Hypergraph h = instances::gen_uniform(10, 3, 40, seed);
        for (VertexId v = 0; v < 10; ++v)
            for (std::size_t ell = 2; ell <= 3; ++ell)
                CHECK(h.degree(v, ell) == verify::brute_degree(h, v, ell));
    }
}

TEST_CASE("codegree basics and oracle agreement") {
    Hypergraph h = make(5, 3, {{1, 2, 3}, {1, 2, 4}});
    Edge s12{1, 2};
    CHECK(h.codegree(s12, 3) == 2);
    CHECK_THROWS_AS(h.codegree(Edge{1, 2, 3}, 3), InputError);  // |S| >= ell

    for (std::uint64_t seed = 10; seed < 14; ++seed) {
        Hypergraph r = instances::gen_uniform(9, 4, 25, seed);
        for (VertexId x = 0; x < 9; ++x)
            for (VertexId y = x + 1; y < 9; ++y) {
                Edge s{x, y};
                for (std::size_t ell = 3; ell <= 4; ++ell)
                    CHECK(r.codegree(s, ell) == verify::brute_codegree(r, s, ell));
            }
    }
}

TEST_CASE("codegree is monotone under edge deletion and ignores disjoint edges") {
    Hypergraph h = instances::gen_uniform(8, 3, 20, 99);
    std::vector<Edge> edges = h.edges();
    std::vector<Edge> fewer(edges.begin(), edges.end() - 4);
    Hypergraph h2 = make(8, 3, fewer);
    for (VertexId x = 0; x < 8; ++x)
        for (VertexId y = x + 1; y < 8; ++y) {
            Edge s{x, y};
            CHECK(h2.codegree(s, 3) <= h.codegree(s, 3));
        }

    // an edge on fresh vertices changes no codegree inside the old set
    auto extended = h.edges();
    extended.push_back({8, 9, 10});
    Hypergraph grown = make(11, 3, extended);
    for (VertexId x = 0; x < 8; ++x)
        for (VertexId y = x + 1; y < 8; ++y) {
            Edge s{x, y};
            CHECK(grown.codegree(s, 3) == h.codegree(s, 3));
        }
}

TEST_CASE("degree profile") {
    SUBCASE("empty") {
        auto p = make(4, 3, {}).degree_profile();
        CHECK(p.max_degree.empty());
        CHECK(p.max_codegree.empty());
    }
    SUBCASE("loose triangle") {
        Hypergraph h = make(6, 3, {{a, b, c}, {c, d, e}, {e, f, a}});
        auto p = h.degree_profile();
        CHECK(p.max_degree.at(3) == 2);
        CHECK(p.max_codegree.at({2, 3}) == 1);
    }
    SUBCASE("matches per-query recount on a random instance") {
        Hypergraph h = instances::gen_mixed(10, 4, {{2, 6}, {3, 12}, {4, 8}}, 7);
        auto p = h.degree_profile();
        for (const auto& [ell, delta] : p.max_degree) {
            std::size_t best = 0;
            for (VertexId v = 0; v < 10; ++v)
                best = std::max(best, verify::brute_degree(h, v, ell));
            CHECK(delta == best);
        }
        for (const auto& [key, bound] : p.max_codegree) {
            auto [s, ell] = key;
            std::size_t best = 0;
            if (s == 2) {
                for (VertexId x = 0; x < 10; ++x)
                    for (VertexId y = x + 1; y < 10; ++y)
                        best = std::max(best, verify::brute_codegree(h, {x, y}, ell));
            } else {
                for (VertexId x = 0; x < 10; ++x)
                    for (VertexId y = x + 1; y < 10; ++y)
                        for (VertexId z = y + 1; z < 10; ++z)
                            best = std::max(best, verify::brute_codegree(h, {x, y, z}, ell));
            }
            CHECK(bound == best);
        }
    }
}

TEST_CASE("triangle detection on the named 3-uniform families") {
    SUBCASE("loose triangle C3") {
        Hypergraph h = make(6, 3, {{a, b, c}, {c, d, e}, {e, f, a}});
        auto wit = h.find_triangle();
        REQUIRE(wit.has_value());
        CHECK(wit->valid());
    }
    SUBCASE("Berge triangle that is not a triangle") {
        Hypergraph h = make(5, 3, {{a, b, c}, {b, c, d}, {a, c, e}});
        CHECK(!h.find_triangle().has_value());
    }
    SUBCASE("K4 minus") {
        Hypergraph h = make(4, 3, {{a, b, c}, {b, c, d}, {a, b, d}});
        auto wit = h.find_triangle();
        REQUIRE(wit.has_value());
        CHECK(wit->valid());
    }
    SUBCASE("F5") {
        Hypergraph h = make(5, 3, {{a, b, c}, {b, c, d}, {a, e, d}});
        auto wit = h.find_triangle();
        REQUIRE(wit.has_value());
        CHECK(wit->valid());
    }
}

TEST_CASE("rank-2 triangles coincide with graph triangles") {
    Hypergraph tri = make(3, 2, {{0, 1}, {1, 2}, {0, 2}});
    auto wit = tri.find_triangle();
    REQUIRE(wit.has_value());
    CHECK(wit->valid());

    Hypergraph path = make(4, 2, {{0, 1}, {1, 2}, {2, 3}});
    CHECK(!path.find_triangle().has_value());
}

TEST_CASE("find_triangle agrees with exhaustive enumeration on a random corpus") {
    for (std::uint64_t seed = 0; seed < 40; ++seed) {
        std::size_t n = 6 + seed % 7;  // up to 12
        Hypergraph h = instances::gen_mixed(
            n, 4, {{2, 4 + seed % 4}, {3, 8 + seed % 6}, {4, 4 + seed % 3}}, seed);
        bool fast = h.find_triangle().has_value();
        bool brute = !verify::brute_triangles(h).empty();
        CAPTURE(seed);
        CHECK(fast == brute);
    }
}

TEST_CASE("find_triangle is deterministic") {
    Hypergraph h = instances::gen_uniform(10, 3, 25, 3);
    auto w1 = h.find_triangle();
    auto w2 = h.find_triangle();
    REQUIRE(w1.has_value());
    REQUIRE(w2.has_value());
    CHECK(w1->e == w2->e);
    CHECK(w1->u == w2->u);
    CHECK(w1->w == w2->w);
}

TEST_CASE("neighborhood") {
    SUBCASE("isolated vertex") {
        Hypergraph h = make(4, 3, {{1, 2, 3}});
        CHECK(h.neighborhood(0, 1).empty());
        CHECK(h.neighborhood(0, 2).empty());
    }
    SUBCASE("single edge") {
        Hypergraph h = make(4, 3, {{1, 2, 3}});
        CHECK(h.neighborhood(1, 1) == std::vector<VertexId>{2, 3});
    }
    SUBCASE("depth 2 on a path of two edges re-includes the start") {
        Hypergraph h = make(6, 3, {{1, 2, 3}, {3, 4, 5}});
        CHECK(h.neighborhood(1, 1) == std::vector<VertexId>{2, 3});
        // union of N(2) and N(3) = {1,3} + {1,2,4,5}
        CHECK(h.neighborhood(1, 2) == std::vector<VertexId>{1, 2, 3, 4, 5});
    }
    SUBCASE("depth validation") {
        Hypergraph h = make(4, 3, {{1, 2, 3}});
        CHECK_THROWS_AS(h.neighborhood(1, 3), InputError);
    }
}
