#include <doctest.h>

#include <algorithm>

#include "nibble/instances.hpp"
#include "nibble/rng.hpp"
#include "nibble/verify.hpp"

using namespace nibble;

namespace {

Coloring color_all(std::size_t n, const std::vector<ColorId>& colors) {
    Coloring c(n);
    for (VertexId v = 0; v < n; ++v) c.assign(v, colors[v], 0);
    return c;
}

} // namespace

TEST_CASE("verify_proper basics") {
    Hypergraph h(4, 3, {{0, 1, 2}, {2, 3}});

    SUBCASE("rainbow is proper") {
        auto rep = verify::verify_proper(h, color_all(4, {0, 1, 2, 3}));
        CHECK(rep.clean());
        CHECK(!rep.partial);
    }
    SUBCASE("all one color lists every edge") {
        auto rep = verify::verify_proper(h, color_all(4, {7, 7, 7, 7}));
        CHECK(rep.monochromatic_edges.size() == 2);
    }
    SUBCASE("partial colorings check only the fully colored edges") {
        Coloring c(4);
        c.assign(2, 1, 0);
        c.assign(3, 1, 0);
        auto rep = verify::verify_proper(h, c);
        CHECK(rep.partial);
        CHECK(rep.monochromatic_edges == std::vector<std::size_t>{1});
    }
}

TEST_CASE("verify_proper is invariant under color renaming") {
    Hypergraph h = instances::gen_uniform(9, 3, 20, 5);
    rng::Stream s(rng::key(42, rng::Channel::GenUniform));
    for (int trial = 0; trial < 20; ++trial) {
        std::vector<ColorId> colors(9);
        for (auto& c : colors) c = static_cast<ColorId>(s.next_below(3));
        auto base = verify::verify_proper(h, color_all(9, colors));

        // apply a permutation of {0,1,2}
        std::vector<ColorId> perm{1, 2, 0};
        std::vector<ColorId> renamed(9);
        for (std::size_t v = 0; v < 9; ++v) renamed[v] = perm[colors[v]];
        auto rep = verify::verify_proper(h, color_all(9, renamed));
        CHECK(rep.monochromatic_edges == base.monochromatic_edges);
    }
}

TEST_CASE("verify_list flags off-list colors") {
    Hypergraph h(3, 2, {{0, 1}});
    ListAssignment lists = make_shared_lists(3, 2);  // colors c0, c1

    Coloring good(3);
    good.assign(0, lists.table.id("c0"), 0);
    good.assign(1, lists.table.id("c1"), 0);
    good.assign(2, lists.table.id("c0"), 0);
    CHECK(verify::verify_list(h, lists, good).clean());

    Coloring bad = good;
    bad.colors[2] = 9;  // not interned in the lists
    auto rep = verify::verify_list(h, lists, bad);
    CHECK(!rep.clean());
    CHECK(rep.off_list == std::vector<VertexId>{2});
}

TEST_CASE("brute_triangles mirrors the named examples") {
    const VertexId a = 0, b = 1, c = 2, d = 3, e = 4, f = 5;

    auto c3 = verify::brute_triangles(Hypergraph(6, 3, {{a, b, c}, {c, d, e}, {e, f, a}}));
    REQUIRE(c3.size() == 1);
    CHECK(c3.front().valid());

    CHECK(verify::brute_triangles(Hypergraph(5, 3, {{a, b, c}, {b, c, d}, {a, c, e}})).empty());

    CHECK(verify::brute_triangles(Hypergraph(4, 3, {{a, b, c}, {b, c, d}, {a, b, d}})).size() ==
          1);
    CHECK(verify::brute_triangles(Hypergraph(5, 3, {{a, b, c}, {b, c, d}, {a, e, d}})).size() ==
          1);
}

TEST_CASE("every brute witness satisfies the definition") {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
        Hypergraph h = instances::gen_uniform(8, 3, 16, seed);
        for (const auto& wit : verify::brute_triangles(h)) CHECK(wit.valid());
    }
}
