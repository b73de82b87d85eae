#include <doctest.h>

#include <set>

#include "support.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/tree_identities.hpp"
#include "wienerlab/wiener.hpp"

using namespace wienerlab;

namespace {

// Labeled paths on n >= 2 vertices: n!/2.
std::uint64_t expected_paths(std::size_t n) {
    std::uint64_t f = 1;
    for (std::size_t i = 2; i <= n; ++i) f *= i;
    return f / 2;
}

}  // namespace

TEST_SUITE("tree_identities") {
    TEST_CASE("star and path by hand") {
        Graph star = build_graph(5, {{0, 1}, {0, 2}, {0, 3}, {0, 4}});
        CHECK(trees::wiener_edge_cut(star) == 16);
        CHECK(trees::wiener_gutman(star) == 16);
        Graph path = construct(FamilySpec::path(6));
        CHECK(trees::wiener_edge_cut(path) == 35);
        CHECK(trees::wiener_gutman(path) == 35);
        Graph single = build_graph(1, {});
        CHECK(trees::wiener_edge_cut(single) == 0);
        CHECK(trees::wiener_gutman(single) == 0);
    }

    TEST_CASE("cut counts") {
        Graph star = build_graph(4, {{0, 1}, {0, 2}, {0, 3}});
        const auto c = trees::cut_counts(star);
        for (auto [a, b] : c.edge_sides) {
            CHECK(a == 3);
            CHECK(b == 1);
        }
        auto sides = c.vertex_sides[0];
        std::sort(sides.begin(), sides.end());
        CHECK(sides == std::vector<std::uint64_t>{1, 1, 1});
        CHECK(c.vertex_sides[2] == std::vector<std::uint64_t>{3});
    }

    TEST_CASE("random trees agree with Floyd-Warshall") {
        auto rng = test_support::rng_for(5);
        for (int trial = 0; trial < 150; ++trial) {
            std::uniform_int_distribution<std::size_t> size(1, 70);
            Graph t = trees::random_tree(size(rng), rng);
            const long long ref = oracle::wiener_index(static_cast<int>(t.vertex_count()), test_support::raw_edges(t));
            CHECK(trees::wiener_edge_cut(t) == ref);
            CHECK(trees::wiener_gutman(t) == ref);
        }
    }

    TEST_CASE("sequence decoding") {
        // 0 and 1 hang off 3, 3 off 4, 2 off 4.
        const std::vector<Vertex> seq{3, 3, 4};
        const auto parent = trees::decode_sequence(seq, 5);
        CHECK(parent == std::vector<Vertex>{3, 3, 4, 4, 4});
        Graph t = trees::tree_from_sequence(seq, 5);
        CHECK_NOTHROW(trees::require_tree(t));

        // Every sequence of length n-2 decodes to a distinct tree.
        std::set<std::vector<Edge>> seen;
        for (Vertex a = 0; a < 5; ++a)
            for (Vertex b = 0; b < 5; ++b)
                for (Vertex c = 0; c < 5; ++c) {
                    const std::vector<Vertex> s{a, b, c};
                    seen.insert(trees::tree_from_sequence(s, 5).edges());
                }
        CHECK(seen.size() == 125);

        CHECK_THROWS_AS(trees::decode_sequence(std::vector<Vertex>{7}, 3), InvalidVertex);
        CHECK_THROWS_AS(trees::decode_sequence(std::vector<Vertex>{0, 1}, 3), InvalidParameter);
    }

    TEST_CASE("path maximality by exhaustive enumeration") {
        for (std::size_t n = 2; n <= 7; ++n) {
            const auto r = trees::path_is_max(n);
            CAPTURE(n);
            CHECK(r.holds());
            std::uint64_t expected = 1;
            for (std::size_t i = 0; i + 2 < n; ++i) expected *= n;
            CHECK(r.trees == expected);
            CHECK(r.max_index == binomial(static_cast<Int>(n) + 1, 3));
            CHECK(r.maximizers == expected_paths(n));
        }
        CHECK_THROWS_AS(trees::path_is_max(10), InvalidParameter);
    }

    TEST_CASE("non-trees are rejected") {
        CHECK_THROWS_AS(trees::wiener_edge_cut(construct(FamilySpec::cycle(4))), NotATree);
        CHECK_THROWS_AS(trees::wiener_gutman(build_graph(4, {{0, 1}, {1, 2}, {0, 2}})), NotATree);
        CHECK_THROWS_AS(trees::wiener_edge_cut(build_graph(4, {{0, 1}, {1, 2}})), NotATree);
    }
}
