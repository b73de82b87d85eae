#include <doctest.h>

#include "support.hpp"
#include "wienerlab/coxeter.hpp"
#include "wienerlab/wiener.hpp"

using namespace wienerlab;
namespace cx = wienerlab::coxeter;

TEST_SUITE("coxeter_bridge") {
    TEST_CASE("Poincare polynomials") {
        CHECK(cx::poincare_poly({cx::Family::A, 2}) == Poly{1, 3, 2});
        CHECK(cx::poincare_poly({cx::Family::A, 3}) == Poly{1, 6, 11, 6});
        CHECK(cx::poincare_poly({cx::Family::I2, 3}) == cx::poincare_poly({cx::Family::A, 2}));
        CHECK(cx::exponents({cx::Family::D, 4}) == std::vector<unsigned>{1, 3, 3, 5});
        CHECK(cx::exponents({cx::Family::B, 3}) == std::vector<unsigned>{1, 3, 5});
        // |W| = prod (e + 1)
        CHECK(cx::poincare_poly({cx::Family::E8, 0}).evaluate(1) == Int{696729600});
        CHECK(cx::poincare_poly({cx::Family::H4, 0}).evaluate(1) == 14400);
        CHECK(cx::poincare_poly({cx::Family::F4, 0}).evaluate(1) == 1152);
    }

    TEST_CASE("type A matches the cycle census") {
        for (unsigned n = 2; n <= 9; ++n) {
            const auto census = oracle::cycle_census(static_cast<int>(n));
            CHECK(cx::poincare_poly({cx::Family::A, n - 1}) == test_support::to_poly(census));
        }
    }

    TEST_CASE("rank errors") {
        CHECK_THROWS_AS(cx::exponents({cx::Family::A, 0}), InvalidRank);
        CHECK_THROWS_AS(cx::exponents({cx::Family::B, 1}), InvalidRank);
        CHECK_THROWS_AS(cx::exponents({cx::Family::D, 3}), InvalidRank);
        CHECK_THROWS_AS(cx::exponents({cx::Family::I2, 1}), InvalidRank);
        CHECK_THROWS_AS(cx::reflection_graph(7), RankTooLarge);
        CHECK_THROWS_AS(cx::reflection_graph(1), InvalidRank);
        CHECK_THROWS_AS(cx::parse_family("G2"), ParseError);
    }

    TEST_CASE("permutation ranking") {
        const auto perms = cx::permutations(4);
        REQUIRE(perms.size() == 24);
        for (std::size_t r = 0; r < perms.size(); ++r) CHECK(cx::permutation_rank(perms[r]) == r);
        CHECK(cx::absolute_length({0, 1, 2}) == 0);
        CHECK(cx::absolute_length({1, 2, 0}) == 2);
        CHECK(cx::absolute_length({1, 0, 3, 2}) == 2);
    }

    TEST_CASE("reflection graphs") {
        CHECK(cx::reflection_graph(2) == build_graph(2, {{0, 1}}));
        Graph s3 = cx::reflection_graph(3);
        CHECK(s3.vertex_count() == 6);
        CHECK(diameter(s3) == 2);
        for (unsigned n = 2; n <= 6; ++n) {
            Graph g = cx::reflection_graph(n);
            const auto perms = cx::permutations(n);
            for (Vertex v = 0; v < g.vertex_count(); ++v) REQUIRE(g.degree(v) == n * (n - 1) / 2);
            const auto dist = bfs_distances(g, 0);
            for (std::size_t r = 0; r < perms.size(); ++r) REQUIRE(dist[r] == cx::absolute_length(perms[r]));
        }
    }

    TEST_CASE("ordered polynomial is |W| times Pi") {
        const auto c3 = cx::check_wgw(3);
        CHECK(c3.ordered == scale(Poly{1, 3, 2}, 6));
        CHECK(cx::check_wgw(2).ordered == Poly{2, 2});
        for (unsigned n = 2; n <= 6; ++n) CHECK(cx::verify_wgw(n));
    }

    TEST_CASE("roots and log-concavity across the tables") {
        for (const auto& spec : cx::catalogue()) {
            CAPTURE(cx::to_string(spec));
            const auto verdict = analyze_sequence(cx::poincare_poly(spec), 0);
            REQUIRE(verdict.neg_rational_roots);
            std::vector<Rational> expected;
            for (unsigned e : cx::exponents(spec)) expected.push_back(Rational::make(-1, e));
            std::sort(expected.begin(), expected.end());
            CHECK(*verdict.neg_rational_roots == expected);
            CHECK(verdict.log_concave);
            CHECK(verdict.unimodal);
        }
    }
}
