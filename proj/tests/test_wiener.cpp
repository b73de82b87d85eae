#include <doctest.h>

#include "support.hpp"
#include "wienerlab/generators.hpp"
#include "wienerlab/wiener.hpp"

using namespace wienerlab;

TEST_SUITE("wiener_engine") {
    TEST_CASE("small graphs by hand") {
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        CHECK(wiener_polynomial(p3) == Poly{0, 2, 1});
        CHECK(wiener_index(p3) == 4);
        CHECK(ordered_wiener(p3) == Poly{3, 4, 2});
        CHECK(relative_wiener(p3, 0) == Poly{1, 1, 1});
        CHECK(relative_wiener(p3, 1) == Poly{1, 2});

        Graph k2 = build_graph(2, {{0, 1}});
        CHECK(ordered_wiener(k2) == Poly{2, 2});

        Graph k1 = build_graph(1, {});
        CHECK(wiener_polynomial(k1).is_zero());
        CHECK(verify_basic_properties(k1).all());
    }

    TEST_CASE("oracle agreement on random graphs") {
        auto rng = test_support::rng_for(2);
        for (int trial = 0; trial < 120; ++trial) {
            Graph g = random_connected_graph(2, 40, 0.3, rng);
            const Poly w = wiener_polynomial(g);
            REQUIRE(w == test_support::oracle_wiener(g));
            const auto checks = verify_basic_properties(g);
            CHECK(checks.all());
            const Int n = static_cast<Int>(g.vertex_count());
            CHECK(ordered_wiener(g) == add(scale(w, 2), Poly::constant(n)));
            Poly total;
            for (Vertex v = 0; v < g.vertex_count(); ++v) total = add(total, relative_wiener(g, v));
            CHECK(total == ordered_wiener(g));
        }
    }

    TEST_CASE("large graphs use the threaded path deterministically") {
        // A path on 3000 vertices: W = C(n+1, 3), coefficients n - i.
        const std::size_t n = 3000;
        std::vector<Edge> edges;
        for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, v + 1);
        Graph path = build_graph(n, edges);
        const Poly w = wiener_polynomial(path);
        CHECK(w.degree() == n - 1);
        for (std::size_t i = 1; i < n; ++i) REQUIRE(w[i] == static_cast<Int>(n - i));
        CHECK(wiener_index(path) == binomial(n + 1, 3));
        CHECK(wiener_polynomial(path) == w);
    }

    TEST_CASE("errors") {
        Graph two = build_graph(4, {{0, 1}, {2, 3}});
        CHECK_THROWS_AS(wiener_polynomial(two), Disconnected);
        CHECK_THROWS_AS(relative_wiener(two, 0), Disconnected);
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        CHECK_THROWS_AS(relative_wiener(p3, 3), InvalidVertex);
    }

    TEST_CASE("report") {
        Graph c4 = build_graph(4, {{0, 1}, {1, 2}, {2, 3}, {3, 0}});
        const auto r = analyze_graph(c4);
        CHECK(r.wiener_poly == Poly{0, 4, 2});
        CHECK(r.wiener_index == 8);
        CHECK(r.diameter == 2);
        CHECK(r.checks.all());
        CHECK(as_array(r.checks) == std::array<bool, 5>{true, true, true, true, true});
    }
}
