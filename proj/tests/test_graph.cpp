#include <doctest.h>

#include <sstream>

#include "support.hpp"
#include "wienerlab/generators.hpp"
#include "wienerlab/graph.hpp"

using namespace wienerlab;

TEST_SUITE("graph_core") {
    TEST_CASE("build_graph canonicalizes edges") {
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        CHECK(p3.vertex_count() == 3);
        CHECK(p3.edge_count() == 2);
        CHECK(p3.has_edge(1, 0));
        CHECK_FALSE(p3.has_edge(0, 2));

        Graph k1 = build_graph(1, {});
        CHECK(k1.edge_count() == 0);

        Graph dup = build_graph(3, {{0, 1}, {1, 0}, {0, 1}, {2, 1}});
        CHECK(dup.edge_count() == 2);
        CHECK(dup.edges() == std::vector<Edge>{{0, 1}, {1, 2}});

        Graph c5 = build_graph(5, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 0}});
        CHECK(c5.edge_count() == 5);
        for (Vertex v = 0; v < 5; ++v) CHECK(c5.degree(v) == 2);
    }

    TEST_CASE("build_graph rejects bad input") {
        CHECK_THROWS_AS(build_graph(3, {{1, 1}}), InvalidEdge);
        CHECK_THROWS_AS(build_graph(3, {{0, 3}}), InvalidVertex);
    }

    TEST_CASE("distances") {
        Graph p3 = build_graph(3, {{0, 1}, {1, 2}});
        CHECK(all_pairs_distances(p3).at(0, 2) == 2);

        Graph two_edges = build_graph(4, {{0, 1}, {2, 3}});
        CHECK(all_pairs_distances(two_edges).at(0, 2) == kUnreachable);
        CHECK_FALSE(is_connected(two_edges));
        CHECK_THROWS_AS(diameter(two_edges), Disconnected);

        Graph c6 = build_graph(6, {{0, 1}, {1, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 0}});
        CHECK(diameter(c6) == 3);
        CHECK(diameter(build_graph(1, {})) == 0);
    }

    TEST_CASE("BFS agrees with Floyd-Warshall on random graphs") {
        auto rng = test_support::rng_for(1);
        for (int trial = 0; trial < 100; ++trial) {
            Graph g = random_connected_graph(1, 64, 0.2, rng);
            const auto ref = oracle::floyd_warshall(test_support::adjacency(g));
            const DistanceMatrix dm = all_pairs_distances(g);
            const std::size_t n = g.vertex_count();
            for (Vertex u = 0; u < n; ++u) {
                for (Vertex v = 0; v < n; ++v) {
                    REQUIRE(dm.at(u, v) == static_cast<Distance>(ref[u][v]));
                    CHECK(dm.at(u, v) == dm.at(v, u));
                }
            }
        }
    }

    TEST_CASE("disconnected graphs carry a witness pair") {
        Graph g = build_graph(5, {{0, 1}, {1, 2}, {3, 4}});
        try {
            require_connected(g);
            FAIL("expected Disconnected");
        } catch (const Disconnected& e) {
            CHECK(e.u() == 0);
            CHECK(e.v() >= 3);
        }
    }

    TEST_CASE("edge-list parsing") {
        std::istringstream in("# triangle\n3 3\n0 1\n1 2 # chord\n2 0\n");
        Graph g = read_edge_list(in);
        CHECK(g.vertex_count() == 3);
        CHECK(g.edge_count() == 3);

        std::ostringstream out;
        write_edge_list(out, g);
        std::istringstream back(out.str());
        CHECK(read_edge_list(back) == g);

        std::istringstream short_list("3 2\n0 1\n");
        CHECK_THROWS_AS(read_edge_list(short_list), ParseError);
        std::istringstream junk("3 1\n0 x\n");
        CHECK_THROWS_AS(read_edge_list(junk), ParseError);
        std::istringstream loop("3 1\n1 1\n");
        CHECK_THROWS_AS(read_edge_list(loop), InvalidEdge);
    }
}
