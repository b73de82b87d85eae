#include <doctest.h>

#include "support.hpp"
#include "wienerlab/families.hpp"
#include "wienerlab/generators.hpp"
#include "wienerlab/graph_ops.hpp"
#include "wienerlab/wiener.hpp"

using namespace wienerlab;

namespace {

oracle::Rule rule_for(GraphOp op) {
    switch (op) {
        case GraphOp::Cartesian: return oracle::Rule::Cartesian;
        case GraphOp::Composition: return oracle::Rule::Composition;
        case GraphOp::Disjunction: return oracle::Rule::Disjunction;
        case GraphOp::SymmetricDifference: return oracle::Rule::SymmetricDifference;
        default: return oracle::Rule::Tensor;
    }
}

oracle::Matrix reference(GraphOp op, const Graph& g1, const Graph& g2) {
    const auto a1 = test_support::adjacency(g1), a2 = test_support::adjacency(g2);
    return op == GraphOp::Join ? oracle::join(a1, a2) : oracle::product(a1, a2, rule_for(op));
}

constexpr GraphOp kAll[] = {GraphOp::Join, GraphOp::Cartesian, GraphOp::Composition,
                           GraphOp::Disjunction, GraphOp::SymmetricDifference, GraphOp::Tensor};

}  // namespace

TEST_SUITE("graph_ops") {
    TEST_CASE("apply_op builds the defined adjacency") {
        auto rng = test_support::rng_for(3);
        for (GraphOp op : kAll) {
            for (int trial = 0; trial < 10; ++trial) {
                Graph g1 = random_connected_graph(1, 6, 0.5, rng);
                Graph g2 = random_connected_graph(1, 6, 0.5, rng);
                CAPTURE(to_string(op));
                CHECK(test_support::adjacency(apply_op(op, g1, g2)) == reference(op, g1, g2));
            }
        }
    }

    TEST_CASE("closed forms against Floyd-Warshall") {
        auto rng = test_support::rng_for(4);
        for (GraphOp op : kAll) {
            if (op == GraphOp::Tensor) continue;
            for (int trial = 0; trial < 25; ++trial) {
                Graph g1 = random_connected_graph(2, 8, 0.4, rng);
                Graph g2 = random_connected_graph(2, 8, 0.4, rng);
                CAPTURE(to_string(op));
                Poly expected = test_support::oracle_wiener(reference(op, g1, g2));
                if (op == GraphOp::Cartesian) {
                    const Int n = static_cast<Int>(g1.vertex_count() * g2.vertex_count());
                    expected = add(scale(expected, 2), Poly::constant(n));
                }
                CHECK(closed_form_op_poly(op, g1, g2) == expected);
                CHECK(oracle_op_poly(op, g1, g2) == expected);
            }
        }
    }

    TEST_CASE("family identities through operations") {
        // K_m + K_n = K_{m+n}; complements of cliques joined give K_{m,n}.
        Graph k3 = construct(FamilySpec::complete(3));
        Graph k4 = construct(FamilySpec::complete(4));
        CHECK(closed_form_op_poly(GraphOp::Join, k3, k4) == closed_form_poly(FamilySpec::complete(7)));
        // Q_n = K_2 x Q_{n-1}
        Graph k2 = construct(FamilySpec::complete(2));
        Graph q3 = construct(FamilySpec::hypercube(3));
        const Poly q4 = closed_form_poly(FamilySpec::hypercube(4));
        CHECK(closed_form_op_poly(GraphOp::Cartesian, k2, q3) == add(scale(q4, 2), Poly::constant(16)));
        // W_n = C_{n-1} + K_1 is covered by the join with a trivial factor, which
        // the formula rejects; the oracle still handles it.
        Graph c5 = construct(FamilySpec::cycle(5));
        Graph k1 = construct(FamilySpec::complete(1));
        CHECK_THROWS_AS(closed_form_op_poly(GraphOp::Join, c5, k1), TrivialFactor);
        CHECK(oracle_op_poly(GraphOp::Join, c5, k1) == closed_form_poly(FamilySpec::wheel(6)));
    }

    TEST_CASE("tensor has no closed form") {
        Graph p3 = construct(FamilySpec::path(3));
        CHECK_THROWS_AS(closed_form_op_poly(GraphOp::Tensor, p3, p3), UnsupportedOp);
        // P_3 x P_3 tensor splits into two components.
        CHECK_THROWS_AS(oracle_op_poly(GraphOp::Tensor, p3, p3), Disconnected);
        Graph k3 = construct(FamilySpec::complete(3));
        CHECK(oracle_op_poly(GraphOp::Tensor, k3, k3) == test_support::oracle_wiener(reference(GraphOp::Tensor, k3, k3)));
    }

    TEST_CASE("path and grid identities") {
        for (std::size_t n = 1; n <= 12; ++n) {
            const Poly w = closed_form_poly(FamilySpec::path(n));
            CHECK(path_ordered_poly(n) == add(scale(w, 2), Poly::constant(static_cast<Int>(n))));
        }
        for (std::size_t m = 1; m <= 5; ++m) {
            for (std::size_t n = 1; n <= 5; ++n) {
                const auto grid = oracle::product(test_support::adjacency(construct(FamilySpec::path(m))),
                                                  test_support::adjacency(construct(FamilySpec::path(n))),
                                                  oracle::Rule::Cartesian);
                const Poly w = test_support::oracle_wiener(grid);
                CHECK(grid_ordered_poly(m, n) == add(scale(w, 2), Poly::constant(static_cast<Int>(m * n))));
            }
        }
    }

    TEST_CASE("parse operation names") {
        CHECK(parse_graph_op("symdiff") == GraphOp::SymmetricDifference);
        CHECK(parse_graph_op("symmetric-difference") == GraphOp::SymmetricDifference);
        for (GraphOp op : kAll) CHECK(parse_graph_op(to_string(op)) == op);
        CHECK_THROWS_AS(parse_graph_op("strong"), ParseError);
    }
}
