#pragma once

#include <string>
#include <string_view>

#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace wienerlab {

enum class GraphOp {
    Join,
    Cartesian,
    Composition,
    Disjunction,
    SymmetricDifference,
    Tensor,
};

GraphOp parse_graph_op(std::string_view name);
std::string_view to_string(GraphOp op);

// Vertex counts, edge counts and non-edge counts (C(n_i,2) - k_i) of the
// two factors.
struct OpStats {
    Int n1 = 0, n2 = 0;
    Int k1 = 0, k2 = 0;
    Int kbar1 = 0, kbar2 = 0;

    static OpStats of(const Graph& g1, const Graph& g2);
};

// Join places G1 on 0..n1-1 and G2 on n1..n1+n2-1. Every other operation uses
// V1 x V2 with (u1, u2) stored at index u1 * n2 + u2.
Graph apply_op(GraphOp op, const Graph& g1, const Graph& g2);

// Closed form of the operation result in terms of the factors' statistics and
// Wiener polynomials w1 = W(G1;q), w2 = W(G2;q).
//
// Join, Composition, Disjunction and SymmetricDifference return the unordered
// W of the result. Cartesian returns the ordered polynomial
// (2 w1 + n1)(2 w2 + n2). Tensor has no closed form and throws UnsupportedOp.
// Both factors must be nontrivial (n_i >= 2), else TrivialFactor.
Poly closed_form_op_poly(GraphOp op, const OpStats& stats, const Poly& w1, const Poly& w2);

// Same, computing stats and factor polynomials from the graphs (which must be
// connected).
Poly closed_form_op_poly(GraphOp op, const Graph& g1, const Graph& g2);

// The oracle counterpart: ordered_wiener for Cartesian, wiener_polynomial for
// the rest, both computed by BFS on apply_op's output.
Poly oracle_op_poly(GraphOp op, const Graph& g1, const Graph& g2);

// Ordered Wiener polynomial of the grid P_m x P_n via the path identity
// (1-q) W̄(P_n;q) = (1+q) n - 2q [n].
Poly grid_ordered_poly(std::size_t m, std::size_t n);

// W̄(P_n;q), obtained by dividing (1+q) n - 2q[n] by (1 - q).
Poly path_ordered_poly(std::size_t n);

}  // namespace wienerlab
