#pragma once

#include <array>
#include <cstdint>
#include <string_view>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace wienerlab {

// histogram[i] = number of ordered pairs (u, v), u != v, with d(u, v) = i.
// One BFS per source, rows discarded as they are consumed, so memory is O(n)
// per worker. Sources are split across threads for large graphs and the
// per-thread counts are summed afterwards, which keeps the result independent
// of scheduling. Throws Disconnected.
std::vector<std::uint64_t> ordered_distance_histogram(const Graph& g);

// W(G;q): [q^i] counts unordered pairs at distance i. W(K_1;q) = 0.
Poly wiener_polynomial(const Graph& g);

// sum over ordered pairs including u = v; equals 2 W(G;q) + n.
Poly ordered_wiener(const Graph& g);

// W_v(G;q) = sum_w q^d(v,w), including the q^0 term for v itself.
Poly relative_wiener(const Graph& g, Vertex v);

Int wiener_index(const Graph& g);

struct PropertyChecks {
    bool degree_equals_diameter = false;
    bool constant_term_zero = false;
    bool linear_term_edges = false;
    bool value_at_one_pairs = false;
    bool derivative_is_index = false;

    bool all() const {
        return degree_equals_diameter && constant_term_zero && linear_term_edges &&
               value_at_one_pairs && derivative_is_index;
    }
};

inline constexpr std::array<std::string_view, 5> kPropertyNames = {
    "degree_equals_diameter", "constant_term_zero", "linear_term_edges",
    "value_at_one_pairs", "derivative_is_index"};

// Reads the named flags in kPropertyNames order.
std::array<bool, 5> as_array(const PropertyChecks& checks);

struct WienerReport {
    Poly wiener_poly;
    Poly ordered_poly;
    Int wiener_index = 0;
    Distance diameter = 0;
    PropertyChecks checks;
};

// Evaluates the five elementary properties. The index check compares W'(1)
// with the sum of pair distances taken straight from the distance rows, not
// from the polynomial. K_1 passes with deg 0 = diameter 0.
PropertyChecks verify_basic_properties(const Graph& g);

WienerReport analyze_graph(const Graph& g);

}  // namespace wienerlab
