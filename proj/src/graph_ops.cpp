#include "wienerlab/graph_ops.hpp"

#include <array>
#include <vector>

#include "wienerlab/wiener.hpp"

namespace wienerlab {

namespace {

constexpr std::array<std::pair<std::string_view, GraphOp>, 6> kOpNames = {{
    {"join", GraphOp::Join},
    {"cartesian", GraphOp::Cartesian},
    {"composition", GraphOp::Composition},
    {"disjunction", GraphOp::Disjunction},
    {"symdiff", GraphOp::SymmetricDifference},
    {"tensor", GraphOp::Tensor},
}};

}  // namespace

GraphOp parse_graph_op(std::string_view name) {
    for (auto [text, op] : kOpNames)
        if (text == name) return op;
    if (name == "symmetric-difference") return GraphOp::SymmetricDifference;
    throw ParseError("unknown graph operation '" + std::string(name) + "'");
}

std::string_view to_string(GraphOp op) {
    for (auto [text, o] : kOpNames)
        if (o == op) return text;
    return "?";
}

OpStats OpStats::of(const Graph& g1, const Graph& g2) {
    OpStats s;
    s.n1 = static_cast<Int>(g1.vertex_count());
    s.n2 = static_cast<Int>(g2.vertex_count());
    s.k1 = static_cast<Int>(g1.edge_count());
    s.k2 = static_cast<Int>(g2.edge_count());
    s.kbar1 = binomial(s.n1, 2) - s.k1;
    s.kbar2 = binomial(s.n2, 2) - s.k2;
    return s;
}

namespace {

// Adjacency rule on product vertex pairs, given the factor relations.
// e1/e2: the coordinates are adjacent; same1/same2: the coordinates are equal.
bool product_adjacent(GraphOp op, bool e1, bool same1, bool e2, bool same2) {
    switch (op) {
        case GraphOp::Cartesian: return (e1 && same2) || (e2 && same1);
        case GraphOp::Composition: return e1 || (e2 && same1);
        case GraphOp::Disjunction: return e1 || e2;
        case GraphOp::SymmetricDifference: return e1 != e2;
        case GraphOp::Tensor: return e1 && e2;
        case GraphOp::Join: break;
    }
    return false;
}

}  // namespace

Graph apply_op(GraphOp op, const Graph& g1, const Graph& g2) {
    const std::size_t n1 = g1.vertex_count();
    const std::size_t n2 = g2.vertex_count();
    std::vector<Edge> edges;
    if (op == GraphOp::Join) {
        const auto offset = static_cast<Vertex>(n1);
        for (auto e : g1.edges()) edges.push_back(e);
        for (auto [u, v] : g2.edges()) edges.emplace_back(u + offset, v + offset);
        for (Vertex u = 0; u < n1; ++u)
            for (Vertex v = 0; v < n2; ++v) edges.emplace_back(u, v + offset);
        return build_graph(n1 + n2, edges);
    }

    const std::size_t total = n1 * n2;
    auto index = [n2](Vertex a, Vertex b) { return static_cast<Vertex>(std::size_t{a} * n2 + b); };
    if (op == GraphOp::Cartesian) {
        for (auto [a, b] : g1.edges())
            for (Vertex x = 0; x < n2; ++x) edges.emplace_back(index(a, x), index(b, x));
        for (auto [a, b] : g2.edges())
            for (Vertex x = 0; x < n1; ++x) edges.emplace_back(index(x, a), index(x, b));
        return build_graph(total, edges);
    }
    if (op == GraphOp::Tensor) {
        for (auto [a, b] : g1.edges())
            for (auto [c, d] : g2.edges()) {
                edges.emplace_back(index(a, c), index(b, d));
                edges.emplace_back(index(a, d), index(b, c));
            }
        return build_graph(total, edges);
    }
    // Composition, disjunction and symmetric difference: scan all pairs.
    for (Vertex p = 0; p < total; ++p) {
        const Vertex u1 = static_cast<Vertex>(p / n2), u2 = static_cast<Vertex>(p % n2);
        for (Vertex r = p + 1; r < total; ++r) {
            const Vertex v1 = static_cast<Vertex>(r / n2), v2 = static_cast<Vertex>(r % n2);
            if (product_adjacent(op, g1.has_edge(u1, v1), u1 == v1, g2.has_edge(u2, v2), u2 == v2)) {
                edges.emplace_back(p, r);
            }
        }
    }
    return build_graph(total, edges);
}

Poly closed_form_op_poly(GraphOp op, const OpStats& s, const Poly& w1, const Poly& w2) {
    if (op == GraphOp::Tensor) throw UnsupportedOp("no closed form for the tensor product; use the oracle");
    if (s.n1 < 2 || s.n2 < 2) throw TrivialFactor("closed forms need both factors to have at least two vertices");
    auto times = [](Int a, Int b) { return checked_mul(a, b); };
    auto plus = [](std::initializer_list<Int> terms) {
        Int total = 0;
        for (Int t : terms) total = checked_add(total, t);
        return total;
    };
    switch (op) {
        case GraphOp::Join:
            return Poly{0, plus({s.k1, s.k2, times(s.n1, s.n2)}), plus({s.kbar1, s.kbar2})};
        case GraphOp::Cartesian: {
            Poly ordered1 = add(scale(w1, 2), Poly::constant(s.n1));
            Poly ordered2 = add(scale(w2, 2), Poly::constant(s.n2));
            return mul(ordered1, ordered2);
        }
        case GraphOp::Composition:
            return add(scale(Poly{0, s.k2, s.kbar2}, s.n1), scale(w1, times(s.n2, s.n2)));
        case GraphOp::Disjunction:
            return Poly{0,
                        plus({times(times(s.n1, s.n1), s.k2), times(times(s.n2, s.n2), s.k1),
                              -times(2, times(s.k1, s.k2))}),
                        plus({times(s.n1, s.kbar2), times(s.n2, s.kbar1), times(2, times(s.kbar1, s.kbar2))})};
        case GraphOp::SymmetricDifference:
            return Poly{0,
                        plus({times(s.n1, s.k2), times(s.n2, s.k1), times(2, times(s.k1, s.kbar2)),
                              times(2, times(s.k2, s.kbar1))}),
                        plus({times(s.n1, s.kbar2), times(s.n2, s.kbar1), times(2, times(s.k1, s.k2)),
                              times(2, times(s.kbar1, s.kbar2))})};
        case GraphOp::Tensor:
            break;
    }
    throw UnsupportedOp("unsupported operation");
}

Poly closed_form_op_poly(GraphOp op, const Graph& g1, const Graph& g2) {
    auto stats = OpStats::of(g1, g2);
    if (op == GraphOp::Tensor) throw UnsupportedOp("no closed form for the tensor product; use the oracle");
    if (stats.n1 < 2 || stats.n2 < 2) {
        throw TrivialFactor("closed forms need both factors to have at least two vertices");
    }
    return closed_form_op_poly(op, stats, wiener_polynomial(g1), wiener_polynomial(g2));
}

Poly oracle_op_poly(GraphOp op, const Graph& g1, const Graph& g2) {
    Graph product = apply_op(op, g1, g2);
    if (op == GraphOp::Cartesian) return ordered_wiener(product);
    return wiener_polynomial(product);
}

Poly path_ordered_poly(std::size_t n) {
    // (1+q) n - 2q [n]
    const Int len = static_cast<Int>(n);
    Poly numerator = sub(Poly{len, len}, shift(scale(q_analog(n), 2), 1));
    return divide_by_one_minus_q(numerator);
}

Poly grid_ordered_poly(std::size_t m, std::size_t n) {
    if (m < 1 || n < 1) throw InvalidParameter("grid dimensions must be positive");
    return mul(path_ordered_poly(m), path_ordered_poly(n));
}

}  // namespace wienerlab
