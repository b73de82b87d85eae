#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace wienerlab {

// Exact search is exponential; graphs are capped at this many vertices.
inline constexpr std::size_t kMaxContainerVertices = 14;

// A set of u-v paths that pairwise meet only at u and v.
struct Container {
    Vertex u = 0;
    Vertex v = 0;
    std::vector<std::vector<Vertex>> paths;  // each runs u ... v

    std::size_t width() const { return paths.size(); }
    // Length (edge count) of the longest path; 0 for an empty container.
    std::size_t length() const;
};

// Maximum number of internally vertex-disjoint u-v paths (a direct edge
// counts as one), by unit-capacity max flow on the vertex-split graph.
unsigned local_connectivity(const Graph& g, Vertex u, Vertex v);

// A width-w container whose paths all have length <= max_length, if one
// exists.
std::optional<Container> find_container(const Graph& g, Vertex u, Vertex v, unsigned width,
                                        std::size_t max_length);

// d_w(u, v): the least container length over width-w containers, found by
// iterative deepening on the length bound. nullopt when fewer than w
// internally disjoint paths exist. Throws TooLarge (n > 14), InvalidWidth
// (w = 0), InvalidVertex, InvalidParameter (u = v), Disconnected.
std::optional<std::size_t> w_distance(const Graph& g, Vertex u, Vertex v, unsigned width);

struct WWienerResult {
    Poly poly;
    std::size_t infeasible_pairs = 0;
};

// sum over unordered pairs {u, v}, u != v, of q^{d_w(u,v)}. Without
// `partial`, an infeasible pair throws InfeasiblePair; with it, such pairs are
// left out and counted.
WWienerResult w_wiener_poly(const Graph& g, unsigned width, bool partial = false);

}  // namespace wienerlab
