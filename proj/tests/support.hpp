#pragma once

#include <random>
#include <vector>

#include "oracles.hpp"
#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace test_support {

inline oracle::EdgeList raw_edges(const wienerlab::Graph& g) {
    oracle::EdgeList out;
    for (auto [u, v] : g.edges()) out.emplace_back(static_cast<int>(u), static_cast<int>(v));
    return out;
}

inline oracle::Matrix adjacency(const wienerlab::Graph& g) {
    return oracle::adjacency(static_cast<int>(g.vertex_count()), raw_edges(g));
}

inline wienerlab::Poly to_poly(const std::vector<long long>& counts) {
    std::vector<wienerlab::Int> c(counts.begin(), counts.end());
    return wienerlab::Poly(std::move(c));
}

inline wienerlab::Poly oracle_wiener(const wienerlab::Graph& g) {
    return to_poly(oracle::wiener_counts(static_cast<int>(g.vertex_count()), raw_edges(g)));
}

inline wienerlab::Poly oracle_wiener(const oracle::Matrix& adj) {
    return to_poly(oracle::pair_counts(oracle::floyd_warshall(adj)));
}

inline std::mt19937_64 rng_for(unsigned salt) { return std::mt19937_64(0x5eed0000ULL + salt); }

}  // namespace test_support
