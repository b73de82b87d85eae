#pragma once

#include <cstdint>
#include <random>
#include <span>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/integer.hpp"

namespace wienerlab::trees {

// Component sizes around every edge and every vertex of a tree.
struct CutCounts {
    // For each edge (u, v) with u < v in Graph::edges() order: sizes of the
    // two components of T - e, the first being the side containing u.
    std::vector<std::pair<std::uint64_t, std::uint64_t>> edge_sides;
    // For each vertex: sizes of the components of T - v (sum n - 1).
    std::vector<std::vector<std::uint64_t>> vertex_sides;
};

// Throws NotATree unless t is connected with m = n - 1.
void require_tree(const Graph& t);

CutCounts cut_counts(const Graph& t);

// W(T) = sum over edges of n1(e) n2(e). One rooted subtree-size pass.
Int wiener_edge_cut(const Graph& t);

// W(T) = C(n+1, 3) - sum over vertices of e_3(component sizes of T - v).
Int wiener_gutman(const Graph& t);

// Decodes a sequence of length n-2 over 0..n-1 into the unique labeled tree
// it encodes, as a parent array rooted at n-1 (parent[n-1] = n-1).
std::vector<Vertex> decode_sequence(std::span<const Vertex> sequence, std::size_t n);

Graph tree_from_sequence(std::span<const Vertex> sequence, std::size_t n);

// Uniform random labeled tree on n vertices.
Graph random_tree(std::size_t n, std::mt19937_64& rng);

struct PathMaximality {
    std::size_t n = 0;
    std::uint64_t trees = 0;        // n^(n-2)
    Int max_index = 0;              // largest W over all labeled trees
    std::uint64_t maximizers = 0;   // labeled trees attaining it
    bool maximizers_are_paths = false;
    bool path_attains_max = false;

    bool holds() const { return maximizers_are_paths && path_attains_max; }
};

// Enumerates all n^(n-2) labeled trees (2 <= n <= 9).
PathMaximality path_is_max(std::size_t n);

}  // namespace wienerlab::trees
