#pragma once

#include <cstdint>
#include <iosfwd>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

namespace wienerlab {

using Vertex = std::uint32_t;
using Distance = std::uint32_t;
using Edge = std::pair<Vertex, Vertex>;

inline constexpr Distance kUnreachable = std::numeric_limits<Distance>::max();

// Immutable simple undirected graph on vertices 0..n-1.
//
// Adjacency lists are sorted and symmetric; there are no loops or parallel
// edges. Connectivity is not required here and is checked where it matters.
class Graph {
public:
    Graph() = default;

    // Duplicate pairs (in either orientation) are collapsed. Throws InvalidEdge
    // on a self-loop and InvalidVertex on an endpoint outside 0..n-1.
    static Graph from_edges(std::size_t n, std::span<const Edge> edges);

    std::size_t vertex_count() const noexcept { return adj_.size(); }
    std::size_t edge_count() const noexcept { return edge_count_; }

    std::span<const Vertex> neighbors(Vertex v) const { return adj_[v]; }
    std::size_t degree(Vertex v) const { return adj_[v].size(); }
    bool has_edge(Vertex u, Vertex v) const;

    // Edges with u < v, in lexicographic order.
    std::vector<Edge> edges() const;

    friend bool operator==(const Graph&, const Graph&) = default;

private:
    std::vector<std::vector<Vertex>> adj_;
    std::size_t edge_count_ = 0;
};

Graph build_graph(std::size_t n, std::span<const Edge> edges);

inline Graph build_graph(std::size_t n, std::initializer_list<Edge> edges) {
    return build_graph(n, std::span<const Edge>(edges.begin(), edges.size()));
}

// n x n hop-count table, row-major. Memory is O(n^2); use the per-source
// routines in wiener.hpp for large graphs.
class DistanceMatrix {
public:
    explicit DistanceMatrix(std::size_t n) : n_(n), dist_(n * n, kUnreachable) {}

    std::size_t size() const noexcept { return n_; }
    Distance at(Vertex u, Vertex v) const { return dist_[std::size_t{u} * n_ + v]; }
    std::span<const Distance> row(Vertex u) const { return {dist_.data() + std::size_t{u} * n_, n_}; }
    std::span<Distance> row(Vertex u) { return {dist_.data() + std::size_t{u} * n_, n_}; }

private:
    std::size_t n_;
    std::vector<Distance> dist_;
};

// Single-source BFS into a caller-owned buffer (resized to n). The queue buffer
// is reused across calls to keep per-source work allocation-free.
void bfs_distances(const Graph& g, Vertex source, std::vector<Distance>& out,
                   std::vector<Vertex>& queue);

std::vector<Distance> bfs_distances(const Graph& g, Vertex source);

DistanceMatrix all_pairs_distances(const Graph& g);

bool is_connected(const Graph& g);

// Throws Disconnected naming a vertex pair with no path between them.
void require_connected(const Graph& g);

// Eccentricity maximum. Throws Disconnected; K_1 has diameter 0.
Distance diameter(const Graph& g);

// Edge-list text: "n m" header, then m lines "u v". '#' starts a comment.
Graph read_edge_list(std::istream& in);
Graph read_edge_list_file(const std::string& path);
void write_edge_list(std::ostream& out, const Graph& g);

}  // namespace wienerlab
