#include "wienerlab/wdistance.hpp"

#include <algorithm>
#include <cstdint>

namespace wienerlab {

std::size_t Container::length() const {
    std::size_t longest = 0;
    for (const auto& p : paths) longest = std::max(longest, p.empty() ? std::size_t{0} : p.size() - 1);
    return longest;
}

namespace {

void check_inputs(const Graph& g, Vertex u, Vertex v, unsigned width) {
    if (g.vertex_count() > kMaxContainerVertices) {
        throw TooLarge("exact container search supports at most " + std::to_string(kMaxContainerVertices) +
                       " vertices, got " + std::to_string(g.vertex_count()));
    }
    if (width == 0) throw InvalidWidth("container width must be at least 1");
    if (u >= g.vertex_count() || v >= g.vertex_count()) throw InvalidVertex("container endpoint out of range");
    if (u == v) throw InvalidParameter("container endpoints must differ");
}

using Mask = std::uint32_t;

class ContainerSearch {
public:
    ContainerSearch(const Graph& g, Vertex u, Vertex v, unsigned width, std::size_t max_length)
        : g_(g), u_(u), v_(v), width_(width), max_length_(max_length) {}

    std::optional<Container> run() {
        paths_.clear();
        current_.assign(width_, {});
        if (!place_path(0, 0, 0)) return std::nullopt;
        Container c{u_, v_, paths_};
        return c;
    }

private:
    // Hop distance to v avoiding `blocked` and never passing through u.
    std::vector<std::size_t> distances_to_target(Mask blocked) const {
        const std::size_t n = g_.vertex_count();
        std::vector<std::size_t> dist(n, SIZE_MAX);
        std::vector<Vertex> queue{v_};
        dist[v_] = 0;
        for (std::size_t head = 0; head < queue.size(); ++head) {
            Vertex x = queue[head];
            for (Vertex y : g_.neighbors(x)) {
                if (dist[y] != SIZE_MAX || (blocked >> y & 1U)) continue;
                dist[y] = dist[x] + 1;
                if (y != u_) queue.push_back(y);
            }
        }
        return dist;
    }

    // Places path number `index`; `used` holds internal vertices of earlier
    // paths; successive paths have strictly increasing second vertices.
    bool place_path(unsigned index, Mask used, std::size_t min_second) {
        if (index == width_) return true;
        auto bound = distances_to_target(used);
        if (bound[u_] == SIZE_MAX || bound[u_] > max_length_) return false;

        const unsigned remaining = width_ - index;
        unsigned open_exits = 0;
        for (Vertex y : g_.neighbors(u_))
            if (y >= min_second && !(used >> y & 1U) && bound[y] != SIZE_MAX) ++open_exits;
        if (open_exits < remaining) return false;

        for (Vertex second : g_.neighbors(u_)) {
            if (second < min_second || (used >> second & 1U) || bound[second] == SIZE_MAX) continue;
            if (1 + bound[second] > max_length_) continue;
            auto& path = current_[index];
            path.assign({u_, second});
            if (second == v_) {
                paths_.push_back(path);
                if (place_path(index + 1, used, std::size_t{second} + 1)) return true;
                paths_.pop_back();
                continue;
            }
            if (extend(index, used, second, Mask{1} << second, bound, second)) return true;
        }
        return false;
    }

    bool extend(unsigned index, Mask used, Vertex at, Mask on_path, const std::vector<std::size_t>& bound,
                Vertex second) {
        auto& path = current_[index];
        const std::size_t length = path.size() - 1;
        for (Vertex y : g_.neighbors(at)) {
            if (y == u_ || (used >> y & 1U) || (on_path >> y & 1U) || bound[y] == SIZE_MAX) continue;
            if (length + 1 + bound[y] > max_length_) continue;
            path.push_back(y);
            if (y == v_) {
                paths_.push_back(path);
                if (place_path(index + 1, used | on_path, std::size_t{second} + 1)) return true;
                paths_.pop_back();
            } else if (extend(index, used, y, on_path | (Mask{1} << y), bound, second)) {
                return true;
            }
            path.pop_back();
        }
        return false;
    }

    const Graph& g_;
    Vertex u_;
    Vertex v_;
    unsigned width_;
    std::size_t max_length_;
    std::vector<std::vector<Vertex>> paths_;
    // Path under construction at each level of the recursion.
    std::vector<std::vector<Vertex>> current_;
};

}  // namespace

unsigned local_connectivity(const Graph& g, Vertex u, Vertex v) {
    const std::size_t n = g.vertex_count();
    if (u >= n || v >= n) throw InvalidVertex("endpoint out of range");
    if (u == v) throw InvalidParameter("endpoints must differ");
    // Node x splits into in = 2x and out = 2x+1 joined by capacity 1 (except
    // u and v, which are uncapped). Edges carry capacity 1 in each direction.
    const std::size_t nodes = 2 * n;
    std::vector<std::vector<int>> cap(nodes, std::vector<int>(nodes, 0));
    for (Vertex x = 0; x < n; ++x) cap[2 * x][2 * x + 1] = (x == u || x == v) ? static_cast<int>(n) : 1;
    for (auto [a, b] : g.edges()) {
        cap[2 * a + 1][2 * b] = 1;
        cap[2 * b + 1][2 * a] = 1;
    }
    const std::size_t source = 2 * u + 1;
    const std::size_t sink = 2 * v;
    unsigned flow = 0;
    while (true) {
        std::vector<std::size_t> prev(nodes, SIZE_MAX);
        std::vector<std::size_t> queue{source};
        prev[source] = source;
        for (std::size_t head = 0; head < queue.size() && prev[sink] == SIZE_MAX; ++head) {
            std::size_t x = queue[head];
            for (std::size_t y = 0; y < nodes; ++y) {
                if (cap[x][y] > 0 && prev[y] == SIZE_MAX) {
                    prev[y] = x;
                    queue.push_back(y);
                }
            }
        }
        if (prev[sink] == SIZE_MAX) return flow;
        for (std::size_t y = sink; y != source; y = prev[y]) {
            --cap[prev[y]][y];
            ++cap[y][prev[y]];
        }
        ++flow;
    }
}

std::optional<Container> find_container(const Graph& g, Vertex u, Vertex v, unsigned width,
                                        std::size_t max_length) {
    check_inputs(g, u, v, width);
    return ContainerSearch(g, u, v, width, max_length).run();
}

std::optional<std::size_t> w_distance(const Graph& g, Vertex u, Vertex v, unsigned width) {
    check_inputs(g, u, v, width);
    require_connected(g);
    if (local_connectivity(g, u, v) < width) return std::nullopt;
    const std::size_t start = bfs_distances(g, u)[v];
    for (std::size_t bound = start; bound < g.vertex_count(); ++bound) {
        if (ContainerSearch(g, u, v, width, bound).run()) return bound;
    }
    // Unreachable: w disjoint simple paths exist and none is longer than n-1.
    return std::nullopt;
}

WWienerResult w_wiener_poly(const Graph& g, unsigned width, bool partial) {
    if (g.vertex_count() > kMaxContainerVertices) {
        throw TooLarge("exact container search supports at most " + std::to_string(kMaxContainerVertices) +
                       " vertices, got " + std::to_string(g.vertex_count()));
    }
    if (width == 0) throw InvalidWidth("container width must be at least 1");
    require_connected(g);
    WWienerResult result;
    std::vector<Int> coeffs;
    for (Vertex a = 0; a < g.vertex_count(); ++a) {
        for (Vertex b = a + 1; b < g.vertex_count(); ++b) {
            auto d = w_distance(g, a, b, width);
            if (!d) {
                if (!partial) throw InfeasiblePair(a, b, width);
                ++result.infeasible_pairs;
                continue;
            }
            if (*d >= coeffs.size()) coeffs.resize(*d + 1, 0);
            coeffs[*d] += 1;
        }
    }
    result.poly = Poly(std::move(coeffs));
    return result;
}

}  // namespace wienerlab
