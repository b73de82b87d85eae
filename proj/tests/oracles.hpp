// Brute-force reference implementations used only by the tests. Nothing here
// calls into the library's BFS, closed forms or search code.
#pragma once

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace oracle {

using Matrix = std::vector<std::vector<int>>;
using EdgeList = std::vector<std::pair<int, int>>;
inline constexpr int kInf = std::numeric_limits<int>::max() / 4;

inline Matrix adjacency(int n, const EdgeList& edges) {
    Matrix a(n, std::vector<int>(n, 0));
    for (auto [u, v] : edges) a[u][v] = a[v][u] = 1;
    return a;
}

inline Matrix floyd_warshall(const Matrix& adj) {
    const int n = static_cast<int>(adj.size());
    Matrix d(n, std::vector<int>(n, kInf));
    for (int i = 0; i < n; ++i) {
        d[i][i] = 0;
        for (int j = 0; j < n; ++j)
            if (adj[i][j]) d[i][j] = 1;
    }
    for (int k = 0; k < n; ++k)
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j)
                if (d[i][k] + d[k][j] < d[i][j]) d[i][j] = d[i][k] + d[k][j];
    return d;
}

// counts[i] = unordered pairs at distance i, trailing zeros trimmed.
inline std::vector<long long> pair_counts(const Matrix& dist) {
    std::vector<long long> counts;
    const int n = static_cast<int>(dist.size());
    for (int i = 0; i < n; ++i) {
        for (int j = i + 1; j < n; ++j) {
            const int d = dist[i][j];
            if (d >= static_cast<int>(counts.size())) counts.resize(d + 1, 0);
            ++counts[d];
        }
    }
    return counts;
}

inline std::vector<long long> wiener_counts(int n, const EdgeList& edges) {
    return pair_counts(floyd_warshall(adjacency(n, edges)));
}

inline long long wiener_index(int n, const EdgeList& edges) {
    auto c = wiener_counts(n, edges);
    long long w = 0;
    for (std::size_t i = 0; i < c.size(); ++i) w += static_cast<long long>(i) * c[i];
    return w;
}

// Products straight from the adjacency rules, vertex (a, b) at a * n2 + b.
enum class Rule { Cartesian, Composition, Disjunction, SymmetricDifference, Tensor };

inline Matrix product(const Matrix& g1, const Matrix& g2, Rule rule) {
    const int n1 = static_cast<int>(g1.size()), n2 = static_cast<int>(g2.size());
    Matrix out(n1 * n2, std::vector<int>(n1 * n2, 0));
    for (int a = 0; a < n1; ++a)
        for (int b = 0; b < n2; ++b)
            for (int c = 0; c < n1; ++c)
                for (int d = 0; d < n2; ++d) {
                    if (a == c && b == d) continue;
                    const bool e1 = g1[a][c], e2 = g2[b][d];
                    bool adj = false;
                    switch (rule) {
                        case Rule::Cartesian: adj = (a == c && e2) || (b == d && e1); break;
                        case Rule::Composition: adj = e1 || (a == c && e2); break;
                        case Rule::Disjunction: adj = e1 || e2; break;
                        case Rule::SymmetricDifference: adj = e1 != e2; break;
                        case Rule::Tensor: adj = e1 && e2; break;
                    }
                    out[a * n2 + b][c * n2 + d] = adj ? 1 : 0;
                }
    return out;
}

inline Matrix join(const Matrix& g1, const Matrix& g2) {
    const int n1 = static_cast<int>(g1.size()), n2 = static_cast<int>(g2.size());
    Matrix out(n1 + n2, std::vector<int>(n1 + n2, 1));
    for (int i = 0; i < n1 + n2; ++i) out[i][i] = 0;
    for (int i = 0; i < n1; ++i)
        for (int j = 0; j < n1; ++j) out[i][j] = g1[i][j];
    for (int i = 0; i < n2; ++i)
        for (int j = 0; j < n2; ++j) out[n1 + i][n1 + j] = g2[i][j];
    return out;
}

// Dendrimer by direct simulation: each new vertex attaches to the smallest
// numbered vertex whose degree is at most d (1-based numbering, vertex 1 the
// root). Returns 0-based edges.
inline EdgeList dendrimer_edges(int n, int d) {
    std::vector<int> degree(n + 1, 0);
    EdgeList edges;
    for (int v = 2; v <= n; ++v) {
        int host = 1;
        while (degree[host] > d) ++host;
        ++degree[host];
        ++degree[v];
        edges.emplace_back(host - 1, v - 1);
    }
    return edges;
}

// All simple u-v paths as vertex sequences.
inline std::vector<std::vector<int>> simple_paths(const Matrix& adj, int u, int v) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<int>> out;
    std::vector<int> path{u};
    std::vector<bool> on(n, false);
    on[u] = true;
    std::function<void(int)> go = [&](int x) {
        if (x == v) {
            out.push_back(path);
            return;
        }
        for (int y = 0; y < n; ++y) {
            if (!adj[x][y] || on[y]) continue;
            on[y] = true;
            path.push_back(y);
            go(y);
            path.pop_back();
            on[y] = false;
        }
    };
    go(u);
    return out;
}

// min over w-subsets of pairwise internally disjoint paths of the longest
// length; -1 when no such subset exists.
inline int w_distance(const Matrix& adj, int u, int v, int w) {
    const auto paths = simple_paths(adj, u, v);
    std::vector<std::uint32_t> interior(paths.size(), 0);
    for (std::size_t i = 0; i < paths.size(); ++i)
        for (std::size_t j = 1; j + 1 < paths[i].size(); ++j) interior[i] |= 1U << paths[i][j];
    int best = -1;
    std::vector<std::size_t> chosen;
    std::function<void(std::size_t, std::uint32_t, int)> pick = [&](std::size_t from, std::uint32_t used, int longest) {
        if (static_cast<int>(chosen.size()) == w) {
            if (best < 0 || longest < best) best = longest;
            return;
        }
        for (std::size_t i = from; i < paths.size(); ++i) {
            if (interior[i] & used) continue;
            // at most one path may be the direct edge, and it has no interior
            if (interior[i] == 0 && std::any_of(chosen.begin(), chosen.end(), [&](std::size_t c) {
                    return interior[c] == 0;
                }))
                continue;
            chosen.push_back(i);
            pick(i + 1, used | interior[i], std::max(longest, static_cast<int>(paths[i].size()) - 1));
            chosen.pop_back();
        }
    };
    pick(0, 0, 0);
    return best;
}

// Number of permutations of n elements with exactly n - j cycles, i.e. the
// unsigned Stirling numbers of the first kind c(n, n - j), via the recurrence.
inline std::vector<long long> cycle_census(int n) {
    std::vector<std::vector<long long>> c(n + 1, std::vector<long long>(n + 1, 0));
    c[0][0] = 1;
    for (int m = 1; m <= n; ++m)
        for (int k = 1; k <= m; ++k) c[m][k] = c[m - 1][k - 1] + (m - 1) * c[m - 1][k];
    std::vector<long long> out;
    for (int j = 0; j < n; ++j) out.push_back(c[n][n - j]);
    return out;
}

}  // namespace oracle
