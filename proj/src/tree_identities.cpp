#include "wienerlab/tree_identities.hpp"

#include <algorithm>
#include <thread>

namespace wienerlab::trees {

void require_tree(const Graph& t) {
    const std::size_t n = t.vertex_count();
    if (n == 0) throw NotATree("empty graph");
    if (t.edge_count() != n - 1) {
        throw NotATree("a tree on " + std::to_string(n) + " vertices has " + std::to_string(n - 1) +
                       " edges, got " + std::to_string(t.edge_count()));
    }
    if (!is_connected(t)) throw NotATree("graph is not connected");
}

namespace {

struct Rooted {
    std::vector<Vertex> parent;
    std::vector<Vertex> order;  // BFS order from root 0
    std::vector<std::uint64_t> size;
};

Rooted root_at_zero(const Graph& t) {
    const std::size_t n = t.vertex_count();
    Rooted r;
    r.parent.assign(n, 0);
    r.order.reserve(n);
    r.size.assign(n, 1);
    std::vector<bool> seen(n, false);
    r.order.push_back(0);
    seen[0] = true;
    for (std::size_t head = 0; head < r.order.size(); ++head) {
        Vertex u = r.order[head];
        for (Vertex w : t.neighbors(u)) {
            if (!seen[w]) {
                seen[w] = true;
                r.parent[w] = u;
                r.order.push_back(w);
            }
        }
    }
    for (std::size_t i = r.order.size(); i-- > 1;) {
        Vertex v = r.order[i];
        r.size[r.parent[v]] += r.size[v];
    }
    return r;
}

}  // namespace

CutCounts cut_counts(const Graph& t) {
    require_tree(t);
    const std::uint64_t n = t.vertex_count();
    Rooted r = root_at_zero(t);
    CutCounts out;
    for (auto [u, v] : t.edges()) {
        std::uint64_t below = (r.parent[v] == u && v != 0) ? r.size[v] : r.size[u];
        std::uint64_t u_side = (r.parent[v] == u && v != 0) ? n - below : below;
        out.edge_sides.emplace_back(u_side, n - u_side);
    }
    out.vertex_sides.resize(n);
    for (Vertex v = 1; v < n; ++v) out.vertex_sides[r.parent[v]].push_back(r.size[v]);
    for (Vertex v = 1; v < n; ++v) out.vertex_sides[v].push_back(n - r.size[v]);
    return out;
}

Int wiener_edge_cut(const Graph& t) {
    require_tree(t);
    const Int n = static_cast<Int>(t.vertex_count());
    Rooted r = root_at_zero(t);
    Int total = 0;
    for (std::size_t i = 1; i < r.order.size(); ++i) {
        const Int below = static_cast<Int>(r.size[r.order[i]]);
        total = checked_add(total, checked_mul(below, n - below));
    }
    return total;
}

Int wiener_gutman(const Graph& t) {
    const CutCounts counts = cut_counts(t);
    const Int n = static_cast<Int>(t.vertex_count());
    Int correction = 0;
    for (const auto& sides : counts.vertex_sides) {
        if (sides.size() < 3) continue;
        // elementary symmetric polynomials e1, e2, e3 of the side sizes
        Int e1 = 0, e2 = 0, e3 = 0;
        for (std::uint64_t s : sides) {
            const Int x = static_cast<Int>(s);
            e3 = checked_add(e3, checked_mul(e2, x));
            e2 = checked_add(e2, checked_mul(e1, x));
            e1 = checked_add(e1, x);
        }
        correction = checked_add(correction, e3);
    }
    return checked_sub(binomial(n + 1, 3), correction);
}

std::vector<Vertex> decode_sequence(std::span<const Vertex> sequence, std::size_t n) {
    if (n == 0) throw InvalidParameter("a tree needs at least one vertex");
    if (n == 1) {
        if (!sequence.empty()) throw InvalidParameter("sequence must have length n - 2");
        return {0};
    }
    if (sequence.size() != n - 2) throw InvalidParameter("sequence must have length n - 2");
    std::vector<std::uint32_t> degree(n, 1);
    for (Vertex x : sequence) {
        if (x >= n) throw InvalidVertex("sequence entry " + std::to_string(x) + " out of range");
        ++degree[x];
    }
    std::vector<Vertex> parent(n, 0);
    Vertex ptr = 0;
    while (degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex x : sequence) {
        parent[leaf] = x;
        if (--degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    parent[leaf] = static_cast<Vertex>(n - 1);
    parent[n - 1] = static_cast<Vertex>(n - 1);
    return parent;
}

Graph tree_from_sequence(std::span<const Vertex> sequence, std::size_t n) {
    auto parent = decode_sequence(sequence, n);
    std::vector<Edge> edges;
    for (Vertex v = 0; v + 1 < n; ++v) edges.emplace_back(v, parent[v]);
    return build_graph(n, edges);
}

Graph random_tree(std::size_t n, std::mt19937_64& rng) {
    if (n < 2) return tree_from_sequence({}, std::max<std::size_t>(n, 1));
    std::uniform_int_distribution<Vertex> pick(0, static_cast<Vertex>(n - 1));
    std::vector<Vertex> seq(n - 2);
    for (auto& x : seq) x = pick(rng);
    return tree_from_sequence(seq, n);
}

namespace {

// Wiener index of the tree encoded by `seq`, via the edge-cut identity
// accumulated during decoding: each removed leaf closes off a subtree.
struct Scratch {
    std::vector<std::uint32_t> degree;
    std::vector<std::uint64_t> size;
};

std::uint64_t index_of_sequence(std::span<const Vertex> seq, std::size_t n, Scratch& s, bool& is_path) {
    s.degree.assign(n, 1);
    s.size.assign(n, 1);
    for (Vertex x : seq) ++s.degree[x];
    is_path = std::all_of(s.degree.begin(), s.degree.end(), [](std::uint32_t d) { return d <= 2; });
    std::uint64_t total = 0;
    Vertex ptr = 0;
    while (s.degree[ptr] != 1) ++ptr;
    Vertex leaf = ptr;
    for (Vertex x : seq) {
        total += s.size[leaf] * (n - s.size[leaf]);
        s.size[x] += s.size[leaf];
        if (--s.degree[x] == 1 && x < ptr) {
            leaf = x;
        } else {
            ++ptr;
            while (s.degree[ptr] != 1) ++ptr;
            leaf = ptr;
        }
    }
    total += s.size[leaf] * (n - s.size[leaf]);
    return total;
}

struct BlockResult {
    std::uint64_t trees = 0;
    std::uint64_t max_index = 0;
    std::uint64_t maximizers = 0;
    bool maximizers_are_paths = true;
};

void merge_max(BlockResult& into, std::uint64_t w, bool is_path, std::uint64_t count = 1) {
    if (w > into.max_index) {
        into.max_index = w;
        into.maximizers = 0;
        into.maximizers_are_paths = true;
    }
    if (w == into.max_index) {
        into.maximizers += count;
        into.maximizers_are_paths = into.maximizers_are_paths && is_path;
    }
}

// All sequences whose first symbol is `first`.
BlockResult enumerate_block(std::size_t n, Vertex first) {
    BlockResult out;
    const std::size_t len = n - 2;
    std::vector<Vertex> seq(len, 0);
    seq[0] = first;
    Scratch scratch;
    while (true) {
        bool is_path = false;
        std::uint64_t w = index_of_sequence(seq, n, scratch, is_path);
        ++out.trees;
        merge_max(out, w, is_path);
        std::size_t pos = len;
        while (pos > 1) {
            --pos;
            if (++seq[pos] < n) break;
            seq[pos] = 0;
            if (pos == 1) return out;
        }
        if (len == 1) return out;
    }
}

}  // namespace

PathMaximality path_is_max(std::size_t n) {
    if (n < 2 || n > 9) throw InvalidParameter("path maximality enumeration supports 2 <= n <= 9");
    PathMaximality result;
    result.n = n;
    const Int path_index = binomial(static_cast<Int>(n) + 1, 3);
    BlockResult total;
    if (n == 2) {
        // One tree, the single edge.
        total = {1, 1, 1, true};
    } else {
        std::vector<BlockResult> blocks(n);
        const unsigned workers = std::max(1U, std::thread::hardware_concurrency());
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            threads.emplace_back([&blocks, n, w, workers] {
                for (std::size_t first = w; first < n; first += workers) {
                    blocks[first] = enumerate_block(n, static_cast<Vertex>(first));
                }
            });
        }
        threads.clear();
        for (const auto& b : blocks) {
            total.trees += b.trees;
            if (b.maximizers > 0) merge_max(total, b.max_index, b.maximizers_are_paths, b.maximizers);
        }
    }
    result.trees = total.trees;
    result.max_index = static_cast<Int>(total.max_index);
    result.maximizers = total.maximizers;
    result.maximizers_are_paths = total.maximizers_are_paths;
    result.path_attains_max = result.max_index == path_index;
    return result;
}

}  // namespace wienerlab::trees
