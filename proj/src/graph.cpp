#include "wienerlab/graph.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "wienerlab/errors.hpp"

namespace wienerlab {

Graph Graph::from_edges(std::size_t n, std::span<const Edge> edges) {
    if (n > std::numeric_limits<Vertex>::max()) throw InvalidVertex("vertex count exceeds 32-bit range");
    Graph g;
    g.adj_.resize(n);
    for (auto [u, v] : edges) {
        if (u >= n || v >= n) {
            throw InvalidVertex("edge (" + std::to_string(u) + "," + std::to_string(v) +
                                ") has an endpoint outside 0.." + std::to_string(n == 0 ? 0 : n - 1));
        }
        if (u == v) throw InvalidEdge("self-loop at vertex " + std::to_string(u));
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    std::size_t degree_sum = 0;
    for (auto& list : g.adj_) {
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        list.shrink_to_fit();
        degree_sum += list.size();
    }
    g.edge_count_ = degree_sum / 2;
    return g;
}

bool Graph::has_edge(Vertex u, Vertex v) const {
    if (u >= adj_.size() || v >= adj_.size()) return false;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(edge_count_);
    for (Vertex u = 0; u < adj_.size(); ++u) {
        for (Vertex v : adj_[u]) {
            if (u < v) out.emplace_back(u, v);
        }
    }
    return out;
}

Graph build_graph(std::size_t n, std::span<const Edge> edges) { return Graph::from_edges(n, edges); }

void bfs_distances(const Graph& g, Vertex source, std::vector<Distance>& out,
                   std::vector<Vertex>& queue) {
    const std::size_t n = g.vertex_count();
    if (source >= n) throw InvalidVertex("BFS source " + std::to_string(source) + " out of range");
    out.assign(n, kUnreachable);
    queue.resize(n);
    std::size_t head = 0;
    std::size_t tail = 0;
    out[source] = 0;
    queue[tail++] = source;
    while (head < tail) {
        Vertex u = queue[head++];
        Distance next = out[u] + 1;
        for (Vertex w : g.neighbors(u)) {
            if (out[w] == kUnreachable) {
                out[w] = next;
                queue[tail++] = w;
            }
        }
    }
}

std::vector<Distance> bfs_distances(const Graph& g, Vertex source) {
    std::vector<Distance> dist;
    std::vector<Vertex> queue;
    bfs_distances(g, source, dist, queue);
    return dist;
}

DistanceMatrix all_pairs_distances(const Graph& g) {
    const std::size_t n = g.vertex_count();
    DistanceMatrix m(n);
    std::vector<Distance> dist;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < n; ++s) {
        bfs_distances(g, s, dist, queue);
        std::copy(dist.begin(), dist.end(), m.row(s).begin());
    }
    return m;
}

namespace {

// First vertex not reached from vertex 0, or n when everything is reached.
std::size_t first_unreached(const Graph& g) {
    const std::size_t n = g.vertex_count();
    if (n == 0) return 0;
    auto dist = bfs_distances(g, 0);
    auto it = std::find(dist.begin(), dist.end(), kUnreachable);
    return static_cast<std::size_t>(it - dist.begin());
}

}  // namespace

bool is_connected(const Graph& g) { return first_unreached(g) == g.vertex_count(); }

void require_connected(const Graph& g) {
    std::size_t miss = first_unreached(g);
    if (miss != g.vertex_count()) throw Disconnected(0, static_cast<Vertex>(miss));
}

Distance diameter(const Graph& g) {
    require_connected(g);
    Distance best = 0;
    std::vector<Distance> dist;
    std::vector<Vertex> queue;
    for (Vertex s = 0; s < g.vertex_count(); ++s) {
        bfs_distances(g, s, dist, queue);
        best = std::max(best, *std::max_element(dist.begin(), dist.end()));
    }
    return best;
}

namespace {

std::vector<std::string_view> split_tokens(std::string_view line) {
    std::vector<std::string_view> tokens;
    std::size_t i = 0;
    while (i < line.size()) {
        while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        std::size_t start = i;
        while (i < line.size() && !std::isspace(static_cast<unsigned char>(line[i]))) ++i;
        if (i > start) tokens.push_back(line.substr(start, i - start));
    }
    return tokens;
}

std::uint64_t parse_count(std::string_view token, std::size_t line_no) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("line " + std::to_string(line_no) + ": expected a nonnegative integer, got '" +
                         std::string(token) + "'");
    }
    return value;
}

}  // namespace

Graph read_edge_list(std::istream& in) {
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    std::vector<Edge> edges;
    while (std::getline(in, line)) {
        ++line_no;
        std::string_view view(line);
        if (auto hash = view.find('#'); hash != std::string_view::npos) view = view.substr(0, hash);
        auto tokens = split_tokens(view);
        if (tokens.empty()) continue;
        if (tokens.size() != 2) {
            throw ParseError("line " + std::to_string(line_no) + ": expected two integers");
        }
        std::uint64_t a = parse_count(tokens[0], line_no);
        std::uint64_t b = parse_count(tokens[1], line_no);
        if (!have_header) {
            n = a;
            m = b;
            have_header = true;
            edges.reserve(m);
            continue;
        }
        if (edges.size() == m) {
            throw ParseError("line " + std::to_string(line_no) + ": more edges than the declared " +
                             std::to_string(m));
        }
        if (a > std::numeric_limits<Vertex>::max() || b > std::numeric_limits<Vertex>::max()) {
            throw InvalidVertex("line " + std::to_string(line_no) + ": vertex id out of range");
        }
        edges.emplace_back(static_cast<Vertex>(a), static_cast<Vertex>(b));
    }
    if (!have_header) throw ParseError("missing 'n m' header");
    if (edges.size() != m) {
        throw ParseError("declared " + std::to_string(m) + " edges but found " + std::to_string(edges.size()));
    }
    return build_graph(n, edges);
}

Graph read_edge_list_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open edge list '" + path + "'");
    return read_edge_list(in);
}

void write_edge_list(std::ostream& out, const Graph& g) {
    out << g.vertex_count() << ' ' << g.edge_count() << '\n';
    for (auto [u, v] : g.edges()) out << u << ' ' << v << '\n';
}

}  // namespace wienerlab
