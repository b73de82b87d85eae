#include "wienerlab/generators.hpp"

#include "wienerlab/tree_identities.hpp"

namespace wienerlab {

Graph random_connected_graph(std::size_t n, double density, std::mt19937_64& rng) {
    if (n == 0) throw InvalidParameter("graph needs at least one vertex");
    Graph tree = trees::random_tree(n, rng);
    std::vector<Edge> edges = tree.edges();
    std::bernoulli_distribution extra(density);
    for (Vertex u = 0; u < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            if (!tree.has_edge(u, v) && extra(rng)) edges.emplace_back(u, v);
        }
    }
    return build_graph(n, edges);
}

Graph random_connected_graph(std::size_t min_n, std::size_t max_n, double max_density, std::mt19937_64& rng) {
    std::uniform_int_distribution<std::size_t> size(min_n, max_n);
    std::uniform_real_distribution<double> density(0.0, max_density);
    const std::size_t n = size(rng);
    return random_connected_graph(n, density(rng), rng);
}

}  // namespace wienerlab
