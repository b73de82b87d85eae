#include "wienerlab/wiener.hpp"

#include <algorithm>
#include <thread>

namespace wienerlab {

namespace {

constexpr std::size_t kParallelThreshold = 2048;

// Accumulates ordered distance counts (and the plain distance sum) over the
// sources in [begin, end).
struct SourceBlock {
    std::vector<std::uint64_t> histogram;
    std::uint64_t distance_sum = 0;
    bool disconnected = false;
    Vertex witness_source = 0;
    Vertex witness_target = 0;
};

void accumulate_sources(const Graph& g, Vertex begin, Vertex end, SourceBlock& block) {
    std::vector<Distance> dist;
    std::vector<Vertex> queue;
    for (Vertex s = begin; s < end; ++s) {
        bfs_distances(g, s, dist, queue);
        for (Vertex t = 0; t < dist.size(); ++t) {
            Distance d = dist[t];
            if (d == kUnreachable) {
                block.disconnected = true;
                block.witness_source = s;
                block.witness_target = t;
                return;
            }
            if (d == 0) continue;
            if (d >= block.histogram.size()) block.histogram.resize(d + 1, 0);
            ++block.histogram[d];
            block.distance_sum += d;
        }
    }
}

SourceBlock scan_all_sources(const Graph& g) {
    const std::size_t n = g.vertex_count();
    unsigned workers = 1;
    if (n >= kParallelThreshold) workers = std::max(1U, std::thread::hardware_concurrency());
    workers = static_cast<unsigned>(std::min<std::size_t>(workers, std::max<std::size_t>(n, 1)));

    std::vector<SourceBlock> blocks(workers);
    if (workers == 1) {
        accumulate_sources(g, 0, static_cast<Vertex>(n), blocks[0]);
    } else {
        std::vector<std::jthread> threads;
        for (unsigned w = 0; w < workers; ++w) {
            auto begin = static_cast<Vertex>(n * w / workers);
            auto end = static_cast<Vertex>(n * (w + 1) / workers);
            threads.emplace_back([&g, &blocks, w, begin, end] { accumulate_sources(g, begin, end, blocks[w]); });
        }
    }

    SourceBlock total;
    for (const auto& b : blocks) {
        if (b.disconnected) throw Disconnected(b.witness_source, b.witness_target);
        if (b.histogram.size() > total.histogram.size()) total.histogram.resize(b.histogram.size(), 0);
        for (std::size_t i = 0; i < b.histogram.size(); ++i) total.histogram[i] += b.histogram[i];
        total.distance_sum += b.distance_sum;
    }
    return total;
}

Poly halve_into_poly(const std::vector<std::uint64_t>& ordered) {
    std::vector<Int> coeffs(ordered.size(), 0);
    for (std::size_t i = 0; i < ordered.size(); ++i) coeffs[i] = static_cast<Int>(ordered[i] / 2);
    return Poly(std::move(coeffs));
}

}  // namespace

std::vector<std::uint64_t> ordered_distance_histogram(const Graph& g) {
    return scan_all_sources(g).histogram;
}

Poly wiener_polynomial(const Graph& g) { return halve_into_poly(ordered_distance_histogram(g)); }

Poly ordered_wiener(const Graph& g) {
    auto histogram = ordered_distance_histogram(g);
    std::vector<Int> coeffs(std::max<std::size_t>(histogram.size(), 1), 0);
    for (std::size_t i = 0; i < histogram.size(); ++i) coeffs[i] = static_cast<Int>(histogram[i]);
    coeffs[0] = static_cast<Int>(g.vertex_count());
    return Poly(std::move(coeffs));
}

Poly relative_wiener(const Graph& g, Vertex v) {
    if (v >= g.vertex_count()) {
        throw InvalidVertex("vertex " + std::to_string(v) + " out of range for a graph on " +
                            std::to_string(g.vertex_count()) + " vertices");
    }
    require_connected(g);
    auto dist = bfs_distances(g, v);
    Distance far = *std::max_element(dist.begin(), dist.end());
    std::vector<Int> coeffs(far + 1, 0);
    for (Distance d : dist) coeffs[d] += 1;
    return Poly(std::move(coeffs));
}

Int wiener_index(const Graph& g) { return derivative_at_one(wiener_polynomial(g)); }

std::array<bool, 5> as_array(const PropertyChecks& c) {
    return {c.degree_equals_diameter, c.constant_term_zero, c.linear_term_edges, c.value_at_one_pairs,
            c.derivative_is_index};
}

namespace {

PropertyChecks checks_from(const Graph& g, const Poly& w, Distance diam, std::uint64_t ordered_distance_sum) {
    PropertyChecks checks;
    const Int n = static_cast<Int>(g.vertex_count());
    checks.degree_equals_diameter = w.degree() == diam;
    checks.constant_term_zero = w[0] == 0;
    checks.linear_term_edges = w[1] == static_cast<Int>(g.edge_count());
    checks.value_at_one_pairs = w.evaluate(1) == binomial(n, 2);
    checks.derivative_is_index = derivative_at_one(w) == static_cast<Int>(ordered_distance_sum / 2);
    return checks;
}

}  // namespace

PropertyChecks verify_basic_properties(const Graph& g) {
    auto block = scan_all_sources(g);
    Poly w = halve_into_poly(block.histogram);
    return checks_from(g, w, diameter(g), block.distance_sum);
}

WienerReport analyze_graph(const Graph& g) {
    auto block = scan_all_sources(g);
    WienerReport report;
    report.wiener_poly = halve_into_poly(block.histogram);
    report.ordered_poly = add(scale(report.wiener_poly, 2), Poly::constant(static_cast<Int>(g.vertex_count())));
    report.wiener_index = derivative_at_one(report.wiener_poly);
    report.diameter = diameter(g);
    report.checks = checks_from(g, report.wiener_poly, report.diameter, block.distance_sum);
    return report;
}

}  // namespace wienerlab
