#include "wienerlab/coxeter.hpp"

#include <algorithm>
#include <numeric>

#include "wienerlab/wiener.hpp"

namespace wienerlab::coxeter {

Family parse_family(std::string_view name) {
    static constexpr std::pair<std::string_view, Family> kNames[] = {
        {"A", Family::A},   {"B", Family::B},   {"D", Family::D},   {"I2", Family::I2}, {"H3", Family::H3},
        {"H4", Family::H4}, {"F4", Family::F4}, {"E6", Family::E6}, {"E7", Family::E7}, {"E8", Family::E8},
    };
    for (auto [text, family] : kNames)
        if (text == name) return family;
    throw ParseError("unknown Coxeter family '" + std::string(name) + "'");
}

std::string to_string(const Spec& spec) {
    switch (spec.family) {
        case Family::A: return "A" + std::to_string(spec.rank);
        case Family::B: return "B" + std::to_string(spec.rank);
        case Family::D: return "D" + std::to_string(spec.rank);
        case Family::I2: return "I2(" + std::to_string(spec.rank) + ")";
        case Family::H3: return "H3";
        case Family::H4: return "H4";
        case Family::F4: return "F4";
        case Family::E6: return "E6";
        case Family::E7: return "E7";
        case Family::E8: return "E8";
    }
    return "?";
}

std::vector<unsigned> exponents(const Spec& spec) {
    const unsigned n = spec.rank;
    std::vector<unsigned> e;
    switch (spec.family) {
        case Family::A:
            if (n < 1) throw InvalidRank("A_n needs n >= 1");
            for (unsigned i = 1; i <= n; ++i) e.push_back(i);
            return e;
        case Family::B:
            if (n < 2) throw InvalidRank("B_n needs n >= 2");
            for (unsigned i = 1; i <= n; ++i) e.push_back(2 * i - 1);
            return e;
        case Family::D:
            if (n < 4) throw InvalidRank("D_n needs n >= 4");
            for (unsigned i = 1; i < n; ++i) e.push_back(2 * i - 1);
            e.push_back(n - 1);
            std::sort(e.begin(), e.end());
            return e;
        case Family::I2:
            if (n < 2) throw InvalidRank("I2(m) needs m >= 2");
            return {1, n - 1};
        case Family::H3: return {1, 5, 9};
        case Family::H4: return {1, 11, 19, 29};
        case Family::F4: return {1, 5, 7, 11};
        case Family::E6: return {1, 4, 5, 7, 8, 11};
        case Family::E7: return {1, 5, 7, 9, 11, 13, 17};
        case Family::E8: return {1, 7, 11, 13, 17, 19, 23, 29};
    }
    throw InvalidRank("unknown family");
}

Poly poincare_poly(const Spec& spec) {
    Poly result{1};
    for (unsigned e : exponents(spec)) result = mul(result, Poly{1, e});
    return result;
}

std::vector<Spec> catalogue() {
    std::vector<Spec> out;
    for (unsigned n = 1; n <= 8; ++n) out.push_back({Family::A, n});
    for (unsigned n = 2; n <= 8; ++n) out.push_back({Family::B, n});
    for (unsigned n = 4; n <= 8; ++n) out.push_back({Family::D, n});
    for (unsigned m = 2; m <= 12; ++m) out.push_back({Family::I2, m});
    for (Family f : {Family::H3, Family::H4, Family::F4, Family::E6, Family::E7, Family::E8}) out.push_back({f, 0});
    return out;
}

std::vector<std::vector<std::uint8_t>> permutations(unsigned n) {
    std::vector<std::uint8_t> perm(n);
    std::iota(perm.begin(), perm.end(), std::uint8_t{0});
    std::vector<std::vector<std::uint8_t>> out;
    do {
        out.push_back(perm);
    } while (std::next_permutation(perm.begin(), perm.end()));
    return out;
}

std::size_t permutation_rank(const std::vector<std::uint8_t>& perm) {
    // Lehmer code read in the factorial number system.
    const std::size_t n = perm.size();
    std::size_t rank = 0;
    for (std::size_t i = 0; i < n; ++i) {
        std::size_t smaller = 0;
        for (std::size_t j = i + 1; j < n; ++j)
            if (perm[j] < perm[i]) ++smaller;
        rank = rank * (n - i) + smaller;
    }
    return rank;
}

unsigned absolute_length(const std::vector<std::uint8_t>& perm) {
    const std::size_t n = perm.size();
    std::vector<bool> seen(n, false);
    unsigned cycles = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (seen[i]) continue;
        ++cycles;
        for (std::size_t j = i; !seen[j]; j = perm[j]) seen[j] = true;
    }
    return static_cast<unsigned>(n) - cycles;
}

Graph reflection_graph(unsigned n) {
    if (n < 2) throw InvalidRank("reflection graph needs n >= 2");
    if (n > kMaxReflectionRank) {
        throw RankTooLarge("reflection graph of S_" + std::to_string(n) + " exceeds the size cap of S_6");
    }
    const auto perms = permutations(n);
    std::vector<Edge> edges;
    for (std::size_t r = 0; r < perms.size(); ++r) {
        for (unsigned i = 0; i < n; ++i) {
            for (unsigned j = i + 1; j < n; ++j) {
                // w t: swap the values in positions i and j
                auto next = perms[r];
                std::swap(next[i], next[j]);
                std::size_t s = permutation_rank(next);
                if (r < s) edges.emplace_back(static_cast<Vertex>(r), static_cast<Vertex>(s));
            }
        }
    }
    return build_graph(perms.size(), edges);
}

WgwCheck check_wgw(unsigned n) {
    Graph g = reflection_graph(n);
    WgwCheck c;
    c.poincare = poincare_poly({Family::A, n - 1});
    Int order = 1;
    for (unsigned i = 2; i <= n; ++i) order *= i;
    c.scaled_poincare = scale(c.poincare, order);
    c.ordered = ordered_wiener(g);
    c.from_identity = relative_wiener(g, 0);
    return c;
}

bool verify_wgw(unsigned n) { return check_wgw(n).ok(); }

}  // namespace wienerlab::coxeter
