#include "wienerlab/families.hpp"

#include <charconv>
#include <vector>

namespace wienerlab {

namespace {

Int as_int(std::size_t v) { return static_cast<Int>(v); }

// Sum_{i=lo}^{hi} c q^i.
Poly flat_run(Int c, std::size_t lo, std::size_t hi) {
    if (hi < lo || c == 0) return {};
    std::vector<Int> coeffs(hi + 1, 0);
    for (std::size_t i = lo; i <= hi; ++i) coeffs[i] = c;
    return Poly(std::move(coeffs));
}

constexpr std::size_t kMaxHypercubeDim = 62;

}  // namespace

void validate(const FamilySpec& spec) {
    auto fail = [&](const std::string& why) { throw InvalidParameter(to_string(spec) + ": " + why); };
    switch (spec.kind) {
        case FamilyKind::Complete:
        case FamilyKind::Path:
            if (spec.n < 1) fail("needs at least one vertex");
            break;
        case FamilyKind::CompleteBipartite:
            if (spec.m < 1 || spec.n < 1) fail("both parts must be nonempty");
            break;
        case FamilyKind::Wheel:
            if (spec.n < 4) fail("a wheel needs n >= 4 (hub plus a cycle of length >= 3)");
            break;
        case FamilyKind::Petersen:
            break;
        case FamilyKind::EvenCycle:
            if (spec.n < 4 || spec.n % 2 != 0) fail("an even cycle needs an even length >= 4");
            break;
        case FamilyKind::OddCycle:
            if (spec.n < 3 || spec.n % 2 != 1) fail("an odd cycle needs an odd length >= 3");
            break;
        case FamilyKind::Hypercube:
            if (spec.n < 1) fail("hypercube dimension must be positive");
            if (spec.n > kMaxHypercubeDim) fail("hypercube dimension too large");
            break;
    }
}

Graph construct(const FamilySpec& spec) {
    validate(spec);
    std::vector<Edge> edges;
    switch (spec.kind) {
        case FamilyKind::Complete: {
            for (Vertex u = 0; u < spec.n; ++u)
                for (Vertex v = u + 1; v < spec.n; ++v) edges.emplace_back(u, v);
            return build_graph(spec.n, edges);
        }
        case FamilyKind::CompleteBipartite: {
            for (Vertex u = 0; u < spec.m; ++u)
                for (Vertex v = 0; v < spec.n; ++v) edges.emplace_back(u, static_cast<Vertex>(spec.m + v));
            return build_graph(spec.m + spec.n, edges);
        }
        case FamilyKind::Wheel: {
            // Rim 0..n-2, hub n-1 (the vertex order of the join C_{n-1} + K_1).
            auto rim = static_cast<Vertex>(spec.n - 1);
            for (Vertex u = 0; u < rim; ++u) {
                edges.emplace_back(u, (u + 1) % rim);
                edges.emplace_back(u, rim);
            }
            return build_graph(spec.n, edges);
        }
        case FamilyKind::Petersen: {
            // Kneser graph K(5,2): 2-subsets of {0..4}, adjacent when disjoint.
            std::vector<unsigned> subsets;
            for (unsigned a = 0; a < 5; ++a)
                for (unsigned b = a + 1; b < 5; ++b) subsets.push_back((1U << a) | (1U << b));
            for (Vertex u = 0; u < subsets.size(); ++u)
                for (Vertex v = u + 1; v < subsets.size(); ++v)
                    if ((subsets[u] & subsets[v]) == 0) edges.emplace_back(u, v);
            return build_graph(subsets.size(), edges);
        }
        case FamilyKind::Path: {
            for (Vertex u = 0; u + 1 < spec.n; ++u) edges.emplace_back(u, u + 1);
            return build_graph(spec.n, edges);
        }
        case FamilyKind::EvenCycle:
        case FamilyKind::OddCycle: {
            auto len = static_cast<Vertex>(spec.n);
            for (Vertex u = 0; u < len; ++u) edges.emplace_back(u, (u + 1) % len);
            return build_graph(spec.n, edges);
        }
        case FamilyKind::Hypercube: {
            if (spec.n > 24) throw InvalidParameter(to_string(spec) + ": too large to materialize");
            std::size_t count = std::size_t{1} << spec.n;
            for (Vertex u = 0; u < count; ++u)
                for (std::size_t bit = 0; bit < spec.n; ++bit) {
                    Vertex v = u ^ (Vertex{1} << bit);
                    if (u < v) edges.emplace_back(u, v);
                }
            return build_graph(count, edges);
        }
    }
    throw InvalidParameter("unknown family");
}

Poly closed_form_poly(const FamilySpec& spec) {
    validate(spec);
    const Int n = as_int(spec.n);
    switch (spec.kind) {
        case FamilyKind::Complete:
            return Poly::monomial(binomial(n, 2), 1);
        case FamilyKind::CompleteBipartite: {
            const Int m = as_int(spec.m);
            return Poly{0, checked_mul(m, n), checked_add(binomial(m, 2), binomial(n, 2))};
        }
        case FamilyKind::Wheel:
            return Poly{0, 2 * n - 2, checked_mul(n - 1, n - 4) / 2};
        case FamilyKind::Petersen:
            return Poly{0, 15, 30};
        case FamilyKind::Path: {
            // (n-1)q + (n-2)q^2 + ... + q^(n-1)
            std::vector<Int> coeffs(spec.n, 0);
            for (std::size_t i = 1; i < spec.n; ++i) coeffs[i] = n - as_int(i);
            return Poly(std::move(coeffs));
        }
        case FamilyKind::EvenCycle: {
            // C_{2h}: 2h (q + ... + q^(h-1)) + h q^h
            const std::size_t half = spec.n / 2;
            return add(flat_run(n, 1, half - 1), Poly::monomial(as_int(half), half));
        }
        case FamilyKind::OddCycle: {
            // C_{2h+1}: (2h+1)(q + ... + q^h)
            const std::size_t half = spec.n / 2;
            return flat_run(n, 1, half);
        }
        case FamilyKind::Hypercube: {
            Poly one_plus_q{1, 1};
            Poly bracket = sub(pow(one_plus_q, static_cast<unsigned>(spec.n)), Poly{1});
            return scale(bracket, checked_pow(2, static_cast<unsigned>(spec.n - 1)));
        }
    }
    throw InvalidParameter("unknown family");
}

Int closed_form_index(const FamilySpec& spec) {
    validate(spec);
    const Int n = as_int(spec.n);
    switch (spec.kind) {
        case FamilyKind::Complete:
            return binomial(n, 2);
        case FamilyKind::CompleteBipartite: {
            const Int m = as_int(spec.m);
            Int s = checked_add(m, n);
            return checked_sub(checked_sub(checked_mul(s, s), checked_mul(m, n)), s);
        }
        case FamilyKind::Wheel:
            return checked_mul(n - 1, n - 2);
        case FamilyKind::Petersen:
            return 75;
        case FamilyKind::Path:
            return binomial(n + 1, 3);
        case FamilyKind::EvenCycle:
            return checked_mul(checked_mul(n, n), n) / 8;
        case FamilyKind::OddCycle:
            // (2h+2)(2h+1)(2h)/8 with 2h+1 = n
            return checked_mul(checked_mul(n + 1, n), n - 1) / 8;
        case FamilyKind::Hypercube:
            return checked_mul(n, checked_pow(2, static_cast<unsigned>(2 * spec.n - 2)));
    }
    throw InvalidParameter("unknown family");
}

namespace {

std::size_t parse_size(std::string_view token, std::string_view whole) {
    std::size_t value = 0;
    auto [ptr, ec] = std::from_chars(token.data(), token.data() + token.size(), value);
    if (token.empty() || ec != std::errc() || ptr != token.data() + token.size()) {
        throw ParseError("bad family parameter in '" + std::string(whole) + "'");
    }
    return value;
}

}  // namespace

FamilySpec parse_family_spec(std::string_view text) {
    if (text == "petersen" || text == "Petersen") return FamilySpec::petersen();
    auto colon = text.find(':');
    if (colon == std::string_view::npos) throw ParseError("family spec needs 'KIND:PARAMS', got '" + std::string(text) + "'");
    auto kind = text.substr(0, colon);
    auto params = text.substr(colon + 1);
    FamilySpec spec;
    if (kind == "Kmn") {
        auto comma = params.find(',');
        if (comma == std::string_view::npos) throw ParseError("Kmn needs 'Kmn:M,N'");
        spec = FamilySpec::complete_bipartite(parse_size(params.substr(0, comma), text),
                                              parse_size(params.substr(comma + 1), text));
    } else if (kind == "K") {
        spec = FamilySpec::complete(parse_size(params, text));
    } else if (kind == "W") {
        spec = FamilySpec::wheel(parse_size(params, text));
    } else if (kind == "P") {
        spec = FamilySpec::path(parse_size(params, text));
    } else if (kind == "C") {
        spec = FamilySpec::cycle(parse_size(params, text));
    } else if (kind == "Q") {
        spec = FamilySpec::hypercube(parse_size(params, text));
    } else {
        throw ParseError("unknown family '" + std::string(kind) + "'");
    }
    validate(spec);
    return spec;
}

std::string to_string(const FamilySpec& spec) {
    switch (spec.kind) {
        case FamilyKind::Complete: return "K:" + std::to_string(spec.n);
        case FamilyKind::CompleteBipartite: return "Kmn:" + std::to_string(spec.m) + "," + std::to_string(spec.n);
        case FamilyKind::Wheel: return "W:" + std::to_string(spec.n);
        case FamilyKind::Petersen: return "petersen";
        case FamilyKind::Path: return "P:" + std::to_string(spec.n);
        case FamilyKind::EvenCycle:
        case FamilyKind::OddCycle: return "C:" + std::to_string(spec.n);
        case FamilyKind::Hypercube: return "Q:" + std::to_string(spec.n);
    }
    return "?";
}

}  // namespace wienerlab
