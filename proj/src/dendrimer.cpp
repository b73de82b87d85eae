#include "wienerlab/dendrimer.hpp"

#include <algorithm>
#include <stdexcept>

#include "wienerlab/wiener.hpp"

namespace wienerlab::dendrimer {

namespace {

void require_arity(unsigned d) {
    if (d < 2) throw InvalidParameter("dendrimer arity must be at least 2");
}

// (d^k - 1)/(d - 1) = 1 + d + ... + d^(k-1)
Int geometric_sum(unsigned d, unsigned k) {
    Int total = 0;
    Int term = 1;
    for (unsigned i = 0; i < k; ++i) {
        total = checked_add(total, term);
        if (i + 1 < k) term = checked_mul(term, d);
    }
    return total;
}

Int n_threshold(unsigned d, unsigned k) { return checked_add(2, checked_mul(d + 1, geometric_sum(d, k))); }
Int m_threshold(unsigned d, unsigned k) { return checked_add(3, checked_mul(2 * Int{d}, geometric_sum(d, k))); }

}  // namespace

Thresholds thresholds(unsigned d, unsigned k) {
    require_arity(d);
    Thresholds t;
    t.n_k = n_threshold(d, k);
    t.m_k = m_threshold(d, k);
    t.p_k = checked_sub(checked_add(t.m_k, checked_mul(2, checked_pow(d, k))), 1);
    return t;
}

unsigned level_of(std::uint64_t n, unsigned d) {
    require_arity(d);
    if (n < 2) throw InvalidParameter("dendrimer levels start at vertex 2");
    unsigned k = 0;
    while (n_threshold(d, k + 1) <= static_cast<Int>(n)) ++k;
    return k;
}

std::vector<unsigned> Label::printed() const { return {digits.rbegin(), digits.rend()}; }

Int Label::lambda(unsigned i) const {
    Int value = 0;
    Int place = 1;
    for (unsigned j = 0; j < i && j < digits.size(); ++j) {
        value = checked_add(value, checked_mul(digits[j], place));
        place = checked_mul(place, d);
    }
    return value;
}

Label label(std::uint64_t m, unsigned d) {
    Label out;
    out.d = d;
    out.level = level_of(m, d);
    const unsigned k = out.level;
    Int value = checked_add(checked_sub(static_cast<Int>(m), n_threshold(d, k)),
                            checked_mul(d - 1, checked_pow(d, k)));
    out.digits.assign(k + 2, 0);
    for (unsigned i = 0; i < k + 2; ++i) {
        out.digits[i] = static_cast<unsigned>(value % d);
        value /= d;
    }
    if (value != 0) throw std::logic_error("dendrimer label does not fit in k+2 digits");
    return out;
}

std::vector<Vertex> parents(std::uint64_t n, unsigned d) {
    require_arity(d);
    if (n < 1) throw InvalidParameter("a dendrimer needs at least one vertex");
    if (n > std::numeric_limits<Vertex>::max()) throw InvalidParameter("dendrimer too large to materialize");
    std::vector<Vertex> parent(n, 0);
    std::vector<unsigned> children(n, 0);
    Vertex open = 0;
    for (Vertex v = 1; v < n; ++v) {
        // degree = children + (1 if not the root); attach while degree <= d
        while (children[open] + (open == 0 ? 0U : 1U) > d) ++open;
        parent[v] = open;
        ++children[open];
    }
    return parent;
}

Graph build(std::uint64_t n, unsigned d) {
    auto parent = parents(n, d);
    std::vector<Edge> edges;
    edges.reserve(n - 1);
    for (Vertex v = 1; v < n; ++v) edges.emplace_back(parent[v], v);
    return build_graph(n, edges);
}

Poly delta_wiener(std::uint64_t n, unsigned d) {
    require_arity(d);
    if (n < 2) throw InvalidParameter("delta_wiener needs n >= 2");
    const Label lab = label(n, d);
    const unsigned k = lab.level;
    const bool full_even = static_cast<Int>(n) >= m_threshold(d, k);
    std::vector<Int> coeffs(2 * k + 3, 0);
    Int power = 1;
    for (unsigned i = 0; i <= k; ++i) {
        coeffs[2 * i + 1] = power;
        if (i < k || full_even) coeffs[2 * i + 2] = checked_mul(power, lab.digit(i) + 1);
        power = checked_mul(power, d);
    }
    return Poly(std::move(coeffs));
}

Poly closed_form(std::uint64_t n, unsigned d) {
    require_arity(d);
    if (n < 1) throw InvalidParameter("a dendrimer needs at least one vertex");
    if (n == 1) return {};
    const Int nn = static_cast<Int>(n);
    const Label lab = label(n, d);
    const unsigned k = lab.level;
    const bool full_even = nn >= m_threshold(d, k);
    const Int pair_block = binomial(Int{d} + 1, 2);

    std::vector<Int> coeffs(2 * k + 3, 0);
    Int power = 1;  // d^i
    for (unsigned i = 0; i <= k; ++i) {
        coeffs[2 * i + 1] = checked_mul(power, checked_add(checked_sub(nn, n_threshold(d, i)), 1));
        if (i < k || full_even) {
            const Int m_i = m_threshold(d, i);
            if (nn < m_i) throw std::logic_error("closed form consulted below m_i");
            const Int power_sq = checked_mul(power, power);
            const Int period = checked_mul(power, d);  // d^(i+1)
            const Int l_i = lab.digit(i);
            Int term = checked_mul(checked_mul(power_sq, (nn - m_i) / period), pair_block);
            term = checked_add(term, checked_mul(power_sq, binomial(l_i + 1, 2)));
            term = checked_add(term, checked_mul(checked_mul(power, l_i + 1), checked_add(lab.lambda(i), 1)));
            coeffs[2 * i + 2] = term;
        }
        power = checked_mul(power, d);
    }
    return Poly(std::move(coeffs));
}

Int complete_wiener_index(unsigned k, unsigned d) {
    require_arity(d);
    if (k < 1) throw InvalidParameter("complete dendrimer level must be at least 1");
    const Int dd = d;
    const Int kk = k;
    const Int d2 = dd * dd;
    const Int d3 = d2 * dd;
    // kd^3 + (k-2)d^2 - (k+3)d - (k+1)
    Int bracket = checked_mul(kk, d3);
    bracket = checked_add(bracket, checked_mul(kk - 2, d2));
    bracket = checked_sub(bracket, checked_mul(kk + 3, dd));
    bracket = checked_sub(bracket, kk + 1);
    Int numerator = checked_mul(checked_pow(dd, 2 * k), bracket);
    numerator = checked_add(numerator, checked_mul(checked_mul(2, checked_pow(dd, k)), (dd + 1) * (dd + 1)));
    numerator = checked_sub(numerator, dd + 1);
    const Int denominator = checked_pow(dd - 1, 3);
    if (numerator % denominator != 0) {
        throw NonExactDivision("complete dendrimer index numerator not divisible by (d-1)^3");
    }
    return numerator / denominator;
}

std::vector<Poly> gf_expand(unsigned d, unsigned max_level) {
    require_arity(d);
    if (max_level < 1) throw InvalidParameter("generating function expansion needs K >= 1");
    const Int pair_block = binomial(Int{d} + 1, 2);
    std::vector<Poly> series(max_level + 1);
    series[1] = Poly{0, Int{d} + 1, pair_block};
    if (max_level >= 2) series[2] = Poly{0, 0, pair_block};

    // 1/(1-z)
    for (unsigned k = 1; k <= max_level; ++k) series[k] = add(series[k], series[k - 1]);
    // 1/(1-dz)
    for (unsigned k = 1; k <= max_level; ++k) series[k] = add(series[k], scale(series[k - 1], d));
    // 1/(1-d^2 q^2 z)
    const Int d_sq = checked_mul(d, d);
    for (unsigned k = 1; k <= max_level; ++k) series[k] = add(series[k], shift(scale(series[k - 1], d_sq), 2));
    return series;
}

Profile unimodality_profile(std::uint64_t n, unsigned d) {
    require_arity(d);
    if (n < 2) throw InvalidParameter("unimodality profile needs n >= 2");
    Profile p;
    p.n = n;
    p.d = d;
    p.level = level_of(n, d);
    p.thresholds = thresholds(d, p.level);
    p.regime = static_cast<Int>(n) < p.thresholds.p_k ? PeakRegime::Lower : PeakRegime::Upper;
    p.poly = closed_form(n, d);
    p.verdict = analyze_sequence(p.poly, 1);

    auto mismatch = [&](const std::string& what) {
        throw ProfileMismatch("D_{" + std::to_string(n) + "," + std::to_string(d) + "}: " + what +
                              " (W = " + to_string(p.poly) + ")");
    };
    if (!p.verdict.unimodal) mismatch("coefficients are not unimodal");
    const Int top = p.poly[p.verdict.peak->first];
    const std::size_t two_k = 2 * std::size_t{p.level};
    if (p.regime == PeakRegime::Lower) {
        bool hit = (two_k >= 1 && p.poly[two_k] == top) || p.poly[two_k + 1] == top;
        if (!hit) mismatch("maximum is not at exponent 2k or 2k+1");
    } else {
        if (!p.verdict.nondecreasing) mismatch("coefficients are not increasing in the upper regime");
        if (p.poly.degree() != two_k + 2 || p.poly[two_k + 2] != top) mismatch("maximum is not at exponent 2k+2");
    }
    return p;
}

TurningCoefficients turning_coefficients(unsigned k, unsigned d) {
    const Thresholds t = thresholds(d, k);
    const Poly w = closed_form(static_cast<std::uint64_t>(t.p_k), d);
    const std::size_t two_k = 2 * std::size_t{k};
    return {w[two_k], w[two_k + 1], w[two_k + 2]};
}

CrossCheck cross_check(std::uint64_t n, unsigned d, bool run_oracle) {
    CrossCheck c;
    c.closed = closed_form(n, d);
    c.pair_count = c.closed.evaluate(1) == binomial(static_cast<Int>(n), 2);
    c.telescoping = n < 2 || sub(c.closed, closed_form(n - 1, d)) == delta_wiener(n, d);
    if (run_oracle && n <= kLargeN) {
        c.oracle = wiener_polynomial(build(n, d));
        c.matches_oracle = *c.oracle == c.closed;
    }
    return c;
}

}  // namespace wienerlab::dendrimer
