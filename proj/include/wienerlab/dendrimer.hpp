#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include "wienerlab/graph.hpp"
#include "wienerlab/poly.hpp"

namespace wienerlab::dendrimer {

// Level thresholds of the d-ary dendrimer:
//   n_k = 2 + (d+1)(d^k - 1)/(d - 1)   first vertex at level k+1
//   m_k = 3 + 2d(d^k - 1)/(d - 1)      first descendant of vertex 3 at level k+1
//   p_k = m_k + 2 d^k - 1              start of the increasing regime
struct Thresholds {
    Int n_k = 0;
    Int m_k = 0;
    Int p_k = 0;
};

Thresholds thresholds(unsigned d, unsigned k);

// The k with n_k <= n < n_{k+1}. Requires n >= 2.
unsigned level_of(std::uint64_t n, unsigned d);

// Base-d digit label of vertex m >= 2: the digits of m - n_k + (d-1) d^k,
// padded to k+2 places.
struct Label {
    unsigned d = 2;
    unsigned level = 0;          // k
    std::vector<unsigned> digits;  // digits[i] = l_i, size k+2

    // (l_{k+1}, ..., l_0), the order in which labels are written.
    std::vector<unsigned> printed() const;
    // l_0 + l_1 d + ... + l_{i-1} d^(i-1)
    Int lambda(unsigned i) const;
    unsigned digit(unsigned i) const { return i < digits.size() ? digits[i] : 0U; }
};

Label label(std::uint64_t m, unsigned d);

// parent[v] for the 0-based vertex v (vertex v+1 in 1-based numbering);
// parent[0] is 0 (the root has none). Each new vertex hangs off the smallest
// numbered vertex of degree <= d, so the root gets up to d+1 children and
// every other vertex up to d.
std::vector<Vertex> parents(std::uint64_t n, unsigned d);

// D_{n,d} with vertex m stored at index m-1.
Graph build(std::uint64_t n, unsigned d);

// W(D_{n,d};q) - W(D_{n-1,d};q), the distance profile seen from vertex n.
Poly delta_wiener(std::uint64_t n, unsigned d);

// Closed form of W(D_{n,d};q), O(k^2) digit work, no graph. The even-exponent
// sum runs to k' = k-1 below m_k and to k from m_k on, across the whole level
// n_k <= n < n_{k+1}.
Poly closed_form(std::uint64_t n, unsigned d);

// Wiener index of the complete dendrimer D_{n_k - 1, d}. Throws
// NonExactDivision if the division by (d-1)^3 is not exact.
Int complete_wiener_index(unsigned k, unsigned d);

// Coefficients of z^0..z^K in
//   z ((d+1) q + C(d+1,2) q^2 (1+z)) / ((1-z)(1-dz)(1-d^2 q^2 z)),
// by iterated multiplication with the three geometric series. Entry k is
// W(D_{n_k - 1, d}; q); entry 0 is zero.
std::vector<Poly> gf_expand(unsigned d, unsigned max_level);

enum class PeakRegime {
    // n_k <= n < p_k: maximum at exponent 2k or 2k+1.
    Lower,
    // p_k <= n < n_{k+1}: coefficients increase up to exponent 2k+2.
    Upper,
};

struct Profile {
    std::uint64_t n = 0;
    unsigned d = 2;
    unsigned level = 0;
    Thresholds thresholds;
    PeakRegime regime = PeakRegime::Lower;
    Poly poly;
    SequenceVerdict verdict;
};

// Classifies n and checks the predicted peak against analyze_sequence of the
// closed form. Throws ProfileMismatch if the prediction fails.
Profile unimodality_profile(std::uint64_t n, unsigned d);

// [q^{2k}], [q^{2k+1}], [q^{2k+2}] of W(D_{p_k,d};q).
struct TurningCoefficients {
    Int below = 0;
    Int odd = 0;
    Int even = 0;
};

TurningCoefficients turning_coefficients(unsigned k, unsigned d);

// Oracle cross-check of one (n, d). Above kLargeN the O(n^2) BFS is skipped
// and only the telescoping identity and the coefficient sum are checked.
inline constexpr std::uint64_t kLargeN = 100000;

struct CrossCheck {
    Poly closed;
    std::optional<Poly> oracle;
    bool telescoping = false;
    bool pair_count = false;
    bool matches_oracle = true;

    bool ok() const { return telescoping && pair_count && matches_oracle; }
};

CrossCheck cross_check(std::uint64_t n, unsigned d, bool run_oracle);

}  // namespace wienerlab::dendrimer
