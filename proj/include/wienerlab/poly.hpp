#pragma once

#include <cstddef>
#include <initializer_list>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "wienerlab/integer.hpp"

namespace wienerlab {

// Dense univariate polynomial in q with exact integer coefficients.
// coeffs()[i] is [q^i]; trailing zeros are always trimmed, so the zero
// polynomial has an empty coefficient vector.
class Poly {
public:
    Poly() = default;
    explicit Poly(std::vector<Int> coeffs);
    Poly(std::initializer_list<Int> coeffs) : Poly(std::vector<Int>(coeffs)) {}

    static Poly constant(Int c) { return Poly{c}; }
    static Poly monomial(Int c, std::size_t exponent);

    const std::vector<Int>& coeffs() const noexcept { return coeffs_; }
    bool is_zero() const noexcept { return coeffs_.empty(); }
    // The zero polynomial reports degree 0.
    std::size_t degree() const noexcept { return coeffs_.empty() ? 0 : coeffs_.size() - 1; }
    Int operator[](std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Int{0}; }

    Int evaluate(Int q) const;

    friend bool operator==(const Poly&, const Poly&) = default;

private:
    void trim();
    std::vector<Int> coeffs_;
};

Poly add(const Poly& a, const Poly& b);
Poly sub(const Poly& a, const Poly& b);
Poly mul(const Poly& a, const Poly& b);
Poly scale(const Poly& p, Int factor);
// Multiply by q^k.
Poly shift(const Poly& p, std::size_t k);

inline Poly operator+(const Poly& a, const Poly& b) { return add(a, b); }
inline Poly operator-(const Poly& a, const Poly& b) { return sub(a, b); }
inline Poly operator*(const Poly& a, const Poly& b) { return mul(a, b); }
inline Poly operator*(Int factor, const Poly& p) { return scale(p, factor); }

Poly pow(const Poly& base, unsigned exponent);

// sum_i i * [q^i] p, i.e. p'(1).
Int derivative_at_one(const Poly& p);

// [n] = 1 + q + ... + q^(n-1); [0] = 0.
Poly q_analog(std::size_t n);

// Exact quotient p / (1 - q). Throws NonExactDivision when p(1) != 0.
Poly divide_by_one_minus_q(const Poly& p);

// "15q + 30q^2" style rendering; "0" for the zero polynomial.
std::string to_string(const Poly& p);

// Reduced fraction with positive denominator.
struct Rational {
    Int num = 0;
    Int den = 1;

    static Rational make(Int num, Int den);
    friend bool operator==(const Rational&, const Rational&) = default;
    friend bool operator<(const Rational& a, const Rational& b) {
        return checked_mul(a.num, b.den) < checked_mul(b.num, a.den);
    }
};

std::string to_string(const Rational& r);

// Roots r_j (with multiplicity, ascending) when p = c * prod (q - r_j) with
// every r_j a negative rational; nullopt otherwise. Works by peeling primitive
// linear factors (b q + a), a | [q^0], b | leading coefficient, with exact
// integer division.
std::optional<std::vector<Rational>> factor_negative_rational_roots(const Poly& p);

struct SequenceVerdict {
    bool unimodal = true;
    // Weakly increasing across the whole window.
    bool nondecreasing = true;
    // First and last index (in q-exponent terms) holding the maximum value.
    std::optional<std::pair<std::size_t, std::size_t>> peak;
    bool log_concave = true;
    // Exponent m of the first violation of a_m^2 >= a_{m-1} a_{m+1}.
    std::optional<std::size_t> first_violation;
    // Roots of the window polynomial sum_{i>=start} a_i q^(i-start), when it
    // factors over the negative rationals.
    std::optional<std::vector<Rational>> neg_rational_roots;
};

// Analyses the coefficient window [q^start] .. [q^deg]. Coefficients in the
// window are expected to be nonnegative; unimodality permits plateaus.
SequenceVerdict analyze_sequence(const Poly& p, std::size_t start);

}  // namespace wienerlab
