#include "wienerlab/poly.hpp"

#include <algorithm>
#include <sstream>

namespace wienerlab {

Poly::Poly(std::vector<Int> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(Int c, std::size_t exponent) {
    if (c == 0) return {};
    std::vector<Int> coeffs(exponent + 1, 0);
    coeffs[exponent] = c;
    return Poly(std::move(coeffs));
}

void Poly::trim() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Int Poly::evaluate(Int q) const {
    Int acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = checked_add(checked_mul(acc, q), *it);
    }
    return acc;
}

Poly add(const Poly& a, const Poly& b) {
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Int> out(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_add(a[i], b[i]);
    return Poly(std::move(out));
}

Poly sub(const Poly& a, const Poly& b) {
    std::vector<Int> out(std::max(a.coeffs().size(), b.coeffs().size()), 0);
    for (std::size_t i = 0; i < out.size(); ++i) out[i] = checked_sub(a[i], b[i]);
    return Poly(std::move(out));
}

Poly mul(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    const auto& x = a.coeffs();
    const auto& y = b.coeffs();
    std::vector<Int> out(x.size() + y.size() - 1, 0);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (x[i] == 0) continue;
        for (std::size_t j = 0; j < y.size(); ++j) {
            out[i + j] = checked_add(out[i + j], checked_mul(x[i], y[j]));
        }
    }
    return Poly(std::move(out));
}

Poly scale(const Poly& p, Int factor) {
    std::vector<Int> out(p.coeffs());
    for (auto& c : out) c = checked_mul(c, factor);
    return Poly(std::move(out));
}

Poly shift(const Poly& p, std::size_t k) {
    if (p.is_zero()) return {};
    std::vector<Int> out(k, 0);
    out.insert(out.end(), p.coeffs().begin(), p.coeffs().end());
    return Poly(std::move(out));
}

Poly pow(const Poly& base, unsigned exponent) {
    Poly result{1};
    for (unsigned i = 0; i < exponent; ++i) result = mul(result, base);
    return result;
}

Int derivative_at_one(const Poly& p) {
    Int total = 0;
    const auto& c = p.coeffs();
    for (std::size_t i = 1; i < c.size(); ++i) {
        total = checked_add(total, checked_mul(static_cast<Int>(i), c[i]));
    }
    return total;
}

Poly q_analog(std::size_t n) { return Poly(std::vector<Int>(n, 1)); }

Poly divide_by_one_minus_q(const Poly& p) {
    // p = (1 - q) s  <=>  s_i = p_0 + ... + p_i, with the total sum zero.
    const auto& c = p.coeffs();
    if (c.empty()) return {};
    std::vector<Int> s(c.size() - 1, 0);
    Int running = 0;
    for (std::size_t i = 0; i + 1 < c.size(); ++i) {
        running = checked_add(running, c[i]);
        s[i] = running;
    }
    if (checked_add(running, c.back()) != 0) {
        throw NonExactDivision("polynomial " + to_string(p) + " is not divisible by 1 - q");
    }
    return Poly(std::move(s));
}

std::string to_string(const Poly& p) {
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    const auto& c = p.coeffs();
    for (std::size_t i = 0; i < c.size(); ++i) {
        if (c[i] == 0) continue;
        Int mag = c[i];
        if (first) {
            if (mag < 0) {
                os << '-';
                mag = int_abs(mag);
            }
        } else {
            os << (mag < 0 ? " - " : " + ");
            mag = int_abs(mag);
        }
        first = false;
        if (i == 0 || mag != 1) os << to_string(mag);
        if (i >= 1) os << 'q';
        if (i >= 2) os << '^' << i;
    }
    return os.str();
}

Rational Rational::make(Int num, Int den) {
    if (den == 0) throw InvalidParameter("rational with zero denominator");
    if (den < 0) {
        num = checked_sub(0, num);
        den = checked_sub(0, den);
    }
    Int g = int_gcd(num, den);
    if (g > 1) {
        num /= g;
        den /= g;
    }
    return {num, den};
}

std::string to_string(const Rational& r) {
    if (r.den == 1) return to_string(r.num);
    return to_string(r.num) + "/" + to_string(r.den);
}

namespace {

using U128 = unsigned __int128;

U128 mulmod(U128 a, U128 b, U128 m) {
    if (m <= (U128{1} << 64)) {
        return (a % m) * (b % m) % m;
    }
    U128 result = 0;
    a %= m;
    while (b > 0) {
        if (b & 1U) {
            result = (result >= m - a) ? result - (m - a) : result + a;
        }
        a = (a >= m - a) ? a - (m - a) : a + a;
        b >>= 1U;
    }
    return result;
}

U128 powmod(U128 base, U128 exp, U128 m) {
    U128 result = 1 % m;
    base %= m;
    while (exp > 0) {
        if (exp & 1U) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1U;
    }
    return result;
}

bool is_probable_prime(U128 n) {
    if (n < 2) return false;
    for (unsigned p : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U}) {
        if (n % p == 0) return n == p;
    }
    U128 d = n - 1;
    unsigned s = 0;
    while ((d & 1U) == 0) {
        d >>= 1U;
        ++s;
    }
    // Deterministic below 3.3e24; a strong probable-prime test above that.
    for (unsigned a : {2U, 3U, 5U, 7U, 11U, 13U, 17U, 19U, 23U, 29U, 31U, 37U, 41U}) {
        if (a % n == 0) continue;
        U128 x = powmod(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (unsigned r = 1; r < s; ++r) {
            x = mulmod(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

U128 gcd_u(U128 a, U128 b) {
    while (b != 0) {
        U128 t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// Brent's variant of Pollard rho; returns a nontrivial factor of composite n.
U128 pollard_brent(U128 n) {
    if (n % 2 == 0) return 2;
    for (U128 c = 1;; ++c) {
        U128 y = 2;
        U128 x = 2;
        U128 q = 1;
        U128 g = 1;
        U128 ys = 2;
        std::size_t r = 1;
        constexpr std::size_t kBatch = 64;
        auto step = [&](U128 v) {
            U128 t = mulmod(v, v, n) + c;
            return t >= n ? t - n : t;
        };
        do {
            x = y;
            for (std::size_t i = 0; i < r; ++i) y = step(y);
            std::size_t k = 0;
            do {
                ys = y;
                for (std::size_t i = 0; i < std::min(kBatch, r - k); ++i) {
                    y = step(y);
                    q = mulmod(q, x > y ? x - y : y - x, n);
                }
                g = gcd_u(q, n);
                k += kBatch;
            } while (k < r && g == 1);
            r *= 2;
        } while (g == 1);
        if (g == n) {
            do {
                ys = step(ys);
                g = gcd_u(x > ys ? x - ys : ys - x, n);
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

void collect_prime_factors(U128 n, std::vector<U128>& primes) {
    if (n == 1) return;
    if (is_probable_prime(n)) {
        primes.push_back(n);
        return;
    }
    U128 f = pollard_brent(n);
    collect_prime_factors(f, primes);
    collect_prime_factors(n / f, primes);
}

// Positive divisors of n > 0, ascending.
std::vector<Int> divisors(Int n) {
    std::vector<U128> primes;
    U128 rest = static_cast<U128>(n);
    for (U128 p = 2; p < 1024 && p * p <= rest; ++p) {
        while (rest % p == 0) {
            primes.push_back(p);
            rest /= p;
        }
    }
    collect_prime_factors(rest, primes);
    std::sort(primes.begin(), primes.end());

    std::vector<Int> divs{1};
    for (std::size_t i = 0; i < primes.size();) {
        std::size_t j = i;
        while (j < primes.size() && primes[j] == primes[i]) ++j;
        std::size_t existing = divs.size();
        Int power = 1;
        for (std::size_t e = i; e < j; ++e) {
            power *= static_cast<Int>(primes[i]);
            for (std::size_t k = 0; k < existing; ++k) divs.push_back(divs[k] * power);
        }
        i = j;
    }
    std::sort(divs.begin(), divs.end());
    return divs;
}

// Exact quotient of c by (b q + a), or nullopt if the division leaves a
// remainder (or would overflow, which cannot happen for a true factor of a
// positive polynomial).
std::optional<std::vector<Int>> divide_linear(const std::vector<Int>& c, Int a, Int b) {
    const std::size_t deg = c.size() - 1;
    std::vector<Int> s(deg, 0);
    try {
        if (c[deg] % b != 0) return std::nullopt;
        s[deg - 1] = c[deg] / b;
        for (std::size_t i = deg - 1; i >= 1; --i) {
            Int num = checked_sub(c[i], checked_mul(a, s[i]));
            if (num % b != 0) return std::nullopt;
            s[i - 1] = num / b;
        }
        if (checked_mul(a, s[0]) != c[0]) return std::nullopt;
    } catch (const Overflow&) {
        return std::nullopt;
    }
    return s;
}

}  // namespace

std::optional<std::vector<Rational>> factor_negative_rational_roots(const Poly& p) {
    if (p.is_zero()) return std::nullopt;
    std::vector<Int> c = p.coeffs();
    // All roots negative forces every coefficient nonzero with a common sign.
    bool negative = c.back() < 0;
    for (Int x : c) {
        if (x == 0 || (x < 0) != negative) return std::nullopt;
    }
    Int content = 0;
    for (Int& x : c) {
        if (negative) x = -x;
        content = int_gcd(content, x);
    }
    for (Int& x : c) x /= content;

    std::vector<Rational> roots;
    if (c.size() == 1) return roots;

    const auto lead_divs = divisors(c.back());
    const auto const_divs = divisors(c.front());
    while (c.size() > 1) {
        Int value_at_one = 0;
        for (Int x : c) value_at_one = checked_add(value_at_one, x);
        bool found = false;
        for (Int b : lead_divs) {
            if (b > c.back()) break;
            if (c.back() % b != 0) continue;
            for (Int a : const_divs) {
                if (a > c.front()) break;
                if (c.front() % a != 0 || int_gcd(a, b) != 1) continue;
                if (value_at_one % (a + b) != 0) continue;
                if (auto quotient = divide_linear(c, a, b)) {
                    roots.push_back(Rational::make(-a, b));
                    c = std::move(*quotient);
                    found = true;
                    break;
                }
            }
            if (found) break;
        }
        if (!found) return std::nullopt;
    }
    std::sort(roots.begin(), roots.end());
    return roots;
}

namespace {

// Sign-aware exact comparison of x*y against z*w for nonnegative operands
// whose products may exceed 128 bits.
struct Wide {
    U128 hi;
    U128 lo;
};

Wide mul_wide(U128 a, U128 b) {
    constexpr U128 kMask = (U128{1} << 64) - 1;
    U128 a_lo = a & kMask, a_hi = a >> 64U;
    U128 b_lo = b & kMask, b_hi = b >> 64U;
    U128 ll = a_lo * b_lo;
    U128 lh = a_lo * b_hi;
    U128 hl = a_hi * b_lo;
    U128 hh = a_hi * b_hi;
    U128 mid = (ll >> 64U) + (lh & kMask) + (hl & kMask);
    U128 lo = (ll & kMask) | (mid << 64U);
    U128 hi = hh + (lh >> 64U) + (hl >> 64U) + (mid >> 64U);
    return {hi, lo};
}

int compare_products(Int x, Int y, Int z, Int w) {
    int sign_left = (x == 0 || y == 0) ? 0 : (((x < 0) != (y < 0)) ? -1 : 1);
    int sign_right = (z == 0 || w == 0) ? 0 : (((z < 0) != (w < 0)) ? -1 : 1);
    if (sign_left != sign_right) return sign_left < sign_right ? -1 : 1;
    if (sign_left == 0) return 0;
    Wide l = mul_wide(static_cast<U128>(int_abs(x)), static_cast<U128>(int_abs(y)));
    Wide r = mul_wide(static_cast<U128>(int_abs(z)), static_cast<U128>(int_abs(w)));
    int mag = (l.hi != r.hi) ? (l.hi < r.hi ? -1 : 1) : (l.lo == r.lo ? 0 : (l.lo < r.lo ? -1 : 1));
    return sign_left > 0 ? mag : -mag;
}

}  // namespace

SequenceVerdict analyze_sequence(const Poly& p, std::size_t start) {
    SequenceVerdict verdict;
    const auto& c = p.coeffs();
    if (start >= c.size()) return verdict;
    const std::size_t end = c.size();

    std::size_t i = start;
    while (i + 1 < end && c[i] <= c[i + 1]) ++i;
    verdict.nondecreasing = (i + 1 == end);
    while (i + 1 < end && c[i] >= c[i + 1]) ++i;
    verdict.unimodal = (i + 1 == end);

    Int best = *std::max_element(c.begin() + static_cast<std::ptrdiff_t>(start), c.end());
    std::size_t first = start;
    while (c[first] != best) ++first;
    std::size_t last = end - 1;
    while (c[last] != best) --last;
    verdict.peak = std::make_pair(first, last);

    for (std::size_t m = start + 1; m + 1 < end; ++m) {
        if (compare_products(c[m], c[m], c[m - 1], c[m + 1]) < 0) {
            verdict.log_concave = false;
            verdict.first_violation = m;
            break;
        }
    }

    Poly window(std::vector<Int>(c.begin() + static_cast<std::ptrdiff_t>(start), c.end()));
    if (!window.is_zero()) verdict.neg_rational_roots = factor_negative_rational_roots(window);
    return verdict;
}

}  // namespace wienerlab
