#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>

#include "wienerlab/errors.hpp"

namespace wienerlab {

// Exact integer used for every polynomial coefficient and Wiener index.
// All arithmetic goes through the checked helpers below; leaving the 128-bit
// range raises Overflow instead of wrapping.
using Int = __int128;

inline Int checked_add(Int a, Int b) {
    Int r;
    if (__builtin_add_overflow(a, b, &r)) throw Overflow("integer overflow in addition");
    return r;
}

inline Int checked_sub(Int a, Int b) {
    Int r;
    if (__builtin_sub_overflow(a, b, &r)) throw Overflow("integer overflow in subtraction");
    return r;
}

inline Int checked_mul(Int a, Int b) {
    Int r;
    if (__builtin_mul_overflow(a, b, &r)) throw Overflow("integer overflow in multiplication");
    return r;
}

Int checked_pow(Int base, unsigned exponent);

// C(n, k) for n >= 0; zero when k < 0 or k > n.
Int binomial(Int n, Int k);

inline Int int_abs(Int a) {
    if (a < 0) return checked_sub(0, a);
    return a;
}

Int int_gcd(Int a, Int b);

std::string to_string(Int value);

// Decimal with optional leading '-'. Throws ParseError on junk or overflow.
Int parse_int(std::string_view text);

// True when the value is representable exactly as an IEEE double (|v| <= 2^53).
inline bool is_json_safe(Int value) {
    constexpr Int kLimit = Int{1} << 53;
    return value >= -kLimit && value <= kLimit;
}

std::ostream& operator<<(std::ostream& os, Int value);

}  // namespace wienerlab
