#include "wienerlab/integer.hpp"

#include <algorithm>
#include <ostream>

namespace wienerlab {

Int checked_pow(Int base, unsigned exponent) {
    Int result = 1;
    while (exponent > 0) {
        if (exponent & 1U) result = checked_mul(result, base);
        exponent >>= 1U;
        if (exponent > 0) base = checked_mul(base, base);
    }
    return result;
}

Int binomial(Int n, Int k) {
    if (k < 0 || n < 0 || k > n) return 0;
    k = std::min(k, n - k);
    Int result = 1;
    for (Int i = 1; i <= k; ++i) {
        // result * (n - k + i) is divisible by i at every step
        Int g = int_gcd(result, i);
        Int factor = (n - k + i) / (i / g);
        result = checked_mul(result / g, factor);
    }
    return result;
}

Int int_gcd(Int a, Int b) {
    a = int_abs(a);
    b = int_abs(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

std::string to_string(Int value) {
    if (value == 0) return "0";
    bool negative = value < 0;
    // Work with negative magnitudes so that the minimum value is representable.
    std::string digits;
    Int v = value;
    while (v != 0) {
        int digit = static_cast<int>(v % 10);
        if (digit < 0) digit = -digit;
        digits.push_back(static_cast<char>('0' + digit));
        v /= 10;
    }
    if (negative) digits.push_back('-');
    std::reverse(digits.begin(), digits.end());
    return digits;
}

Int parse_int(std::string_view text) {
    if (text.empty()) throw ParseError("empty integer literal");
    bool negative = false;
    std::size_t pos = 0;
    if (text[0] == '-' || text[0] == '+') {
        negative = text[0] == '-';
        pos = 1;
    }
    if (pos == text.size()) throw ParseError("integer literal has no digits: '" + std::string(text) + "'");
    Int value = 0;
    try {
        for (; pos < text.size(); ++pos) {
            char c = text[pos];
            if (c < '0' || c > '9') throw ParseError("invalid integer literal: '" + std::string(text) + "'");
            value = checked_mul(value, 10);
            value = negative ? checked_sub(value, c - '0') : checked_add(value, c - '0');
        }
    } catch (const Overflow&) {
        throw ParseError("integer literal out of range: '" + std::string(text) + "'");
    }
    return value;
}

std::ostream& operator<<(std::ostream& os, Int value) { return os << to_string(value); }

}  // namespace wienerlab
