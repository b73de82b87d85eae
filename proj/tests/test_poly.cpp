#include <doctest.h>

#include <random>

#include "wienerlab/poly.hpp"

using namespace wienerlab;

namespace {

// Schoolbook product over long long, independent of Poly::mul.
std::vector<long long> naive_mul(const std::vector<long long>& a, const std::vector<long long>& b) {
    if (a.empty() || b.empty()) return {};
    std::vector<long long> out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i)
        for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
    while (!out.empty() && out.back() == 0) out.pop_back();
    return out;
}

Poly from(const std::vector<long long>& c) { return Poly(std::vector<Int>(c.begin(), c.end())); }

}  // namespace

TEST_SUITE("polynomial") {
    TEST_CASE("construction trims and indexes") {
        Poly p{0, 15, 30, 0, 0};
        CHECK(p.degree() == 2);
        CHECK(p[1] == 15);
        CHECK(p[7] == 0);
        CHECK(Poly{0, 0}.is_zero());
        CHECK(Poly().degree() == 0);
        CHECK(to_string(Poly{0, 15, 30}) == "15q + 30q^2");
        CHECK(to_string(Poly{}) == "0");
        CHECK(to_string(Poly{1, -3, 0, 1}) == "1 - 3q + q^3");
    }

    TEST_CASE("arithmetic matches the schoolbook product") {
        std::mt19937_64 rng(7);
        std::uniform_int_distribution<long long> coeff(-50, 50);
        std::uniform_int_distribution<int> len(0, 8);
        for (int trial = 0; trial < 200; ++trial) {
            std::vector<long long> a(len(rng)), b(len(rng));
            for (auto& x : a) x = coeff(rng);
            for (auto& x : b) x = coeff(rng);
            CHECK(mul(from(a), from(b)) == from(naive_mul(a, b)));
            CHECK(sub(add(from(a), from(b)), from(b)) == from(a));
        }
        CHECK(pow(Poly{1, 1}, 3) == Poly{1, 3, 3, 1});
        CHECK(shift(Poly{1, 2}, 2) == Poly{0, 0, 1, 2});
        CHECK(scale(Poly{1, 2}, -3) == Poly{-3, -6});
    }

    TEST_CASE("derivative, evaluation and q-analogs") {
        Poly petersen{0, 15, 30};
        CHECK(petersen.evaluate(1) == 45);
        CHECK(derivative_at_one(petersen) == 75);
        CHECK(q_analog(0).is_zero());
        CHECK(q_analog(4) == Poly{1, 1, 1, 1});
    }

    TEST_CASE("exact division by 1 - q") {
        // (1 - q)(2 + 3q + q^2) = 2 + q - 2q^2 - q^3
        CHECK(divide_by_one_minus_q(Poly{2, 1, -2, -1}) == Poly{2, 3, 1});
        CHECK_THROWS_AS(divide_by_one_minus_q(Poly{1, 1}), NonExactDivision);
    }

    TEST_CASE("overflow is detected") {
        Poly big{Int{1} << 100};
        CHECK_THROWS_AS(mul(big, big), Overflow);
        CHECK_THROWS_AS(checked_pow(10, 40), Overflow);
    }

    TEST_CASE("rationals normalize") {
        CHECK(Rational::make(2, -4) == Rational{-1, 2});
        CHECK(to_string(Rational::make(-6, 3)) == "-2");
        CHECK(Rational::make(-1, 2) < Rational::make(-1, 3));
    }

    TEST_CASE("negative rational root factorization") {
        auto roots = factor_negative_rational_roots(Poly{1, 3, 2});
        REQUIRE(roots);
        CHECK(*roots == std::vector<Rational>{Rational::make(-1, 1), Rational::make(-1, 2)});

        // 3 (2q + 3)(q + 5)(7q + 1)
        Poly p = scale(mul(mul(Poly{3, 2}, Poly{5, 1}), Poly{1, 7}), 3);
        roots = factor_negative_rational_roots(p);
        REQUIRE(roots);
        CHECK(*roots == std::vector<Rational>{Rational::make(-5, 1), Rational::make(-3, 2), Rational::make(-1, 7)});

        roots = factor_negative_rational_roots(pow(Poly{1, 1}, 4));
        REQUIRE(roots);
        CHECK(roots->size() == 4);

        CHECK_FALSE(factor_negative_rational_roots(Poly{1, 1, 1}));
        CHECK_FALSE(factor_negative_rational_roots(Poly{1, -1}));
        CHECK_FALSE(factor_negative_rational_roots(Poly{1, 0, 1}));

        // Large prime factors in the end coefficients exercise the rho path.
        const Int p1 = 1000003, p2 = 998244353;
        Poly large = mul(Poly{p1, 1}, Poly{1, p2});
        roots = factor_negative_rational_roots(large);
        REQUIRE(roots);
        CHECK(*roots == std::vector<Rational>{Rational::make(-p1, 1), Rational::make(-1, p2)});

        // Prime constant term equal to a Miller-Rabin base.
        roots = factor_negative_rational_roots(Poly{41, 1});
        REQUIRE(roots);
        CHECK(*roots == std::vector<Rational>{Rational::make(-41, 1)});
    }

    TEST_CASE("sequence analysis") {
        auto v = analyze_sequence(Poly{0, 1, 3, 3, 1}, 1);
        CHECK(v.unimodal);
        CHECK_FALSE(v.nondecreasing);
        CHECK(v.peak == std::make_pair(std::size_t{2}, std::size_t{3}));
        CHECK(v.log_concave);
        CHECK(v.neg_rational_roots);

        v = analyze_sequence(Poly{1, 3, 1, 3}, 0);
        CHECK_FALSE(v.unimodal);
        CHECK_FALSE(v.log_concave);
        CHECK(v.first_violation == std::size_t{2});

        v = analyze_sequence(Poly{1, 2, 4}, 0);
        CHECK(v.nondecreasing);
        CHECK(v.unimodal);

        // a_1^2 = a_0 a_2 near the top of the range: exact comparison required.
        const Int a = Int{1} << 62;
        v = analyze_sequence(Poly{a, a, a}, 0);
        CHECK(v.log_concave);
        v = analyze_sequence(Poly{a, a - 1, a}, 0);
        CHECK_FALSE(v.log_concave);
    }
}
