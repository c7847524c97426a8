#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <vector>

#include "czeta/abel.hpp"
#include "czeta/errors.hpp"
#include "czeta/rational_function.hpp"
#include "support/generators.hpp"

using namespace czeta;

namespace {

BigRational q(long p, long d) { return BigRational(BigInt(p), BigInt(d)); }

Polynomial poly(std::vector<BigRational> c) { return Polynomial(std::move(c)); }

const Polynomial one_plus_x = poly({1, 1});

// Euler transform: sum_{k>=1} (-1)^(k+1) a_k = sum_n (-1)^n (Delta^n a)_1 / 2^(n+1),
// finite for a_k = k^m.
BigRational euler_transform_oracle(int m) {
    std::vector<BigRational> row;
    for (int k = 1; k <= m + 2; ++k) {
        row.push_back(BigRational(k).pow(m));
    }
    BigRational total;
    BigRational sign(1);
    BigRational half_pow = q(1, 2);
    while (!row.empty()) {
        total += sign * row.front() * half_pow;
        std::vector<BigRational> next;
        for (std::size_t i = 0; i + 1 < row.size(); ++i) {
            next.push_back(row[i + 1] - row[i]);
        }
        row = std::move(next);
        sign = -sign;
        half_pow = half_pow * q(1, 2);
    }
    return total;
}

}  // namespace

TEST_CASE("polynomial basics") {
    const Polynomial p = poly({1, -4, 1});
    CHECK(p.str() == "x^2 - 4*x + 1");
    CHECK(p.degree() == 2);
    CHECK(Polynomial().degree() == -1);
    CHECK(p.evaluate(BigRational(2)) == BigRational(-3));
    CHECK(p.derivative() == poly({-4, 2}));
    CHECK(poly({0, 0, 0}).is_zero());
    CHECK(p * one_plus_x == poly({1, -3, -3, 1}));
    CHECK(p - p == Polynomial());
}

TEST_CASE("division and gcd") {
    const Polynomial a = poly({-1, 0, 1});  // x^2 - 1
    const auto d = divide(a, poly({-1, 1}));
    CHECK(d.quotient == one_plus_x);
    CHECK(d.remainder.is_zero());
    const auto r = divide(poly({2, 0, 1}), one_plus_x);  // x^2 + 2 = (x - 1)(x + 1) + 3
    CHECK(r.quotient == poly({-1, 1}));
    CHECK(r.remainder == poly({3}));
    CHECK(gcd(a * poly({2, 1}), poly({-2, 2}) * one_plus_x) == poly({-1, 0, 1}));
    CHECK_THROWS(divide(a, Polynomial()));
}

TEST_CASE("rational functions reduce and normalize") {
    const RationalFunction f(poly({-2, 0, 2}), poly({-2, 2}));  // (2x^2 - 2)/(2x - 2)
    CHECK(f.numerator() == one_plus_x);
    CHECK(f.denominator() == poly({1}));
    const RationalFunction g(poly({0}), poly({3, 5}));
    CHECK(g.numerator().is_zero());
    CHECK(g.denominator() == poly({1}));
    const RationalFunction h(poly({1}), poly({2, 2}));
    CHECK(h.denominator() == one_plus_x);
    CHECK(h.numerator() == poly({q(1, 2)}));
    CHECK_THROWS(RationalFunction(poly({1}), Polynomial()));
    CHECK_THROWS(RationalFunction::reciprocal_one_plus_x().evaluate(BigRational(-1)));
}

TEST_CASE("Euler operator against hand-derived results") {
    const auto base = RationalFunction::reciprocal_one_plus_x();
    // x d/dx 1/(1+x) = -x/(1+x)^2
    CHECK(apply_euler_operator(base, 1) == RationalFunction(poly({0, -1}), one_plus_x * one_plus_x));
    // (x d/dx)^2 x/(1+x) = x(1 - x)/(1+x)^3
    const RationalFunction x_over(poly({0, 1}), one_plus_x);
    CHECK(apply_euler_operator(x_over, 2) ==
          RationalFunction(poly({0, 1, -1}), one_plus_x * one_plus_x * one_plus_x));
    CHECK(apply_euler_operator(base, 0) == base);
}

TEST_CASE("property: Euler operator composes additively") {
    testgen::Gen gen(9);
    for (int i = 0; i < 25; ++i) {
        const RationalFunction f(poly({gen.rational(), gen.rational(), gen.rational()}),
                                 poly({gen.nonzero_rational(), gen.rational()}));
        const int a = static_cast<int>(gen.integer(0, 3));
        const int b = static_cast<int>(gen.integer(0, 3));
        REQUIRE(apply_euler_operator(apply_euler_operator(f, a), b) == apply_euler_operator(f, a + b));
    }
}

TEST_CASE("Abel sums: listed values") {
    CHECK(abel_sum_exact(0) == q(1, 2));
    CHECK(abel_sum_exact(1) == q(1, 4));
    CHECK(abel_sum_exact(2) == BigRational(0));
    CHECK(abel_sum_exact(3) == q(-1, 8));
    CHECK(abel_sum_exact(5) == q(1, 4));
    CHECK(abel_sum_exact(7) == q(-17, 16));
    CHECK_THROWS_AS(abel_sum_exact(-1), DomainError);
}

TEST_CASE("Abel sums equal the Euler-transform oracle") {
    for (int m = 0; m <= 24; ++m) {
        CAPTURE(m);
        CHECK(abel_sum_exact(m) == euler_transform_oracle(m));
        CHECK(abel_sum_closed_form(m) == euler_transform_oracle(m));
    }
}

TEST_CASE("alternating Euler-Maclaurin expansion") {
    CHECK(em_alternating_value(0) == -abel_sum_exact(0));
    for (int m = 1; m <= 20; ++m) {
        CAPTURE(m);
        CHECK(em_alternating_value(m) == abel_sum_exact(m));
    }
    CHECK(em_alternating_value(1) == q(1, 4));
    CHECK(em_alternating_value(3) == q(-1, 8));
}

TEST_CASE("numeric Abel limit") {
    for (int m = 0; m <= 8; ++m) {
        CAPTURE(m);
        CHECK(std::abs(abel_numeric_estimate(m) - abel_sum_exact(m).to_double()) < 1e-6);
    }
    CHECK(std::abs(abel_numeric_estimate(3) + 0.125) < 1e-9);
    CHECK_THROWS_AS(abel_numeric_estimate(9), DomainError);
    CHECK_THROWS_AS(abel_numeric_estimate(1, 0), DomainError);
}

TEST_CASE("zeta at negative integers from Abel sums") {
    CHECK(zeta_neg_via_abel(0) == q(-1, 2));
    CHECK(zeta_neg_via_abel(1) == q(-1, 12));
    CHECK(zeta_neg_via_abel(3) == q(1, 120));
    CHECK(zeta_neg_via_abel(2).is_zero());
}

TEST_CASE("exponential generating identity") {
    CHECK(abel_exponential_identity_check(20));
    CHECK(abel_exponential_identity_check(1));
    CHECK_THROWS_AS(abel_exponential_identity_check(0), DomainError);
}
