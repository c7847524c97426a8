#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>

#include "czeta/errors.hpp"
#include "czeta/laurent_series.hpp"
#include "support/generators.hpp"

using namespace czeta;

namespace {

BigRational q(long p, long d) { return BigRational(BigInt(p), BigInt(d)); }

LaurentSeries common(const LaurentSeries& s, int order) { return s.truncated(order); }

}  // namespace

TEST_CASE("construction normalizes leading zeros") {
    const LaurentSeries s(-2, {BigRational(0), BigRational(0), BigRational(5)}, 3);
    CHECK(s.valuation() == 0);
    CHECK(s.order() == 3);
    CHECK(s.coeff(0) == BigRational(5));
    CHECK(s.coeff(-7) == BigRational(0));
    CHECK(s.coeff(3) == BigRational(0));
    CHECK_THROWS_AS(s.coeff(4), OutOfTrustedRange);
    CHECK_THROWS_AS(LaurentSeries(0, {1, 2, 3}, 1), DomainError);
}

TEST_CASE("zero series") {
    const LaurentSeries z = LaurentSeries::zero(5);
    CHECK(z.is_zero());
    CHECK(z.valuation() == 6);
    CHECK(z.str() == "0 (trusted to 5)");
    CHECK_THROWS_AS(invert(z), ZeroSeries);
    CHECK(LaurentSeries(0, {0, 0}, 1) == LaurentSeries::zero(1));
}

TEST_CASE("printing") {
    const LaurentSeries s(-1, {BigRational(2), BigRational(0), q(-1, 2), BigRational(3)}, 2);
    CHECK(s.str() == "2 z^-1 - 1/2 z^1 + 3 z^2 (trusted to 2)");
}

TEST_CASE("exp series has coefficients a^n / n!") {
    const LaurentSeries e = exp_series(q(2, 3), 6);
    BigRational expected(1);
    for (int n = 0; n <= 6; ++n) {
        if (n > 0) {
            expected = expected * q(2, 3) / BigRational(n);
        }
        CHECK(e.coeff(n) == expected);
    }
    CHECK(e.order() == 6);
    CHECK(exp_series(BigRational(0), 4) == LaurentSeries::monomial(BigRational(1), 0, 4));
}

TEST_CASE("geometric series squared has coefficients k + 1") {
    std::vector<BigRational> ones(11, BigRational(1));
    const LaurentSeries g(0, ones, 10);
    const LaurentSeries sq = g * g;
    for (int k = 0; k <= 10; ++k) {
        CHECK(sq.coeff(k) == BigRational(k + 1));
    }
    // 1/(1 - z) inverted is 1 - z
    const LaurentSeries inv = invert(g);
    CHECK(inv == LaurentSeries(0, {1, -1}, 10));
}

TEST_CASE("order bookkeeping") {
    const LaurentSeries a(-2, {1, 1, 1}, 5);
    const LaurentSeries b(1, {1, 1}, 4);
    CHECK((a * b).order() == std::min(5 + 1, 4 - 2));
    CHECK((a + b).order() == 4);
    CHECK(invert(a).valuation() == 2);
    CHECK(invert(a).order() == 5 + 4);
    CHECK(differentiate(b).order() == 3);
    CHECK(a.shifted(3).valuation() == 1);
    CHECK(a.shifted(3).order() == 8);
}

TEST_CASE("differentiate") {
    const LaurentSeries s(-1, {1, 2, 3, 4}, 2);  // z^-1 + 2 + 3z + 4z^2
    const LaurentSeries d = differentiate(s);    // -z^-2 + 3 + 8z
    CHECK(d.coeff(-2) == BigRational(-1));
    CHECK(d.coeff(-1) == BigRational(0));
    CHECK(d.coeff(0) == BigRational(3));
    CHECK(d.coeff(1) == BigRational(8));
    CHECK(d.order() == 1);
    CHECK(differentiate(exp_series(BigRational(1), 8)) == exp_series(BigRational(1), 7));
}

TEST_CASE("property: exp(a) exp(b) = exp(a + b)") {
    testgen::Gen gen(3);
    for (int i = 0; i < 40; ++i) {
        const BigRational a = gen.rational();
        const BigRational b = gen.rational();
        REQUIRE(exp_series(a, 12) * exp_series(b, 12) == exp_series(a + b, 12));
    }
}

TEST_CASE("property: ring axioms up to the common order") {
    testgen::Gen gen(4);
    for (int i = 0; i < 60; ++i) {
        const LaurentSeries a = gen.series(8);
        const LaurentSeries b = gen.series(8);
        const LaurentSeries c = gen.series(8);
        REQUIRE(a + b == b + a);
        REQUIRE(a * b == b * a);
        REQUIRE((a + b) + c == a + (b + c));
        const LaurentSeries lhs = (a * b) * c;
        const LaurentSeries rhs = a * (b * c);
        const int o = std::min(lhs.order(), rhs.order());
        REQUIRE(common(lhs, o) == common(rhs, o));
        const LaurentSeries dl = a * (b + c);
        const LaurentSeries dr = a * b + a * c;
        const int od = std::min(dl.order(), dr.order());
        REQUIRE(common(dl, od) == common(dr, od));
        REQUIRE((a - a).is_zero());
    }
}

TEST_CASE("property: inversion") {
    testgen::Gen gen(5);
    for (int i = 0; i < 60; ++i) {
        const LaurentSeries a = gen.unit_series(9);
        const LaurentSeries inv = invert(a);
        REQUIRE(invert(inv) == a);
        const LaurentSeries prod = a * inv;
        REQUIRE(prod == LaurentSeries::monomial(BigRational(1), 0, prod.order()));
        REQUIRE(prod.order() == a.order() - a.valuation());
    }
}

TEST_CASE("property: Leibniz rule") {
    testgen::Gen gen(6);
    for (int i = 0; i < 60; ++i) {
        const LaurentSeries a = gen.series(8);
        const LaurentSeries b = gen.series(8);
        const LaurentSeries lhs = differentiate(a * b);
        const LaurentSeries rhs = differentiate(a) * b + a * differentiate(b);
        const int o = std::min(lhs.order(), rhs.order());
        REQUIRE(common(lhs, o) == common(rhs, o));
    }
}

TEST_CASE("property: scaling and shifting commute with products") {
    testgen::Gen gen(7);
    for (int i = 0; i < 60; ++i) {
        const LaurentSeries a = gen.series(6);
        const LaurentSeries b = gen.series(6);
        const BigRational k = gen.nonzero_rational();
        REQUIRE(a.scaled(k) * b == (a * b).scaled(k));
        REQUIRE(a.shifted(2) * b == (a * b).shifted(2));
    }
}
