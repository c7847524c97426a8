#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <numbers>

#include "czeta/errors.hpp"
#include "czeta/zeta_exact.hpp"

using namespace czeta;

namespace {

BigRational q(long p, long d) { return BigRational(BigInt(p), BigInt(d)); }

}  // namespace

TEST_CASE("zeta at nonpositive integers: table") {
    CHECK(zeta_nonpositive(0).value == PiValue::rational(q(-1, 2)));
    CHECK(zeta_nonpositive(1).value == PiValue::rational(q(-1, 12)));
    CHECK(zeta_nonpositive(2).value.is_zero());
    CHECK(zeta_nonpositive(3).value == PiValue::rational(q(1, 120)));
    CHECK(zeta_nonpositive(5).value == PiValue::rational(q(-1, 252)));
    CHECK(zeta_nonpositive(7).value == PiValue::rational(q(1, 240)));
    CHECK(zeta_nonpositive(9).value == PiValue::rational(q(-1, 132)));
    CHECK(zeta_nonpositive(11).value == PiValue::rational(q(691, 32760)));
    CHECK(zeta_nonpositive(13).value == PiValue::rational(q(-1, 12)));
    CHECK(zeta_nonpositive(3).argument == -3);
    CHECK(zeta_nonpositive(3).route == Route::ClosedForm);
}

TEST_CASE("zeta at even positive integers: table") {
    CHECK(zeta_even_positive(1).value == PiValue(q(1, 6), 2));
    CHECK(zeta_even_positive(2).value == PiValue(q(1, 90), 4));
    CHECK(zeta_even_positive(3).value == PiValue(q(1, 945), 6));
    CHECK(zeta_even_positive(4).value == PiValue(q(1, 9450), 8));
    CHECK(zeta_even_positive(5).value == PiValue(q(1, 93555), 10));
    CHECK(zeta_even_positive(6).value == PiValue(q(691, 638512875), 12));
}

TEST_CASE("even values against direct summation") {
    for (int n = 1; n <= 8; ++n) {
        double s = 0.0;
        for (int k = 20000; k >= 1; --k) {
            s += std::pow(static_cast<double>(k), -2.0 * n);
        }
        CAPTURE(n);
        CHECK(std::abs(zeta_even_positive(n).value.to_double() - s) < (n == 1 ? 1e-4 : 1e-12));
    }
}

TEST_CASE("the four nonpositive routes agree") {
    const auto via_g = zeta_neg_via_G(21);
    REQUIRE(via_g.size() == 21);
    for (int n = 0; n <= 20; ++n) {
        CAPTURE(n);
        const PiValue closed = zeta_nonpositive(n).value;
        CHECK(zeta_neg_via_residue(n).value == closed);
        CHECK(via_g[static_cast<std::size_t>(n)].value == closed);
        CHECK(via_g[static_cast<std::size_t>(n)].argument == -n);
        CHECK(classical_value(-n, Route::AbelSummation).value == closed);
    }
}

TEST_CASE("the three even routes agree") {
    for (int n = 1; n <= 15; ++n) {
        CAPTURE(n);
        const PiValue closed = zeta_even_positive(n).value;
        CHECK(zeta_even_via_funceq(n).value == closed);
        CHECK(zeta_even_via_odd_genfun(n).value == closed);
    }
}

TEST_CASE("sin(pi x) Gamma(x) limit") {
    for (int n = 0; n <= 10; ++n) {
        CAPTURE(n);
        CHECK(sin_gamma_limit_exact(n) == PiValue(factorial(static_cast<unsigned long>(n)).reciprocal(), 1));
        // floating-point look at the same limit from one side
        const double x = -n + 1e-7;
        const double approx = std::sin(std::numbers::pi * x) * std::tgamma(x);
        CHECK(std::abs(approx / sin_gamma_limit_exact(n).to_double() - 1.0) < 1e-5);
    }
}

TEST_CASE("generating-function identities") {
    for (unsigned long n : {1UL, 2UL, 5UL, 30UL}) {
        CAPTURE(n);
        CHECK(finite_G_check(n, 10));
    }
    CHECK(odd_genfun_check(21));
    CHECK(odd_genfun_check(3));
    CHECK_THROWS_AS(odd_genfun_check(2), DomainError);
    const LaurentSeries g = nonpositive_generating_series(4);
    CHECK(g.valuation() >= 0);
    CHECK(g.coeff(0) == q(-1, 2));
    CHECK(g.coeff(1) == q(-1, 12));
}

TEST_CASE("functional-equation checks") {
    for (int n = 1; n <= 15; ++n) {
        CHECK(funceq_exact_check(2 * n));
    }
    for (int m = 0; m <= 14; ++m) {
        CHECK(simple_funceq_check(m));
    }
    CHECK_THROWS_AS(funceq_exact_check(3), ArgumentNotEvenPositive);
    CHECK_THROWS_AS(funceq_exact_check(0), ArgumentNotEvenPositive);
    CHECK_THROWS_AS(funceq_exact_check(-2), ArgumentNotEvenPositive);
}

TEST_CASE("ClassicalValue invariants") {
    CHECK_THROWS_AS(ClassicalValue(1, PiValue::rational(BigRational(1)), Route::ClosedForm), DomainError);
    CHECK_THROWS_AS(ClassicalValue(-1, PiValue(BigRational(1), 1), Route::ClosedForm), DomainError);
    CHECK_THROWS_AS(ClassicalValue(4, PiValue(BigRational(1), 2), Route::ClosedForm), DomainError);
    CHECK_THROWS_AS(ClassicalValue(3, PiValue::rational(BigRational(1)), Route::ClosedForm), DomainError);
    CHECK_NOTHROW(ClassicalValue(-2, PiValue(), Route::ClosedForm));
}

TEST_CASE("route selection") {
    CHECK(routes_for(-4).size() == 4);
    CHECK(routes_for(0).size() == 4);
    CHECK(routes_for(6).size() == 3);
    CHECK(routes_for(1).empty());
    CHECK(routes_for(5).empty());
    CHECK_THROWS_AS(classical_value(1, Route::ClosedForm), DomainError);
    CHECK_THROWS_AS(classical_value(3, Route::ClosedForm), DomainError);
    CHECK_THROWS_AS(classical_value(-2, Route::FunctionalEquation), DomainError);
    CHECK_THROWS_AS(classical_value(2, Route::AbelSummation), DomainError);
    CHECK_THROWS_AS(classical_value(2, Route::ResidueSeries), DomainError);
    CHECK(route_name(Route::GeneratingFunction) == "genfun");
    CHECK(classical_value(2, Route::GeneratingFunction).route == Route::GeneratingFunction);
}
