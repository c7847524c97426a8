#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <vector>

#include "czeta/bernoulli.hpp"
#include "czeta/errors.hpp"
#include "support/generators.hpp"

using namespace czeta;

namespace {

BigRational q(long p, long d) { return BigRational(BigInt(p), BigInt(d)); }

// Akiyama-Tanigawa. It produces B_1 = +1/2, so flip that one entry.
std::vector<BigRational> akiyama_tanigawa(int max_index) {
    std::vector<BigRational> a(static_cast<std::size_t>(max_index) + 1);
    std::vector<BigRational> out;
    for (int m = 0; m <= max_index; ++m) {
        a[static_cast<std::size_t>(m)] = q(1, m + 1);
        for (int j = m; j >= 1; --j) {
            a[static_cast<std::size_t>(j - 1)] =
                BigRational(j) * (a[static_cast<std::size_t>(j - 1)] - a[static_cast<std::size_t>(j)]);
        }
        out.push_back(a[0]);
    }
    if (max_index >= 1) {
        out[1] = -out[1];
    }
    return out;
}

BigRational brute_power_sum(unsigned m, unsigned long n) {
    BigInt total = 0;
    for (unsigned long k = 1; k <= n; ++k) {
        BigInt p;
        mpz_ui_pow_ui(p.get_mpz_t(), k, m);
        total += p;
    }
    return BigRational(total);
}

}  // namespace

TEST_CASE("known values") {
    const auto t = bernoulli_via_series(20);
    CHECK(t[0] == BigRational(1));
    CHECK(t[1] == q(-1, 2));
    CHECK(t[2] == q(1, 6));
    CHECK(t[4] == q(-1, 30));
    CHECK(t[6] == q(1, 42));
    CHECK(t[8] == q(-1, 30));
    CHECK(t[10] == q(5, 66));
    CHECK(t[12] == q(-691, 2730));
    CHECK(t[14] == q(7, 6));
    CHECK(t[20] == q(-174611, 330));
    CHECK(t.max_index() == 20);
}

TEST_CASE("series and recurrence agree with an independent algorithm") {
    const auto oracle = akiyama_tanigawa(60);
    CHECK(bernoulli_via_series(60).values() == oracle);
    CHECK(bernoulli_via_recurrence(60).values() == oracle);
}

TEST_CASE("odd entries beyond B_1 vanish") {
    const auto t = bernoulli_via_series(50);
    for (int n = 3; n <= 50; n += 2) {
        CHECK(t[n].is_zero());
    }
    CHECK(even_part_check(40));
    CHECK_THROWS_AS(even_part_check(1), DomainError);
}

TEST_CASE("generating series") {
    const LaurentSeries g = bernoulli_generating_series(6);
    CHECK(g.valuation() == 0);
    CHECK(g.order() == 6);
    CHECK(g.coeff(1) == q(-1, 2));
    CHECK(g.coeff(2) == q(1, 12));
}

TEST_CASE("small tables") {
    CHECK(bernoulli_via_series(0).values() == std::vector<BigRational>{BigRational(1)});
    CHECK(bernoulli_via_recurrence(1).values() == std::vector<BigRational>{BigRational(1), q(-1, 2)});
    CHECK_THROWS(bernoulli_via_series(-1));
    CHECK_THROWS(bernoulli_via_recurrence(-1));
}

TEST_CASE("shared cache grows and stays consistent") {
    const auto small = bernoulli_numbers(5);
    CHECK(small->max_index() >= 5);
    const auto big = bernoulli_numbers(90);
    CHECK(big->max_index() >= 90);
    for (int n = 0; n <= small->max_index(); ++n) {
        CHECK((*small)[n] == (*big)[n]);
    }
    CHECK((*big)[90] == bernoulli_via_recurrence(90)[90]);
}

TEST_CASE("Faulhaber against brute force") {
    for (unsigned m = 0; m <= 10; ++m) {
        for (unsigned long n = 0; n <= 60; ++n) {
            CAPTURE(m);
            CAPTURE(n);
            REQUIRE(faulhaber_sum(m, n) == brute_power_sum(m, n));
        }
    }
    CHECK(faulhaber_sum(3, 100) == BigRational(25502500));
}

TEST_CASE("property: Faulhaber difference is n^m") {
    testgen::Gen gen(8);
    for (int i = 0; i < 150; ++i) {
        const auto m = static_cast<unsigned>(gen.integer(0, 25));
        const auto n = static_cast<unsigned long>(gen.integer(1, 1000000));
        BigInt nm;
        mpz_ui_pow_ui(nm.get_mpz_t(), n, m);
        REQUIRE(faulhaber_sum(m, n) - faulhaber_sum(m, n - 1) == BigRational(nm));
    }
}
