// Acceptance run: one PASS/FAIL line per criterion, nonzero exit if any fails.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "czeta/abel.hpp"
#include "czeta/bernoulli.hpp"
#include "czeta/numeric/zeta_numeric.hpp"
#include "czeta/zeta_exact.hpp"

using namespace czeta;

namespace {

struct Verdict {
    bool pass = true;
    std::string detail;
};

BigRational q(long p, long d) { return BigRational(BigInt(p), BigInt(d)); }

std::string sci(double x) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2e", x);
    return buf;
}

Verdict bernoulli_cross_method() {
    const auto a = bernoulli_via_series(32);
    const auto b = bernoulli_via_recurrence(32);
    Verdict v;
    v.pass = (a == b) && a[1] == q(-1, 2);
    for (int n = 3; n <= 32; n += 2) {
        v.pass = v.pass && a[n].is_zero();
    }
    v.detail = "B_0..B_32, B_1 = " + a[1].str();
    return v;
}

Verdict four_routes() {
    const auto via_g = zeta_neg_via_G(31);
    Verdict v;
    for (int m = 0; m <= 30; ++m) {
        const PiValue closed = zeta_nonpositive(m).value;
        const bool ok = zeta_neg_via_residue(m).value == closed &&
                        via_g[static_cast<std::size_t>(m)].value == closed &&
                        classical_value(-m, Route::AbelSummation).value == closed;
        if (!ok) {
            v.pass = false;
            v.detail += "m=" + std::to_string(m) + " ";
        }
    }
    if (v.pass) {
        v.detail = "m = 0..30";
    }
    return v;
}

Verdict abel_table() {
    const double estimate = abel_numeric_estimate(3);
    Verdict v;
    v.pass = abel_sum_exact(0) == q(1, 2) && abel_sum_exact(1) == q(1, 4) && abel_sum_exact(2).is_zero() &&
             abel_sum_exact(3) == q(-1, 8) && std::abs(estimate + 0.125) <= 1e-6;
    v.detail = "A_3 = " + abel_sum_exact(3).str() + ", numeric " + std::to_string(estimate);
    return v;
}

Verdict even_closed_forms() {
    Verdict v;
    v.pass = zeta_even_positive(1).value == PiValue(q(1, 6), 2) &&
             zeta_even_positive(2).value == PiValue(q(1, 90), 4) &&
             zeta_even_positive(3).value == PiValue(q(1, 945), 6);
    v.detail = zeta_even_positive(1).value.str() + ", " + zeta_even_positive(2).value.str() + ", " +
               zeta_even_positive(3).value.str();
    return v;
}

Verdict exact_funceq() {
    Verdict v;
    for (int n = 1; n <= 15; ++n) {
        v.pass = v.pass && funceq_exact_check(2 * n);
    }
    for (int m = 0; m <= 14; ++m) {
        v.pass = v.pass && simple_funceq_check(m);
    }
    v.detail = "2n = 2..30, m = 0..14";
    return v;
}

Verdict generating_functions() {
    Verdict v;
    for (unsigned long n : {1UL, 5UL, 30UL}) {
        v.pass = v.pass && finite_G_check(n, 10);
    }
    v.pass = v.pass && odd_genfun_check(21) && abel_exponential_identity_check(20);
    v.detail = "G(n) for n = 1, 5, 30; odd order 21; exponential order 20";
    return v;
}

Verdict numeric_continuation() {
    double worst_grid = 0.0;
    NumericConfig direct;
    direct.reflect_left = false;
    for (double re : {-2.5, -1.5, -0.5, 0.25, 0.5, 2.5}) {
        for (double im : {0.0, 1.0, 3.0, 10.0}) {
            const ComplexValue s(re, im);
            const ComplexValue h = zeta_hankel(s);
            worst_grid = std::max({worst_grid, std::abs(h - zeta_em(s)), std::abs(h - zeta_em(s, direct))});
        }
    }
    double worst_exact = 0.0;
    for (int n = 0; n <= 8; ++n) {
        worst_exact = std::max(worst_exact,
                               std::abs(zeta_hankel(static_cast<double>(-n)) - zeta_nonpositive(n).value.to_double()));
    }
    ContourSpec narrow;
    narrow.radius = 0.5 * kPi;
    ContourSpec wide;
    wide.radius = 3.0;
    const ComplexValue s(-0.5, 1.0);
    const double independence = std::abs(zeta_hankel(s, narrow) - zeta_hankel(s, wide));
    Verdict v;
    v.pass = worst_grid <= 1e-8 && worst_exact <= 1e-8 && independence <= 2e-9;
    v.detail = "grid " + sci(worst_grid) + ", exact " + sci(worst_exact) + ", radii " + sci(independence);
    return v;
}

Verdict funceq_residuals() {
    auto points = rectangular_grid(0.1, 0.9, 0.0, 10.0, 5);
    points.emplace_back(0.5, 0.0);
    points.emplace_back(1.5, 0.0);
    const auto r = funceq_residual_grid(points);
    double worst = 0.0;
    for (double x : r) {
        worst = std::max(worst, x);
    }
    Verdict v;
    v.pass = points.size() == 27 && worst <= 1e-9;
    v.detail = std::to_string(points.size()) + " points, worst " + sci(worst);
    return v;
}

Verdict inside_out() {
    const double diff = inverted_contour_check(ComplexValue(-2.5, 0.0), 100000);
    Verdict v;
    v.pass = diff <= 1e-6;
    v.detail = "difference " + sci(diff);
    return v;
}

Verdict cotangent() {
    const BigRational x = q(1, 4);
    const double diff = cotangent_check(x, 10000);
    const double bound = cotangent_tail_bound(x, 10000);
    Verdict v;
    v.pass = diff <= bound;
    v.detail = "difference " + sci(diff) + ", bound " + sci(bound);
    return v;
}

Verdict faulhaber() {
    Verdict v;
    for (unsigned m = 0; m <= 10; ++m) {
        BigRational brute;
        for (unsigned long n = 0; n <= 200; ++n) {
            // 1^m + ... + n^m
            if (n > 0) {
                brute += BigRational(static_cast<long>(n)).pow(static_cast<int>(m));
            }
            if (faulhaber_sum(m, n) != brute) {
                v.pass = false;
                v.detail += "(" + std::to_string(m) + "," + std::to_string(n) + ") ";
            }
        }
    }
    if (v.pass) {
        v.detail = "m <= 10, n <= 200";
    }
    return v;
}

}  // namespace

int main() {
    const std::vector<std::pair<const char*, std::function<Verdict()>>> criteria{
        {"bernoulli cross-method", bernoulli_cross_method},
        {"four-route exact agreement", four_routes},
        {"Abel-sum table", abel_table},
        {"closed-form zeta(2n)", even_closed_forms},
        {"exact functional equation", exact_funceq},
        {"generating-function identities", generating_functions},
        {"numeric continuation", numeric_continuation},
        {"functional-equation residual", funceq_residuals},
        {"inside-out inversion", inside_out},
        {"cotangent identity", cotangent},
        {"Faulhaber exactness", faulhaber},
    };
    int failures = 0;
    int index = 0;
    for (const auto& [name, fn] : criteria) {
        ++index;
        const auto start = std::chrono::steady_clock::now();
        Verdict v;
        try {
            v = fn();
        } catch (const std::exception& e) {
            v = {false, std::string("threw: ") + e.what()};
        }
        const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
        std::printf("%s %2d %s: %s (%.2fs)\n", v.pass ? "PASS" : "FAIL", index, name, v.detail.c_str(), secs);
        failures += v.pass ? 0 : 1;
    }
    return failures == 0 ? 0 : 1;
}
