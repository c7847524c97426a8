#include "czeta/abel.hpp"

#include <cmath>
#include <string>
#include <vector>

#include "czeta/bernoulli.hpp"
#include "czeta/errors.hpp"
#include "czeta/laurent_series.hpp"
#include "czeta/numeric/kernels.hpp"

namespace czeta {

namespace {

BigRational two_pow(int e) { return BigRational(2).pow(e); }

void require_nonnegative(int m) {
    if (m < 0) {
        throw DomainError("Abel sums are indexed by m >= 0, got " + std::to_string(m));
    }
}

}  // namespace

RationalFunction abel_generating_function(int m) {
    require_nonnegative(m);
    return apply_euler_operator(RationalFunction::reciprocal_one_plus_x(), m);
}

BigRational abel_sum_closed_form(int m) {
    require_nonnegative(m);
    const auto bern = bernoulli_numbers(m + 1);
    const BigRational sign = (m % 2 == 0) ? BigRational(1) : BigRational(-1);
    return sign * (BigRational(1) - two_pow(m + 1)) * (*bern)[m + 1] / BigRational(m + 1);
}

BigRational abel_sum_exact(int m) {
    const BigRational at_one = abel_generating_function(m).evaluate(BigRational(1));
    // For m >= 1 the operator annihilates the constant in 1 - 1/(1+x).
    const BigRational via_operator = (m == 0) ? BigRational(1) - at_one : -at_one;
    const BigRational closed = abel_sum_closed_form(m);
    if (via_operator != closed) {
        throw InternalInconsistency("Abel sum A_" + std::to_string(m) + ": operator route gives " +
                                    via_operator.str() + ", closed form gives " + closed.str());
    }
    return via_operator;
}

double abel_numeric_estimate(int m, int steps) {
    if (m < 0 || m > 8) {
        throw DomainError("abel_numeric_estimate supports 0 <= m <= 8");
    }
    if (steps < 1 || steps > 10) {
        throw DomainError("abel_numeric_estimate supports 1 <= steps <= 10");
    }
    constexpr int kFirstExponent = 2;
    const double tail_target = std::log(1e-14);

    // table[i][l]: level-l Richardson value from samples i-l .. i.
    std::vector<std::vector<double>> table(static_cast<std::size_t>(steps) + 1);
    for (int i = 0; i <= steps; ++i) {
        const double h = std::ldexp(1.0, -(kFirstExponent + i));
        const double x = 1.0 - h;  // exact in binary
        const double log_x = std::log1p(-h);
        // Past the peak of k^m x^k, grow K until the terms (and hence the
        // geometric tail) fall below 1e-14.
        double k = std::max(1.0, std::ceil(m / -log_x));
        while (m * std::log(k) + k * log_x > tail_target + std::log(h)) {
            k = std::ceil(k * 1.1) + 1.0;
        }
        auto& row = table[static_cast<std::size_t>(i)];
        row.push_back(kernels::omp::alternating_power_sum(m, x, static_cast<long>(k)));
        for (int l = 1; l <= i; ++l) {
            const double finer = row[static_cast<std::size_t>(l - 1)];
            const double coarser = table[static_cast<std::size_t>(i - 1)][static_cast<std::size_t>(l - 1)];
            row.push_back(finer + (finer - coarser) / (std::ldexp(1.0, l) - 1.0));
        }
    }
    return table.back().back();
}

BigRational em_alternating_value(int m) {
    require_nonnegative(m);
    const auto bern = bernoulli_numbers(m + 1);
    // f(x) = x^m and its derivatives, evaluated at x = 0.
    std::vector<BigRational> monomial(static_cast<std::size_t>(m) + 1);
    monomial.back() = BigRational(1);
    Polynomial f_n{std::move(monomial)};
    BigRational total;
    for (int n = 0; n <= m; ++n) {
        const BigRational c = (two_pow(n + 1) - BigRational(1)) * (*bern)[n + 1] /
                              factorial(static_cast<unsigned long>(n + 1));
        total += c * f_n.evaluate(BigRational(0));
        f_n = f_n.derivative();
    }
    return total;
}

BigRational zeta_neg_via_abel(int m) {
    return abel_sum_exact(m) / (BigRational(1) - two_pow(m + 1));
}

bool abel_exponential_identity_check(int order) {
    if (order < 1) {
        throw DomainError("identity check needs order >= 1");
    }
    // z / (1 + e^z) through z^order.
    const LaurentSeries one_plus_exp =
        exp_series(BigRational(1), order) + LaurentSeries::monomial(BigRational(1), 0, order);
    const LaurentSeries rhs = invert(one_plus_exp).shifted(1);

    if (!rhs.coeff(0).is_zero()) {
        return false;
    }
    BigRational m_factorial(1);
    for (int m = 0; m + 1 <= order; ++m) {
        if (m > 0) {
            m_factorial *= BigRational(m);
        }
        const BigRational lhs = abel_generating_function(m).evaluate(BigRational(1)) / m_factorial;
        if (lhs != rhs.coeff(m + 1)) {
            return false;
        }
    }
    return true;
}

}  // namespace czeta
