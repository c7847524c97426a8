#include "czeta/zeta_exact.hpp"

#include <string>

#include "czeta/abel.hpp"
#include "czeta/bernoulli.hpp"
#include "czeta/errors.hpp"

namespace czeta {

namespace {

BigRational minus_one_pow(int e) { return (e % 2 == 0) ? BigRational(1) : BigRational(-1); }

void require_nonnegative(int n, const char* what) {
    if (n < 0) {
        throw DomainError(std::string(what) + " must be nonnegative, got " + std::to_string(n));
    }
}

void require_positive(int n, const char* what) {
    if (n < 1) {
        throw DomainError(std::string(what) + " must be positive, got " + std::to_string(n));
    }
}

}  // namespace

std::string_view route_name(Route route) {
    switch (route) {
        case Route::ClosedForm:
            return "closed";
        case Route::ResidueSeries:
            return "residue";
        case Route::GeneratingFunction:
            return "genfun";
        case Route::AbelSummation:
            return "abel";
        case Route::FunctionalEquation:
            return "funceq";
    }
    return "unknown";
}

ClassicalValue::ClassicalValue(int argument_, PiValue value_, Route route_)
    : argument(argument_), value(std::move(value_)), route(route_) {
    if (argument == 1) {
        throw DomainError("zeta has a pole at 1");
    }
    if (argument <= 0 && value.pi_exponent() != 0) {
        throw DomainError("zeta at a nonpositive integer must be rational");
    }
    if (argument >= 2 && argument % 2 == 0 && value.pi_exponent() != argument) {
        throw DomainError("zeta(" + std::to_string(argument) + ") must carry pi^" + std::to_string(argument));
    }
    if (argument >= 2 && argument % 2 != 0) {
        throw DomainError("odd positive arguments are not classical values");
    }
}

ClassicalValue zeta_nonpositive(int n) {
    require_nonnegative(n, "n");
    const auto bern = bernoulli_numbers(n + 1);
    return {-n, PiValue::rational(minus_one_pow(n) * (*bern)[n + 1] / BigRational(n + 1)), Route::ClosedForm};
}

PiValue sin_gamma_limit_exact(int n) {
    require_nonnegative(n, "n");
    // sin(pi x)/(x + n) -> (-1)^n pi and Gamma(x + n + 1) -> Gamma(1) = 1,
    // over the remaining factors (x + n - 1) ... x -> (-1)(-2) ... (-n).
    BigRational remaining(1);
    for (int k = 1; k <= n; ++k) {
        remaining *= BigRational(-k);
    }
    return PiValue(minus_one_pow(n) / remaining, 1);
}

ClassicalValue zeta_neg_via_residue(int n) {
    require_nonnegative(n, "n");
    const BigRational c = bernoulli_generating_series(n + 1).coeff(n + 1);
    // Both sides of 2 pi i (-1)^(n-1) c = -2i (pi/n!) zeta(-n) with the
    // common factor i removed.
    const PiValue contour_side(BigRational(2) * minus_one_pow(n - 1) * c, 1);
    const PiValue limit_side = PiValue::rational(BigRational(-2)) * sin_gamma_limit_exact(n);
    return {-n, contour_side / limit_side, Route::ResidueSeries};
}

LaurentSeries nonpositive_generating_series(int order) {
    require_nonnegative(order, "order");
    // e^-z - 1 has valuation 1, so its inverse loses two orders.
    const LaurentSeries denom = exp_series(BigRational(-1), order + 2) -
                                LaurentSeries::monomial(BigRational(1), 0, order + 2);
    return invert(denom) + LaurentSeries::monomial(BigRational(1), -1, order);
}

std::vector<ClassicalValue> zeta_neg_via_G(int order) {
    require_positive(order, "order");
    const LaurentSeries g = nonpositive_generating_series(order - 1);
    std::vector<ClassicalValue> out;
    out.reserve(static_cast<std::size_t>(order));
    BigRational m_factorial(1);
    for (int m = 0; m < order; ++m) {
        if (m > 0) {
            m_factorial *= BigRational(m);
        }
        out.emplace_back(-m, PiValue::rational(m_factorial * g.coeff(m)), Route::GeneratingFunction);
    }
    return out;
}

bool finite_G_check(unsigned long n, int max_m) {
    if (n < 1) {
        throw DomainError("finite_G_check needs n >= 1");
    }
    require_positive(max_m, "max_m");
    const int order = max_m + 2;
    const LaurentSeries numer = LaurentSeries::monomial(BigRational(1), 0, order) -
                                exp_series(BigRational(BigInt(n)), order);
    const LaurentSeries denom =
        exp_series(BigRational(-1), order) - LaurentSeries::monomial(BigRational(1), 0, order);
    const LaurentSeries g = numer * invert(denom);

    BigRational m_factorial(1);
    for (int m = 0; m <= max_m; ++m) {
        if (m > 0) {
            m_factorial *= BigRational(m);
        }
        BigInt power_sum = 0;
        for (unsigned long k = 1; k <= n; ++k) {
            BigInt term;
            mpz_ui_pow_ui(term.get_mpz_t(), k, static_cast<unsigned long>(m));
            power_sum += term;
        }
        if (m_factorial * g.coeff(m) != BigRational(power_sum)) {
            return false;
        }
    }
    return true;
}

LaurentSeries odd_generating_series(int order) {
    require_nonnegative(order, "order");
    const LaurentSeries e = exp_series(BigRational(-1), order + 2);
    const LaurentSeries one = LaurentSeries::monomial(BigRational(1), 0, order + 2);
    return (e + one) * invert(e - one) + LaurentSeries::monomial(BigRational(2), -1, order);
}

bool odd_genfun_check(int order) {
    if (order < 3) {
        throw DomainError("odd_genfun_check needs order >= 3");
    }
    const LaurentSeries odd = odd_generating_series(order);
    if (odd.valuation() < 0) {
        return false;  // the 2/z pole did not cancel
    }
    for (int k = 0; k <= order; k += 2) {
        if (!odd.coeff(k).is_zero()) {
            return false;
        }
    }
    for (int m = 0; 2 * m + 1 <= order; ++m) {
        const BigRational expected = BigRational(2) * zeta_nonpositive(2 * m + 1).value.coefficient() /
                                     factorial(static_cast<unsigned long>(2 * m + 1));
        if (odd.coeff(2 * m + 1) != expected) {
            return false;
        }
    }
    return true;
}

ClassicalValue zeta_even_positive(int n) {
    require_positive(n, "n");
    const auto bern = bernoulli_numbers(2 * n);
    const BigRational coeff = minus_one_pow(n - 1) * BigRational(2).pow(2 * n) * (*bern)[2 * n] /
                              (BigRational(2) * factorial(static_cast<unsigned long>(2 * n)));
    return {2 * n, PiValue(coeff, 2 * n), Route::ClosedForm};
}

ClassicalValue zeta_even_via_funceq(int n) {
    require_positive(n, "n");
    // 2 cos(pi n) Gamma(2n) zeta(2n) = (2 pi)^(2n) zeta(1 - 2n)
    const PiValue rhs = PiValue(BigRational(2).pow(2 * n), 2 * n) * zeta_nonpositive(2 * n - 1).value;
    const PiValue lhs_factor =
        PiValue::rational(BigRational(2) * minus_one_pow(n) * factorial(static_cast<unsigned long>(2 * n - 1)));
    return {2 * n, rhs / lhs_factor, Route::FunctionalEquation};
}

ClassicalValue zeta_even_via_odd_genfun(int n) {
    require_positive(n, "n");
    const int m = n - 1;
    const BigRational c = odd_generating_series(2 * m + 1).coeff(2 * m + 1);
    const PiValue scale(minus_one_pow(m + 1) * BigRational(2).pow(2 * m), 2 * m + 2);
    return {2 * n, PiValue::rational(c) * scale, Route::GeneratingFunction};
}

bool simple_funceq_check(int m) {
    require_nonnegative(m, "m");
    const PiValue lhs = PiValue::rational(BigRational(2) * zeta_nonpositive(2 * m + 1).value.coefficient() /
                                          factorial(static_cast<unsigned long>(2 * m + 1)));
    const PiValue rhs = PiValue::rational(minus_one_pow(m + 1)) * zeta_even_positive(m + 1).value /
                        PiValue(BigRational(2).pow(2 * m), 2 * m + 2);
    return lhs == rhs;
}

bool funceq_exact_check(int s) {
    if (s < 2 || s % 2 != 0) {
        throw ArgumentNotEvenPositive("funceq_exact_check needs an even s >= 2, got " + std::to_string(s));
    }
    const int n = s / 2;
    // cos(pi s/2) = (-1)^n, Gamma(s) = (s-1)!
    const PiValue lhs =
        PiValue::rational(BigRational(2) * minus_one_pow(n) * factorial(static_cast<unsigned long>(s - 1))) *
        zeta_even_positive(n).value;
    const PiValue rhs = PiValue(BigRational(2).pow(s), s) * zeta_nonpositive(s - 1).value;
    return lhs == rhs;
}

std::vector<Route> routes_for(int k) {
    if (k <= 0) {
        return {Route::ClosedForm, Route::ResidueSeries, Route::GeneratingFunction, Route::AbelSummation};
    }
    if (k >= 2 && k % 2 == 0) {
        return {Route::ClosedForm, Route::FunctionalEquation, Route::GeneratingFunction};
    }
    return {};
}

ClassicalValue classical_value(int k, Route route) {
    if (k == 1) {
        throw DomainError("zeta has a pole at s = 1");
    }
    if (k > 1 && k % 2 != 0) {
        throw DomainError("zeta(" + std::to_string(k) + ") at an odd positive integer is not a classical value");
    }
    if (k <= 0) {
        const int n = -k;
        switch (route) {
            case Route::ClosedForm:
                return zeta_nonpositive(n);
            case Route::ResidueSeries:
                return zeta_neg_via_residue(n);
            case Route::GeneratingFunction:
                return zeta_neg_via_G(n + 1).back();
            case Route::AbelSummation:
                return {k, PiValue::rational(zeta_neg_via_abel(n)), Route::AbelSummation};
            case Route::FunctionalEquation:
                break;
        }
        throw DomainError("route funceq does not apply to nonpositive arguments");
    }
    const int n = k / 2;
    switch (route) {
        case Route::ClosedForm:
            return zeta_even_positive(n);
        case Route::FunctionalEquation:
            return zeta_even_via_funceq(n);
        case Route::GeneratingFunction:
            return zeta_even_via_odd_genfun(n);
        default:
            break;
    }
    throw DomainError("route " + std::string(route_name(route)) + " does not apply to positive even arguments");
}

}  // namespace czeta
