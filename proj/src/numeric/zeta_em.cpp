#include <array>
#include <cmath>
#include <string>

#include "czeta/bernoulli.hpp"
#include "czeta/errors.hpp"
#include "czeta/numeric/zeta_numeric.hpp"

namespace czeta {

namespace {

constexpr int kMaxCorrectionTerms = 15;

// B_{2j} / (2j)! for j = 1..15 as doubles.
const std::array<double, kMaxCorrectionTerms + 1>& correction_coefficients() {
    static const auto table = [] {
        std::array<double, kMaxCorrectionTerms + 1> out{};
        const auto bern = bernoulli_numbers(2 * kMaxCorrectionTerms);
        for (int j = 1; j <= kMaxCorrectionTerms; ++j) {
            out[static_cast<std::size_t>(j)] =
                ((*bern)[2 * j] / factorial(static_cast<unsigned long>(2 * j))).to_double();
        }
        return out;
    }();
    return table;
}

}  // namespace

void NumericConfig::validate() const {
    if (em_terms_N < 1) {
        throw InvalidConfig("em_terms_N must be positive");
    }
    if (em_terms_J < 1 || em_terms_J > kMaxCorrectionTerms) {
        throw InvalidConfig("em_terms_J must lie in [1, 15]");
    }
    if (!(target_tol >= 1e-13) || !std::isfinite(target_tol)) {
        throw InvalidConfig("target_tol must be finite and >= 1e-13");
    }
}

namespace {

// The Euler-Maclaurin sum itself, no argument checks.
ComplexValue em_series(ComplexValue s, const NumericConfig& cfg) {
    const int terms = cfg.em_terms_J;
    const long cutoff = std::max<long>(cfg.em_terms_N, static_cast<long>(std::ceil(2.0 * std::abs(s.imag()))));
    const double n = static_cast<double>(cutoff);
    const double log_n = std::log(n);

    // sum_{k<N} k^-s + N^(1-s)/(s-1) + N^-s/2
    const ComplexValue n_pow_minus_s = std::exp(-s * log_n);
    ComplexValue total = kernels::omp::dirichlet_partial_sum(s, cutoff - 1);
    total += n * n_pow_minus_s / (s - 1.0);
    total += 0.5 * n_pow_minus_s;

    // + sum_j B_2j/(2j)! s(s+1)...(s+2j-2) N^(-s-2j+1)
    const auto& coeff = correction_coefficients();
    ComplexValue rising = s;
    ComplexValue n_power = n_pow_minus_s / n;
    const double inv_n2 = 1.0 / (n * n);
    for (int j = 1; j <= terms; ++j) {
        total += coeff[static_cast<std::size_t>(j)] * rising * n_power;
        rising *= (s + (2.0 * j - 1.0)) * (s + 2.0 * j);
        n_power *= inv_n2;
    }
    return total;
}

}  // namespace

ComplexValue zeta_em(ComplexValue s, const NumericConfig& cfg) {
    cfg.validate();
    require_finite(s, "zeta argument");
    if (std::abs(s - 1.0) < 1e-6) {
        throw NearPole("zeta has a pole at s = 1");
    }
    const int terms = cfg.em_terms_J;
    if (s.real() <= -(2.0 * terms - 1.0)) {
        throw OutOfValidatedRange("Euler-Maclaurin with J = " + std::to_string(terms) +
                                  " needs re(s) > " + std::to_string(-(2 * terms - 1)));
    }
    if (cfg.reflect_left && s.real() < 0.0) {
        // zeta(s) = 2^s pi^(s-1) sin(pi s/2) Gamma(1-s) zeta(1-s)
        return std::exp(s * std::log(kTwoPi)) / kPi * sin_pi(0.5 * s) * gamma_complex(1.0 - s) *
               em_series(1.0 - s, cfg);
    }
    return em_series(s, cfg);
}

}  // namespace czeta
