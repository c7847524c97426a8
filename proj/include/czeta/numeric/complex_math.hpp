#pragma once

#include <complex>
#include <numbers>

namespace czeta {

/// Double-precision complex scalar of the numeric route. Values handed to
/// and returned from the public API are always finite.
using ComplexValue = std::complex<double>;

inline constexpr double kPi = std::numbers::pi;
inline constexpr double kTwoPi = 2.0 * std::numbers::pi;

/// Throws DomainError unless both components are finite.
void require_finite(ComplexValue z, const char* what);

/// sin(pi x) and cos(pi x) with exact argument reduction, so integers and
/// half-integers give exact zeros.
double sin_pi(double x);
double cos_pi(double x);
ComplexValue sin_pi(ComplexValue z);
ComplexValue cos_pi(ComplexValue z);

/// Gamma(z) via the g = 7, n = 9 Lanczos kernel, reflected for re(z) < 1/2.
/// Throws PoleAtNonpositiveInteger within 1e-12 of 0, -1, -2, ...
ComplexValue gamma_complex(ComplexValue z);

}  // namespace czeta
