#include <array>
#include <cmath>
#include <string>

#include "czeta/errors.hpp"
#include "czeta/numeric/complex_math.hpp"

namespace czeta {

namespace {

// Godfrey's coefficient set for g = 7, n = 9.
constexpr double kLanczosG = 7.0;
constexpr std::array<double, 9> kLanczosP = {
    0.99999999999980993,  676.5203681218851,     -1259.1392167224028,
    771.32342877765313,   -176.61502916214059,   12.507343278686905,
    -0.13857109526572012, 9.9843695780195716e-6, 1.5056327351493116e-7};

ComplexValue lanczos(ComplexValue z) {
    z -= 1.0;
    ComplexValue series = kLanczosP[0];
    for (std::size_t i = 1; i < kLanczosP.size(); ++i) {
        series += kLanczosP[i] / (z + static_cast<double>(i));
    }
    const ComplexValue t = z + (kLanczosG + 0.5);
    // sqrt(2 pi) t^(z + 1/2) e^(-t), combined in the exponent to avoid
    // intermediate overflow.
    return std::exp((z + 0.5) * std::log(t) - t + 0.5 * std::log(kTwoPi)) * series;
}

}  // namespace

void require_finite(ComplexValue z, const char* what) {
    if (!std::isfinite(z.real()) || !std::isfinite(z.imag())) {
        throw DomainError(std::string(what) + " must be finite");
    }
}

double sin_pi(double x) {
    double r = std::remainder(x, 2.0);  // exact, in [-1, 1]
    double sign = 1.0;
    if (r < 0) {
        r = -r;
        sign = -1.0;
    }
    if (r > 0.5) {
        r = 1.0 - r;  // sin(pi r) = sin(pi (1 - r)), exact for r in [0.5, 1]
    }
    if (r == 0.0) {
        return 0.0;
    }
    if (r <= 0.25) {
        return sign * std::sin(kPi * r);
    }
    return sign * std::cos(kPi * (0.5 - r));
}

double cos_pi(double x) { return sin_pi(x + 0.5); }

ComplexValue sin_pi(ComplexValue z) {
    const double y = kPi * z.imag();
    return {sin_pi(z.real()) * std::cosh(y), cos_pi(z.real()) * std::sinh(y)};
}

ComplexValue cos_pi(ComplexValue z) {
    const double y = kPi * z.imag();
    return {cos_pi(z.real()) * std::cosh(y), -sin_pi(z.real()) * std::sinh(y)};
}

ComplexValue gamma_complex(ComplexValue z) {
    require_finite(z, "gamma argument");
    const double nearest = std::round(z.real());
    if (nearest <= 0.0 && std::abs(z - ComplexValue(nearest, 0.0)) < 1e-12) {
        throw PoleAtNonpositiveInteger("Gamma has a pole at " + std::to_string(static_cast<long>(nearest)));
    }
    if (z.real() < 0.5) {
        return kPi / (sin_pi(z) * lanczos(1.0 - z));
    }
    return lanczos(z);
}

}  // namespace czeta
