#pragma once

// Per-index terms shared by the serial and OpenMP kernels so that both
// evaluate exactly the same expressions.

#include <cmath>

#include "czeta/numeric/kernels.hpp"

namespace czeta::kernels::detail {

inline ComplexValue principal_pow(ComplexValue base, ComplexValue exponent) {
    return std::exp(exponent * std::log(base));
}

inline ComplexValue pole_pair_term(ComplexValue s_minus_1, long n) {
    const double y = kTwoPi * static_cast<double>(n);
    return principal_pow(ComplexValue(0.0, -y), s_minus_1) + principal_pow(ComplexValue(0.0, y), s_minus_1);
}

inline double cotangent_pair_term(double x, long n) {
    const double nd = static_cast<double>(n);
    return 2.0 * x / ((x - nd) * (x + nd));
}

inline ComplexValue dirichlet_term(ComplexValue s, long k) {
    return std::exp(-s * std::log(static_cast<double>(k)));
}

inline WideFloat wide_pow(WideFloat base, long exponent) {
    WideFloat out = 1;
    while (exponent > 0) {
        if (exponent & 1) {
            out *= base;
        }
        base *= base;
        exponent >>= 1;
    }
    return out;
}

inline WideFloat power_of_index(long k, int m) {
    WideFloat out = 1;
    const auto wk = static_cast<WideFloat>(k);
    for (int i = 0; i < m; ++i) {
        out *= wk;
    }
    return out;
}

}  // namespace czeta::kernels::detail
