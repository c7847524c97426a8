#pragma once

// Data-parallel inner loops of the numeric route. Every kernel exists twice
// with the same signature:
//
//   kernels::serial::*  plain single-threaded loops, kept as the reference
//   kernels::omp::*     OpenMP versions used by the library
//
// The OpenMP versions split the index range into a fixed number of blocks
// (independent of the thread count) and combine the block partials in
// order, so their results are bit-identical for any number of threads.
// They may differ from the serial reference in the last few ulps.

#include <functional>
#include <span>

#include "czeta/numeric/complex_math.hpp"
#include "czeta/numeric/quadrature.hpp"

namespace czeta::kernels {

#if defined(__SIZEOF_FLOAT128__)
using WideFloat = __float128;
#else
using WideFloat = long double;
#endif

inline constexpr long kReductionBlocks = 64;

using PathIntegrand = std::function<ComplexValue(ComplexValue)>;

/// Integral estimate plus the sum of |weight * f * dx| over the same nodes;
/// the latter bounds the rounding noise of the former.
struct PathSum {
    ComplexValue value;
    double magnitude = 0.0;
};

#define CZETA_KERNEL_DECLS                                                                   \
    /* sum_{n=1}^{N} [(-2 pi i n)^(s-1) + (2 pi i n)^(s-1)], principal powers */           \
    ComplexValue pole_pair_sum(ComplexValue s, long n_poles);                                \
    /* sum_{n=1}^{N} (1/(x+n) + 1/(x-n)), each pair as 2x/(x^2 - n^2) */                    \
    double cotangent_pair_sum(double x, long n_terms);                                       \
    /* sum_{k=1}^{N} k^(-s) */                                                               \
    ComplexValue dirichlet_partial_sum(ComplexValue s, long n_terms);                        \
    /* sum_{k=1}^{N} (-1)^(k+1) k^m x^k, accumulated in WideFloat */                         \
    double alternating_power_sum(int m, double x, long n_terms);                             \
    /* Gauss-Legendre rule applied on every panel of a path */                               \
    PathSum integrate_path(std::span<const PathPanel> panels, const GaussLegendreRule& rule, \
                           const PathIntegrand& f);

namespace serial {
CZETA_KERNEL_DECLS
}  // namespace serial

namespace omp {
CZETA_KERNEL_DECLS
}  // namespace omp

#undef CZETA_KERNEL_DECLS

/// Threads OpenMP will use (1 when built without OpenMP).
int max_threads();
/// No-op without OpenMP.
void set_threads(int n);

}  // namespace czeta::kernels
