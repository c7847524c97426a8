#pragma once

#include <vector>

#include "czeta/big_rational.hpp"
#include "czeta/numeric/complex_math.hpp"
#include "czeta/numeric/kernels.hpp"

namespace czeta {

/// Euler-Maclaurin settings for zeta_em.
struct NumericConfig {
    int em_terms_N = 30;       // Dirichlet partial-sum cutoff
    int em_terms_J = 15;       // Bernoulli correction terms, <= 15
    double target_tol = 1e-13; // >= 1e-13
    bool reflect_left = true;  // re(s) < 0 goes through zeta(1 - s)

    /// Throws InvalidConfig.
    void validate() const;
};

/// Hankel contour: incoming ray Im x = +radius from x_max to 0, the
/// counterclockwise arc of that radius through -radius, outgoing ray
/// Im x = -radius from 0 to x_max.
struct ContourSpec {
    double radius = kPi;      // 0 < radius < 2 pi
    double x_max = 0.0;       // 0 selects max(40, 10 + 2|s|) + pi |im s|
    int panels_ray = 16;
    int panels_arc = 8;
    int nodes_per_panel = 20;
    double refine_tol = 1e-12; // relative change accepted between refinements
    int max_refinements = 6;

    /// Throws InvalidConfig.
    void validate() const;
    /// The x_max actually used for `s`.
    double resolved_x_max(ComplexValue s) const;
};

/// Euler-Maclaurin accelerated Dirichlet series. The cutoff is raised to
/// ceil(2 |im s|) when the configured one is smaller. With reflect_left,
/// points with re(s) < 0 are evaluated at 1 - s and mapped back with the
/// functional equation.
/// Throws NearPole for |s - 1| < 1e-6 and OutOfValidatedRange for
/// re(s) <= -(2 J - 1).
ComplexValue zeta_em(ComplexValue s, const NumericConfig& cfg = {});

/// (-x)^(s-1) / (e^x - 1) with log(-x) on the principal branch, so the cut
/// in x runs along the positive real axis.
/// Throws OnBranchCut for real x > 0 and AtPole at x = 2 pi i k.
ComplexValue hankel_integrand(ComplexValue x, ComplexValue s);

/// The panels of `contour` for the point s, refined `level` times (each
/// level doubles the panel counts).
std::vector<PathPanel> hankel_panels(ComplexValue s, const ContourSpec& contour, int level = 0);

/// Contour integral of hankel_integrand along `contour` at a fixed level.
kernels::PathSum hankel_integral(ComplexValue s, const ContourSpec& contour, int level = 0);

struct HankelEstimate {
    ComplexValue value;
    int refinements = 0;     // panel doublings needed
    double last_change = 0.0;
};

/// zeta(s) = -Gamma(1 - s) I / (2 pi i) with I the Hankel integral, refined
/// by panel doubling until successive estimates agree.
/// Throws TooCloseToPositiveIntegerPole within 0.1 of 1, 2, 3, ... and
/// QuadratureNotConverged.
HankelEstimate zeta_hankel_detailed(ComplexValue s, const ContourSpec& contour = {});
ComplexValue zeta_hankel(ComplexValue s, const ContourSpec& contour = {});

/// The two sides of the inside-out contour identity for re(s) <= -1/2:
///   direct  = -2i sin(pi s) Gamma(s) zeta_em(s)
///   residue = -2 pi i sum_{0<|n|<=N} (-2 pi i n)^(s-1)
struct InversionSides {
    ComplexValue direct;
    ComplexValue residue;
    double difference = 0.0;
    double tail_bound = 0.0;  // bound on the truncated residue tail
};
InversionSides inverted_contour_sides(ComplexValue s, long n_poles, const NumericConfig& cfg = {});
/// |direct - residue| from inverted_contour_sides.
double inverted_contour_check(ComplexValue s, long n_poles, const NumericConfig& cfg = {});
/// 2 (2 pi)^re(s) e^(pi |im s| / 2) N^re(s) / |re(s)|
double inverted_contour_tail_bound(ComplexValue s, long n_poles);

/// |2 cos(pi s/2) Gamma(s) zeta(s) - (2 pi)^s zeta(1 - s)| / max(|lhs|, |rhs|)
/// with both zeta values from zeta_em.
/// Throws NearPole within 1e-3 of 0, 1 or a Gamma pole.
double funceq_residual(ComplexValue s, const NumericConfig& cfg = {});

/// funceq_residual over many points; entries come back in input order.
std::vector<double> funceq_residual_grid(const std::vector<ComplexValue>& points,
                                         const NumericConfig& cfg = {});
/// Single-threaded reference for funceq_residual_grid.
std::vector<double> funceq_residual_grid_serial(const std::vector<ComplexValue>& points,
                                                const NumericConfig& cfg = {});

/// Row-major STEPS x STEPS grid over [re0, re1] x [im0, im1].
std::vector<ComplexValue> rectangular_grid(double re0, double re1, double im0, double im1, int steps);

/// |pi cot(pi x) - (1/x + sum_{n<=N} (1/(x+n) + 1/(x-n)))| for rational
/// 0 < x < 1.
double cotangent_check(const BigRational& x, long n_terms);
/// 2x/(N - x) + 1e-12
double cotangent_tail_bound(const BigRational& x, long n_terms);

}  // namespace czeta
