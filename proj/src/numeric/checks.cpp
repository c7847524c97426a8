#include <cmath>
#include <exception>

#include "czeta/errors.hpp"
#include "czeta/numeric/zeta_numeric.hpp"

namespace czeta {

double inverted_contour_tail_bound(ComplexValue s, long n_poles) {
    const double sigma = s.real();
    return 2.0 * std::pow(kTwoPi, sigma) * std::exp(0.5 * kPi * std::abs(s.imag())) *
           std::pow(static_cast<double>(n_poles), sigma) / std::abs(sigma);
}

InversionSides inverted_contour_sides(ComplexValue s, long n_poles, const NumericConfig& cfg) {
    require_finite(s, "s");
    if (!(s.real() <= -0.5)) {
        throw DomainError("the inside-out residue sum is only used for re(s) <= -1/2");
    }
    if (n_poles < 1) {
        throw DomainError("n_poles must be positive");
    }
    InversionSides out;
    // sin(pi s) Gamma(s) = pi / Gamma(1 - s), which stays finite at the
    // negative integers.
    const ComplexValue sin_gamma = kPi / gamma_complex(1.0 - s);
    NumericConfig direct = cfg;
    direct.reflect_left = false;
    out.direct = ComplexValue(0.0, -2.0) * sin_gamma * zeta_em(s, direct);
    out.residue = ComplexValue(0.0, -kTwoPi) * kernels::omp::pole_pair_sum(s, n_poles);
    out.difference = std::abs(out.direct - out.residue);
    out.tail_bound = inverted_contour_tail_bound(s, n_poles);
    return out;
}

double inverted_contour_check(ComplexValue s, long n_poles, const NumericConfig& cfg) {
    return inverted_contour_sides(s, n_poles, cfg).difference;
}

double funceq_residual(ComplexValue s, const NumericConfig& cfg) {
    require_finite(s, "s");
    const double nearest = std::round(s.real());
    if (std::abs(s - 1.0) < 1e-3 || (nearest <= 0.0 && std::abs(s - nearest) < 1e-3)) {
        throw NearPole("funceq_residual is undefined within 1e-3 of s = 1 or a Gamma pole");
    }
    NumericConfig direct = cfg;
    direct.reflect_left = false;
    const ComplexValue lhs = 2.0 * cos_pi(0.5 * s) * gamma_complex(s) * zeta_em(s, direct);
    const ComplexValue rhs = std::exp(s * std::log(kTwoPi)) * zeta_em(1.0 - s, direct);
    const double scale = std::max(std::abs(lhs), std::abs(rhs));
    if (scale == 0.0) {
        return 0.0;
    }
    return std::abs(lhs - rhs) / scale;
}

std::vector<double> funceq_residual_grid(const std::vector<ComplexValue>& points, const NumericConfig& cfg) {
    const auto count = static_cast<long>(points.size());
    std::vector<double> out(points.size());
    std::vector<std::exception_ptr> failures(points.size());
#pragma omp parallel for schedule(dynamic)
    for (long i = 0; i < count; ++i) {
        try {
            out[static_cast<std::size_t>(i)] = funceq_residual(points[static_cast<std::size_t>(i)], cfg);
        } catch (...) {
            failures[static_cast<std::size_t>(i)] = std::current_exception();
        }
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    return out;
}

std::vector<double> funceq_residual_grid_serial(const std::vector<ComplexValue>& points,
                                                const NumericConfig& cfg) {
    std::vector<double> out;
    out.reserve(points.size());
    for (const auto& s : points) {
        out.push_back(funceq_residual(s, cfg));
    }
    return out;
}

std::vector<ComplexValue> rectangular_grid(double re0, double re1, double im0, double im1, int steps) {
    if (steps < 1) {
        throw DomainError("grid needs at least one step");
    }
    std::vector<ComplexValue> out;
    out.reserve(static_cast<std::size_t>(steps) * static_cast<std::size_t>(steps));
    auto at = [steps](double a, double b, int i) {
        return steps == 1 ? a : a + (b - a) * static_cast<double>(i) / (steps - 1);
    };
    for (int i = 0; i < steps; ++i) {
        for (int j = 0; j < steps; ++j) {
            out.emplace_back(at(re0, re1, i), at(im0, im1, j));
        }
    }
    return out;
}

double cotangent_tail_bound(const BigRational& x, long n_terms) {
    const double xd = x.to_double();
    return 2.0 * xd / (static_cast<double>(n_terms) - xd) + 1e-12;
}

double cotangent_check(const BigRational& x, long n_terms) {
    if (!(x > BigRational(0) && x < BigRational(1))) {
        throw DomainError("cotangent_check needs 0 < x < 1, got " + x.str());
    }
    if (n_terms < 1) {
        throw DomainError("n_terms must be positive");
    }
    const double xd = x.to_double();
    const double lhs = kPi * cos_pi(xd) / sin_pi(xd);
    const double rhs = 1.0 / xd + kernels::omp::cotangent_pair_sum(xd, n_terms);
    return std::abs(lhs - rhs);
}

}  // namespace czeta
