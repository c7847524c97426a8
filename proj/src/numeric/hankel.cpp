#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>

#include "czeta/errors.hpp"
#include "czeta/numeric/zeta_numeric.hpp"

namespace czeta {

void ContourSpec::validate() const {
    if (!(radius > 0.0) || !(radius < kTwoPi)) {
        throw InvalidConfig("contour radius must lie strictly between 0 and 2 pi");
    }
    if (x_max != 0.0 && !(x_max > radius)) {
        throw InvalidConfig("contour x_max must exceed the radius");
    }
    if (panels_ray < 1 || panels_arc < 1 || nodes_per_panel < 1) {
        throw InvalidConfig("contour panel and node counts must be positive");
    }
    if (!(refine_tol > 0.0) || max_refinements < 1) {
        throw InvalidConfig("contour refinement settings must be positive");
    }
}

double ContourSpec::resolved_x_max(ComplexValue s) const {
    if (x_max > 0.0) {
        return x_max;
    }
    // On the incoming ray |(-x)^(s-1)| grows like e^(pi |im s|); the extra
    // pi |im s| keeps the truncated tail below double precision.
    return std::max(40.0, 10.0 + 2.0 * std::abs(s)) + kPi * std::abs(s.imag());
}

ComplexValue hankel_integrand(ComplexValue x, ComplexValue s) {
    require_finite(x, "contour point");
    if (x.imag() == 0.0 && x.real() > 0.0) {
        std::ostringstream msg;
        msg << "x = " << x.real() << " lies on the branch cut of (-x)^(s-1)";
        throw OnBranchCut(msg.str());
    }
    const double k = std::round(x.imag() / kTwoPi);
    const ComplexValue pole(0.0, kTwoPi * k);
    if (std::abs(x - pole) <= 1e-12 * std::max(1.0, std::abs(x))) {
        throw AtPole("x is a pole of 1/(e^x - 1)");
    }
    // e^x - 1 = 2 e^(x/2) sinh(x/2); the e^(x/2) factor is folded into the
    // numerator's exponent.
    const ComplexValue numerator = std::exp((s - 1.0) * std::log(-x) - 0.5 * x);
    return numerator / (2.0 * std::sinh(0.5 * x));
}

std::vector<PathPanel> hankel_panels(ComplexValue s, const ContourSpec& contour, int level) {
    contour.validate();
    const double r = contour.radius;
    const double x_max = contour.resolved_x_max(s);
    if (!(x_max > r)) {
        throw InvalidConfig("contour x_max must exceed the radius");
    }
    const int scale = 1 << level;
    std::vector<PathPanel> panels;
    append_segment_panels(panels, {x_max, r}, {0.0, r}, contour.panels_ray * scale);
    append_arc_panels(panels, r, 0.5 * kPi, 1.5 * kPi, contour.panels_arc * scale);
    append_segment_panels(panels, {0.0, -r}, {x_max, -r}, contour.panels_ray * scale);
    return panels;
}

kernels::PathSum hankel_integral(ComplexValue s, const ContourSpec& contour, int level) {
    require_finite(s, "zeta argument");
    const auto panels = hankel_panels(s, contour, level);
    const auto rule = gauss_legendre(contour.nodes_per_panel);
    return kernels::omp::integrate_path(panels, rule,
                                        [s](ComplexValue x) { return hankel_integrand(x, s); });
}

HankelEstimate zeta_hankel_detailed(ComplexValue s, const ContourSpec& contour) {
    require_finite(s, "zeta argument");
    contour.validate();
    const double nearest = std::max(1.0, std::round(s.real()));
    if (std::abs(s - nearest) < 0.1) {
        std::ostringstream msg;
        msg << "s is within 0.1 of the positive integer " << nearest
            << "; the Gamma(1 - s) prefactor is ill-conditioned there";
        throw TooCloseToPositiveIntegerPole(msg.str());
    }

    const ComplexValue prefactor = -gamma_complex(1.0 - s) / ComplexValue(0.0, kTwoPi);
    const double prefactor_abs = std::abs(prefactor);
    ComplexValue previous = prefactor * hankel_integral(s, contour, 0).value;
    double change = 0.0;
    for (int level = 1; level <= contour.max_refinements; ++level) {
        const auto sum = hankel_integral(s, contour, level);
        const ComplexValue current = prefactor * sum.value;
        change = std::abs(current - previous);
        const double noise = 64.0 * std::numeric_limits<double>::epsilon() * prefactor_abs * sum.magnitude;
        if (change <= std::max(contour.refine_tol * std::max(1.0, std::abs(current)), noise)) {
            return {current, level, change};
        }
        previous = current;
    }
    std::ostringstream msg;
    msg << "Hankel quadrature did not settle after " << contour.max_refinements
        << " panel doublings (last change " << change << ")";
    throw QuadratureNotConverged(msg.str());
}

ComplexValue zeta_hankel(ComplexValue s, const ContourSpec& contour) {
    return zeta_hankel_detailed(s, contour).value;
}

}  // namespace czeta
