#pragma once

#include <vector>

#include "czeta/numeric/complex_math.hpp"

namespace czeta {

/// n-point Gauss-Legendre rule on [-1, 1].
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};

/// Nodes by Newton iteration on the Legendre three-term recurrence.
/// Exact for polynomials of degree <= 2n - 1.
GaussLegendreRule gauss_legendre(int n);

/// One quadrature panel of a contour in the complex plane: either the
/// straight segment from `from` to `to`, or the arc radius*e^(i theta) for
/// theta from theta_from to theta_to.
struct PathPanel {
    enum class Kind { Segment, Arc };

    Kind kind = Kind::Segment;
    ComplexValue from;
    ComplexValue to;
    double radius = 0.0;
    double theta_from = 0.0;
    double theta_to = 0.0;

    static PathPanel segment(ComplexValue a, ComplexValue b) {
        return {Kind::Segment, a, b, 0.0, 0.0, 0.0};
    }
    static PathPanel arc(double r, double t0, double t1) {
        return {Kind::Arc, {}, {}, r, t0, t1};
    }

    /// Point at local parameter u in [-1, 1].
    ComplexValue point(double u) const;
    /// dx/du at local parameter u.
    ComplexValue jacobian(double u) const;
};

/// Splits a segment / arc into `count` equal panels, appended to `out`.
void append_segment_panels(std::vector<PathPanel>& out, ComplexValue a, ComplexValue b, int count);
void append_arc_panels(std::vector<PathPanel>& out, double r, double t0, double t1, int count);

}  // namespace czeta
