#include "czeta/numeric/quadrature.hpp"

#include <cmath>

#include "czeta/errors.hpp"

namespace czeta {

GaussLegendreRule gauss_legendre(int n) {
    if (n < 1) {
        throw InvalidConfig("Gauss-Legendre rule needs at least one node");
    }
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<std::size_t>(n));
    rule.weights.resize(static_cast<std::size_t>(n));
    const int half = (n + 1) / 2;
    for (int i = 0; i < half; ++i) {
        double x = std::cos(kPi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            double p0 = 1.0;
            double p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            // P_n'(x) from P_n and P_(n-1).
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-16) {
                break;
            }
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<std::size_t>(i)] = -x;
        rule.nodes[static_cast<std::size_t>(n - 1 - i)] = x;
        rule.weights[static_cast<std::size_t>(i)] = w;
        rule.weights[static_cast<std::size_t>(n - 1 - i)] = w;
    }
    if (n % 2 == 1) {
        rule.nodes[static_cast<std::size_t>(n / 2)] = 0.0;
    }
    return rule;
}

ComplexValue PathPanel::point(double u) const {
    if (kind == Kind::Segment) {
        return 0.5 * (from + to) + 0.5 * u * (to - from);
    }
    const double theta = 0.5 * (theta_from + theta_to) + 0.5 * u * (theta_to - theta_from);
    return std::polar(radius, theta);
}

ComplexValue PathPanel::jacobian(double u) const {
    if (kind == Kind::Segment) {
        return 0.5 * (to - from);
    }
    const double half_span = 0.5 * (theta_to - theta_from);
    const double theta = 0.5 * (theta_from + theta_to) + u * half_span;
    return ComplexValue(0.0, 1.0) * std::polar(radius, theta) * half_span;
}

void append_segment_panels(std::vector<PathPanel>& out, ComplexValue a, ComplexValue b, int count) {
    for (int i = 0; i < count; ++i) {
        const ComplexValue p = a + (b - a) * (static_cast<double>(i) / count);
        const ComplexValue q = a + (b - a) * (static_cast<double>(i + 1) / count);
        out.push_back(PathPanel::segment(p, q));
    }
}

void append_arc_panels(std::vector<PathPanel>& out, double r, double t0, double t1, int count) {
    for (int i = 0; i < count; ++i) {
        const double p = t0 + (t1 - t0) * (static_cast<double>(i) / count);
        const double q = t0 + (t1 - t0) * (static_cast<double>(i + 1) / count);
        out.push_back(PathPanel::arc(r, p, q));
    }
}

}  // namespace czeta
