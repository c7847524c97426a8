#include "czeta/numeric/kernels.hpp"
#include "kernel_terms.hpp"

namespace czeta::kernels::serial {

ComplexValue pole_pair_sum(ComplexValue s, long n_poles) {
    const ComplexValue sm1 = s - 1.0;
    ComplexValue total = 0.0;
    for (long n = 1; n <= n_poles; ++n) {
        total += detail::pole_pair_term(sm1, n);
    }
    return total;
}

double cotangent_pair_sum(double x, long n_terms) {
    double total = 0.0;
    for (long n = 1; n <= n_terms; ++n) {
        total += detail::cotangent_pair_term(x, n);
    }
    return total;
}

ComplexValue dirichlet_partial_sum(ComplexValue s, long n_terms) {
    ComplexValue total = 0.0;
    for (long k = 1; k <= n_terms; ++k) {
        total += detail::dirichlet_term(s, k);
    }
    return total;
}

double alternating_power_sum(int m, double x, long n_terms) {
    WideFloat total = 0;
    WideFloat xk = 1;
    const auto wx = static_cast<WideFloat>(x);
    for (long k = 1; k <= n_terms; ++k) {
        xk *= wx;
        const WideFloat term = detail::power_of_index(k, m) * xk;
        total += (k % 2 == 1) ? term : -term;
    }
    return static_cast<double>(total);
}

PathSum integrate_path(std::span<const PathPanel> panels, const GaussLegendreRule& rule,
                       const PathIntegrand& f) {
    PathSum out;
    for (const auto& panel : panels) {
        for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
            const double u = rule.nodes[i];
            const ComplexValue contrib = rule.weights[i] * f(panel.point(u)) * panel.jacobian(u);
            out.value += contrib;
            out.magnitude += std::abs(contrib);
        }
    }
    return out;
}

}  // namespace czeta::kernels::serial
