#include <algorithm>
#include <exception>
#include <vector>

#if defined(_OPENMP)
#include <omp.h>
#endif

#include "czeta/numeric/kernels.hpp"
#include "kernel_terms.hpp"

namespace czeta::kernels {

int max_threads() {
#if defined(_OPENMP)
    return omp_get_max_threads();
#else
    return 1;
#endif
}

void set_threads(int n) {
#if defined(_OPENMP)
    omp_set_num_threads(std::max(n, 1));
#else
    (void)n;
#endif
}

namespace {

// Sums block(lo, hi) over a fixed partition of [first, last] and combines
// the partials in block order.
template <class T, class Block>
T blocked_sum(long first, long last, Block block) {
    const long n = last - first + 1;
    if (n <= 0) {
        return T{};
    }
    const long blocks = std::min(kReductionBlocks, n);
    std::vector<T> partial(static_cast<std::size_t>(blocks));
#pragma omp parallel for schedule(static)
    for (long b = 0; b < blocks; ++b) {
        const long lo = first + n * b / blocks;
        const long hi = first + n * (b + 1) / blocks - 1;
        partial[static_cast<std::size_t>(b)] = block(lo, hi);
    }
    T total{};
    for (const auto& p : partial) {
        total += p;
    }
    return total;
}

}  // namespace

namespace omp {

ComplexValue pole_pair_sum(ComplexValue s, long n_poles) {
    const ComplexValue sm1 = s - 1.0;
    return blocked_sum<ComplexValue>(1, n_poles, [&](long lo, long hi) {
        ComplexValue acc = 0.0;
        for (long n = lo; n <= hi; ++n) {
            acc += detail::pole_pair_term(sm1, n);
        }
        return acc;
    });
}

double cotangent_pair_sum(double x, long n_terms) {
    return blocked_sum<double>(1, n_terms, [&](long lo, long hi) {
        double acc = 0.0;
        for (long n = lo; n <= hi; ++n) {
            acc += detail::cotangent_pair_term(x, n);
        }
        return acc;
    });
}

ComplexValue dirichlet_partial_sum(ComplexValue s, long n_terms) {
    return blocked_sum<ComplexValue>(1, n_terms, [&](long lo, long hi) {
        ComplexValue acc = 0.0;
        for (long k = lo; k <= hi; ++k) {
            acc += detail::dirichlet_term(s, k);
        }
        return acc;
    });
}

double alternating_power_sum(int m, double x, long n_terms) {
    const auto wx = static_cast<WideFloat>(x);
    const WideFloat total = blocked_sum<WideFloat>(1, n_terms, [&](long lo, long hi) {
        WideFloat acc = 0;
        WideFloat xk = detail::wide_pow(wx, lo - 1);
        for (long k = lo; k <= hi; ++k) {
            xk *= wx;
            const WideFloat term = detail::power_of_index(k, m) * xk;
            acc += (k % 2 == 1) ? term : -term;
        }
        return acc;
    });
    return static_cast<double>(total);
}

PathSum integrate_path(std::span<const PathPanel> panels, const GaussLegendreRule& rule,
                       const PathIntegrand& f) {
    const auto count = static_cast<long>(panels.size());
    std::vector<PathSum> partial(panels.size());
    // An exception must not cross the parallel region; the first one is
    // rethrown afterwards.
    std::vector<std::exception_ptr> failures(panels.size());
#pragma omp parallel for schedule(static)
    for (long p = 0; p < count; ++p) {
        const PathPanel& panel = panels[static_cast<std::size_t>(p)];
        PathSum acc;
        try {
            for (std::size_t i = 0; i < rule.nodes.size(); ++i) {
                const double u = rule.nodes[i];
                const ComplexValue contrib = rule.weights[i] * f(panel.point(u)) * panel.jacobian(u);
                acc.value += contrib;
                acc.magnitude += std::abs(contrib);
            }
        } catch (...) {
            failures[static_cast<std::size_t>(p)] = std::current_exception();
        }
        partial[static_cast<std::size_t>(p)] = acc;
    }
    for (const auto& failure : failures) {
        if (failure) {
            std::rethrow_exception(failure);
        }
    }
    PathSum out;
    for (const auto& p : partial) {
        out.value += p.value;
        out.magnitude += p.magnitude;
    }
    return out;
}

}  // namespace omp
}  // namespace czeta::kernels
