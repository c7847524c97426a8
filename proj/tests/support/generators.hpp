#pragma once

// Random inputs for the property tests. Fixed seeds keep failures
// reproducible.

#include <algorithm>
#include <cstdint>
#include <random>
#include <vector>

#include "czeta/big_rational.hpp"
#include "czeta/laurent_series.hpp"
#include "czeta/pi_value.hpp"

namespace czeta::testgen {

class Gen {
public:
    explicit Gen(std::uint64_t seed) : rng_(seed) {}

    long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(rng_); }

    double real(double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(rng_); }

    bool coin() { return integer(0, 1) == 1; }

    /// Small numerators and denominators, sometimes a big one.
    BigRational rational() {
        const long bound = coin() ? 20 : 1000000;
        const long num = integer(-bound, bound);
        const long den = integer(1, bound);
        return BigRational(BigInt(num), BigInt(den));
    }

    BigRational nonzero_rational() {
        for (;;) {
            BigRational r = rational();
            if (!r.is_zero()) {
                return r;
            }
        }
    }

    PiValue pi_value(int max_exponent = 6) {
        return PiValue(rational(), static_cast<int>(integer(0, max_exponent)));
    }

    LaurentSeries series(int order, int min_valuation = -3) {
        const int valuation = static_cast<int>(integer(min_valuation, std::min(order, 3)));
        std::vector<BigRational> coeffs;
        for (int e = valuation; e <= order; ++e) {
            coeffs.push_back(integer(0, 3) == 0 ? BigRational(0) : rational());
        }
        return LaurentSeries(valuation, std::move(coeffs), order);
    }

    /// Nonzero leading coefficient at the chosen valuation.
    LaurentSeries unit_series(int order, int min_valuation = -3) {
        const int v = static_cast<int>(integer(min_valuation, std::min(order, 3)));
        std::vector<BigRational> coeffs{nonzero_rational()};
        for (int e = v + 1; e <= order; ++e) {
            coeffs.push_back(rational());
        }
        return LaurentSeries(v, std::move(coeffs), order);
    }

private:
    std::mt19937_64 rng_;
};

}  // namespace czeta::testgen
