#include "czeta/bernoulli.hpp"

#include <algorithm>
#include <memory>
#include <mutex>

#include "czeta/errors.hpp"

namespace czeta {

LaurentSeries bernoulli_generating_series(int order) {
    if (order < 0) {
        throw DomainError("Bernoulli series order must be nonnegative");
    }
    // (e^z - 1)/z through z^order needs e^z through z^(order + 1).
    const LaurentSeries e_minus_one = exp_series(BigRational(1), order + 1) -
                                      LaurentSeries::monomial(BigRational(1), 0, order + 1);
    return invert(e_minus_one.shifted(-1));
}

BernoulliTable bernoulli_via_series(int max_index) {
    if (max_index < 0) {
        throw DomainError("max_index must be nonnegative");
    }
    const LaurentSeries gen = bernoulli_generating_series(max_index);
    std::vector<BigRational> values;
    values.reserve(static_cast<std::size_t>(max_index) + 1);
    BigRational fact(1);
    for (int n = 0; n <= max_index; ++n) {
        if (n > 0) {
            fact *= BigRational(n);
        }
        values.push_back(fact * gen.coeff(n));
    }
    return BernoulliTable(std::move(values));
}

BernoulliTable bernoulli_via_recurrence(int max_index) {
    if (max_index < 0) {
        throw DomainError("max_index must be nonnegative");
    }
    std::vector<BigRational> b;
    b.reserve(static_cast<std::size_t>(max_index) + 1);
    b.emplace_back(1);
    for (int n = 1; n <= max_index; ++n) {
        BigRational acc;
        for (int k = 0; k < n; ++k) {
            acc += binomial(static_cast<unsigned long>(n + 1), static_cast<unsigned long>(k)) *
                   b[static_cast<std::size_t>(k)];
        }
        b.push_back(-acc / BigRational(n + 1));
    }
    return BernoulliTable(std::move(b));
}

bool even_part_check(int order) {
    if (order < 2) {
        throw DomainError("even_part_check needs order >= 2");
    }
    const LaurentSeries peeled =
        bernoulli_generating_series(order) + LaurentSeries::monomial(BigRational(1, 2), 1, order);
    for (int m = 1; m <= order; m += 2) {
        if (!peeled.coeff(m).is_zero()) {
            return false;
        }
    }
    return true;
}

BigRational faulhaber_sum(unsigned m, unsigned long n) {
    const auto bern = bernoulli_numbers(static_cast<int>(m));
    const BigRational big_n{BigInt(n)};
    BigRational below_n;  // sum_{k=0}^{n-1} k^m
    for (unsigned j = 0; j <= m; ++j) {
        below_n += binomial(m + 1, j) * (*bern)[static_cast<int>(j)] * big_n.pow(m + 1 - j);
    }
    below_n /= BigRational(static_cast<long>(m) + 1);
    // Shift the range from 0..n-1 to 1..n; the k = 0 term is 0^m.
    BigRational result = below_n + big_n.pow(m);
    if (m == 0) {
        result -= BigRational(1);
    }
    return result;
}

std::shared_ptr<const BernoulliTable> bernoulli_numbers(int max_index) {
    static std::mutex guard;
    static std::shared_ptr<const BernoulliTable> cached;
    std::lock_guard lock(guard);
    if (!cached || cached->max_index() < max_index) {
        const int size = std::max(max_index, cached ? 2 * cached->max_index() : kDefaultSeriesOrder);
        cached = std::make_shared<const BernoulliTable>(bernoulli_via_series(size));
    }
    return cached;
}

}  // namespace czeta
