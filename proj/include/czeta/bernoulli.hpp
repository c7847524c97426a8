#pragma once

#include <memory>
#include <vector>

#include "czeta/big_rational.hpp"
#include "czeta/laurent_series.hpp"

namespace czeta {

/// B_0 .. B_max_index with the convention z/(e^z - 1) = sum B_n z^n / n!,
/// so B_1 = -1/2.
class BernoulliTable {
public:
    explicit BernoulliTable(std::vector<BigRational> values) : values_(std::move(values)) {}

    int max_index() const { return static_cast<int>(values_.size()) - 1; }
    const BigRational& operator[](int n) const { return values_.at(static_cast<std::size_t>(n)); }
    const std::vector<BigRational>& values() const { return values_; }

    friend bool operator==(const BernoulliTable&, const BernoulliTable&) = default;

private:
    std::vector<BigRational> values_;
};

/// z/(e^z - 1) through `order`, as the inverse of (e^z - 1)/z.
LaurentSeries bernoulli_generating_series(int order);

/// B_n = n! * [z^n] z/(e^z - 1).
BernoulliTable bernoulli_via_series(int max_index);

/// sum_{k=0}^{n} C(n+1, k) B_k = 0 with B_0 = 1.
BernoulliTable bernoulli_via_recurrence(int max_index);

/// True iff z/(e^z - 1) + z/2 has every odd coefficient through `order`
/// exactly zero.
bool even_part_check(int order);

/// S_m(n) = 1^m + ... + n^m, built from the terminating Euler-Maclaurin
/// expansion
///   sum_{k=0}^{n-1} k^m = 1/(m+1) sum_{j=0}^{m} C(m+1, j) B_j n^(m+1-j)
/// plus n^m. S_m(0) = 0.
BigRational faulhaber_sum(unsigned m, unsigned long n);

/// Process-wide cache of bernoulli_via_series covering at least `max_index`.
std::shared_ptr<const BernoulliTable> bernoulli_numbers(int max_index);

}  // namespace czeta
