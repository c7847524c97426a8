#pragma once

#include <string>
#include <vector>

#include "czeta/big_rational.hpp"

namespace czeta {

/// Working truncation order used when a caller does not pick one.
inline constexpr int kDefaultSeriesOrder = 40;

/// Truncated Laurent series over the rationals:
///
///   c_0 z^v + c_1 z^(v+1) + ... + c_(N-v) z^N   (trusted through z^N)
///
/// where v = valuation() and N = order(). Coefficients beyond the order are
/// unknown, not zero. After construction the leading stored coefficient is
/// nonzero; the zero series (known to vanish through N) has no stored
/// coefficients and valuation N + 1.
class LaurentSeries {
public:
    /// Coefficients of z^valuation .. z^(valuation + coeffs.size() - 1);
    /// `order` must be >= valuation + coeffs.size() - 1, missing entries are
    /// zero-filled. Leading zeros are stripped.
    LaurentSeries(int valuation, std::vector<BigRational> coeffs, int order);

    static LaurentSeries zero(int order);
    /// c * z^exponent, trusted through `order` (>= exponent).
    static LaurentSeries monomial(BigRational c, int exponent, int order);

    int valuation() const { return valuation_; }
    int order() const { return order_; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }

    /// Coefficient of z^m. Throws OutOfTrustedRange outside [valuation, order]
    /// (below the valuation of a normalized series the answer is 0, which is
    /// returned rather than thrown when m is still <= order).
    BigRational coeff(int m) const;

    /// Multiply by z^k (shifts valuation and order).
    LaurentSeries shifted(int k) const;
    /// Drops every term above `order` (order can only be tightened).
    LaurentSeries truncated(int order) const;
    LaurentSeries scaled(const BigRational& k) const;

    /// "c_v z^v + ... (trusted to N)".
    std::string str() const;

    friend bool operator==(const LaurentSeries&, const LaurentSeries&) = default;

private:
    void normalize();

    int valuation_ = 0;
    std::vector<BigRational> coeffs_;
    int order_ = 0;
};

/// sum_{n=0}^{order} a^n z^n / n!
LaurentSeries exp_series(const BigRational& a, int order);

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b);
LaurentSeries operator-(const LaurentSeries& a);
LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b);
/// Cauchy product; order = min(a.order + b.valuation, b.order + a.valuation).
LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b);

/// Multiplicative inverse by long division. Throws ZeroSeries.
LaurentSeries invert(const LaurentSeries& a);

/// Termwise d/dz; the order drops by one.
LaurentSeries differentiate(const LaurentSeries& a);

}  // namespace czeta
