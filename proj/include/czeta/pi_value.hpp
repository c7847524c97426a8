#pragma once

#include <string>

#include "czeta/big_rational.hpp"

namespace czeta {

/// Exact value coefficient * pi^pi_exponent with pi_exponent >= 0.
/// Zero is canonically (0, 0).
class PiValue {
public:
    PiValue() = default;
    PiValue(BigRational coefficient, int pi_exponent);
    /// A rational, i.e. pi^0.
    static PiValue rational(BigRational coefficient) { return PiValue(std::move(coefficient), 0); }

    const BigRational& coefficient() const { return coefficient_; }
    int pi_exponent() const { return pi_exponent_; }
    bool is_zero() const { return coefficient_.is_zero(); }

    /// Evaluates with pi truncated to `pi_digits` significant digits
    /// (16 <= pi_digits <= 40; larger requests use all 40 stored digits).
    double to_double(int pi_digits = 40) const;

    /// Human form, e.g. "1/6*pi^2", "pi", "-1/12".
    std::string str() const;

    friend bool operator==(const PiValue&, const PiValue&) = default;

private:
    BigRational coefficient_;
    int pi_exponent_ = 0;
};

PiValue operator*(const PiValue& a, const PiValue& b);
/// Same-power addition. Throws MixedPiPowers if both sides are nonzero at
/// different powers.
PiValue operator+(const PiValue& a, const PiValue& b);
PiValue operator-(const PiValue& a);
PiValue operator-(const PiValue& a, const PiValue& b);
/// Throws DivisionByZero on a zero divisor and NegativePiPower if the
/// quotient would carry a negative power of pi.
PiValue operator/(const PiValue& a, const PiValue& b);

PiValue operator*(const BigRational& k, const PiValue& a);

/// The stored 40-digit decimal literal for pi.
const char* pi_literal();

/// pi truncated to `digits` significant digits, as an exact rational.
BigRational pi_rational(int digits);

}  // namespace czeta
