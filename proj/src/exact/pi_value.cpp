#include "czeta/pi_value.hpp"

#include <algorithm>
#include <string>

#include "czeta/errors.hpp"

namespace czeta {

namespace {
constexpr const char* kPi40 = "3.141592653589793238462643383279502884197";
}

const char* pi_literal() { return kPi40; }

BigRational pi_rational(int digits) {
    digits = std::clamp(digits, 1, 40);
    std::string mantissa = "3";
    const std::string fraction = std::string(kPi40).substr(2);
    mantissa += fraction.substr(0, static_cast<std::size_t>(digits - 1));
    BigInt scale;
    mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(digits - 1));
    return BigRational(BigInt(mantissa, 10), scale);
}

PiValue::PiValue(BigRational coefficient, int pi_exponent)
    : coefficient_(std::move(coefficient)), pi_exponent_(pi_exponent) {
    if (coefficient_.is_zero()) {
        pi_exponent_ = 0;
    } else if (pi_exponent_ < 0) {
        throw NegativePiPower("pi exponent must be nonnegative, got " + std::to_string(pi_exponent));
    }
}

double PiValue::to_double(int pi_digits) const {
    if (is_zero()) {
        return 0.0;
    }
    if (pi_digits < 16) {
        throw DomainError("pi_digits must be at least 16");
    }
    return (coefficient_ * pi_rational(pi_digits).pow(pi_exponent_)).to_double();
}

std::string PiValue::str() const {
    if (pi_exponent_ == 0) {
        return coefficient_.str();
    }
    std::string pi = pi_exponent_ == 1 ? "pi" : "pi^" + std::to_string(pi_exponent_);
    if (coefficient_ == BigRational(1)) {
        return pi;
    }
    if (coefficient_ == BigRational(-1)) {
        return "-" + pi;
    }
    return coefficient_.str() + "*" + pi;
}

PiValue operator*(const PiValue& a, const PiValue& b) {
    return PiValue(a.coefficient() * b.coefficient(), a.pi_exponent() + b.pi_exponent());
}

PiValue operator*(const BigRational& k, const PiValue& a) {
    return PiValue(k * a.coefficient(), a.pi_exponent());
}

PiValue operator+(const PiValue& a, const PiValue& b) {
    if (a.is_zero()) {
        return b;
    }
    if (b.is_zero()) {
        return a;
    }
    if (a.pi_exponent() != b.pi_exponent()) {
        throw MixedPiPowers("cannot add " + a.str() + " and " + b.str());
    }
    return PiValue(a.coefficient() + b.coefficient(), a.pi_exponent());
}

PiValue operator-(const PiValue& a) { return PiValue(-a.coefficient(), a.pi_exponent()); }

PiValue operator-(const PiValue& a, const PiValue& b) { return a + (-b); }

PiValue operator/(const PiValue& a, const PiValue& b) {
    if (b.is_zero()) {
        throw DivisionByZero("division by zero pi-monomial");
    }
    if (a.is_zero()) {
        return PiValue();
    }
    return PiValue(a.coefficient() / b.coefficient(), a.pi_exponent() - b.pi_exponent());
}

}  // namespace czeta
