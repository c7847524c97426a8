#pragma once

#include <compare>
#include <cstdint>
#include <string>
#include <string_view>

#include <gmpxx.h>

namespace czeta {

using BigInt = mpz_class;

/// Exact rational number, always held in lowest terms with a positive
/// denominator. Zero is 0/1, so equality is structural.
class BigRational {
public:
    BigRational() = default;
    BigRational(long value) : q_(value) {}  // NOLINT(implicit)
    BigRational(int value) : q_(static_cast<long>(value)) {}  // NOLINT(implicit)
    explicit BigRational(const BigInt& value) : q_(value) {}

    /// Builds num/den and reduces it. Throws DivisionByZero when den == 0.
    BigRational(const BigInt& num, const BigInt& den);

    /// Parses "p/q" or "p" (optional leading sign on p). Throws ParseError.
    static BigRational parse(std::string_view text);

    /// Exact value of a finite double.
    static BigRational from_double(double value);

    BigInt numerator() const { return q_.get_num(); }
    BigInt denominator() const { return q_.get_den(); }

    int sign() const { return sgn(q_); }
    bool is_zero() const { return sgn(q_) == 0; }
    bool is_integer() const { return q_.get_den() == 1; }

    /// "p/q", or just "p" when the denominator is 1.
    std::string str() const;

    /// Nearest double (ties to even).
    double to_double() const;

    BigRational abs() const;
    BigRational reciprocal() const;
    /// Integer power; negative exponents invert. 0^0 = 1.
    BigRational pow(long exponent) const;

    BigRational& operator+=(const BigRational& o);
    BigRational& operator-=(const BigRational& o);
    BigRational& operator*=(const BigRational& o);
    BigRational& operator/=(const BigRational& o);

    friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
    friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
    friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
    friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
    friend BigRational operator-(const BigRational& a);

    friend bool operator==(const BigRational& a, const BigRational& b) {
        return cmp(a.q_, b.q_) == 0;
    }
    friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
        const int c = cmp(a.q_, b.q_);
        return c < 0 ? std::strong_ordering::less
                     : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
    }

    const mpq_class& raw() const { return q_; }

private:
    explicit BigRational(mpq_class q) : q_(std::move(q)) {}

    mpq_class q_;
};

std::ostream& operator<<(std::ostream& os, const BigRational& r);

/// C(n, k); zero when k > n.
BigRational binomial(unsigned long n, unsigned long k);

/// n!
BigRational factorial(unsigned long n);

}  // namespace czeta
