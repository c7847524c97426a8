#include "czeta/big_rational.hpp"

#include <cmath>
#include <ostream>

#include "czeta/errors.hpp"

namespace czeta {

BigRational::BigRational(const BigInt& num, const BigInt& den) {
    if (den == 0) {
        throw DivisionByZero("rational with zero denominator");
    }
    q_ = mpq_class(num, den);
    q_.canonicalize();
}

BigRational BigRational::parse(std::string_view text) {
    auto parse_int = [&](std::string_view s) {
        std::string_view digits = s;
        if (!digits.empty() && (digits.front() == '-' || digits.front() == '+')) {
            digits.remove_prefix(1);
        }
        if (digits.empty()) {
            throw ParseError("empty integer in rational '" + std::string(text) + "'");
        }
        for (char c : digits) {
            if (c < '0' || c > '9') {
                throw ParseError("bad digit in rational '" + std::string(text) + "'");
            }
        }
        std::string owned(s);
        if (owned.front() == '+') {
            owned.erase(0, 1);
        }
        return BigInt(owned, 10);
    };

    const auto slash = text.find('/');
    if (slash == std::string_view::npos) {
        return BigRational(parse_int(text));
    }
    const auto den_text = text.substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+')) {
        throw ParseError("signed denominator in rational '" + std::string(text) + "'");
    }
    const BigInt den = parse_int(den_text);
    if (den == 0) {
        throw ParseError("zero denominator in rational '" + std::string(text) + "'");
    }
    return BigRational(parse_int(text.substr(0, slash)), den);
}

BigRational BigRational::from_double(double value) {
    if (!std::isfinite(value)) {
        throw DomainError("cannot convert non-finite double to a rational");
    }
    mpq_class q;
    mpq_set_d(q.get_mpq_t(), value);
    return BigRational(std::move(q));
}

std::string BigRational::str() const {
    if (q_.get_den() == 1) {
        return q_.get_num().get_str();
    }
    return q_.get_num().get_str() + "/" + q_.get_den().get_str();
}

double BigRational::to_double() const {
    // mpq_get_d truncates toward zero; pick whichever neighbour is nearer.
    const double truncated = mpq_get_d(q_.get_mpq_t());
    if (!std::isfinite(truncated) || is_zero()) {
        return truncated;
    }
    const double away = std::nextafter(truncated, sign() > 0 ? HUGE_VAL : -HUGE_VAL);
    if (!std::isfinite(away)) {
        return truncated;
    }
    mpq_class lo;
    mpq_class hi;
    mpq_set_d(lo.get_mpq_t(), truncated);
    mpq_set_d(hi.get_mpq_t(), away);
    const mpq_class d_lo = ::abs(mpq_class(q_ - lo));
    const mpq_class d_hi = ::abs(mpq_class(hi - q_));
    const int c = cmp(d_lo, d_hi);
    if (c < 0) {
        return truncated;
    }
    if (c > 0) {
        return away;
    }
    // Tie: even mantissa wins.
    int exp = 0;
    const double mant = std::frexp(truncated, &exp);
    const auto bits = static_cast<long long>(std::ldexp(mant, 53));
    return (bits % 2 == 0) ? truncated : away;
}

BigRational BigRational::abs() const { return BigRational(mpq_class(::abs(q_))); }

BigRational BigRational::reciprocal() const {
    if (is_zero()) {
        throw DivisionByZero("reciprocal of zero");
    }
    mpq_class r;
    mpq_inv(r.get_mpq_t(), q_.get_mpq_t());
    return BigRational(std::move(r));
}

BigRational BigRational::pow(long exponent) const {
    if (exponent < 0) {
        return reciprocal().pow(-exponent);
    }
    BigInt num;
    BigInt den;
    mpz_pow_ui(num.get_mpz_t(), q_.get_num_mpz_t(), static_cast<unsigned long>(exponent));
    mpz_pow_ui(den.get_mpz_t(), q_.get_den_mpz_t(), static_cast<unsigned long>(exponent));
    return BigRational(num, den);
}

BigRational& BigRational::operator+=(const BigRational& o) {
    q_ += o.q_;
    return *this;
}

BigRational& BigRational::operator-=(const BigRational& o) {
    q_ -= o.q_;
    return *this;
}

BigRational& BigRational::operator*=(const BigRational& o) {
    q_ *= o.q_;
    return *this;
}

BigRational& BigRational::operator/=(const BigRational& o) {
    if (o.is_zero()) {
        throw DivisionByZero("rational division by zero");
    }
    q_ /= o.q_;
    return *this;
}

BigRational operator-(const BigRational& a) { return BigRational(mpq_class(-a.q_)); }

std::ostream& operator<<(std::ostream& os, const BigRational& r) { return os << r.str(); }

BigRational binomial(unsigned long n, unsigned long k) {
    if (k > n) {
        return BigRational(0);
    }
    BigInt out;
    mpz_bin_uiui(out.get_mpz_t(), n, k);
    return BigRational(out);
}

BigRational factorial(unsigned long n) {
    BigInt out;
    mpz_fac_ui(out.get_mpz_t(), n);
    return BigRational(out);
}

}  // namespace czeta
