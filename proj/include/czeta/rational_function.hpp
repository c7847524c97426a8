#pragma once

#include <string>
#include <vector>

#include "czeta/big_rational.hpp"

namespace czeta {

/// Dense polynomial over the rationals; coefficient i multiplies x^i.
/// Trailing zeros are trimmed, so the zero polynomial has no coefficients.
class Polynomial {
public:
    Polynomial() = default;
    explicit Polynomial(std::vector<BigRational> coeffs);
    static Polynomial constant(BigRational c) { return Polynomial({std::move(c)}); }
    /// x
    static Polynomial identity() { return Polynomial({BigRational(0), BigRational(1)}); }

    /// -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    bool is_zero() const { return coeffs_.empty(); }
    const std::vector<BigRational>& coefficients() const { return coeffs_; }
    BigRational coeff(int i) const;
    BigRational leading() const;

    BigRational evaluate(const BigRational& x) const;
    Polynomial derivative() const;
    Polynomial monic() const;
    std::string str() const;

    friend bool operator==(const Polynomial&, const Polynomial&) = default;

private:
    void trim();
    std::vector<BigRational> coeffs_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const BigRational& k, const Polynomial& a);

struct PolyDivision {
    Polynomial quotient;
    Polynomial remainder;
};
/// Euclidean division; throws DivisionByZero for a zero divisor.
PolyDivision divide(const Polynomial& a, const Polynomial& b);
/// Monic gcd (zero only when both inputs are zero).
Polynomial gcd(Polynomial a, Polynomial b);

/// numerator / denominator in lowest terms with a monic denominator.
class RationalFunction {
public:
    RationalFunction(Polynomial numerator, Polynomial denominator);
    /// 1/(1+x)
    static RationalFunction reciprocal_one_plus_x();

    const Polynomial& numerator() const { return num_; }
    const Polynomial& denominator() const { return den_; }

    /// Throws DivisionByZero if x is a root of the denominator.
    BigRational evaluate(const BigRational& x) const;
    std::string str() const;

    friend bool operator==(const RationalFunction&, const RationalFunction&) = default;

private:
    Polynomial num_;
    Polynomial den_;
};

RationalFunction operator-(const RationalFunction& f);

/// (x d/dx)^m f, reduced to lowest terms after every application.
RationalFunction apply_euler_operator(const RationalFunction& f, int m);

}  // namespace czeta
