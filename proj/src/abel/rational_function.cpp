#include "czeta/rational_function.hpp"

#include <algorithm>
#include <sstream>

#include "czeta/errors.hpp"

namespace czeta {

Polynomial::Polynomial(std::vector<BigRational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

void Polynomial::trim() {
    while (!coeffs_.empty() && coeffs_.back().is_zero()) {
        coeffs_.pop_back();
    }
}

BigRational Polynomial::coeff(int i) const {
    if (i < 0 || i > degree()) {
        return BigRational(0);
    }
    return coeffs_[static_cast<std::size_t>(i)];
}

BigRational Polynomial::leading() const { return is_zero() ? BigRational(0) : coeffs_.back(); }

BigRational Polynomial::evaluate(const BigRational& x) const {
    BigRational acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) {
        acc = acc * x + *it;
    }
    return acc;
}

Polynomial Polynomial::derivative() const {
    std::vector<BigRational> out;
    for (std::size_t i = 1; i < coeffs_.size(); ++i) {
        out.push_back(coeffs_[i] * BigRational(static_cast<long>(i)));
    }
    return Polynomial(std::move(out));
}

Polynomial Polynomial::monic() const {
    if (is_zero()) {
        return *this;
    }
    return leading().reciprocal() * *this;
}

std::string Polynomial::str() const {
    if (is_zero()) {
        return "0";
    }
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const BigRational& c = coeffs_[static_cast<std::size_t>(i)];
        if (c.is_zero()) {
            continue;
        }
        const BigRational mag = c.abs();
        if (first) {
            os << (c.sign() < 0 ? "-" : "");
        } else {
            os << (c.sign() < 0 ? " - " : " + ");
        }
        const bool unit = mag == BigRational(1);
        if (i == 0) {
            os << mag.str();
        } else {
            if (!unit) {
                os << mag.str() << "*";
            }
            os << "x";
            if (i > 1) {
                os << "^" << i;
            }
        }
        first = false;
    }
    return os.str();
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<BigRational> out(std::max(ac.size(), bc.size()));
    for (std::size_t i = 0; i < out.size(); ++i) {
        if (i < ac.size()) {
            out[i] += ac[i];
        }
        if (i < bc.size()) {
            out[i] += bc[i];
        }
    }
    return Polynomial(std::move(out));
}

Polynomial operator*(const BigRational& k, const Polynomial& a) {
    std::vector<BigRational> out;
    for (const auto& c : a.coefficients()) {
        out.push_back(k * c);
    }
    return Polynomial(std::move(out));
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) { return a + BigRational(-1) * b; }

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) {
        return Polynomial();
    }
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<BigRational> out(ac.size() + bc.size() - 1);
    for (std::size_t i = 0; i < ac.size(); ++i) {
        for (std::size_t j = 0; j < bc.size(); ++j) {
            out[i + j] += ac[i] * bc[j];
        }
    }
    return Polynomial(std::move(out));
}

PolyDivision divide(const Polynomial& a, const Polynomial& b) {
    if (b.is_zero()) {
        throw DivisionByZero("polynomial division by zero");
    }
    std::vector<BigRational> rem = a.coefficients();
    const int db = b.degree();
    const BigRational lead_inv = b.leading().reciprocal();
    std::vector<BigRational> quot(static_cast<std::size_t>(std::max(a.degree() - db + 1, 0)));
    for (int i = a.degree(); i >= db; --i) {
        const BigRational c = rem[static_cast<std::size_t>(i)] * lead_inv;
        quot[static_cast<std::size_t>(i - db)] = c;
        if (c.is_zero()) {
            continue;
        }
        for (int j = 0; j <= db; ++j) {
            rem[static_cast<std::size_t>(i - db + j)] -= c * b.coeff(j);
        }
    }
    return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(Polynomial a, Polynomial b) {
    while (!b.is_zero()) {
        Polynomial r = divide(a, b).remainder;
        a = std::move(b);
        b = std::move(r);
    }
    return a.monic();
}

RationalFunction::RationalFunction(Polynomial numerator, Polynomial denominator) {
    if (denominator.is_zero()) {
        throw DivisionByZero("rational function with zero denominator");
    }
    if (numerator.is_zero()) {
        num_ = Polynomial();
        den_ = Polynomial::constant(BigRational(1));
        return;
    }
    const Polynomial g = gcd(numerator, denominator);
    if (g.degree() > 0) {
        numerator = divide(numerator, g).quotient;
        denominator = divide(denominator, g).quotient;
    }
    const BigRational lead_inv = denominator.leading().reciprocal();
    num_ = lead_inv * numerator;
    den_ = lead_inv * denominator;
}

RationalFunction RationalFunction::reciprocal_one_plus_x() {
    return RationalFunction(Polynomial::constant(BigRational(1)),
                            Polynomial({BigRational(1), BigRational(1)}));
}

BigRational RationalFunction::evaluate(const BigRational& x) const {
    const BigRational d = den_.evaluate(x);
    if (d.is_zero()) {
        throw DivisionByZero("rational function evaluated at a pole x = " + x.str());
    }
    return num_.evaluate(x) / d;
}

std::string RationalFunction::str() const {
    if (den_.degree() == 0) {
        return num_.str();
    }
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

RationalFunction operator-(const RationalFunction& f) {
    return RationalFunction(BigRational(-1) * f.numerator(), f.denominator());
}

RationalFunction apply_euler_operator(const RationalFunction& f, int m) {
    if (m < 0) {
        throw DomainError("Euler operator power must be nonnegative");
    }
    RationalFunction out = f;
    const Polynomial x = Polynomial::identity();
    for (int i = 0; i < m; ++i) {
        const Polynomial& p = out.numerator();
        const Polynomial& q = out.denominator();
        const Polynomial dq = q.derivative();
        if (dq.is_zero()) {
            out = RationalFunction(x * p.derivative(), q);
            continue;
        }
        // x (p/q)' = x (p'q - pq') / q^2; cancel g = gcd(q, q') first so the
        // denominator is q (q/g) rather than q^2.
        const Polynomial g = gcd(q, dq);
        const Polynomial q_g = divide(q, g).quotient;
        const Polynomial dq_g = divide(dq, g).quotient;
        out = RationalFunction(x * (p.derivative() * q_g - p * dq_g), q * q_g);
    }
    return out;
}

}  // namespace czeta
