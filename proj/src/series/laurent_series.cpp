#include "czeta/laurent_series.hpp"

#include <algorithm>
#include <sstream>

#include "czeta/errors.hpp"

namespace czeta {

LaurentSeries::LaurentSeries(int valuation, std::vector<BigRational> coeffs, int order)
    : valuation_(valuation), coeffs_(std::move(coeffs)), order_(order) {
    const int needed = order_ - valuation_ + 1;
    if (static_cast<int>(coeffs_.size()) > std::max(needed, 0)) {
        throw DomainError("series has coefficients beyond its trusted order");
    }
    if (needed > 0) {
        coeffs_.resize(static_cast<std::size_t>(needed));
    }
    normalize();
}

LaurentSeries LaurentSeries::zero(int order) { return LaurentSeries(order + 1, {}, order); }

LaurentSeries LaurentSeries::monomial(BigRational c, int exponent, int order) {
    if (order < exponent) {
        throw DomainError("monomial order below its exponent");
    }
    return LaurentSeries(exponent, {std::move(c)}, order);
}

void LaurentSeries::normalize() {
    auto first = std::find_if(coeffs_.begin(), coeffs_.end(),
                              [](const BigRational& c) { return !c.is_zero(); });
    const auto dropped = static_cast<int>(first - coeffs_.begin());
    coeffs_.erase(coeffs_.begin(), first);
    if (coeffs_.empty()) {
        valuation_ = order_ + 1;
    } else {
        valuation_ += dropped;
    }
}

BigRational LaurentSeries::coeff(int m) const {
    if (m > order_) {
        std::ostringstream msg;
        msg << "coefficient of z^" << m << " requested from a series trusted only to z^" << order_;
        throw OutOfTrustedRange(msg.str());
    }
    if (m < valuation_) {
        return BigRational(0);
    }
    return coeffs_[static_cast<std::size_t>(m - valuation_)];
}

LaurentSeries LaurentSeries::shifted(int k) const {
    LaurentSeries out = *this;
    out.valuation_ += k;
    out.order_ += k;
    return out;
}

LaurentSeries LaurentSeries::truncated(int order) const {
    if (order >= order_) {
        return *this;
    }
    std::vector<BigRational> kept;
    for (int m = valuation_; m <= order; ++m) {
        kept.push_back(coeff(m));
    }
    return LaurentSeries(std::min(valuation_, order + 1), std::move(kept), order);
}

LaurentSeries LaurentSeries::scaled(const BigRational& k) const {
    std::vector<BigRational> out;
    out.reserve(coeffs_.size());
    for (const auto& c : coeffs_) {
        out.push_back(c * k);
    }
    return LaurentSeries(valuation_, std::move(out), order_);
}

std::string LaurentSeries::str() const {
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = 0; i < coeffs_.size(); ++i) {
        const BigRational& c = coeffs_[i];
        if (c.is_zero()) {
            continue;
        }
        const int e = valuation_ + static_cast<int>(i);
        if (first) {
            os << c.str();
        } else {
            os << (c.sign() < 0 ? " - " : " + ") << c.abs().str();
        }
        if (e != 0) {
            os << " z^" << e;
        }
        first = false;
    }
    if (first) {
        os << "0";
    }
    os << " (trusted to " << order_ << ")";
    return os.str();
}

LaurentSeries exp_series(const BigRational& a, int order) {
    if (order < 0) {
        throw DomainError("exp_series order must be nonnegative");
    }
    std::vector<BigRational> coeffs;
    coeffs.reserve(static_cast<std::size_t>(order) + 1);
    BigRational term(1);
    for (int n = 0; n <= order; ++n) {
        if (n > 0) {
            term *= a;
            term /= BigRational(n);
        }
        coeffs.push_back(term);
    }
    return LaurentSeries(0, std::move(coeffs), order);
}

LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    const int order = std::min(a.order(), b.order());
    const int low = std::min(a.valuation(), b.valuation());
    if (low > order) {
        return LaurentSeries::zero(order);
    }
    std::vector<BigRational> out;
    out.reserve(static_cast<std::size_t>(order - low + 1));
    for (int m = low; m <= order; ++m) {
        out.push_back(a.coeff(m) + b.coeff(m));
    }
    return LaurentSeries(low, std::move(out), order);
}

LaurentSeries operator-(const LaurentSeries& a) { return a.scaled(BigRational(-1)); }

LaurentSeries operator-(const LaurentSeries& a, const LaurentSeries& b) { return a + (-b); }

LaurentSeries operator*(const LaurentSeries& a, const LaurentSeries& b) {
    const int order = std::min(a.order() + b.valuation(), b.order() + a.valuation());
    if (a.is_zero() || b.is_zero()) {
        return LaurentSeries::zero(order);
    }
    const int valuation = a.valuation() + b.valuation();
    const int len = order - valuation + 1;
    if (len <= 0) {
        return LaurentSeries::zero(order);
    }
    const auto& ac = a.coefficients();
    const auto& bc = b.coefficients();
    std::vector<BigRational> out(static_cast<std::size_t>(len));
    for (int i = 0; i < len && i < static_cast<int>(ac.size()); ++i) {
        if (ac[static_cast<std::size_t>(i)].is_zero()) {
            continue;
        }
        for (int j = 0; i + j < len && j < static_cast<int>(bc.size()); ++j) {
            out[static_cast<std::size_t>(i + j)] +=
                ac[static_cast<std::size_t>(i)] * bc[static_cast<std::size_t>(j)];
        }
    }
    return LaurentSeries(valuation, std::move(out), order);
}

LaurentSeries invert(const LaurentSeries& a) {
    if (a.is_zero()) {
        throw ZeroSeries("cannot invert a series with no nonzero coefficient");
    }
    const int v = a.valuation();
    const int depth = a.order() - v;  // relative degree through which a is known
    const auto& ac = a.coefficients();
    const BigRational lead_inv = ac.front().reciprocal();

    std::vector<BigRational> b(static_cast<std::size_t>(depth) + 1);
    b[0] = lead_inv;
    for (int n = 1; n <= depth; ++n) {
        BigRational acc;
        for (int k = 1; k <= n && k < static_cast<int>(ac.size()); ++k) {
            acc += ac[static_cast<std::size_t>(k)] * b[static_cast<std::size_t>(n - k)];
        }
        b[static_cast<std::size_t>(n)] = -acc * lead_inv;
    }
    return LaurentSeries(-v, std::move(b), -v + depth);
}

LaurentSeries differentiate(const LaurentSeries& a) {
    const int order = a.order() - 1;
    if (a.is_zero()) {
        return LaurentSeries::zero(order);
    }
    std::vector<BigRational> out;
    const auto& ac = a.coefficients();
    out.reserve(ac.size());
    for (std::size_t i = 0; i < ac.size(); ++i) {
        const int e = a.valuation() + static_cast<int>(i);
        if (e - 1 > order) {
            break;
        }
        out.push_back(ac[i] * BigRational(e));
    }
    return LaurentSeries(a.valuation() - 1, std::move(out), order);
}

}  // namespace czeta
