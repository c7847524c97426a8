#pragma once

#include <stdexcept>
#include <string>

namespace czeta {

// Base of every error this library raises. Each failure mode named in the
// public contracts has its own subclass so callers can catch precisely.
class Error : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

#define CZETA_DEFINE_ERROR(Name)                                   \
    class Name : public Error {                                    \
    public:                                                        \
        explicit Name(const std::string& what) : Error(what) {}    \
    }

// exact_core
CZETA_DEFINE_ERROR(DivisionByZero);
CZETA_DEFINE_ERROR(ParseError);
CZETA_DEFINE_ERROR(MixedPiPowers);
CZETA_DEFINE_ERROR(NegativePiPower);

// series_engine
CZETA_DEFINE_ERROR(ZeroSeries);
CZETA_DEFINE_ERROR(OutOfTrustedRange);

// abel / zeta_exact
CZETA_DEFINE_ERROR(InternalInconsistency);
CZETA_DEFINE_ERROR(ArgumentNotEvenPositive);
CZETA_DEFINE_ERROR(DomainError);

// numeric_analytic
CZETA_DEFINE_ERROR(PoleAtNonpositiveInteger);
CZETA_DEFINE_ERROR(NearPole);
CZETA_DEFINE_ERROR(OutOfValidatedRange);
CZETA_DEFINE_ERROR(OnBranchCut);
CZETA_DEFINE_ERROR(AtPole);
CZETA_DEFINE_ERROR(TooCloseToPositiveIntegerPole);
CZETA_DEFINE_ERROR(QuadratureNotConverged);
CZETA_DEFINE_ERROR(InvalidConfig);

#undef CZETA_DEFINE_ERROR

}  // namespace czeta
