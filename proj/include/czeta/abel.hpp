#pragma once

#include "czeta/big_rational.hpp"
#include "czeta/rational_function.hpp"

namespace czeta {

// Abel sums A_m of the divergent alternating series 1^m - 2^m + 3^m - ...

/// (x d/dx)^m (1/(1+x)), which is the generating function of the alternating
/// series up to sign and, for m = 0, an additive constant.
RationalFunction abel_generating_function(int m);

/// A_m through the Euler-operator route,
///   A_0 = 1 - [1/(1+x)] at x = 1,
///   A_m = -[(x d/dx)^m 1/(1+x)] at x = 1 for m >= 1,
/// confirmed against (-1)^m (1 - 2^(m+1)) B_(m+1)/(m+1).
/// Throws InternalInconsistency if the two disagree.
BigRational abel_sum_exact(int m);

/// The closed form (-1)^m (1 - 2^(m+1)) B_(m+1)/(m+1) on its own.
BigRational abel_sum_closed_form(int m);

/// Numeric Abel limit: the truncated series at x_j = 1 - 2^-j,
/// j = 2 .. 2 + steps, Richardson-extrapolated to x = 1. Needs m <= 8.
double abel_numeric_estimate(int m, int steps = 6);

/// Euler's alternating Euler-Maclaurin expansion
///   sum_n (2^(n+1) - 1) B_(n+1)/(n+1)! f^(n)(0),  f(x) = x^m,
/// read as the value of 1^m - 2^m + 3^m - ... Equals A_m for m >= 1.
BigRational em_alternating_value(int m);

/// zeta(-m) = A_m / (1 - 2^(m+1)).
BigRational zeta_neg_via_abel(int m);

/// Checks sum_m z^(m+1)/m! [(x d/dx)^m 1/(1+x)]_{x=1} = z/(1 + e^z)
/// coefficientwise through z^order.
bool abel_exponential_identity_check(int order);

}  // namespace czeta
