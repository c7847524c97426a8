#pragma once

#include <string_view>
#include <vector>

#include "czeta/laurent_series.hpp"
#include "czeta/pi_value.hpp"

namespace czeta {

enum class Route { ClosedForm, ResidueSeries, GeneratingFunction, AbelSummation, FunctionalEquation };

/// Short CLI name: closed, residue, genfun, abel, funceq.
std::string_view route_name(Route route);

/// An exact zeta value at a classical point, tagged with how it was
/// obtained. Nonpositive arguments carry rationals, even positive ones
/// carry coefficient * pi^argument. The pole at 1 is never representable.
struct ClassicalValue {
    int argument;
    PiValue value;
    Route route;

    /// Throws DomainError if the invariants above are violated.
    ClassicalValue(int argument, PiValue value, Route route);

    friend bool operator==(const ClassicalValue&, const ClassicalValue&) = default;
};

/// zeta(-n) = (-1)^n B_(n+1)/(n+1).
ClassicalValue zeta_nonpositive(int n);

/// zeta(-n) from the residue at the origin of (-x)^(-n-1)/(e^x - 1): the
/// x^(n+1) coefficient of x/(e^x - 1) fed through
///   2 pi i (-1)^(n-1) [x^(n+1)] = -2i (pi/n!) zeta(-n).
ClassicalValue zeta_neg_via_residue(int n);

/// lim_{x -> -n} sin(pi x) Gamma(x) = pi / n!, from Gamma(x) =
/// Gamma(x + n + 1) / (x (x+1) ... (x+n)).
PiValue sin_gamma_limit_exact(int n);

/// 1/(e^-z - 1) + 1/z through z^order.
LaurentSeries nonpositive_generating_series(int order);

/// zeta(-m) = m! [z^m] (1/(e^-z - 1) + 1/z) for m = 0 .. order-1.
std::vector<ClassicalValue> zeta_neg_via_G(int order);

/// (1 - e^(nz))/(e^-z - 1) = sum_m S_m(n) z^m/m! coefficientwise through
/// z^max_m, S_m(n) summed directly.
bool finite_G_check(unsigned long n, int max_m);

/// (e^-z + 1)/(e^-z - 1) + 2/z through z^order.
LaurentSeries odd_generating_series(int order);

/// The odd series equals 2 sum_m zeta(-2m-1) z^(2m+1)/(2m+1)! through
/// z^order, with every even coefficient zero.
bool odd_genfun_check(int order);

/// zeta(2n) = (-1)^(n-1) (2 pi)^(2n) B_2n / (2 (2n)!).
ClassicalValue zeta_even_positive(int n);

/// zeta(2n) from zeta(1 - 2n) through 2 cos(pi s/2) Gamma(s) zeta(s) =
/// (2 pi)^s zeta(1 - s) at s = 2n.
ClassicalValue zeta_even_via_funceq(int n);

/// zeta(2n) read off the z^(2n-1) coefficient of the odd generating series
/// via 2 zeta(-2m-1)/(2m+1)! = (-1)^(m+1) zeta(2m+2)/(2^(2m) pi^(2m+2)).
ClassicalValue zeta_even_via_odd_genfun(int n);

/// 2 zeta(-2m-1)/(2m+1)! == (-1)^(m+1) zeta(2m+2) / (2^(2m) pi^(2m+2)).
bool simple_funceq_check(int m);

/// 2 cos(pi s/2) Gamma(s) zeta(s) == (2 pi)^s zeta(1 - s) exactly, for even
/// s >= 2. Throws ArgumentNotEvenPositive otherwise.
bool funceq_exact_check(int s);

/// Routes that apply to argument k: four for k <= 0, three for even k >= 2,
/// none otherwise.
std::vector<Route> routes_for(int k);

/// zeta(k) by one route. Throws DomainError for the pole at 1, odd k >= 3,
/// or a route that does not apply to k.
ClassicalValue classical_value(int k, Route route);

}  // namespace czeta
