#pragma once

#include "cauchyem/params.hpp"

namespace cauchyem {

// Density f(y | params) by numerical inversion of the characteristic
// function. Nonnegative; throws NumericalError (with the residual estimate)
// when the quadrature cannot certify its tolerance.
double density_eval(double y, const CauchyParams& params);

// Distribution function F(y | params) by Gil-Pelaez inversion. Clamped to
// [0, 1]; same error contract as density_eval.
double cdf_eval(double y, const CauchyParams& params);

namespace detail {

// Standardized abscissa: the S0-form coordinate (y - mu_s0)/sigma, in which
// both inversion integrals depend only on (a, b) with b = (2/pi)*beta.
double standardized_abscissa(double y, const CauchyParams& params);

// g_den(a,b) = int_0^inf exp(-u) cos(a*u + b*u*log u) du
// g_cdf(a,b) = int_0^inf exp(-u) sin(a*u + b*u*log u) / u du
// so that  f = g_den / (pi*sigma)  and  F = 1/2 + g_cdf / pi.
double inversion_integral(double a, double b, bool cdf_kind, double* abs_error);

// |a| beyond which the endpoint expansions replace quadrature.
inline constexpr double kTailSwitch = 200.0;

}  // namespace detail
}  // namespace cauchyem
