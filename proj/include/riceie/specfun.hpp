#pragma once
#include "riceie/scaled_value.hpp"

namespace riceie {

// ln Gamma(x) for x > 0. Relative error well below 1e-13 over [0.5, 200].
double ln_gamma(double x);

double erf(double x);
double erfc(double x);

// Tail probability of the standard normal: Q(x) = erfc(x / sqrt(2)) / 2.
double gaussian_q(double x);

// e^{-x} I_n(x) for integer n >= 0, x >= 0. The result is bounded by 1 and is
// returned with log_scale == 0.
ScaledValue bessel_i_scaled(int n, double x);

// I_{n+1/2}(x) for integer n >= 0, x > 0, as mantissa * e^{log_scale}.
ScaledValue bessel_i_half(int n, double x);

// Modified Struve L_nu(x) for half-integer nu >= -1/2 and x > 0.
ScaledValue struve_l_half(double half_order, double x);

}  // namespace riceie
