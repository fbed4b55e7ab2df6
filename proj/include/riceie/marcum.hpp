#pragma once
#include <stdexcept>

#include "riceie/quadrature.hpp"

namespace riceie {

// Numerical non-convergence distinct from domain errors: the CLI maps
// std::domain_error to exit 1 and NonConvergenceError to exit 2.
struct NonConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MarcumArgs {
    double a = 0.0;
    double b = 0.0;
};

// First-order Marcum Q: integral from b to infinity of
// t * e^{-(t^2+a^2)/2} I_0(at) dt, evaluated with the exponent regrouped as
// e^{-(t-a)^2/2} * [e^{-at} I_0(at)] so nothing overflows. Absolute error
// <= 1e-12.
double marcum_q1(const MarcumArgs& args);

// Same integral, but reporting the quadrature diagnostics (panel count,
// error estimate, converged flag) instead of throwing on non-convergence.
QuadratureResult marcum_q1_detailed(const MarcumArgs& args);

// Order-1/2 closed form: Q(b+a) + Q(b-a) with the Gaussian tail Q.
double marcum_q_half(const MarcumArgs& args);

// Generalized order m in {1/2, 1, 3/2}. m=1 delegates to marcum_q1; the
// half-integer orders integrate the I_{m-1} kernel directly (so m=1/2 is an
// independent cross-check of marcum_q_half).
double marcum_q_m(double m, const MarcumArgs& args);

}  // namespace riceie
