#pragma once
#include <string>

#include "riceie/marcum.hpp"

namespace riceie {

// Ie(k, x) = integral from 0 to x of e^{-t} I_0(kt) dt, for 0 <= k <= 1.

struct EvalPoint {
    double k = 0.0;
    double x = 0.0;
    bool in_domain() const { return k >= 0.0 && k <= 1.0 && x >= 0.0; }
};

enum class Method {
    ClosedForm,      // k=0 or x=0 elementary values
    IntegralDirect,  // quadrature of the defining integral
    IntegralTrig,    // complement of a trigonometric integral over [0, pi]
    SeriesStruve,    // series in modified Struve functions
    SeriesBessel,    // series in modified Bessel functions
    MarcumSingle,    // single Marcum-Q identity
    MarcumDiff,      // Marcum-Q difference identity
    PartsIdentity,   // integration-by-parts identity (I_1 integral)
};

const char* method_name(Method m);

struct MethodResult {
    double value = 0.0;
    Method method = Method::ClosedForm;
    double error_estimate = 0.0;
    int terms_or_panels = 0;
    bool converged = false;
};

struct AbParams {
    double a = 0.0;
    double b = 0.0;  // a >= b >= 0, a^2 + b^2 = 2x, a*b = k*x
};

// a = sqrt(x) sqrt(1 + sqrt(1-k^2)); b computed as k*x/a, which is exact
// algebra and avoids the cancellation in 1 - sqrt(1-k^2) at small k.
AbParams ab_params(const EvalPoint& p);

MethodResult ie_integral_direct(const EvalPoint& p, double tol = 1e-12);
MethodResult ie_integral_trig(const EvalPoint& p, double tol = 1e-12);
MethodResult ie_series_struve(const EvalPoint& p, int max_terms = 200);
MethodResult ie_series_bessel(const EvalPoint& p, int max_terms = 200);
MethodResult ie_marcum_single(const EvalPoint& p);
MethodResult ie_marcum_diff(const EvalPoint& p);
MethodResult ie_parts_identity(const EvalPoint& p, double tol = 1e-12);

// k=0 / x=0 -> closed forms; k=1 -> direct integral (the only always-valid
// route there); small x -> direct integral (the Marcum identity loses digits
// to cancellation); otherwise the single-Q Marcum identity, falling back to
// the direct integral if anything fails to converge.
MethodResult ie_auto(const EvalPoint& p);

}  // namespace riceie
