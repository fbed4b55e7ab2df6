#pragma once
#include "riceie/rice_ie.hpp"

namespace riceie {

// Closed-form bounds on Ie(k, x): the pair certifies
// lower < Ie(k, x) < upper for 0 < k < 1, x > 0, and collapses to equality at
// k = 0 and at x = 0.

struct Bracket {
    double lower = 0.0;
    double upper = 0.0;
    EvalPoint point;
    bool lower_valid = false;
    bool upper_valid = false;
};

struct ErrorRecord {
    EvalPoint point;
    double oracle = 0.0;
    double lower = 0.0;  // NaN when invalid (k = 1)
    double upper = 0.0;
    double eps_ar_lower = 0.0;  // |oracle - lower| / oracle
    double eps_ar_upper = 0.0;
    double method_disagreement = 0.0;  // max pairwise spread of converged routes / oracle
};

// 1 - e^{-x} I_0(kx) + sqrt(k/2) [erf(c sqrt(x))/c - erf(d sqrt(x))/d] with
// c = sqrt(1-k), d = sqrt(1+k); valid on all of 0 <= k <= 1, x >= 0.
double upper_bound(const EvalPoint& p);

// [2Q(b+a) + 2Q(b-a) - e^{-x} I_0(kx) - 1] / sqrt(1-k^2) with Gaussian tail Q
// and (a, b) = ab_params; requires k < 1.
double lower_bound(const EvalPoint& p);

Bracket bracket(const EvalPoint& p);

// Oracle (direct-integral quadrature at oracle_tol), both bounds, both
// absolute relative errors, and the max pairwise disagreement among the
// evaluation routes that converge at this point.
ErrorRecord error_record(const EvalPoint& p, double oracle_tol = 1e-12);

}  // namespace riceie
