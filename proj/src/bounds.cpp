#include "riceie/bounds.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>
#include <vector>

#include "riceie/marcum.hpp"
#include "riceie/specfun.hpp"

namespace riceie {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
const double kTwoOverSqrtPi = 2.0 / std::sqrt(kPi);

void require_domain(const EvalPoint& p, const char* who) {
    if (!p.in_domain())
        throw std::domain_error(std::string(who) + ": requires 0 <= k <= 1 and x >= 0");
}

double scaled_i0_term(double k, double x) {
    return std::exp(-(1.0 - k) * x) * bessel_i_scaled(0, k * x).mantissa;
}

// erf(c sqrt(x)) / c, stable as c -> 0: for c^2 x < 1e-6 use the Maclaurin
// form (2/sqrt(pi)) sqrt(x) (1 - c^2 x/3 + (c^2 x)^2/10), whose truncation
// error (c^2 x)^3/42 is below 2e-20 at the switch point.
double erf_ratio(double c, double x) {
    const double u = c * c * x;
    if (u < 1e-6) return kTwoOverSqrtPi * std::sqrt(x) * (1.0 - u / 3.0 + u * u / 10.0);
    return erf(c * std::sqrt(x)) / c;
}

}  // namespace

double upper_bound(const EvalPoint& p) {
    require_domain(p, "upper_bound");
    const double k = p.k, x = p.x;
    const double c = std::sqrt(1.0 - k);
    const double d = std::sqrt(1.0 + k);
    return 1.0 - scaled_i0_term(k, x) +
           std::sqrt(0.5 * k) * (erf_ratio(c, x) - erf_ratio(d, x));
}

double lower_bound(const EvalPoint& p) {
    require_domain(p, "lower_bound");
    if (p.k == 1.0)
        throw std::domain_error("lower_bound: requires k < 1 (1/sqrt(1-k^2) pole)");
    const double s = std::sqrt((1.0 - p.k) * (1.0 + p.k));
    AbParams ab = ab_params(p);
    const double q_sum = gaussian_q(ab.b + ab.a) + gaussian_q(ab.b - ab.a);
    return (2.0 * q_sum - scaled_i0_term(p.k, p.x) - 1.0) / s;
}

Bracket bracket(const EvalPoint& p) {
    require_domain(p, "bracket");
    Bracket br;
    br.point = p;
    br.upper = upper_bound(p);
    br.upper_valid = true;
    if (p.k < 1.0) {
        br.lower = lower_bound(p);
        br.lower_valid = true;
    } else {
        br.lower = std::numeric_limits<double>::quiet_NaN();
        br.lower_valid = false;
    }
    return br;
}

ErrorRecord error_record(const EvalPoint& p, double oracle_tol) {
    require_domain(p, "error_record");
    if (!(p.x > 0.0)) throw std::domain_error("error_record: requires x > 0");
    ErrorRecord rec;
    rec.point = p;
    MethodResult oracle = ie_integral_direct(p, oracle_tol);
    if (!oracle.converged || !std::isfinite(oracle.value))
        throw NonConvergenceError("error_record: oracle quadrature did not converge");
    rec.oracle = oracle.value;
    Bracket br = bracket(p);
    rec.upper = br.upper;
    rec.eps_ar_upper = std::fabs(oracle.value - br.upper) / oracle.value;
    if (br.lower_valid) {
        rec.lower = br.lower;
        rec.eps_ar_lower = std::fabs(oracle.value - br.lower) / oracle.value;
    } else {
        rec.lower = std::numeric_limits<double>::quiet_NaN();
        rec.eps_ar_lower = std::numeric_limits<double>::quiet_NaN();
    }
    // Max pairwise relative spread among whichever routes converge here.
    std::vector<double> values{oracle.value};
    auto push_if_ok = [&values](const MethodResult& r) {
        if (r.converged && std::isfinite(r.value)) values.push_back(r.value);
    };
    if (p.k < 1.0) {
        push_if_ok(ie_integral_trig(p, oracle_tol));
        push_if_ok(ie_marcum_single(p));
        push_if_ok(ie_marcum_diff(p));
    }
    push_if_ok(ie_parts_identity(p, oracle_tol));
    if (p.k > 0.0 && p.k < 1.0) push_if_ok(ie_series_struve(p));
    if (p.k > 0.0) push_if_ok(ie_series_bessel(p));
    double spread = 0.0;
    for (size_t i = 0; i < values.size(); ++i)
        for (size_t j = i + 1; j < values.size(); ++j)
            spread = std::max(spread, std::fabs(values[i] - values[j]));
    rec.method_disagreement =
        (values.size() >= 2) ? spread / oracle.value : std::numeric_limits<double>::quiet_NaN();
    return rec;
}

}  // namespace riceie
