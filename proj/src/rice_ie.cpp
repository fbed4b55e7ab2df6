#include "riceie/rice_ie.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <stdexcept>
#include <string>

#include "riceie/marcum.hpp"
#include "riceie/quadrature.hpp"
#include "riceie/specfun.hpp"

namespace riceie {

namespace {

constexpr double kPi = 3.141592653589793238462643383279502884;
constexpr double kNegInf = -std::numeric_limits<double>::infinity();
const double kLogCutoff = std::log(1e-15);  // series stop: term <= 1e-15 * sum

double s_of(double k) { return std::sqrt((1.0 - k) * (1.0 + k)); }

void require_domain(const EvalPoint& p, const char* who) {
    if (!p.in_domain())
        throw std::domain_error(std::string(who) + ": requires 0 <= k <= 1 and x >= 0");
}

// e^{-x} I_0(kx) without ever forming the unscaled Bessel.
double scaled_i0_term(double k, double x) {
    return std::exp(-(1.0 - k) * x) * bessel_i_scaled(0, k * x).mantissa;
}

// Running sum of exp(l_i - base) for nonnegative log-space contributions,
// rebasing as terms grow so intermediate sums stay inside double range.
struct LogAccumulator {
    double base = kNegInf;
    double sum = 0.0;

    void add(double l) {
        if (l == kNegInf) return;
        if (sum == 0.0) {
            base = l;
            sum = 1.0;
            return;
        }
        if (l > base + 40.0) {
            sum = sum * std::exp(base - l) + 1.0;
            base = l;
        } else {
            sum += std::exp(l - base);
        }
    }
    double log_total() const { return (sum == 0.0) ? kNegInf : base + std::log(sum); }
};

}  // namespace

const char* method_name(Method m) {
    switch (m) {
        case Method::ClosedForm: return "closed-form";
        case Method::IntegralDirect: return "direct";
        case Method::IntegralTrig: return "trig";
        case Method::SeriesStruve: return "series-struve";
        case Method::SeriesBessel: return "series-bessel";
        case Method::MarcumSingle: return "marcum-single";
        case Method::MarcumDiff: return "marcum-diff";
        case Method::PartsIdentity: return "parts";
    }
    return "unknown";
}

AbParams ab_params(const EvalPoint& p) {
    require_domain(p, "ab_params");
    if (p.x == 0.0) return AbParams{0.0, 0.0};
    const double s = s_of(p.k);
    const double a = std::sqrt(p.x) * std::sqrt(1.0 + s);
    // b = k sqrt(x) / sqrt(1+s), written as kx/a so ab = kx holds to rounding;
    // at k = 1 that quotient can land one ulp above a, so clamp to keep a >= b
    return AbParams{a, std::min(a, p.k * p.x / a)};
}

MethodResult ie_integral_direct(const EvalPoint& p, double tol) {
    require_domain(p, "ie_integral_direct");
    const double k = p.k;
    auto f = [k](double t) {
        return std::exp(-(1.0 - k) * t) * bessel_i_scaled(0, k * t).mantissa;
    };
    QuadratureResult qr = integrate_finite(f, 0.0, p.x, 0.01 * tol, tol);
    return MethodResult{qr.value, Method::IntegralDirect, qr.abs_error_estimate,
                        qr.subdivisions, qr.converged};
}

MethodResult ie_integral_trig(const EvalPoint& p, double tol) {
    require_domain(p, "ie_integral_trig");
    if (p.k == 1.0)
        throw std::domain_error("ie_integral_trig: requires k < 1 (1/sqrt(1-k^2) pole)");
    const double k = p.k, x = p.x;
    const double s = s_of(k);
    // Substituting I_0(z) = (1/pi) int_0^pi e^{z cos u} du into the defining
    // integral and integrating over t first gives
    //   1/s - (1/pi) int_0^pi e^{-x(1 - k cos u)} / (1 - k cos u) du.
    auto f = [k, x](double u) {
        double w = 1.0 - k * std::cos(u);
        return std::exp(-x * w) / w;
    };
    QuadratureResult qr = integrate_finite(f, 0.0, kPi, 0.01 * tol, tol);
    return MethodResult{1.0 / s - qr.value / kPi, Method::IntegralTrig,
                        qr.abs_error_estimate / kPi, qr.subdivisions, qr.converged};
}

MethodResult ie_series_struve(const EvalPoint& p, int max_terms) {
    require_domain(p, "ie_series_struve");
    if (!(p.k > 0.0 && p.k < 1.0 && p.x > 0.0))
        throw std::domain_error("ie_series_struve: requires 0 < k < 1 and x > 0");
    const double k = p.k, x = p.x;
    const double s = s_of(k);
    const double y = x * s;
    const double log_a = std::log(k * k * x / (2.0 * s));
    LogAccumulator acc;
    double last_log_term = kNegInf;
    bool converged = false;
    int terms = 0;
    for (int n = 0; n < max_terms; ++n) {
        ScaledValue hi = struve_l_half(n + 0.5, y);
        ScaledValue lo = struve_l_half(n - 0.5, y);
        ScaledValue bracket = ScaledValue{hi.mantissa / s, hi.log_scale} + lo;
        double log_term = n * log_a - ln_gamma(n + 1.0) + bracket.log_abs();
        acc.add(log_term);
        last_log_term = log_term;
        terms = n + 1;
        if (log_term - acc.log_total() <= kLogCutoff) {
            converged = true;
            break;
        }
    }
    const double log_prefactor = 0.5 * std::log(x * kPi / (2.0 * s)) - x;
    const double value = std::exp(log_prefactor + acc.log_total());
    const double err = value * std::exp(last_log_term - acc.log_total());
    return MethodResult{value, Method::SeriesStruve, err, terms, converged};
}

MethodResult ie_series_bessel(const EvalPoint& p, int max_terms) {
    require_domain(p, "ie_series_bessel");
    if (!(p.k > 0.0 && p.x > 0.0))
        throw std::domain_error("ie_series_bessel: requires 0 < k <= 1 and x > 0");
    const double k = p.k, x = p.x;
    const double kx = k * x;
    const double coeff = x * (1.0 - k) * (1.0 + k) / (2.0 * k);
    if (coeff == 0.0) {
        // k = 1: every series term vanishes, leaving x e^{-x} (I_0(x) + I_1(x)).
        double v = x * (bessel_i_scaled(0, x).mantissa + bessel_i_scaled(1, x).mantissa);
        return MethodResult{v, Method::SeriesBessel, 4e-16 * v, 1, true};
    }
    const double log_coeff = std::log(coeff);
    LogAccumulator acc_a, acc_b;
    bool converged = false;
    int terms = 0;
    double tail_ratio = 0.0;
    for (int n = 0; n < max_terms; ++n) {
        double sc = bessel_i_scaled(n + 1, kx).mantissa;  // e^{-kx} I_{n+1}(kx)
        terms = n + 1;
        if (sc == 0.0) {  // far past the Bessel decay point: tail is zero
            converged = true;
            break;
        }
        double log_sc = std::log(sc);
        double la = (n + 1) * log_coeff - ln_gamma(n + 2.5) + log_sc;
        double lb = n * log_coeff - ln_gamma(n + 1.5) + log_sc;
        acc_a.add(la);
        acc_b.add(lb);
        double ra = la - acc_a.log_total();
        double rb = lb - acc_b.log_total();
        tail_ratio = std::exp(std::max(ra, rb));
        if (ra <= kLogCutoff && rb <= kLogCutoff) {
            converged = true;
            break;
        }
    }
    // Ie = x e^{-(1-k)x} [ (sqrt(pi)/2) S_a + e^{-kx} I_0(kx) + (sqrt(pi)/(2k)) S_b ]
    ScaledValue term_a{0.5 * std::sqrt(kPi), acc_a.log_total()};
    ScaledValue term_b{0.5 * std::sqrt(kPi) / k, acc_b.log_total()};
    ScaledValue term_0{bessel_i_scaled(0, kx).mantissa, 0.0};
    ScaledValue bracket = (term_a + term_0) + term_b;
    ScaledValue total = bracket * ScaledValue{x, -(1.0 - k) * x};
    double value = total.to_real();
    return MethodResult{value, Method::SeriesBessel, value * std::max(tail_ratio, 4e-16),
                        terms, converged};
}

MethodResult ie_marcum_single(const EvalPoint& p) {
    require_domain(p, "ie_marcum_single");
    if (p.k == 1.0)
        throw std::domain_error("ie_marcum_single: requires k < 1 (1/sqrt(1-k^2) pole)");
    const double s = s_of(p.k);
    AbParams ab = ab_params(p);
    QuadratureResult q = marcum_q1_detailed(MarcumArgs{ab.a, ab.b});
    if (!q.converged || !std::isfinite(q.value))
        return MethodResult{std::numeric_limits<double>::quiet_NaN(), Method::MarcumSingle,
                            std::numeric_limits<double>::infinity(), q.subdivisions, false};
    double q1 = std::min(std::max(q.value, 0.0), 1.0);
    double value = (2.0 * q1 - scaled_i0_term(p.k, p.x) - 1.0) / s;
    return MethodResult{value, Method::MarcumSingle,
                        (2.0 * q.abs_error_estimate + 1e-15) / s, q.subdivisions, true};
}

MethodResult ie_marcum_diff(const EvalPoint& p) {
    require_domain(p, "ie_marcum_diff");
    if (p.k == 1.0)
        throw std::domain_error("ie_marcum_diff: requires k < 1 (1/sqrt(1-k^2) pole)");
    const double s = s_of(p.k);
    AbParams ab = ab_params(p);
    QuadratureResult q_ab = marcum_q1_detailed(MarcumArgs{ab.a, ab.b});
    QuadratureResult q_ba = marcum_q1_detailed(MarcumArgs{ab.b, ab.a});
    int panels = q_ab.subdivisions + q_ba.subdivisions;
    if (!q_ab.converged || !q_ba.converged || !std::isfinite(q_ab.value) ||
        !std::isfinite(q_ba.value))
        return MethodResult{std::numeric_limits<double>::quiet_NaN(), Method::MarcumDiff,
                            std::numeric_limits<double>::infinity(), panels, false};
    double value = (q_ab.value - q_ba.value) / s;
    return MethodResult{value, Method::MarcumDiff,
                        (q_ab.abs_error_estimate + q_ba.abs_error_estimate + 1e-15) / s,
                        panels, true};
}

MethodResult ie_parts_identity(const EvalPoint& p, double tol) {
    require_domain(p, "ie_parts_identity");
    const double k = p.k;
    // Integrating the defining integral by parts:
    //   Ie(k, x) = 1 - e^{-x} I_0(kx) + k int_0^x e^{-t} I_1(kt) dt.
    auto f = [k](double t) {
        return std::exp(-(1.0 - k) * t) * bessel_i_scaled(1, k * t).mantissa;
    };
    QuadratureResult qr = integrate_finite(f, 0.0, p.x, 0.01 * tol, tol);
    double value = 1.0 - scaled_i0_term(k, p.x) + k * qr.value;
    return MethodResult{value, Method::PartsIdentity, k * qr.abs_error_estimate + 2e-16,
                        qr.subdivisions, qr.converged};
}

MethodResult ie_auto(const EvalPoint& p) {
    require_domain(p, "ie_auto");
    if (p.x == 0.0) return MethodResult{0.0, Method::ClosedForm, 0.0, 0, true};
    if (p.k == 0.0)
        return MethodResult{-std::expm1(-p.x), Method::ClosedForm, 2e-16, 0, true};
    if (p.k == 1.0) return ie_integral_direct(p);
    if (p.x < 0.05) return ie_integral_direct(p);  // tiny values: avoid the
                                                   // cancellation in 2Q1 - ... - 1
    MethodResult r = ie_marcum_single(p);
    if (r.converged && std::isfinite(r.value)) return r;
    return ie_integral_direct(p);
}

}  // namespace riceie
