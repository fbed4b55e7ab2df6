#pragma once
#include <cmath>
#include <limits>

namespace riceie {

// A real number carried as mantissa * e^(log_scale), so that products like
// e^{-x} I_0(kx) stay representable far beyond where e^x alone overflows.
// After normalize(), mantissa is 0 or |mantissa| lies in [1/e, e).
struct ScaledValue {
    double mantissa = 0.0;
    double log_scale = 0.0;

    static ScaledValue from_real(double v) { return ScaledValue{v, 0.0}.normalized(); }

    double to_real() const { return mantissa * std::exp(log_scale); }

    // log|value|; -inf for zero.
    double log_abs() const {
        if (mantissa == 0.0) return -std::numeric_limits<double>::infinity();
        return std::log(std::fabs(mantissa)) + log_scale;
    }

    bool is_zero() const { return mantissa == 0.0; }

    ScaledValue normalized() const {
        ScaledValue r = *this;
        if (r.mantissa == 0.0) {
            r.log_scale = 0.0;
            return r;
        }
        double l = std::log(std::fabs(r.mantissa));
        double shift = std::nearbyint(l);
        if (shift != 0.0) {
            r.mantissa *= std::exp(-shift);
            r.log_scale += shift;
        }
        return r;
    }

    ScaledValue times_exp(double dlog) const { return ScaledValue{mantissa, log_scale + dlog}; }

    friend ScaledValue operator*(const ScaledValue& p, const ScaledValue& q) {
        if (p.mantissa == 0.0 || q.mantissa == 0.0) return {};
        return ScaledValue{p.mantissa * q.mantissa, p.log_scale + q.log_scale}.normalized();
    }

    friend ScaledValue operator+(const ScaledValue& p, const ScaledValue& q) {
        if (p.mantissa == 0.0) return q;
        if (q.mantissa == 0.0) return p;
        const ScaledValue& big = (p.log_abs() >= q.log_abs()) ? p : q;
        const ScaledValue& sml = (p.log_abs() >= q.log_abs()) ? q : p;
        double m = big.mantissa + sml.mantissa * std::exp(sml.log_scale - big.log_scale);
        return ScaledValue{m, big.log_scale}.normalized();
    }
};

}  // namespace riceie
