#pragma once
#include <functional>

namespace riceie {

struct QuadratureResult {
    double value = 0.0;
    double abs_error_estimate = 0.0;
    int subdivisions = 0;
    bool converged = false;
};

inline constexpr int kDefaultMaxPanels = 2000;

// Globally adaptive Gauss-Kronrod 7-15 integration over [a, b]. Splits the
// worst panel first; converged when the summed error estimate drops below
// max(abs_tol, rel_tol * |value|). A NaN from the integrand aborts the run
// (converged=false, value=NaN).
QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol = 1e-14, double rel_tol = 1e-12,
                                  int max_panels = kDefaultMaxPanels);

// Integral over [a, inf) for integrands that decay to zero: windows of
// doubling width are integrated until two successive window contributions are
// both below abs_tol / 10.
QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         double abs_tol = 1e-14, double rel_tol = 1e-12,
                                         double initial_window = 16.0,
                                         int max_panels = kDefaultMaxPanels);

}  // namespace riceie
