#pragma once
#include <iosfwd>
#include <string>
#include <vector>

namespace riceie {

struct CheckResult {
    std::string name;
    bool pass = false;
    double margin = 0.0;  // worst-case slack observed (sign convention per check)
    std::string detail;
};

enum class ValidationLevel { Quick, Full };

// Property suite behind `validate` and the acceptance harness. Quick runs
// reduced grids; Full runs every documented invariant at full grid size.
std::vector<CheckResult> run_validation(ValidationLevel level);

// Individual checks (full = full-size grids, otherwise reduced).
CheckResult check_bracketing(bool full);
CheckResult check_route_agreement(bool full);
CheckResult check_marcum_complementarity(bool full);
CheckResult check_q_half_closed_vs_quadrature();
CheckResult check_bessel_order_monotonicity();
CheckResult check_marcum_order_monotonicity();
CheckResult check_erf_q_shape();
CheckResult check_scaled_unscaled_consistency();
CheckResult check_half_order_seed_consistency();
CheckResult check_quadrature_linearity();
CheckResult check_quadrature_additivity();
CheckResult check_quadrature_tightening();
CheckResult check_ie_monotone_in_x();
CheckResult check_ie_limit();
CheckResult check_ab_identities();
CheckResult check_crossover(bool fig3_grid);  // true: x in [0.1,20]; false: [0.1,40]
CheckResult check_fig4_bracketing();
CheckResult check_approximation_quality();  // lower-bound tightness at x=40/80
CheckResult check_monotone_tightening();
CheckResult check_upper_bound_integral_identity();
CheckResult check_three_half_integral_is_lower_bound();
CheckResult check_collapse_at_k0();
CheckResult check_collapse_at_x0();
CheckResult check_trivial_closed_forms();
CheckResult check_csv_determinism();

// Ceilings for the lower bound's absolute relative error, fixed by a one-time
// high-precision calibration over k in [0.02, 0.98] (97 points): measured
// maxima 0.03441 (x=40) and 0.009345 (x=80), both at k=0.98, recorded here
// with ~1.5x headroom.
inline constexpr double kEpsArLowerCeilingX40 = 0.05;
inline constexpr double kEpsArLowerCeilingX80 = 0.015;

}  // namespace riceie
