#pragma once
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "riceie/bounds.hpp"

namespace riceie {

enum class Spacing { Linear, Log };

struct SweepSpec {
    std::vector<double> k_values;
    std::vector<double> x_values;
    Spacing spacing = Spacing::Linear;
    std::vector<Method> methods;  // empty = all six tabulated routes
    double oracle_tol = 1e-12;
    int max_terms = 200;
};

// One CSV row. Missing entries (domain-invalid route, too few converged
// routes for a disagreement) print as empty fields, never as zeros.
struct SweepRow {
    double k = 0.0;
    double x = 0.0;
    std::optional<double> oracle, direct, trig, series_struve, series_bessel, marcum_single,
        marcum_diff;
    std::optional<double> upper, lower, eps_ar_upper, eps_ar_lower, disagreement;
    std::string status = "ok";  // ok | invalid-domain | non-convergence
};

std::vector<double> lin_spaced(double lo, double hi, int n);
std::vector<double> log_spaced(double lo, double hi, int n);  // lo, hi > 0

// Full Cartesian grid, rows sorted by (k, x).
std::vector<SweepRow> run_sweep(const SweepSpec& spec);

// Fixed header, 17-significant-digit scientific notation, '\n' newlines:
// byte-identical output for identical inputs.
void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows);

// Figure data sets: 3 fixes k=0.5 and sweeps x over [0.1, 20] (200 log
// points); 4/5/6 fix x=7/40/80 and sweep k over [0.02, 0.98] (97 points).
// 3 and 4 tabulate (oracle, upper, lower), 5 drops the upper bound, 6 reports
// the lower bound's absolute relative error only.
enum class FigureId { Fig3, Fig4, Fig5, Fig6 };

void write_figure_csv(std::ostream& out, FigureId fig, double oracle_tol = 1e-12);

}  // namespace riceie
