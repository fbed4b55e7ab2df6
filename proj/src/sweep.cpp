#include "riceie/sweep.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>
#include <stdexcept>

#include "riceie/marcum.hpp"

namespace riceie {

namespace {

const char* kSweepHeader =
    "k,x,oracle,direct,trig,series_struve,series_bessel,marcum_single,marcum_diff,"
    "upper,lower,eps_ar_upper,eps_ar_lower,disagreement,status";

// 17 significant digits: enough to reproduce any double exactly, and a fixed
// width so identical inputs give byte-identical files.
std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return std::string(buf);
}

std::string fmt_opt(const std::optional<double>& v) { return v ? fmt17(*v) : std::string(); }

struct RouteOutcome {
    std::optional<double> value;
    bool domain_skip = false;
    bool non_convergence = false;
};

RouteOutcome run_route(Method m, const EvalPoint& p, double tol, int max_terms) {
    RouteOutcome out;
    try {
        MethodResult r;
        switch (m) {
            case Method::IntegralDirect: r = ie_integral_direct(p, tol); break;
            case Method::IntegralTrig: r = ie_integral_trig(p, tol); break;
            case Method::SeriesStruve: r = ie_series_struve(p, max_terms); break;
            case Method::SeriesBessel: r = ie_series_bessel(p, max_terms); break;
            case Method::MarcumSingle: r = ie_marcum_single(p); break;
            case Method::MarcumDiff: r = ie_marcum_diff(p); break;
            case Method::PartsIdentity: r = ie_parts_identity(p, tol); break;
            case Method::ClosedForm: r = ie_auto(p); break;
        }
        if (r.converged && std::isfinite(r.value))
            out.value = r.value;
        else
            out.non_convergence = true;
    } catch (const std::domain_error&) {
        out.domain_skip = true;
    } catch (const NonConvergenceError&) {
        out.non_convergence = true;
    }
    return out;
}

}  // namespace

std::vector<double> lin_spaced(double lo, double hi, int n) {
    std::vector<double> v;
    if (n <= 0) return v;
    v.reserve(static_cast<size_t>(n));
    if (n == 1) {
        v.push_back(lo);
        return v;
    }
    for (int i = 0; i < n; ++i) v.push_back(lo + (hi - lo) * (static_cast<double>(i) / (n - 1)));
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<double> log_spaced(double lo, double hi, int n) {
    if (!(lo > 0.0) || !(hi > 0.0))
        throw std::domain_error("log_spaced: requires positive endpoints");
    std::vector<double> v;
    if (n <= 0) return v;
    v.reserve(static_cast<size_t>(n));
    if (n == 1) {
        v.push_back(lo);
        return v;
    }
    const double ratio = hi / lo;
    for (int i = 0; i < n; ++i)
        v.push_back(lo * std::pow(ratio, static_cast<double>(i) / (n - 1)));
    v.front() = lo;
    v.back() = hi;
    return v;
}

std::vector<SweepRow> run_sweep(const SweepSpec& spec) {
    for (double k : spec.k_values)
        if (!(k >= 0.0 && k <= 1.0)) throw std::domain_error("run_sweep: k outside [0, 1]");
    for (double x : spec.x_values)
        if (!(x >= 0.0)) throw std::domain_error("run_sweep: x must be >= 0");
    if (spec.max_terms < 1) throw std::domain_error("run_sweep: max_terms must be positive");
    std::vector<Method> methods = spec.methods;
    if (methods.empty())
        methods = {Method::IntegralDirect,  Method::IntegralTrig, Method::SeriesStruve,
                   Method::SeriesBessel,    Method::MarcumSingle, Method::MarcumDiff};
    std::vector<double> ks = spec.k_values, xs = spec.x_values;
    std::sort(ks.begin(), ks.end());
    std::sort(xs.begin(), xs.end());

    std::vector<SweepRow> rows;
    rows.reserve(ks.size() * xs.size());
    for (double k : ks) {
        for (double x : xs) {
            EvalPoint p{k, x};
            SweepRow row;
            row.k = k;
            row.x = x;
            bool any_domain_skip = false, any_non_convergence = false;

            MethodResult oracle = ie_integral_direct(p, spec.oracle_tol);
            if (oracle.converged && std::isfinite(oracle.value))
                row.oracle = oracle.value;
            else
                any_non_convergence = true;

            std::vector<double> converged_values;
            if (row.oracle) converged_values.push_back(*row.oracle);
            for (Method m : methods) {
                RouteOutcome out = run_route(m, p, spec.oracle_tol, spec.max_terms);
                any_domain_skip = any_domain_skip || out.domain_skip;
                any_non_convergence = any_non_convergence || out.non_convergence;
                if (out.value) converged_values.push_back(*out.value);
                switch (m) {
                    case Method::IntegralDirect: row.direct = out.value; break;
                    case Method::IntegralTrig: row.trig = out.value; break;
                    case Method::SeriesStruve: row.series_struve = out.value; break;
                    case Method::SeriesBessel: row.series_bessel = out.value; break;
                    case Method::MarcumSingle: row.marcum_single = out.value; break;
                    case Method::MarcumDiff: row.marcum_diff = out.value; break;
                    default: break;  // no column; still counted in the spread
                }
            }

            row.upper = upper_bound(p);
            if (k < 1.0) row.lower = lower_bound(p);
            if (row.oracle && *row.oracle > 0.0) {
                row.eps_ar_upper = std::fabs(*row.oracle - *row.upper) / *row.oracle;
                if (row.lower)
                    row.eps_ar_lower = std::fabs(*row.oracle - *row.lower) / *row.oracle;
                if (converged_values.size() >= 2) {
                    double spread = 0.0;
                    for (size_t i = 0; i < converged_values.size(); ++i)
                        for (size_t j = i + 1; j < converged_values.size(); ++j)
                            spread = std::max(
                                spread, std::fabs(converged_values[i] - converged_values[j]));
                    row.disagreement = spread / *row.oracle;
                }
            }

            if (any_non_convergence)
                row.status = "non-convergence";
            else if (any_domain_skip)
                row.status = "invalid-domain";
            rows.push_back(row);
        }
    }
    return rows;
}

void write_sweep_csv(std::ostream& out, const std::vector<SweepRow>& rows) {
    out << kSweepHeader << '\n';
    for (const SweepRow& r : rows) {
        out << fmt17(r.k) << ',' << fmt17(r.x) << ',' << fmt_opt(r.oracle) << ','
            << fmt_opt(r.direct) << ',' << fmt_opt(r.trig) << ',' << fmt_opt(r.series_struve)
            << ',' << fmt_opt(r.series_bessel) << ',' << fmt_opt(r.marcum_single) << ','
            << fmt_opt(r.marcum_diff) << ',' << fmt_opt(r.upper) << ',' << fmt_opt(r.lower)
            << ',' << fmt_opt(r.eps_ar_upper) << ',' << fmt_opt(r.eps_ar_lower) << ','
            << fmt_opt(r.disagreement) << ',' << r.status << '\n';
    }
}

void write_figure_csv(std::ostream& out, FigureId fig, double oracle_tol) {
    std::vector<double> ks, xs;
    if (fig == FigureId::Fig3) {
        ks = {0.5};
        xs = log_spaced(0.1, 20.0, 200);
    } else {
        ks = lin_spaced(0.02, 0.98, 97);
        xs = {fig == FigureId::Fig4 ? 7.0 : (fig == FigureId::Fig5 ? 40.0 : 80.0)};
    }
    switch (fig) {
        case FigureId::Fig3:
        case FigureId::Fig4: out << "k,x,oracle,upper,lower,status\n"; break;
        case FigureId::Fig5: out << "k,x,oracle,lower,status\n"; break;
        case FigureId::Fig6: out << "k,x,eps_ar_lower,status\n"; break;
    }
    for (double k : ks) {
        for (double x : xs) {
            EvalPoint p{k, x};
            MethodResult oracle = ie_integral_direct(p, oracle_tol);
            bool ok = oracle.converged && std::isfinite(oracle.value);
            const char* status = ok ? "ok" : "non-convergence";
            double lo = lower_bound(p);
            out << fmt17(k) << ',' << fmt17(x) << ',';
            switch (fig) {
                case FigureId::Fig3:
                case FigureId::Fig4:
                    out << (ok ? fmt17(oracle.value) : std::string()) << ','
                        << fmt17(upper_bound(p)) << ',' << fmt17(lo);
                    break;
                case FigureId::Fig5:
                    out << (ok ? fmt17(oracle.value) : std::string()) << ',' << fmt17(lo);
                    break;
                case FigureId::Fig6:
                    out << (ok && oracle.value > 0.0
                                ? fmt17(std::fabs(oracle.value - lo) / oracle.value)
                                : std::string());
                    break;
            }
            out << ',' << status << '\n';
        }
    }
}

}  // namespace riceie
