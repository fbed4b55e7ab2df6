#include "riceie/cli.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "riceie/bounds.hpp"
#include "riceie/marcum.hpp"
#include "riceie/rice_ie.hpp"
#include "riceie/sweep.hpp"
#include "riceie/validation.hpp"

namespace riceie {

namespace {

std::string fmt17(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.16e", v);
    return std::string(buf);
}

std::vector<double> parse_double_list(const std::string& csv) {
    std::vector<double> out;
    std::istringstream stream(csv);
    std::string item;
    while (std::getline(stream, item, ',')) {
        size_t used = 0;
        double v = std::stod(item, &used);
        if (used != item.size()) throw std::invalid_argument("trailing characters in '" + item + "'");
        out.push_back(v);
    }
    if (out.empty()) throw std::invalid_argument("empty value list");
    return out;
}

bool method_from_name(const std::string& name, Method* m) {
    if (name == "direct") *m = Method::IntegralDirect;
    else if (name == "trig") *m = Method::IntegralTrig;
    else if (name == "series-struve") *m = Method::SeriesStruve;
    else if (name == "series-bessel") *m = Method::SeriesBessel;
    else if (name == "marcum-single") *m = Method::MarcumSingle;
    else if (name == "marcum-diff") *m = Method::MarcumDiff;
    else if (name == "parts") *m = Method::PartsIdentity;
    else return false;
    return true;
}

const std::vector<double>& default_k_grid() {
    static const std::vector<double> v = lin_spaced(0.1, 0.9, 9);
    return v;
}

const std::vector<double>& default_x_grid() {
    static const std::vector<double> v{0.5, 1.0, 2.0, 5.0, 7.0, 10.0, 20.0, 40.0, 80.0};
    return v;
}

int cmd_eval(double k, double x, const std::string& method, double tol, int max_terms,
             std::ostream& out, std::ostream& err) {
    EvalPoint p{k, x};
    MethodResult r;
    try {
        if (method == "auto") r = ie_auto(p);
        else if (method == "direct") r = ie_integral_direct(p, tol);
        else if (method == "trig") r = ie_integral_trig(p, tol);
        else if (method == "series-struve") r = ie_series_struve(p, max_terms);
        else if (method == "series-bessel") r = ie_series_bessel(p, max_terms);
        else if (method == "marcum-single") r = ie_marcum_single(p);
        else if (method == "marcum-diff") r = ie_marcum_diff(p);
        else if (method == "parts") r = ie_parts_identity(p, tol);
        else {
            err << "error: unknown method '" << method
                << "' (expected auto, direct, trig, series-struve, series-bessel, "
                   "marcum-single, marcum-diff, parts)\n";
            return 1;
        }
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NonConvergenceError& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    char est[24];
    std::snprintf(est, sizeof est, "%.3e", r.error_estimate);
    out << "value=" << fmt17(r.value) << " method=" << method_name(r.method)
        << " error_estimate=" << est << " terms_or_panels=" << r.terms_or_panels
        << " converged=" << (r.converged ? "true" : "false") << '\n';
    if (!r.converged || !std::isfinite(r.value)) {
        err << "error: method did not converge at k=" << k << ", x=" << x << '\n';
        return 2;
    }
    return 0;
}

int cmd_sweep(const std::string& k_csv, const std::string& x_csv,
              const std::string& methods_csv, const std::string& out_path, double tol,
              int max_terms, std::ostream& out, std::ostream& err) {
    SweepSpec spec;
    spec.oracle_tol = tol;
    spec.max_terms = max_terms;
    try {
        spec.k_values = k_csv.empty() ? default_k_grid() : parse_double_list(k_csv);
        spec.x_values = x_csv.empty() ? default_x_grid() : parse_double_list(x_csv);
        if (!methods_csv.empty()) {
            std::istringstream stream(methods_csv);
            std::string name;
            while (std::getline(stream, name, ',')) {
                Method m;
                if (!method_from_name(name, &m)) {
                    err << "error: unknown method '" << name << "' in --methods\n";
                    return 1;
                }
                spec.methods.push_back(m);
            }
        }
    } catch (const std::exception& e) {
        err << "error: bad value list: " << e.what() << '\n';
        return 1;
    }
    std::vector<SweepRow> rows;
    try {
        rows = run_sweep(spec);
    } catch (const std::domain_error& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    write_sweep_csv(file, rows);
    if (!file.good()) {
        err << "error: write failed for '" << out_path << "'\n";
        return 1;
    }
    int nonconverged = 0;
    for (const SweepRow& r : rows)
        if (r.status == "non-convergence") ++nonconverged;
    out << "wrote " << rows.size() << " rows to " << out_path << '\n';
    if (nonconverged > 0) {
        err << "error: " << nonconverged << " row(s) failed to converge\n";
        return 2;
    }
    return 0;
}

int cmd_figure(int fig, const std::string& out_path, double tol, std::ostream& out,
               std::ostream& err) {
    FigureId id;
    switch (fig) {
        case 3: id = FigureId::Fig3; break;
        case 4: id = FigureId::Fig4; break;
        case 5: id = FigureId::Fig5; break;
        case 6: id = FigureId::Fig6; break;
        default:
            err << "error: --fig must be one of 3, 4, 5, 6\n";
            return 1;
    }
    std::ofstream file(out_path, std::ios::binary);
    if (!file) {
        err << "error: cannot open '" << out_path << "' for writing\n";
        return 1;
    }
    std::ostringstream buffer;
    write_figure_csv(buffer, id, tol);
    std::string body = buffer.str();
    file << body;
    if (!file.good()) {
        err << "error: write failed for '" << out_path << "'\n";
        return 1;
    }
    size_t rows = 0;
    for (char c : body)
        if (c == '\n') ++rows;
    out << "wrote " << (rows > 0 ? rows - 1 : 0) << " rows to " << out_path << '\n';
    if (body.find("non-convergence") != std::string::npos) {
        err << "error: figure grid contains non-converged rows\n";
        return 2;
    }
    return 0;
}

int cmd_validate(const std::string& level_name, std::ostream& out, std::ostream& err) {
    ValidationLevel level;
    if (level_name == "quick") level = ValidationLevel::Quick;
    else if (level_name == "full") level = ValidationLevel::Full;
    else {
        err << "error: --level must be 'quick' or 'full'\n";
        return 1;
    }
    std::vector<CheckResult> results = run_validation(level);
    int failures = 0;
    for (const CheckResult& r : results) {
        out << (r.pass ? "[PASS] " : "[FAIL] ") << r.name << ": margin=" << r.margin << " ("
            << r.detail << ")\n";
        if (!r.pass) ++failures;
    }
    out << results.size() - failures << "/" << results.size() << " checks passed ("
        << level_name << ")\n";
    if (failures > 0) {
        err << "error: " << failures << " validation check(s) failed\n";
        return 3;
    }
    return 0;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Rice Ie-function: incomplete integral of the zeroth-order modified "
                 "Bessel function with exponential weight"};
    app.require_subcommand(0, 1);

    double k = 0.0, x = 0.0, tol = 1e-12;
    int max_terms = 200, fig = 0;
    std::string method = "auto", out_path, k_csv, x_csv, methods_csv, level = "quick";

    CLI::App* eval = app.add_subcommand("eval", "Evaluate Ie(k, x) by one route");
    eval->add_option("--k", k, "modulation index, 0 <= k <= 1")->required();
    eval->add_option("--x", x, "upper integration limit, x >= 0")->required();
    eval->add_option("--method", method,
                     "auto|direct|trig|series-struve|series-bessel|marcum-single|"
                     "marcum-diff|parts");
    eval->add_option("--oracle-tol", tol, "quadrature tolerance");
    eval->add_option("--max-terms", max_terms, "series term cap");

    CLI::App* sweep = app.add_subcommand("sweep", "Tabulate all routes and bounds on a grid");
    sweep->add_option("--k", k_csv, "comma-separated k values (default: canonical grid)");
    sweep->add_option("--x", x_csv, "comma-separated x values (default: canonical grid)");
    sweep->add_option("--methods", methods_csv, "comma-separated route subset");
    sweep->add_option("--out", out_path, "output CSV path")->required();
    sweep->add_option("--oracle-tol", tol, "oracle quadrature tolerance");
    sweep->add_option("--max-terms", max_terms, "series term cap");

    CLI::App* figure = app.add_subcommand("figure", "Reproduce a bound-comparison data set");
    figure->add_option("--fig", fig, "figure id: 3, 4, 5, or 6")->required();
    figure->add_option("--out", out_path, "output CSV path")->required();
    figure->add_option("--oracle-tol", tol, "oracle quadrature tolerance");

    CLI::App* validate = app.add_subcommand("validate", "Run the property-check suite");
    validate->add_option("--level", level, "quick|full");

    std::vector<const char*> argv;
    argv.reserve(args.size() + 1);
    argv.push_back("riceie");
    for (const std::string& a : args) argv.push_back(a.c_str());
    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    if (app.got_subcommand(eval))
        return cmd_eval(k, x, method, tol, max_terms, out, err);
    if (app.got_subcommand(sweep))
        return cmd_sweep(k_csv, x_csv, methods_csv, out_path, tol, max_terms, out, err);
    if (app.got_subcommand(figure)) return cmd_figure(fig, out_path, tol, out, err);
    if (app.got_subcommand(validate)) return cmd_validate(level, out, err);
    out << app.help();
    return 1;
}

}  // namespace riceie
