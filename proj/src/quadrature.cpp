#include "riceie/quadrature.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <queue>
#include <vector>

namespace riceie {

namespace {

// 7-point Gauss / 15-point Kronrod pair (nodes/weights as tabulated in
// QUADPACK's dqk15). Nodes are the positive half; node[7] = 0.
constexpr double kNode[8] = {
    0.991455371120812639206854697526329, 0.949107912342758524526189684047851,
    0.864864423359769072789712788640926, 0.741531185599394439863864773280788,
    0.586087235467691130294144838258730, 0.405845151377397166906606412076961,
    0.207784955007898467600689403773245, 0.0};
constexpr double kWeightK[8] = {
    0.022935322010529224963732008058970, 0.063092092629978553290700663189204,
    0.104790010322250183839876322541518, 0.140653259715525918745189590510238,
    0.169004726639267902826583426598550, 0.190350578064785409913256402421014,
    0.204432940075298892414161999234649, 0.209482141084727828012999174891714};
constexpr double kWeightG[4] = {
    0.129484966168869693270611432679082, 0.279705391489276667901467771423780,
    0.381830050505118944950369775488975, 0.417959183673469387755102040816327};

struct Panel {
    double a, b;
    double value;  // Kronrod estimate
    double error;  // |Kronrod - Gauss|
};

// Single 15-point rule application; false if any evaluation is non-finite.
bool apply_rule(const std::function<double(double)>& f, double a, double b, Panel* out) {
    const double c = 0.5 * (a + b);
    const double h = 0.5 * (b - a);
    double fv[15];
    for (int i = 0; i < 7; ++i) {
        fv[i] = f(c - h * kNode[i]);
        fv[14 - i] = f(c + h * kNode[i]);
    }
    fv[7] = f(c);
    for (int i = 0; i < 15; ++i)
        if (!std::isfinite(fv[i])) return false;
    double sk = kWeightK[7] * fv[7];
    for (int i = 0; i < 7; ++i) sk += kWeightK[i] * (fv[i] + fv[14 - i]);
    // Gauss nodes are the odd-index Kronrod nodes: 1, 3, 5 and the center.
    double sg = kWeightG[3] * fv[7];
    for (int i = 0; i < 3; ++i) sg += kWeightG[i] * (fv[2 * i + 1] + fv[13 - 2 * i]);
    out->a = a;
    out->b = b;
    out->value = h * sk;
    out->error = std::fabs(h * (sk - sg));
    return true;
}

// Deterministic assembly: sum panels left to right with compensation, so the
// result does not depend on subdivision visit order.
void assemble(std::vector<Panel>& panels, QuadratureResult* r) {
    std::sort(panels.begin(), panels.end(),
              [](const Panel& p, const Panel& q) { return p.a < q.a; });
    double s = 0.0, comp = 0.0, e = 0.0;
    for (const Panel& p : panels) {
        double y = p.value - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
        e += p.error;
    }
    r->value = s;
    r->abs_error_estimate = e;
}

}  // namespace

QuadratureResult integrate_finite(const std::function<double(double)>& f, double a, double b,
                                  double abs_tol, double rel_tol, int max_panels) {
    QuadratureResult r{0.0, 0.0, 0, false};
    if (a == b) {
        r.converged = true;
        return r;
    }
    auto cmp = [](const Panel& p, const Panel& q) { return p.error < q.error; };
    std::priority_queue<Panel, std::vector<Panel>, decltype(cmp)> queue(cmp);
    Panel first;
    if (!apply_rule(f, a, b, &first)) {
        r.value = std::numeric_limits<double>::quiet_NaN();
        r.subdivisions = 1;
        return r;
    }
    queue.push(first);
    double total_value = first.value;
    double total_error = first.error;
    int panels = 1;
    while (total_error > std::max(abs_tol, rel_tol * std::fabs(total_value)) &&
           panels < max_panels) {
        Panel worst = queue.top();
        queue.pop();
        double mid = 0.5 * (worst.a + worst.b);
        Panel left, right;
        if (!apply_rule(f, worst.a, mid, &left) || !apply_rule(f, mid, worst.b, &right)) {
            r.value = std::numeric_limits<double>::quiet_NaN();
            r.subdivisions = panels;
            return r;
        }
        total_value += left.value + right.value - worst.value;
        total_error += left.error + right.error - worst.error;
        queue.push(left);
        queue.push(right);
        ++panels;
        if (mid == worst.a || mid == worst.b) break;  // interval exhausted in double
    }
    std::vector<Panel> all;
    all.reserve(static_cast<size_t>(panels));
    while (!queue.empty()) {
        all.push_back(queue.top());
        queue.pop();
    }
    assemble(all, &r);
    r.subdivisions = panels;
    r.converged =
        r.abs_error_estimate <= std::max(abs_tol, rel_tol * std::fabs(r.value));
    return r;
}

QuadratureResult integrate_semi_infinite(const std::function<double(double)>& f, double a,
                                         double abs_tol, double rel_tol, double initial_window,
                                         int max_panels) {
    QuadratureResult total{0.0, 0.0, 0, false};
    double lo = a;
    double width = initial_window;
    int small_tails = 0;
    bool all_converged = true;
    std::vector<QuadratureResult> pieces;
    for (int w = 0; w < 64; ++w) {
        int budget = max_panels - total.subdivisions;
        if (budget < 8) {
            all_converged = false;
            break;
        }
        QuadratureResult piece =
            integrate_finite(f, lo, lo + width, 0.25 * abs_tol, rel_tol, budget);
        total.subdivisions += piece.subdivisions;
        if (!std::isfinite(piece.value)) {
            total.value = piece.value;
            return total;
        }
        all_converged = all_converged && piece.converged;
        pieces.push_back(piece);
        lo += width;
        width *= 2.0;
        small_tails = (std::fabs(piece.value) < 0.1 * abs_tol) ? small_tails + 1 : 0;
        if (small_tails >= 2) break;
    }
    double s = 0.0, comp = 0.0;
    for (const QuadratureResult& piece : pieces) {
        double y = piece.value - comp;
        double t = s + y;
        comp = (t - s) - y;
        s = t;
        total.abs_error_estimate += piece.abs_error_estimate;
    }
    total.value = s;
    total.converged = all_converged && small_tails >= 2;
    return total;
}

}  // namespace riceie
