#include <cmath>
#include <stdexcept>

#include "doctest.h"
#include "riceie/bounds.hpp"
#include "riceie/rice_ie.hpp"

using namespace riceie;

namespace {
double rel(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
}  // namespace

TEST_CASE("closed-form bound anchors") {
    // reference: 60-digit arbitrary-precision evaluation
    struct Anchor {
        double k, x, up, lo;
    };
    const Anchor anchors[] = {
        {0.5, 7.0, 1.286368707804132189780206, 1.137525026733946293857722},
        {0.5, 0.5, 0.4338446237052875858262330, 0.1444835843022273917067465},
        {0.05, 0.1, 0.09533409918968048164591591, 0.07910665841316972069187819},
        {0.95, 40.0, 3.439629911933487731218965, 3.028702316762158090531472},
        {0.5, 80.0, 1.298858490722684507501054, 1.154700538379251528275550},
        {0.9, 20.0, 2.525318341439767841490540, 2.160368122808132998697751},
        {0.2, 10.0, 1.064752646133192564440137, 1.020451433616424864956859},
    };
    for (const Anchor& a : anchors) {
        EvalPoint p{a.k, a.x};
        CHECK(rel(upper_bound(p), a.up) < 1e-13);
        CHECK(rel(lower_bound(p), a.lo) < 1e-13);
    }
}

TEST_CASE("bounds collapse where the function is elementary") {
    // k = 0: both bounds equal 1 - e^{-x} exactly (in exact arithmetic)
    for (double x : {0.1, 1.0, 10.0, 80.0}) {
        double want = -std::expm1(-x);
        CHECK(rel(upper_bound(EvalPoint{0.0, x}), want) < 1e-13);
        CHECK(rel(lower_bound(EvalPoint{0.0, x}), want) < 1e-13);
    }
    // x = 0: everything is zero
    for (double k : {0.0, 0.3, 0.7, 0.95}) {
        CHECK(std::fabs(upper_bound(EvalPoint{k, 0.0})) < 1e-15);
        CHECK(std::fabs(lower_bound(EvalPoint{k, 0.0})) < 1e-15);
    }
    CHECK(std::fabs(upper_bound(EvalPoint{1.0, 0.0})) < 1e-15);
}

TEST_CASE("upper bound small-argument branch is continuous") {
    // the erf(c sqrt(x))/c factor switches to a Maclaurin form when c^2 x
    // drops below 1e-6; values from either side of the switch must agree
    double k1 = 1.0 - 0.999999e-6;  // just below the threshold at x = 1
    double k2 = 1.0 - 1.000001e-6;  // just above
    double u1 = upper_bound(EvalPoint{k1, 1.0});
    double u2 = upper_bound(EvalPoint{k2, 1.0});
    CHECK(std::fabs(u1 - u2) < 2e-12);
}

TEST_CASE("upper bound valid at k = 1, lower bound is not") {
    EvalPoint p{1.0, 0.25};
    double oracle = ie_integral_direct(p, 1e-13).value;
    CHECK(upper_bound(p) > oracle);
    CHECK_THROWS_AS(lower_bound(p), std::domain_error);
    Bracket b = bracket(p);
    CHECK(b.upper_valid);
    CHECK_FALSE(b.lower_valid);
    CHECK(std::isnan(b.lower));
    CHECK(b.upper > oracle);
}

TEST_CASE("error record at a representative interior point") {
    ErrorRecord r = error_record(EvalPoint{0.5, 7.0});
    CHECK(rel(r.oracle, 1.142768166385401242037186) < 1e-11);
    CHECK(rel(r.eps_ar_upper, 0.12566026) < 1e-6);
    CHECK(rel(r.eps_ar_lower, 0.0045881044) < 1e-6);
    CHECK(r.method_disagreement <= 1e-8);
    CHECK(r.eps_ar_upper > 0.0);
    CHECK(r.eps_ar_lower > 0.0);
}

TEST_CASE("relative error ordering flips between small and large x") {
    // at small x the upper bound is tighter; at large x the lower bound wins
    ErrorRecord small_x = error_record(EvalPoint{0.5, 0.5});
    CHECK(small_x.eps_ar_upper < small_x.eps_ar_lower);
    ErrorRecord large_x = error_record(EvalPoint{0.5, 80.0});
    CHECK(large_x.eps_ar_lower < large_x.eps_ar_upper);
    CHECK(large_x.eps_ar_lower <= 1e-14);  // lower bound is essentially exact here
}

TEST_CASE("error record edge handling") {
    ErrorRecord unit_k = error_record(EvalPoint{1.0, 2.0});
    CHECK(std::isnan(unit_k.lower));
    CHECK(std::isnan(unit_k.eps_ar_lower));
    CHECK(std::isfinite(unit_k.upper));
    CHECK(unit_k.upper > unit_k.oracle);
    CHECK_THROWS_AS(error_record(EvalPoint{0.5, 0.0}), std::domain_error);
    CHECK_THROWS_AS(error_record(EvalPoint{0.5, -1.0}), std::domain_error);
}

TEST_CASE("bracketing property on a small grid") {
    for (double k : {0.1, 0.4, 0.75, 0.95}) {
        for (double x : {0.2, 1.0, 5.0, 25.0, 90.0}) {
            EvalPoint p{k, x};
            MethodResult oracle = ie_integral_direct(p, 1e-13);
            REQUIRE(oracle.converged);
            double slack = 1e-10 + oracle.error_estimate;
            CHECK(lower_bound(p) <= oracle.value + slack);
            CHECK(upper_bound(p) >= oracle.value - slack);
        }
    }
}
