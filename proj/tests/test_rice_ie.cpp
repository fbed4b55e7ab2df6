#include <cmath>
#include <stdexcept>
#include <string>

#include "doctest.h"
#include "riceie/bounds.hpp"
#include "riceie/quadrature.hpp"
#include "riceie/rice_ie.hpp"
#include "riceie/specfun.hpp"

using namespace riceie;

namespace {
double rel(double got, double want) {
    return std::fabs(got - want) / std::max(std::fabs(want), 1e-300);
}
// independent derivation of the expected value: tenfold tighter quadrature
double derived_oracle(double k, double x) {
    auto f = [k](double t) {
        return std::exp(-(1.0 - k) * t) * bessel_i_scaled(0, k * t).mantissa;
    };
    QuadratureResult r = integrate_finite(f, 0.0, x, 1e-15, 1e-13, 2 * kDefaultMaxPanels);
    REQUIRE(r.converged);
    return r.value;
}
}  // namespace

TEST_CASE("ab parameters") {
    AbParams ab = ab_params(EvalPoint{0.5, 7.0});
    // reference: 60-digit arbitrary-precision evaluation
    CHECK(rel(ab.a, 3.614163503010215298544831) < 1e-14);
    CHECK(rel(ab.b, 0.9684121919456247080432157) < 1e-14);
    for (double k : {0.0, 0.1, 0.5, 0.9, 1.0}) {
        for (double x : {0.0, 0.3, 7.0, 80.0}) {
            AbParams p = ab_params(EvalPoint{k, x});
            CHECK(p.a >= p.b);
            CHECK(p.b >= 0.0);
            CHECK(std::fabs(p.a * p.a + p.b * p.b - 2.0 * x) <= 1e-12 * std::max(2.0 * x, 1.0));
            CHECK(std::fabs(p.a * p.b - k * x) <= 1e-12 * std::max(k * x, 1.0));
        }
    }
    CHECK(ab_params(EvalPoint{1.0, 4.0}).a == ab_params(EvalPoint{1.0, 4.0}).b);
    CHECK_THROWS_AS(ab_params(EvalPoint{1.2, 1.0}), std::domain_error);
}

TEST_CASE("method names are stable identifiers") {
    CHECK(std::string(method_name(Method::IntegralDirect)) == "direct");
    CHECK(std::string(method_name(Method::IntegralTrig)) == "trig");
    CHECK(std::string(method_name(Method::SeriesStruve)) == "series-struve");
    CHECK(std::string(method_name(Method::SeriesBessel)) == "series-bessel");
    CHECK(std::string(method_name(Method::MarcumSingle)) == "marcum-single");
    CHECK(std::string(method_name(Method::MarcumDiff)) == "marcum-diff");
    CHECK(std::string(method_name(Method::PartsIdentity)) == "parts");
    CHECK(std::string(method_name(Method::ClosedForm)) == "closed-form");
}

TEST_CASE("direct integral anchors") {
    // reference: 60-digit arbitrary-precision evaluation
    struct Anchor {
        double k, x, value;
    };
    const Anchor anchors[] = {
        {0.5, 7.0, 1.142768166385401242037186},
        {0.9, 20.0, 2.186341920748980012924344},
        {1.0, 5.0, 1.737565397769353549998868},
        {0.5, 0.5, 0.3952718388914180174275672},
        {0.05, 0.1, 0.09516277528055797186610772},
        {0.95, 40.0, 3.054573943235826066459995},
        {0.2, 10.0, 1.020499535443787892477514},
        {0.5, 1.0, 0.6422444187776863609808513},
        {0.8, 25.0, 1.663884136898326587768834},
        {0.6, 12.0, 1.247146474222798685209055},
        {1.0, 0.5, 0.4007280368170108826253211},
        {0.3, 2.0, 0.8793752487048612119975641},
        {0.7, 0.5, 0.3970098551573138081729911},
        {0.9, 80.0, 2.294007803444197313066126},
        {0.1, 50.0, 1.005037815259212075483603},
    };
    for (const Anchor& a : anchors) {
        MethodResult r = ie_integral_direct(EvalPoint{a.k, a.x});
        CHECK(r.converged);
        CHECK(rel(r.value, a.value) < 1e-12);
        CHECK(r.method == Method::IntegralDirect);
    }
}

TEST_CASE("direct integral derived from refined quadrature") {
    for (auto [k, x] : {std::pair{0.35, 3.3}, std::pair{0.77, 18.0}, std::pair{0.99, 6.0}}) {
        MethodResult r = ie_integral_direct(EvalPoint{k, x});
        CHECK(r.converged);
        CHECK(std::fabs(r.value - derived_oracle(k, x)) <= r.error_estimate + 1e-14);
    }
}

TEST_CASE("trig integral route") {
    double want = 1.142768166385401242037186;  // reference: 60-digit evaluation
    MethodResult r = ie_integral_trig(EvalPoint{0.5, 7.0});
    CHECK(r.converged);
    CHECK(rel(r.value, want) < 1e-11);
    CHECK(rel(ie_integral_trig(EvalPoint{0.9, 20.0}).value, 2.186341920748980012924344) <
          1e-10);
    CHECK(std::fabs(ie_integral_trig(EvalPoint{0.5, 0.0}).value) < 1e-13);
    CHECK(rel(ie_integral_trig(EvalPoint{0.0, 3.0}).value, -std::expm1(-3.0)) < 1e-12);
    CHECK_THROWS_AS(ie_integral_trig(EvalPoint{1.0, 5.0}), std::domain_error);
}

TEST_CASE("struve series route") {
    MethodResult r = ie_series_struve(EvalPoint{0.2, 10.0});
    CHECK(r.converged);
    // reference: 60-digit arbitrary-precision evaluation
    CHECK(rel(r.value, 1.020499535443787892477514) < 1e-11);
    CHECK(r.terms_or_panels <= 20);  // measured: 11 terms at this point

    MethodResult mid = ie_series_struve(EvalPoint{0.5, 7.0});
    CHECK(mid.converged);
    CHECK(rel(mid.value, 1.142768166385401242037186) < 1e-11);

    // slow-regime probe: large k and x is the series' weakest corner, but the
    // all-positive terms still converge in well under 100 terms
    MethodResult slow = ie_series_struve(EvalPoint{0.9, 50.0});
    CHECK(slow.converged);
    CHECK(slow.terms_or_panels > 40);
    CHECK(slow.terms_or_panels <= 100);
    CHECK(rel(slow.value, 2.290458734460786628604568) < 1e-10);

    // a tight cap must be reported as non-convergence, not silently wrong
    MethodResult capped = ie_series_struve(EvalPoint{0.9, 50.0}, 20);
    CHECK_FALSE(capped.converged);
    CHECK(capped.terms_or_panels == 20);

    // small k converges to the k=0 closed form
    MethodResult tiny = ie_series_struve(EvalPoint{1e-4, 2.0});
    CHECK(tiny.converged);
    CHECK(rel(tiny.value, -std::expm1(-2.0)) < 1e-6);
    CHECK(rel(tiny.value, derived_oracle(1e-4, 2.0)) < 1e-10);

    CHECK_THROWS_AS(ie_series_struve(EvalPoint{0.0, 5.0}), std::domain_error);
    CHECK_THROWS_AS(ie_series_struve(EvalPoint{1.0, 5.0}), std::domain_error);
    CHECK_THROWS_AS(ie_series_struve(EvalPoint{0.5, 0.0}), std::domain_error);
}

TEST_CASE("bessel series route") {
    MethodResult r = ie_series_bessel(EvalPoint{0.95, 30.0});
    CHECK(r.converged);
    // reference: 60-digit arbitrary-precision evaluation
    CHECK(rel(r.value, 2.931571107579558736315343) < 1e-11);

    // k = 1 collapses to x e^{-x} (I_0 + I_1)
    MethodResult unit = ie_series_bessel(EvalPoint{1.0, 5.0});
    CHECK(unit.converged);
    CHECK(rel(unit.value, 1.737565397769353549998868) < 1e-12);
    double closed = 5.0 * std::exp(-5.0) *
                    (std::exp(5.0) * bessel_i_scaled(0, 5.0).mantissa +
                     std::exp(5.0) * bessel_i_scaled(1, 5.0).mantissa);
    CHECK(rel(unit.value, closed) < 1e-13);

    // slow-regime probe: small k needs the longest tail, still converges
    MethodResult slow = ie_series_bessel(EvalPoint{0.1, 50.0});
    CHECK(slow.converged);
    CHECK(slow.terms_or_panels > 40);
    CHECK(slow.terms_or_panels <= 120);
    CHECK(rel(slow.value, 1.005037815259212075483603) < 1e-10);

    MethodResult capped = ie_series_bessel(EvalPoint{0.1, 50.0}, 30);
    CHECK_FALSE(capped.converged);
    CHECK(capped.terms_or_panels == 30);

    CHECK(rel(ie_series_bessel(EvalPoint{0.9, 80.0}).value, 2.294007803444197313066126) <
          1e-10);

    CHECK_THROWS_AS(ie_series_bessel(EvalPoint{0.0, 5.0}), std::domain_error);
    CHECK_THROWS_AS(ie_series_bessel(EvalPoint{0.5, 0.0}), std::domain_error);
}

TEST_CASE("marcum identity routes") {
    double want = 1.142768166385401242037186;  // reference: 60-digit evaluation
    MethodResult single = ie_marcum_single(EvalPoint{0.5, 7.0});
    CHECK(single.converged);
    CHECK(rel(single.value, want) < 1e-11);
    MethodResult diff = ie_marcum_diff(EvalPoint{0.5, 7.0});
    CHECK(diff.converged);
    CHECK(rel(diff.value, want) < 1e-11);
    CHECK(std::fabs(single.value - diff.value) < 1e-10);

    CHECK(rel(ie_marcum_single(EvalPoint{0.5, 80.0}).value, 1.154700538379251528487164) <
          1e-10);
    CHECK(rel(ie_marcum_diff(EvalPoint{0.8, 25.0}).value, 1.663884136898326587768834) < 1e-9);
    CHECK(rel(ie_marcum_single(EvalPoint{0.0, 3.0}).value, -std::expm1(-3.0)) < 1e-11);
    CHECK(std::fabs(ie_marcum_single(EvalPoint{0.4, 0.0}).value) < 1e-11);
    CHECK(std::fabs(ie_marcum_diff(EvalPoint{0.4, 0.0}).value) < 1e-11);

    CHECK_THROWS_AS(ie_marcum_single(EvalPoint{1.0, 5.0}), std::domain_error);
    CHECK_THROWS_AS(ie_marcum_diff(EvalPoint{1.0, 5.0}), std::domain_error);
}

TEST_CASE("integration-by-parts route") {
    MethodResult r = ie_parts_identity(EvalPoint{0.6, 12.0});
    CHECK(r.converged);
    // reference: 60-digit arbitrary-precision evaluation
    CHECK(rel(r.value, 1.247146474222798685209055) < 1e-10);
    CHECK(rel(ie_parts_identity(EvalPoint{0.0, 3.0}).value, -std::expm1(-3.0)) < 1e-12);
    CHECK(std::fabs(ie_parts_identity(EvalPoint{0.7, 0.0}).value) < 1e-14);
    CHECK(rel(ie_parts_identity(EvalPoint{1.0, 0.5}).value, 0.4007280368170108826253211) <
          1e-11);
}

TEST_CASE("auto route selection") {
    MethodResult closed = ie_auto(EvalPoint{0.0, 3.0});
    CHECK(closed.method == Method::ClosedForm);
    CHECK(rel(closed.value, -std::expm1(-3.0)) < 1e-15);
    CHECK(ie_auto(EvalPoint{0.7, 0.0}).method == Method::ClosedForm);
    CHECK(ie_auto(EvalPoint{0.7, 0.0}).value == 0.0);
    CHECK(ie_auto(EvalPoint{1.0, 5.0}).method == Method::IntegralDirect);
    CHECK(ie_auto(EvalPoint{0.5, 0.01}).method == Method::IntegralDirect);
    MethodResult main_path = ie_auto(EvalPoint{0.5, 7.0});
    CHECK(main_path.method == Method::MarcumSingle);
    CHECK(rel(main_path.value, 1.142768166385401242037186) < 1e-11);
    CHECK_THROWS_AS(ie_auto(EvalPoint{-0.1, 1.0}), std::domain_error);
    CHECK_THROWS_AS(ie_auto(EvalPoint{0.5, -1.0}), std::domain_error);
}

TEST_CASE("values stay inside the mathematical range") {
    for (double k : {0.1, 0.5, 0.9}) {
        double cap = 1.0 / std::sqrt((1.0 - k) * (1.0 + k));
        for (double x : {0.5, 2.0, 10.0, 80.0}) {
            MethodResult r = ie_auto(EvalPoint{k, x});
            CHECK(r.value >= 0.0);
            CHECK(r.value <= cap * (1.0 + 1e-12));
        }
    }
}

TEST_CASE("saturation at large x") {
    for (double k : {0.3, 0.6}) {
        double s = std::sqrt((1.0 - k) * (1.0 + k));
        MethodResult r = ie_integral_direct(EvalPoint{k, 200.0});
        CHECK(r.converged);
        CHECK(std::fabs(r.value * s - 1.0) < 1e-6);
    }
}

TEST_CASE("monotone in x") {
    for (double k : {0.2, 0.8}) {
        double prev = -1.0;
        for (double x : {0.0, 0.5, 2.0, 7.0, 20.0}) {
            double v = ie_integral_direct(EvalPoint{k, x}, 1e-13).value;
            CHECK(v > prev);
            prev = v;
        }
    }
}
