#include "twrc/quadrature.hpp"
#include "twrc/bessel.hpp"
#include "twrc/errors.hpp"
#include "oracles.hpp"

#include <doctest.h>

#include <cmath>

using namespace twrc;

namespace {
constexpr double kEuler = 0.57721566490153286061;
}

TEST_CASE("plain exponential integrates to 1") {
    auto f = [](double x) { return std::exp(-x); };
    SUBCASE("adaptive tail") {
        const QuadratureResult r = integrate_semi_infinite(f);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
        CHECK(std::fabs(r.value - 1.0) <= r.error_estimate);
    }
    SUBCASE("explicit envelope cut") {
        QuadratureSpec spec;
        spec.tail_cut = (std::log(1.0 / spec.abs_tol) + 10.0) / 1.0;
        const QuadratureResult r = integrate_semi_infinite(f, spec);
        CHECK(r.value == doctest::Approx(1.0).epsilon(1e-11));
    }
}

TEST_CASE("bessel-kernel integrals against brute-force refinement") {
    // Int_0^inf x e^{-x} K0(x) dx = 1/3 and the K1 counterpart = 2/3.
    auto f0 = [](double x) { return x <= 0.0 ? 0.0 : x * std::exp(-x) * bessel_k0(x); };
    auto f1 = [](double x) { return x <= 0.0 ? 1.0 : x * std::exp(-x) * bessel_k1(x); };

    const QuadratureResult r0 = integrate_semi_infinite(f0);
    const QuadratureResult r1 = integrate_semi_infinite(f1);
    CHECK(r0.value == doctest::Approx(1.0 / 3.0).epsilon(1e-9));
    CHECK(r1.value == doctest::Approx(2.0 / 3.0).epsilon(1e-9));
    CHECK(r1.value >= 0.0);
    CHECK(std::isfinite(r1.value));

    // Independent check: Romberg over [1e-9, 40] plus the analytic estimate
    // that the remaining head/tail mass is below 1e-10.
    const double ref0 = oracles::trapezoid_richardson(f0, 1e-9, 40.0, 22);
    const double ref1 = oracles::trapezoid_richardson(f1, 1e-9, 40.0, 22);
    CHECK(r0.value == doctest::Approx(ref0).epsilon(1e-7));
    CHECK(r1.value == doctest::Approx(ref1).epsilon(1e-7));
}

TEST_CASE("k1 kernel integrand is finite at the origin") {
    // x * K1(c x) -> 1/c as x -> 0, so x e^{-x} K1(x) -> 1.
    CHECK(1e-9 * std::exp(-1e-9) * bessel_k1(1e-9) == doctest::Approx(1.0).epsilon(1e-8));
}

TEST_CASE("logarithmic singularity at the origin") {
    // Int_0^inf e^{-x} ln(x) dx = -gamma.
    auto f = [](double x) { return x <= 0.0 ? 0.0 : std::exp(-x) * std::log(x); };
    const QuadratureResult r = integrate_semi_infinite(f);
    CHECK(r.value == doctest::Approx(-kEuler).epsilon(1e-10));
    CHECK(std::fabs(r.value + kEuler) <= r.error_estimate);
}

TEST_CASE("reported error bounds the true error on analytic cases") {
    struct Case {
        std::function<double(double)> f;
        double exact;
    };
    const Case cases[] = {
        {[](double x) { return std::exp(-x); }, 1.0},
        {[](double x) { return x * std::exp(-x); }, 1.0},
        {[](double x) { return x * x * std::exp(-2.0 * x); }, 0.25},
        {[](double x) { return std::exp(-0.5 * x * x); }, std::sqrt(2.0 * std::acos(-1.0)) / 2.0},
    };
    for (const Case& c : cases) {
        const QuadratureResult r = integrate_semi_infinite(c.f);
        CHECK(std::fabs(r.value - c.exact) <= r.error_estimate + 1e-15);
    }
}

TEST_CASE("tightening rel_tol never raises the reported error") {
    auto f = [](double x) { return x * std::exp(-x) * bessel_k0(x + 1e-300); };
    double prev = 1e300;
    for (double rel : {1e-5, 1e-6, 1e-7, 1e-8, 1e-9, 1e-10}) {
        QuadratureSpec spec;
        spec.rel_tol = rel;
        spec.abs_tol = 1e-14;
        const QuadratureResult r = integrate_semi_infinite(f, spec);
        CHECK(r.error_estimate <= prev * (1.0 + 1e-12));
        prev = r.error_estimate;
    }
}

TEST_CASE("failure modes") {
    SUBCASE("no tail decay") {
        auto f = [](double x) { return 1.0 / (1.0 + x); };
        CHECK_THROWS_AS(integrate_semi_infinite(f), NonConvergence);
    }
    SUBCASE("subdivision budget exhausted") {
        QuadratureSpec spec;
        spec.rel_tol = 1e-13;
        spec.abs_tol = 1e-300;
        spec.max_subdivisions = 10;
        auto f = [](double x) { return std::exp(-x) * std::fabs(std::sin(60.0 * x)); };
        CHECK_THROWS_AS(integrate_semi_infinite(f, spec), NonConvergence);
    }
    SUBCASE("spec validation") {
        QuadratureSpec bad;
        bad.rel_tol = 0.0;
        auto f = [](double x) { return std::exp(-x); };
        CHECK_THROWS_AS(integrate_semi_infinite(f, bad), DomainError);
        bad = {};
        bad.max_subdivisions = 3;
        CHECK_THROWS_AS(integrate_semi_infinite(f, bad), DomainError);
    }
}

TEST_CASE("finite-interval rule") {
    auto f = [](double x) { return std::sin(x); };
    const QuadratureResult r = integrate_interval(f, 0.0, std::acos(-1.0));
    CHECK(r.value == doctest::Approx(2.0).epsilon(1e-12));
    CHECK(integrate_interval(f, 1.0, 1.0).value == 0.0);
}
