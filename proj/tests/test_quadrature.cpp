#include <doctest.h>

#include <cmath>

#include "oracles.hpp"
#include "vdwsurf/quadrature.hpp"

using namespace vdwsurf;

TEST_SUITE("quadrature") {

TEST_CASE("gauss-legendre rules are sane") {
    for (int order : {4, 8, 16}) {
        const GaussRule& rule = gauss_legendre(order);
        REQUIRE(rule.x.size() == (size_t)order);
        double wsum = 0.0;
        for (int k = 0; k < order; ++k) {
            wsum += rule.w[k];
            if (k) CHECK(rule.x[k] > rule.x[k - 1]);
            CHECK(rule.x[k] == doctest::Approx(-rule.x[order - 1 - k]).epsilon(1e-14));
        }
        CHECK(std::abs(wsum - 2.0) <= 1e-14);
    }
    CHECK_THROWS_AS(gauss_legendre(0), std::invalid_argument);
}

TEST_CASE("gauss-legendre integrates high-degree monomials exactly") {
    const GaussRule& rule = gauss_legendre(16);  // exact through degree 31
    for (int p : {2, 10, 30}) {
        double sum = 0.0;
        for (size_t k = 0; k < rule.x.size(); ++k)
            sum += rule.w[k] * std::pow(rule.x[k], p);
        CHECK(sum == doctest::Approx(2.0 / (p + 1)).epsilon(1e-13));
    }
}

TEST_CASE("half-line integral: exponential decay") {
    double got = halfline_integral([](double xi) { return std::exp(-xi); });
    CHECK(got == doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("half-line integral: product of Lorentzians") {
    // a b / ((a^2+xi^2)(b^2+xi^2)) integrates to pi/(2(a+b)).
    for (double a : {0.3, 1.0, 3.0})
        for (double b : {0.3, 1.0, 3.0}) {
            double got = halfline_integral([a, b](double xi) {
                return a * b / ((a * a + xi * xi) * (b * b + xi * xi));
            });
            double want = (double)(oracle::pi / (2.0L * ((long double)a + b)));
            CHECK(got == doctest::Approx(want).epsilon(1e-10));
        }
}

TEST_CASE("half-line integral: identically zero integrand converges at once") {
    double got = halfline_integral([](double) { return 0.0; });
    CHECK(got == 0.0);
}

TEST_CASE("tolerance behaves as advertised") {
    auto f = [](double xi) { return 1.0 / ((1.0 + xi * xi) * (4.0 + xi * xi)); };
    QuadratureSpec loose;
    loose.rel_tol = 1e-6;
    QuadratureSpec tight;
    tight.rel_tol = 5e-7;
    double a = halfline_integral(f, loose);
    double b = halfline_integral(f, tight);
    CHECK(std::abs(a - b) <= 1e-6 * std::abs(a));
}

TEST_CASE("QuadratureSpec validation") {
    auto f = [](double) { return 0.0; };
    QuadratureSpec bad;
    bad.rel_tol = 0.0;
    CHECK_THROWS_AS(halfline_integral(f, bad), std::invalid_argument);
    bad = {};
    bad.base_nodes = 4;
    CHECK_THROWS_AS(halfline_integral(f, bad), std::invalid_argument);
    bad = {};
    bad.max_doublings = 0;
    CHECK_THROWS_AS(halfline_integral(f, bad), std::invalid_argument);
}

TEST_CASE("non-convergence reports the last two estimates") {
    // A needle of width 1e-3 at xi = 1; 64 and 128 nodes cannot agree to
    // 1e-15, so one permitted doubling must fail.
    auto needle = [](double xi) {
        double d = xi - 1.0;
        return 1.0 / (d * d + 1e-6);
    };
    QuadratureSpec spec;
    spec.rel_tol = 1e-15;
    spec.max_doublings = 1;
    bool thrown = false;
    try {
        halfline_integral(needle, spec);
    } catch (const QuadratureError& err) {
        thrown = true;
        CHECK(std::isfinite(err.last_estimate));
        CHECK(std::isfinite(err.previous_estimate));
        CHECK(err.last_estimate != err.previous_estimate);
    }
    CHECK(thrown);
}

}  // TEST_SUITE
