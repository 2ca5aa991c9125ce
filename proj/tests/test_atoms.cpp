#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "vdwsurf/atoms.hpp"

using namespace vdwsurf;

TEST_SUITE("atoms") {

TEST_CASE("factories and validation") {
    AtomSpec e = AtomSpec::excited(1.0, 2.0);
    CHECK(e.gamma == 0.0);
    CHECK(e.state == AtomState::excited);

    AtomSpec g = AtomSpec::ground(0.9, 1e-3, 1.35);
    CHECK(g.state == AtomState::ground);
    CHECK(static_polarizability(g) == doctest::Approx(1.0).epsilon(1e-15));

    AtomSpec g2 = AtomSpec::ground_from_alpha0(0.9, 1e-3, 1.0);
    CHECK(g2.d_sq == doctest::Approx(1.35).epsilon(1e-15));
    AtomSpec e2 = AtomSpec::excited_from_alpha0(0.9, 1.0);
    CHECK(e2.d_sq == doctest::Approx(1.35).epsilon(1e-15));
    CHECK(static_polarizability(e2) == doctest::Approx(-1.0).epsilon(1e-15));

    CHECK_THROWS_AS(AtomSpec::excited(0.0, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AtomSpec::ground(1.0, -0.1, 1.0), std::invalid_argument);
    CHECK_THROWS_AS(AtomSpec::ground(1.0, 0.1, 0.0), std::invalid_argument);
    CHECK_THROWS_AS(AtomSpec::ground_from_alpha0(1.0, 0.1, -1.0),
                    std::invalid_argument);
}

TEST_CASE("ground and excited responses carry opposite signs") {
    AtomSpec g = AtomSpec::ground(1.0, 1e-3, 1.5);
    AtomSpec e = AtomSpec::excited(1.0, 1.5);
    CHECK(polarizability(g, 0.0).real() > 0.0);
    CHECK(polarizability(e, 0.0).real() < 0.0);
    CHECK(polarizability(g, 0.0).real() ==
          doctest::Approx(-polarizability(e, 0.0).real()).epsilon(1e-15));
    CHECK(static_polarizability(g) == doctest::Approx(1.0).epsilon(1e-15));
}

TEST_CASE("pole handling") {
    AtomSpec e = AtomSpec::excited(1.0, 1.0);
    CHECK_THROWS_AS(polarizability(e, 1.0), std::domain_error);
    CHECK_THROWS_AS(polarizability(e, -1.0), std::domain_error);

    AtomSpec g = AtomSpec::ground(1.0, 1e-2, 1.0);
    std::complex<double> at_pole = polarizability(g, 1.0);
    CHECK(std::isfinite(at_pole.real()));
    CHECK(at_pole.imag() > 0.0);  // absorptive side of the damped line
}

TEST_CASE("imaginary-axis evaluation is the complex one restricted") {
    AtomSpec g = AtomSpec::ground(0.9, 1e-3, 1.35);
    AtomSpec e = AtomSpec::excited(1.1, 0.7);
    for (double xi : {0.0, 0.05, 0.4, 1.3, 8.0}) {
        for (const AtomSpec& atom : {g, e}) {
            std::complex<double> full = polarizability(atom, {0.0, xi});
            CHECK(full.imag() == 0.0);
            CHECK(polarizability_imag_axis(atom, xi) ==
                  doctest::Approx(full.real()).epsilon(1e-15));
        }
    }
    CHECK_THROWS_AS(polarizability_imag_axis(g, -1e-9), std::domain_error);
}

TEST_CASE("imaginary-axis response is monotone and single-signed") {
    // Equal damping (zero, matching the excited convention) makes the ground
    // response the exact mirror image of the excited one.
    AtomSpec g = AtomSpec::ground(0.9, 0.0, 1.35);
    AtomSpec e = AtomSpec::excited(0.9, 1.35);
    double prev_g = polarizability_imag_axis(g, 0.0);
    double prev_e = polarizability_imag_axis(e, 0.0);
    CHECK(prev_g == doctest::Approx(1.0).epsilon(1e-15));
    CHECK(prev_e == doctest::Approx(-1.0).epsilon(1e-15));
    for (double xi = 0.1; xi < 20.0; xi *= 1.8) {
        double cur_g = polarizability_imag_axis(g, xi);
        double cur_e = polarizability_imag_axis(e, xi);
        CHECK(cur_g > 0.0);
        CHECK(cur_g < prev_g);
        CHECK(cur_e < 0.0);
        CHECK(cur_e > prev_e);
        CHECK(cur_g == doctest::Approx(-cur_e).epsilon(1e-15));
        prev_g = cur_g;
        prev_e = cur_e;
    }
}

TEST_CASE("reality condition") {
    AtomSpec g = AtomSpec::ground(0.8, 5e-3, 0.6);
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> d(0.05, 2.5);
    for (int k = 0; k < 100; ++k) {
        std::complex<double> w{d(rng), d(rng)};
        std::complex<double> a = polarizability(g, -std::conj(w));
        std::complex<double> b = std::conj(polarizability(g, w));
        CHECK(std::abs(a - b) <= 1e-14 * std::abs(b));
    }
}

}  // TEST_SUITE
