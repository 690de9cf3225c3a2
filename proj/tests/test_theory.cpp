#include <doctest.h>

#include <cmath>
#include <numbers>
#include <stdexcept>
#include <tuple>

#include "qtraj/theory.hpp"

using namespace qtraj;
using namespace qtraj::theory;

TEST_CASE("site-resolved fluorescence curve") {
    ModelParams p;  // Gamma = 1.5, J = 1

    CHECK(g2_f_site(1, 1, 0.0, p) == 0.0);
    CHECK(g2_f_site(1, 1, std::numbers::pi / (2.0 * p.J), p) ==
          doctest::Approx(0.0).epsilon(1e-12));

    double tau = std::numbers::pi / (2.0 * p.J);
    double env = std::exp(-1.5 * tau) - 1.0;
    CHECK(g2_f_site(1, 2, tau, p) ==
          doctest::Approx(2.0 * env * env).epsilon(1e-12));

    // starting from the second site swaps sine and cosine
    for (double t : {0.3, 0.9, 2.4, 7.7}) {
        double e = std::expm1(-1.5 * t);
        double c = std::cos(t), s = std::sin(t);
        CHECK(g2_f_site(1, 1, t, p) == doctest::Approx(2 * e * e * c * c).epsilon(1e-12));
        CHECK(g2_f_site(1, 2, t, p) == doctest::Approx(2 * e * e * s * s).epsilon(1e-12));
        CHECK(g2_f_site(2, 2, t, p) == doctest::Approx(2 * e * e * s * s).epsilon(1e-12));
        CHECK(g2_f_site(2, 1, t, p) == doctest::Approx(2 * e * e * c * c).epsilon(1e-12));
    }

    CHECK_THROWS_AS(g2_f_site(0, 1, 1.0, p), std::invalid_argument);
    CHECK_THROWS_AS(g2_f_site(1, 3, 1.0, p), std::invalid_argument);
    CHECK_THROWS_AS(g2_f_site(1, 1, -1.0, p), std::invalid_argument);
}

TEST_CASE("either-site fluorescence curve") {
    ModelParams p;
    CHECK(g2_gamma_any(0.0, p) == 0.0);
    CHECK(g2_gamma_any(1e6, p) == doctest::Approx(1.0).epsilon(1e-12));
    double e = std::exp(-1.5) - 1.0;
    CHECK(g2_gamma_any(1.0, p) == doctest::Approx(e * e).epsilon(1e-12));
    CHECK(g2_gamma_any(1.0, p) == doctest::Approx(0.6035).epsilon(1e-4));
}

TEST_CASE("cavity transmission curve") {
    ModelParams p;  // C = 1
    CHECK(g2_kappa(0.0, p) == doctest::Approx(9.0).epsilon(1e-12));
    CHECK(g2_kappa(1e6, p) == doctest::Approx(1.0).epsilon(1e-12));
    double v = 1.0 - 4.0 * std::exp(-3.0);
    CHECK(g2_kappa(2.0, p) == doctest::Approx(v * v).epsilon(1e-12));
}

TEST_CASE("curve identities and bounds") {
    ModelParams p;
    p.J = 1.7;
    for (int i = 0; i <= 1000; ++i) {
        double tau = 10.0 * i / 1000.0;
        double sum = g2_f_site(1, 1, tau, p) + g2_f_site(1, 2, tau, p);
        CHECK(std::abs(sum - 2.0 * g2_gamma_any(tau, p)) < 1e-12);
        for (int a : {1, 2}) {
            for (int b : {1, 2}) {
                double v = g2_f_site(a, b, tau, p);
                CHECK(v >= 0.0);
                CHECK(v <= 2.0);
            }
        }
        double ga = g2_gamma_any(tau, p);
        CHECK(ga >= 0.0);
        CHECK(ga <= 1.0);
    }
}

TEST_CASE("light shift energies") {
    LightShiftParams lp;
    lp.Delta = 10.0;
    lp.Omega0 = 0.0;
    auto [ep, em] = light_shift_energy(lp);
    CHECK(ep == doctest::Approx(5.0).epsilon(1e-14));
    CHECK(em == doctest::Approx(-5.0).epsilon(1e-14));

    lp.Omega0 = 2.0;
    std::tie(ep, em) = light_shift_energy(lp);
    CHECK(ep == doctest::Approx(5.1).epsilon(1e-14));
    CHECK(em == -ep);

    lp.Delta = 0.0;
    CHECK_THROWS_AS(light_shift_energy(lp), std::invalid_argument);
}

TEST_CASE("lattice potential") {
    LightShiftParams lp;
    lp.V0 = 3.0;
    lp.k = 2.0;
    CHECK(lattice_potential(0.0, lp) == 0.0);
    CHECK(lattice_potential(std::numbers::pi / (2.0 * lp.k), lp) ==
          doctest::Approx(lp.V0).epsilon(1e-12));
    double period = std::numbers::pi / lp.k;
    for (int i = 0; i < 50; ++i) {
        double z = 0.13 * i;
        CHECK(lattice_potential(z + period, lp) ==
              doctest::Approx(lattice_potential(z, lp)).epsilon(1e-9));
    }
}
