#include <doctest.h>

#include <cmath>
#include <stdexcept>

#include "qtraj/trajectory.hpp"

using namespace qtraj;

TEST_CASE("channel names round-trip") {
    CHECK(channel_name(gamma_channel(1)) == "gamma1");
    CHECK(channel_name(gamma_channel(2)) == "gamma2");
    CHECK(channel_name(kappa_channel()) == "kappa");
    for (const char* name : {"gamma1", "gamma2", "gamma3", "kappa"}) {
        auto ch = parse_channel(name);
        REQUIRE(ch.has_value());
        CHECK(channel_name(*ch) == name);
    }
    CHECK(!parse_channel("gamma").has_value());
    CHECK(!parse_channel("gamma0").has_value());
    CHECK(!parse_channel("gammaX").has_value());
    CHECK(!parse_channel("mu").has_value());
}

TEST_CASE("random streams are deterministic and well distributed") {
    RngStream a(42, 7), b(42, 7), c(42, 8), d(43, 7);
    double sum = 0.0;
    bool differs_id = false, differs_seed = false;
    for (int i = 0; i < 10000; ++i) {
        double u = a.uniform();
        CHECK(u == b.uniform());
        CHECK(u >= 0.0);
        CHECK(u < 1.0);
        if (u != c.uniform()) differs_id = true;
        if (u != d.uniform()) differs_seed = true;
        sum += u;
    }
    CHECK(differs_id);
    CHECK(differs_seed);
    CHECK(sum / 10000 == doctest::Approx(0.5).epsilon(0.03));
}

TEST_CASE("jump probabilities on simple states") {
    ModelParams p;
    const double dt = p.dt;

    StateBC2 ground;
    ground.c10g = 1.0;
    JumpProbabilities probs = jump_probabilities(ground, p, dt);
    CHECK(probs.p_gamma1 == 0.0);
    CHECK(probs.p_gamma2 == 0.0);
    // drive background photons leak even with the atom in the ground state
    CHECK(probs.p_kappa ==
          doctest::Approx(2.0 * p.Y * p.Y / p.kappa * dt).epsilon(1e-14));

    StateBC2 excited;
    excited.c10e = 1.0;
    probs = jump_probabilities(excited, p, dt);
    CHECK(probs.p_gamma1 == doctest::Approx(p.gamma * dt).epsilon(1e-14));
    CHECK(probs.p_gamma2 == 0.0);
    CHECK(probs.p_kappa ==
          doctest::Approx(2.0 * (p.Y * p.Y + p.g * p.g) / p.kappa * dt).epsilon(1e-14));

    // the interference cross term between drive and dipole
    StateBC2 mixed;
    mixed.c10g = std::sqrt(0.5);
    mixed.c10e = std::sqrt(0.5);
    probs = jump_probabilities(mixed, p, dt);
    double i_kappa = p.Y * p.Y / p.kappa + p.Y * p.g / p.kappa + 0.5 * p.g * p.g / p.kappa;
    CHECK(probs.p_kappa == doctest::Approx(2.0 * i_kappa * dt).epsilon(1e-12));
}

TEST_CASE("jump selection partitions the unit interval") {
    // dyadic values keep the partition boundaries exact
    JumpProbabilities probs{0.125, 0.25, 0.25};
    CHECK(select_jump(probs, 0.0) == gamma_channel(1));
    CHECK(select_jump(probs, 0.124) == gamma_channel(1));
    CHECK(select_jump(probs, 0.125) == gamma_channel(2));
    CHECK(select_jump(probs, 0.374) == gamma_channel(2));
    CHECK(select_jump(probs, 0.375) == kappa_channel());
    CHECK(select_jump(probs, 0.624) == kappa_channel());
    CHECK(!select_jump(probs, 0.625).has_value());
    CHECK(!select_jump(probs, 0.99).has_value());
    CHECK_THROWS_AS(select_jump({0.5, 0.5, 0.1}, 0.2), std::runtime_error);
}

TEST_CASE("collapse operators") {
    ModelParams p;
    StateBC2 s;
    s.c10g = 0.6;
    s.c01g = cplx{0, 0.3};
    s.c10e = 0.5;
    s.c01e = cplx{0.2, 0.2};

    SUBCASE("site emission lands in that site's ground state") {
        StateBC2 r = apply_collapse(gamma_channel(1), s, p);
        CHECK(r.c10g == s.c10e);
        CHECK(r.c01g == cplx{0, 0});
        CHECK(r.c10e == cplx{0, 0});
        CHECK(r.c01e == cplx{0, 0});
        r = apply_collapse(gamma_channel(2), s, p);
        CHECK(r.c01g == s.c01e);
        CHECK(r.c10g == cplx{0, 0});
    }

    SUBCASE("cavity emission mixes drive and dipole parts") {
        StateBC2 r = apply_collapse(kappa_channel(), s, p);
        double yk = p.Y / p.kappa, gk = p.g / p.kappa;
        CHECK(std::abs(r.c10g - (yk * s.c10g + gk * s.c10e)) < 1e-15);
        CHECK(std::abs(r.c01g - (yk * s.c01g + gk * s.c01e)) < 1e-15);
        CHECK(std::abs(r.c10e - yk * s.c10e) < 1e-15);
        CHECK(std::abs(r.c01e - yk * s.c01e) < 1e-15);
    }

    SUBCASE("emission from a dark channel is an error") {
        StateBC2 dark;
        dark.c10g = 1.0;
        CHECK_THROWS_AS(apply_collapse(gamma_channel(1), dark, p),
                        std::runtime_error);
    }
}

TEST_CASE("renormalization") {
    StateBC2 s;
    s.c10g = cplx{0.3, 0.4};  // norm 0.5
    s.c01e = cplx{0, 0.5};
    double prior = renormalize(s);
    CHECK(prior == doctest::Approx(std::sqrt(0.5)).epsilon(1e-14));
    CHECK(s.norm2() == doctest::Approx(1.0).epsilon(1e-14));
    StateBC2 zero;
    CHECK_THROWS_AS(renormalize(zero), std::runtime_error);
}

TEST_CASE("expectation values") {
    ModelParams p;
    StateBC2 s;
    s.c10e = 1.0;
    Expectations e = expectations(s, p);
    CHECK(e.e_site1 == 1.0);
    CHECK(e.e_total == 1.0);
    CHECK(e.i_kappa ==
          doctest::Approx(p.Y * p.Y / p.kappa + p.g * p.g / p.kappa).epsilon(1e-14));
}

TEST_CASE("backend names") {
    CHECK(parse_backend("rk4") == Backend::rk4);
    CHECK(parse_backend("analytic") == Backend::analytic);
    CHECK(backend_name(Backend::rk4) == "rk4");
    CHECK(backend_name(Backend::analytic) == "analytic");
    CHECK_THROWS_AS(parse_backend("euler"), std::invalid_argument);
}

TEST_CASE("trajectories are deterministic and well formed") {
    ModelParams p;
    p.n_steps = 400000;
    p.dt = 5e-3;
    for (Backend backend : {Backend::rk4, Backend::analytic}) {
        CAPTURE(backend_name(backend));
        auto a = run_trajectory(p, backend, 0);
        auto b = run_trajectory(p, backend, 0);
        REQUIRE(a.size() == b.size());
        for (std::size_t i = 0; i < a.size(); ++i) {
            CHECK(a[i].time == b[i].time);
            CHECK(a[i].channel == b[i].channel);
        }
        CHECK(!a.empty());
        double prev = 0.0;
        for (const auto& r : a) {
            CHECK(r.trajectory_id == 0);
            CHECK(r.time > prev);
            CHECK(r.time <= p.n_steps * p.dt + 1e-9);
            // jump times sit on the step grid
            double steps = r.time / p.dt;
            CHECK(std::abs(steps - std::round(steps)) < 1e-6);
            prev = r.time;
        }
        // a different id gives a different jump history
        auto other = run_trajectory(p, backend, 1);
        bool same = other.size() == a.size();
        for (std::size_t i = 0; same && i < a.size(); ++i) {
            same = a[i].time == other[i].time;
        }
        CHECK(!same);
    }
}

TEST_CASE("serial and parallel ensembles agree exactly") {
    ModelParams p;
    p.n_steps = 100000;
    p.dt = 5e-3;
    auto serial = run_ensemble_serial(p, Backend::rk4, 6);
    auto parallel = run_ensemble_parallel(p, Backend::rk4, 6);
    REQUIRE(serial.size() == parallel.size());
    for (std::size_t i = 0; i < serial.size(); ++i) {
        CHECK(serial[i].trajectory_id == parallel[i].trajectory_id);
        CHECK(serial[i].time == parallel[i].time);
        CHECK(serial[i].channel == parallel[i].channel);
    }
    // merged in id order
    for (std::size_t i = 1; i < serial.size(); ++i) {
        CHECK(serial[i - 1].trajectory_id <= serial[i].trajectory_id);
    }
}
