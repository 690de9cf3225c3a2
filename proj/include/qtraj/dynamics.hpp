#pragma once

#include <array>
#include <complex>

#include "qtraj/model.hpp"

namespace qtraj {

using cplx = std::complex<double>;

/// Amplitudes of the bad-cavity two-site model: atom in site 1/2,
/// internal state ground/excited.
struct StateBC2 {
    cplx c10g{}, c01g{}, c10e{}, c01e{};

    double norm2() const {
        return std::norm(c10g) + std::norm(c01g) + std::norm(c10e) + std::norm(c01e);
    }

    friend StateBC2 operator+(const StateBC2& a, const StateBC2& b) {
        return {a.c10g + b.c10g, a.c01g + b.c01g, a.c10e + b.c10e, a.c01e + b.c01e};
    }
    friend StateBC2 operator*(double s, const StateBC2& a) {
        return {s * a.c10g, s * a.c01g, s * a.c10e, s * a.c01e};
    }
};

/// Sum/difference site combinations that decouple the tunneling dynamics.
struct SymmetricState {
    cplx dpg{}, dmg{}, dpe{}, dme{};
};

/// Weak-field single-mode amplitudes C_nm, n photons and m excited atoms,
/// truncated at two excitations.
struct StateWF6 {
    std::array<cplx, 6> c{};  // order: C00, C10, C01, C20, C11, C02

    friend StateWF6 operator+(const StateWF6& a, const StateWF6& b) {
        StateWF6 r;
        for (int i = 0; i < 6; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend StateWF6 operator*(double s, const StateWF6& a) {
        StateWF6 r;
        for (int i = 0; i < 6; ++i) r.c[i] = s * a.c[i];
        return r;
    }
};

/// Three-site, two-atom amplitudes, flat-indexed by appendix_index.
struct StateA36 {
    std::array<cplx, 36> c{};

    friend StateA36 operator+(const StateA36& a, const StateA36& b) {
        StateA36 r;
        for (int i = 0; i < 36; ++i) r.c[i] = a.c[i] + b.c[i];
        return r;
    }
    friend StateA36 operator*(double s, const StateA36& a) {
        StateA36 r;
        for (int i = 0; i < 36; ++i) r.c[i] = s * a.c[i];
        return r;
    }
};

/// Time derivative of the bad-cavity two-site amplitudes (full equations,
/// drive terms kept in the ground rows).
StateBC2 deriv_bc2(const StateBC2& s, const DerivedParams& d, double J);

/// Weak-field truncation: drive terms dropped from the ground rows.
/// This is the system the closed-form propagator solves exactly.
StateBC2 deriv_bc2_weak(const StateBC2& s, const DerivedParams& d, double J);

SymmetricState to_symmetric(const StateBC2& s);
StateBC2 from_symmetric(const SymmetricState& d);

/// Closed-form weak-field solution from an arbitrary initial state.
/// Throws std::invalid_argument for t < 0.
StateBC2 propagate_analytic(const StateBC2& s0, double t, const DerivedParams& d,
                            double J);

/// Weak-field single-mode amplitude rates for N atoms.
StateWF6 deriv_wf6(const StateWF6& s, const ModelParams& p, int n_atoms);

/// Three-site, two-atom amplitude rates, transcribed as printed
/// (hbar = 1 in the interaction terms). With `corrections` the
/// symmetry-restoring fixes are applied: the sqrt(2) on the 200-row
/// tunneling coupling and the second-excited coupling of the 110/011
/// rows reading the 2e (not 1e) amplitude.
StateA36 deriv_a36(const StateA36& s, const ModelParams& p,
                   bool corrections = false);

/// Classical fourth-order Runge-Kutta step. No renormalization.
template <typename State, typename Deriv>
State rk4_step(const Deriv& f, const State& s, double dt) {
    State k1 = f(s);
    State k2 = f(s + (0.5 * dt) * k1);
    State k3 = f(s + (0.5 * dt) * k2);
    State k4 = f(s + dt * k3);
    return s + (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
}

}  // namespace qtraj
