#pragma once

#include <utility>

#include "qtraj/model.hpp"

namespace qtraj {

/// Closed-form reference curves for the two-site bad-cavity model, in the
/// normalized form (drive and decay prefactors divided out).
namespace theory {

/// Site-resolved fluorescence correlation.
/// start == stop from site 1 or cross from site 2 carry cos^2(J tau),
/// the other two carry sin^2(J tau); all share the 2(e^{-Gamma tau}-1)^2
/// envelope. Sites are 1 or 2.
double g2_f_site(int start_site, int stop_site, double tau,
                 const ModelParams& p);

/// Either-site fluorescence correlation, (e^{-Gamma tau}-1)^2.
double g2_gamma_any(double tau, const ModelParams& p);

/// Cavity transmission correlation, (1 - 4C^2 e^{-(gamma/2)(1+2C) tau})^2.
double g2_kappa(double tau, const ModelParams& p);

/// Dispersive light-shift parameters for a single lattice beam.
struct LightShiftParams {
    double Delta = 1.0;   // detuning omega - omega0, must be nonzero
    double Omega0 = 0.0;  // peak Rabi rate
    double k = 1.0;       // lattice wavenumber
    double V0 = 0.0;      // lattice depth
};

/// Dressed-level pair +-(Delta/2 + Omega^2/(4 Delta)), hbar = 1.
/// Throws std::invalid_argument when Delta == 0.
std::pair<double, double> light_shift_energy(const LightShiftParams& lp);

/// Standing-wave potential V0 sin^2(k z).
double lattice_potential(double z, const LightShiftParams& lp);

}  // namespace theory

}  // namespace qtraj
