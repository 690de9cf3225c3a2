#include "qtraj/theory.hpp"

#include <cmath>
#include <stdexcept>

namespace qtraj::theory {

double g2_f_site(int start_site, int stop_site, double tau,
                 const ModelParams& p) {
    if (tau < 0) throw std::invalid_argument("g2_f_site: tau < 0");
    if ((start_site != 1 && start_site != 2) ||
        (stop_site != 1 && stop_site != 2)) {
        throw std::invalid_argument("g2_f_site: sites are 1 or 2");
    }
    const DerivedParams d = derive_params(p);
    const double env = std::expm1(-d.Gamma * tau);
    // stopping at site 1 gives cos^2(J tau), at site 2 sin^2(J tau),
    // independent of the start site
    const double trig =
        stop_site == 1 ? std::cos(p.J * tau) : std::sin(p.J * tau);
    return 2.0 * env * env * trig * trig;
}

double g2_gamma_any(double tau, const ModelParams& p) {
    if (tau < 0) throw std::invalid_argument("g2_gamma_any: tau < 0");
    const DerivedParams d = derive_params(p);
    const double env = std::expm1(-d.Gamma * tau);
    return env * env;
}

double g2_kappa(double tau, const ModelParams& p) {
    if (tau < 0) throw std::invalid_argument("g2_kappa: tau < 0");
    const DerivedParams d = derive_params(p);
    const double v =
        1.0 - 4.0 * d.C * d.C * std::exp(-0.5 * p.gamma * (1.0 + 2.0 * d.C) * tau);
    return v * v;
}

std::pair<double, double> light_shift_energy(const LightShiftParams& lp) {
    if (lp.Delta == 0.0) {
        throw std::invalid_argument(
            "light_shift_energy: Delta = 0 breaks the dispersive approximation");
    }
    const double e = 0.5 * lp.Delta + lp.Omega0 * lp.Omega0 / (4.0 * lp.Delta);
    return {e, -e};
}

double lattice_potential(double z, const LightShiftParams& lp) {
    const double s = std::sin(lp.k * z);
    return lp.V0 * s * s;
}

}  // namespace qtraj::theory
