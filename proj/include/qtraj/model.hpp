#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace qtraj {

/// Physical rates of the driven two-level-atom / lossy-cavity model.
/// All rates are in units of gamma; time in units 1/gamma (hbar = 1).
struct ModelParams {
    double g = 3.16227766016837933;  // atom-cavity coupling (sqrt(10))
    double kappa = 10.0;             // cavity field decay
    double gamma = 1.0;              // spontaneous emission, sets the time unit
    double Y = 0.4;                  // drive amplitude
    double J = 1.0;                  // tunneling rate
    double U = 0.0;                  // on-site interaction
    double dt = 1e-3;                // integration step
    long long n_steps = 1000000;     // steps per trajectory
    std::uint64_t seed = 1;          // RNG seed
    int n_sites = 2;
    int n_atoms = 1;
};

/// Bad-cavity quantities derived from ModelParams.
struct DerivedParams {
    double C;      // cooperativity g^2/(kappa*gamma)
    double Gamma;  // effective excited-state decay (gamma/2)(1+2C)
    double Ycal;   // effective drive g*Y/kappa
};

struct Violation {
    enum class Severity { error, warning };
    Severity severity;
    std::string field;
    std::string message;
};

/// Empty iff all parameter invariants hold. A bad-cavity regime breach
/// (kappa not dominating g, gamma, Y, J) is reported as a warning.
std::vector<Violation> validate_params(const ModelParams& p);

/// Throws std::invalid_argument naming the offending field on error-class
/// violations; warnings do not block.
DerivedParams derive_params(const ModelParams& p);

}  // namespace qtraj
