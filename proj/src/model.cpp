#include "qtraj/model.hpp"

#include <algorithm>
#include <stdexcept>

namespace qtraj {

std::vector<Violation> validate_params(const ModelParams& p) {
    std::vector<Violation> v;
    auto err = [&](const char* field, const char* msg) {
        v.push_back({Violation::Severity::error, field, msg});
    };
    if (p.g < 0) err("g", "coupling rate must be >= 0");
    if (p.kappa < 0) err("kappa", "cavity decay must be >= 0");
    if (p.gamma < 0) err("gamma", "spontaneous emission rate must be >= 0");
    if (!(p.dt > 0)) err("dt", "integration step must be > 0");
    if (p.n_steps < 0) err("n_steps", "step count must be >= 0");
    if (p.n_sites < 1) err("n_sites", "need at least one lattice site");
    if (p.n_atoms < 0) err("n_atoms", "atom count must be >= 0");

    double fast = std::max({p.g, p.gamma, p.Y, p.J});
    if (p.kappa < fast) {
        v.push_back({Violation::Severity::warning, "kappa",
                     "bad-cavity regime violated: kappa < max(g, gamma, Y, J)"});
    }
    return v;
}

DerivedParams derive_params(const ModelParams& p) {
    for (const auto& viol : validate_params(p)) {
        if (viol.severity == Violation::Severity::error) {
            throw std::invalid_argument("invalid parameter " + viol.field + ": " +
                                        viol.message);
        }
    }
    DerivedParams d{};
    if (p.g == 0) {
        d.C = 0.0;
        d.Ycal = 0.0;
    } else {
        if (p.kappa <= 0 || p.gamma <= 0) {
            throw std::invalid_argument(
                "invalid parameter kappa/gamma: must be > 0 when g > 0");
        }
        d.C = p.g * p.g / (p.kappa * p.gamma);
        d.Ycal = p.g * p.Y / p.kappa;
    }
    d.Gamma = 0.5 * p.gamma * (1.0 + 2.0 * d.C);
    return d;
}

}  // namespace qtraj
