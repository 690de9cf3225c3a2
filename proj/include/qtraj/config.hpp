#pragma once

#include <string>

#include "qtraj/model.hpp"
#include "qtraj/trajectory.hpp"

namespace qtraj {

/// Full run description: physics parameters plus orchestration settings.
struct RunConfig {
    ModelParams model;
    Backend backend = Backend::rk4;
    int n_trajectories = 1;
    std::string kind = "g1g1";
    int n_bins = 100;
    double tau_max = 10.0;
    int lookahead = 4;
    bool steady_norm = false;
    bool corrections = false;  // symmetry fixes in the 36-amplitude evaluator
    std::string out;
};

/// Line-oriented `key = value` text, `#` starts a comment. Unknown keys and
/// malformed lines raise std::invalid_argument naming the line number.
/// Missing keys keep the defaults above (g = sqrt(10), kappa = 10, gamma = 1,
/// Y = 0.4, J = 1, dt = 1e-3).
RunConfig parse_config(const std::string& text);

/// parse_config over a file's contents; errors mention the path.
RunConfig load_config(const std::string& path);

}  // namespace qtraj
