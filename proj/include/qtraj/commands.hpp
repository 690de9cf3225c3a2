#pragma once

#include <ostream>
#include <string>
#include <vector>

#include "qtraj/config.hpp"
#include "qtraj/correlations.hpp"
#include "qtraj/io.hpp"

namespace qtraj {

/// Worker cap from QTRAJ_THREADS, or 0 when unset / not a positive integer.
int configured_threads();

/// Runs the trajectory ensemble (ids 0..n-1), writes the record CSV to
/// cfg.out (stdout when empty), and prints a per-channel jump summary to
/// `log`. Returns the records.
std::vector<JumpRecord> cmd_simulate(const RunConfig& cfg, std::ostream& log);

/// Reads a record file, builds the g2 histogram per cfg (kind, bins,
/// tau_max, lookahead, optional steady-state rescale), writes histogram CSV
/// to cfg.out (stdout when empty). Returns the histogram.
G2Histogram cmd_g2(const std::string& record_path, const RunConfig& cfg);

/// Emits `tau,value` rows for one closed-form curve on a uniform grid over
/// [0, tau_max]. Curves: g2_f_11, g2_f_12, g2_f_21, g2_f_22, g2_gamma,
/// g2_kappa. Unknown names raise std::invalid_argument.
void cmd_theory(const RunConfig& cfg, const std::string& curve, int n_points,
                std::ostream& os);

/// Prints basis-size diagnostics and the occupancy enumeration as CSV.
void cmd_statespace(int n_atoms, int n_sites, std::ostream& os);

/// Merges record files with disjoint trajectory ids into one sorted file.
void cmd_merge(const std::vector<std::string>& inputs, const std::string& out);

}  // namespace qtraj
