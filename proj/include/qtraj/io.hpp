#pragma once

#include <map>
#include <ostream>
#include <string>
#include <vector>

#include "qtraj/correlations.hpp"
#include "qtraj/trajectory.hpp"

namespace qtraj {

/// Record CSV: header `trajectory_id,channel,time`, channel names gamma1,
/// gamma2, kappa; times printed with 9 significant digits.
void write_records(std::ostream& os, const std::vector<JumpRecord>& records);
void write_records_file(const std::string& path,
                        const std::vector<JumpRecord>& records);

/// Parses a record CSV. Malformed rows raise std::runtime_error with the
/// 1-based row number.
std::vector<JumpRecord> read_records(std::istream& is,
                                     const std::string& source = "<stream>");
std::vector<JumpRecord> read_records_file(const std::string& path);

/// Histogram CSV: `# key=value` metadata lines, then a
/// `tau_center,raw_count,g2` row per bin.
void write_histogram(std::ostream& os, const G2Histogram& h,
                     const std::map<std::string, std::string>& extra_meta = {});
void write_histogram_file(const std::string& path, const G2Histogram& h,
                          const std::map<std::string, std::string>& extra_meta = {});

/// Stable merge sorted by (trajectory_id, time). Throws std::runtime_error
/// when two inputs share a trajectory id.
std::vector<JumpRecord> merge_records(
    const std::vector<std::vector<JumpRecord>>& inputs);

}  // namespace qtraj
