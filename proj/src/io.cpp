#include "qtraj/io.hpp"

#include <algorithm>
#include <cstdio>
#include <fstream>
#include <set>
#include <sstream>
#include <stdexcept>

namespace qtraj {

namespace {

constexpr const char* kRecordHeader = "trajectory_id,channel,time";

std::string format_time(double t) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", t);
    return buf;
}

[[noreturn]] void row_error(const std::string& source, int row,
                            const std::string& what) {
    throw std::runtime_error(source + " row " + std::to_string(row) + ": " +
                             what);
}

}  // namespace

void write_records(std::ostream& os, const std::vector<JumpRecord>& records) {
    os << kRecordHeader << '\n';
    for (const auto& r : records) {
        os << r.trajectory_id << ',' << channel_name(r.channel) << ','
           << format_time(r.time) << '\n';
    }
}

void write_records_file(const std::string& path,
                        const std::vector<JumpRecord>& records) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_records(os, records);
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::vector<JumpRecord> read_records(std::istream& is,
                                     const std::string& source) {
    std::vector<JumpRecord> out;
    std::string line;
    int row = 0;
    bool saw_header = false;
    while (std::getline(is, line)) {
        ++row;
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (!saw_header) {
            if (line != kRecordHeader) {
                row_error(source, row, "expected header '" +
                                           std::string(kRecordHeader) + "'");
            }
            saw_header = true;
            continue;
        }
        const auto c1 = line.find(',');
        const auto c2 = c1 == std::string::npos ? c1 : line.find(',', c1 + 1);
        if (c2 == std::string::npos || line.find(',', c2 + 1) != std::string::npos) {
            row_error(source, row, "expected 3 fields");
        }
        JumpRecord r;
        try {
            std::size_t pos = 0;
            r.trajectory_id = std::stoll(line.substr(0, c1), &pos);
            if (pos != c1) throw std::invalid_argument("");
        } catch (const std::exception&) {
            row_error(source, row, "bad trajectory_id");
        }
        const std::string ch = line.substr(c1 + 1, c2 - c1 - 1);
        const auto channel = parse_channel(ch);
        if (!channel) row_error(source, row, "unknown channel '" + ch + "'");
        r.channel = *channel;
        const std::string ts = line.substr(c2 + 1);
        try {
            std::size_t pos = 0;
            r.time = std::stod(ts, &pos);
            if (pos != ts.size()) throw std::invalid_argument("");
        } catch (const std::exception&) {
            row_error(source, row, "bad time '" + ts + "'");
        }
        out.push_back(r);
    }
    if (!saw_header && row > 0) row_error(source, 1, "missing header");
    return out;
}

std::vector<JumpRecord> read_records_file(const std::string& path) {
    std::ifstream is(path);
    if (!is) throw std::runtime_error("cannot open: " + path);
    return read_records(is, path);
}

void write_histogram(std::ostream& os, const G2Histogram& h,
                     const std::map<std::string, std::string>& extra_meta) {
    os << "# kind=" << h.kind << '\n';
    os << "# lookahead=" << h.lookahead << '\n';
    os << "# normalization=" << h.normalization << '\n';
    os << "# n_tau=" << h.n_tau << '\n';
    os << "# tau_max=" << format_time(h.tau_max) << '\n';
    os << "# n_bins=" << h.n_bins << '\n';
    for (const auto& [k, v] : extra_meta) os << "# " << k << '=' << v << '\n';
    os << "tau_center,raw_count,g2\n";
    for (int i = 0; i < h.n_bins; ++i) {
        os << format_time(h.bin_center(i)) << ',' << h.raw[i] << ','
           << format_time(h.g2[i]) << '\n';
    }
}

void write_histogram_file(const std::string& path, const G2Histogram& h,
                          const std::map<std::string, std::string>& extra_meta) {
    std::ofstream os(path);
    if (!os) throw std::runtime_error("cannot open for writing: " + path);
    write_histogram(os, h, extra_meta);
    if (!os) throw std::runtime_error("write failed: " + path);
}

std::vector<JumpRecord> merge_records(
    const std::vector<std::vector<JumpRecord>>& inputs) {
    std::set<std::int64_t> seen;
    std::vector<JumpRecord> out;
    for (const auto& in : inputs) {
        std::set<std::int64_t> ids;
        for (const auto& r : in) ids.insert(r.trajectory_id);
        for (std::int64_t id : ids) {
            if (!seen.insert(id).second) {
                throw std::runtime_error("merge_records: trajectory id " +
                                         std::to_string(id) +
                                         " appears in more than one input");
            }
        }
        out.insert(out.end(), in.begin(), in.end());
    }
    std::stable_sort(out.begin(), out.end(),
                     [](const JumpRecord& a, const JumpRecord& b) {
                         if (a.trajectory_id != b.trajectory_id) {
                             return a.trajectory_id < b.trajectory_id;
                         }
                         return a.time < b.time;
                     });
    return out;
}

}  // namespace qtraj
