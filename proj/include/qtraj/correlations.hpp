#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtraj/trajectory.hpp"

namespace qtraj {

/// Start/stop channel selection for a g2 histogram.
struct CorrelationKind {
    std::string name;
    std::vector<ChannelId> start_channels;
    std::vector<ChannelId> stop_channels;

    bool is_start(const ChannelId& ch) const;
    bool is_stop(const ChannelId& ch) const;
};

/// Named kinds: g1g1, g1g2, g2g1, g2g2, gany, kk.
CorrelationKind correlation_kind(const std::string& name);

struct G2Histogram {
    double tau_max = 10.0;
    int n_bins = 100;
    std::string kind;
    int lookahead = 4;
    std::string normalization;  // "ratio" or "steady_state"
    std::uint64_t n_tau = 0;    // in-range tau samples
    std::vector<std::uint64_t> raw;
    std::vector<double> g2;

    double bin_width() const { return tau_max / n_bins; }
    double bin_center(int i) const { return (i + 0.5) * bin_width(); }
};

/// Delays tau = gamma*(t_stop - t_start) between each start-channel event and
/// its next `lookahead` stop-channel events in the same trajectory.
/// Records must be time-ordered within each trajectory.
std::vector<double> collect_taus(const std::vector<JumpRecord>& records,
                                 const CorrelationKind& kind, int lookahead = 4,
                                 double tau_max = 10.0, double gamma = 1.0);

/// Uniform bins over [0, tau_max]; g2 = count / (n_tau / n_bins).
G2Histogram build_histogram(const std::vector<double>& taus, int n_bins = 100,
                            double tau_max = 10.0);

/// Divides by the mean raw count over bins with center beyond tau_min,
/// so the long-delay plateau sits at 1. Throws when no bins lie past tau_min.
G2Histogram steady_state_rescale(const G2Histogram& h, double tau_min = 2.0);

struct PeriodEstimate {
    bool found = false;   // false: no significant oscillation
    double period = 0.0;  // in units of tau
};

/// Dominant oscillation period of the normalized values, from the discrete
/// Fourier peak with local refinement. Requires at least two full periods
/// inside [0, tau_max] to report a result.
PeriodEstimate extract_period(const G2Histogram& h);

}  // namespace qtraj
