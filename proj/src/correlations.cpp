#include "qtraj/correlations.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace qtraj {

bool CorrelationKind::is_start(const ChannelId& ch) const {
    return std::find(start_channels.begin(), start_channels.end(), ch) !=
           start_channels.end();
}

bool CorrelationKind::is_stop(const ChannelId& ch) const {
    return std::find(stop_channels.begin(), stop_channels.end(), ch) !=
           stop_channels.end();
}

CorrelationKind correlation_kind(const std::string& name) {
    const std::vector<ChannelId> g1{gamma_channel(1)};
    const std::vector<ChannelId> g2{gamma_channel(2)};
    const std::vector<ChannelId> any{gamma_channel(1), gamma_channel(2)};
    const std::vector<ChannelId> kk{kappa_channel()};
    if (name == "g1g1") return {name, g1, g1};
    if (name == "g1g2") return {name, g1, g2};
    if (name == "g2g1") return {name, g2, g1};
    if (name == "g2g2") return {name, g2, g2};
    if (name == "gany") return {name, any, any};
    if (name == "kk") return {name, kk, kk};
    throw std::invalid_argument("unknown correlation kind: " + name);
}

std::vector<double> collect_taus(const std::vector<JumpRecord>& records,
                                 const CorrelationKind& kind, int lookahead,
                                 double tau_max, double gamma) {
    std::vector<double> taus;
    const std::size_t n = records.size();
    for (std::size_t i = 0; i < n; ++i) {
        if (!kind.is_start(records[i].channel)) continue;
        int stops_seen = 0;
        for (std::size_t j = i + 1; j < n && stops_seen < lookahead; ++j) {
            if (records[j].trajectory_id != records[i].trajectory_id) break;
            if (!kind.is_stop(records[j].channel)) continue;
            ++stops_seen;
            const double tau = gamma * (records[j].time - records[i].time);
            if (tau <= tau_max) taus.push_back(tau);
        }
    }
    return taus;
}

G2Histogram build_histogram(const std::vector<double>& taus, int n_bins,
                            double tau_max) {
    if (n_bins < 1) throw std::invalid_argument("build_histogram: n_bins >= 1");
    if (!(tau_max > 0)) throw std::invalid_argument("build_histogram: tau_max > 0");
    G2Histogram h;
    h.tau_max = tau_max;
    h.n_bins = n_bins;
    h.normalization = "ratio";
    h.raw.assign(n_bins, 0);
    h.g2.assign(n_bins, 0.0);
    for (double tau : taus) {
        if (tau < 0 || tau > tau_max) continue;
        int bin = std::min(static_cast<int>(tau / h.bin_width()), n_bins - 1);
        ++h.raw[bin];
        ++h.n_tau;
    }
    if (h.n_tau > 0) {
        const double divisor = static_cast<double>(h.n_tau) / n_bins;
        for (int i = 0; i < n_bins; ++i) {
            h.g2[i] = static_cast<double>(h.raw[i]) / divisor;
        }
    }
    return h;
}

G2Histogram steady_state_rescale(const G2Histogram& h, double tau_min) {
    if (!(tau_min < h.tau_max)) {
        throw std::invalid_argument("steady_state_rescale: tau_min >= tau_max");
    }
    double sum = 0.0;
    int count = 0;
    for (int i = 0; i < h.n_bins; ++i) {
        if (h.bin_center(i) > tau_min) {
            sum += static_cast<double>(h.raw[i]);
            ++count;
        }
    }
    if (count == 0) {
        throw std::invalid_argument("steady_state_rescale: no bins beyond tau_min");
    }
    const double tail_mean = sum / count;
    G2Histogram out = h;
    out.normalization = "steady_state";
    if (tail_mean > 0) {
        for (int i = 0; i < h.n_bins; ++i) {
            out.g2[i] = static_cast<double>(h.raw[i]) / tail_mean;
        }
    }
    return out;
}

namespace {

// |DTFT| of x at fractional frequency index f (cycles over the full window)
double dtft_mag(const std::vector<double>& x, double f) {
    const double w = 2.0 * std::numbers::pi * f / static_cast<double>(x.size());
    double re = 0.0, im = 0.0;
    for (std::size_t m = 0; m < x.size(); ++m) {
        re += x[m] * std::cos(w * m);
        im -= x[m] * std::sin(w * m);
    }
    return std::hypot(re, im);
}

}  // namespace

PeriodEstimate extract_period(const G2Histogram& h) {
    const int n = h.n_bins;
    if (n < 8 || h.n_tau == 0) return {};
    double mean = 0.0;
    for (double v : h.g2) mean += v;
    mean /= n;
    std::vector<double> x(h.g2.size());
    for (int i = 0; i < n; ++i) x[i] = h.g2[i] - mean;

    const int k_max = n / 2;
    std::vector<double> mag(k_max + 1, 0.0);
    for (int k = 1; k <= k_max; ++k) mag[k] = dtft_mag(x, k);

    // dominant strict local maximum; k >= 2 enforces two full oscillations
    int k_peak = 0;
    for (int k = 2; k < k_max; ++k) {
        if (mag[k] > mag[k - 1] && mag[k] >= mag[k + 1] &&
            (k_peak == 0 || mag[k] > mag[k_peak])) {
            k_peak = k;
        }
    }
    if (k_peak == 0) return {};

    // significance against the rest of the spectrum
    double rest = 0.0;
    int rest_n = 0;
    for (int k = 1; k <= k_max; ++k) {
        if (std::abs(k - k_peak) <= 1) continue;
        rest += mag[k] * mag[k];
        ++rest_n;
    }
    if (rest_n > 0 && mag[k_peak] * mag[k_peak] < 10.0 * rest / rest_n) return {};

    // refine on a dense frequency grid around the coarse peak
    double best_f = k_peak, best_mag = mag[k_peak];
    for (int i = -200; i <= 200; ++i) {
        const double f = k_peak + i * 0.005;
        const double m = dtft_mag(x, f);
        if (m > best_mag) {
            best_mag = m;
            best_f = f;
        }
    }
    const double period = h.tau_max / best_f;
    if (period > h.tau_max / 2.0) return {};
    return {true, period};
}

}  // namespace qtraj
