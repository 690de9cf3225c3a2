#include "qtraj/commands.hpp"

#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <functional>
#include <iostream>
#include <map>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "qtraj/statespace.hpp"
#include "qtraj/theory.hpp"

namespace qtraj {

int configured_threads() {
    const char* env = std::getenv("QTRAJ_THREADS");
    if (!env) return 0;
    char* end = nullptr;
    long n = std::strtol(env, &end, 10);
    if (end == env || *end != '\0' || n < 1) return 0;
    return static_cast<int>(n);
}

namespace {

std::string fmt(double v) {
    char buf[32];
    std::snprintf(buf, sizeof(buf), "%.9g", v);
    return buf;
}

void write_to_out(const std::string& out,
                  const std::function<void(std::ostream&)>& writer) {
    if (out.empty()) {
        writer(std::cout);
        return;
    }
    std::ofstream os(out);
    if (!os) throw std::runtime_error("cannot open for writing: " + out);
    writer(os);
    if (!os) throw std::runtime_error("write failed: " + out);
}

}  // namespace

std::vector<JumpRecord> cmd_simulate(const RunConfig& cfg, std::ostream& log) {
    for (const auto& v : validate_params(cfg.model)) {
        if (v.severity == Violation::Severity::error) {
            throw std::invalid_argument("invalid " + v.field + ": " + v.message);
        }
        log << "# warning: " << v.field << ": " << v.message << '\n';
    }
    if (cfg.n_trajectories < 1) {
        throw std::invalid_argument("trajectories must be >= 1");
    }
#ifdef _OPENMP
    if (int n = configured_threads(); n > 0) omp_set_num_threads(n);
#endif
    std::vector<JumpRecord> records =
        run_ensemble_parallel(cfg.model, cfg.backend, cfg.n_trajectories);

    write_to_out(cfg.out, [&](std::ostream& os) { write_records(os, records); });

    std::map<std::string, std::size_t> per_channel;
    for (const auto& r : records) ++per_channel[channel_name(r.channel)];
    log << "trajectories=" << cfg.n_trajectories
        << " steps=" << cfg.model.n_steps << " total_jumps=" << records.size()
        << '\n';
    for (const auto& [name, count] : per_channel) {
        log << "  " << name << "=" << count << '\n';
    }
    return records;
}

G2Histogram cmd_g2(const std::string& record_path, const RunConfig& cfg) {
    const std::vector<JumpRecord> records = read_records_file(record_path);
    const CorrelationKind kind = correlation_kind(cfg.kind);
    const std::vector<double> taus = collect_taus(
        records, kind, cfg.lookahead, cfg.tau_max, cfg.model.gamma);
    G2Histogram h = build_histogram(taus, cfg.n_bins, cfg.tau_max);
    h.kind = cfg.kind;
    h.lookahead = cfg.lookahead;
    if (cfg.steady_norm) h = steady_state_rescale(h);
    write_to_out(cfg.out, [&](std::ostream& os) { write_histogram(os, h); });
    return h;
}

void cmd_theory(const RunConfig& cfg, const std::string& curve, int n_points,
                std::ostream& os) {
    if (n_points < 2) throw std::invalid_argument("theory grid needs >= 2 points");
    const ModelParams& p = cfg.model;
    std::function<double(double)> f;
    if (curve == "g2_f_11") f = [&](double t) { return theory::g2_f_site(1, 1, t, p); };
    else if (curve == "g2_f_12") f = [&](double t) { return theory::g2_f_site(1, 2, t, p); };
    else if (curve == "g2_f_21") f = [&](double t) { return theory::g2_f_site(2, 1, t, p); };
    else if (curve == "g2_f_22") f = [&](double t) { return theory::g2_f_site(2, 2, t, p); };
    else if (curve == "g2_gamma") f = [&](double t) { return theory::g2_gamma_any(t, p); };
    else if (curve == "g2_kappa") f = [&](double t) { return theory::g2_kappa(t, p); };
    else throw std::invalid_argument("unknown curve: " + curve);

    os << "tau,value\n";
    for (int i = 0; i < n_points; ++i) {
        const double tau = cfg.tau_max * i / (n_points - 1);
        os << fmt(tau) << ',' << fmt(f(tau)) << '\n';
    }
}

void cmd_statespace(int n_atoms, int n_sites, std::ostream& os) {
    StateSpaceSpec full{n_atoms, n_sites, SpaceMode::full};
    StateSpaceSpec bad{n_atoms, n_sites, SpaceMode::bad_cavity};
    os << "quantity,value\n";
    os << "bose_hubbard_count," << bose_hubbard_count(n_atoms, n_sites) << '\n';
    os << "total_states_full," << total_states(full) << '\n';
    os << "total_states_bad_cavity," << total_states(bad) << '\n';
    // both readings of the multi-atom excitation cutoff
    os << "bad_cavity_emax1," << bad_cavity_count(n_atoms, n_sites, 1) << '\n';
    os << "bad_cavity_emax2," << bad_cavity_count(n_atoms, n_sites, 2) << '\n';
    os << "config\n";
    for (const auto& cfg : enumerate_configs(n_atoms, n_sites)) {
        for (std::size_t i = 0; i < cfg.size(); ++i) {
            os << (i ? "|" : "") << cfg[i];
        }
        os << '\n';
    }
}

void cmd_merge(const std::vector<std::string>& inputs, const std::string& out) {
    std::vector<std::vector<JumpRecord>> shards;
    shards.reserve(inputs.size());
    for (const auto& path : inputs) shards.push_back(read_records_file(path));
    const std::vector<JumpRecord> merged = merge_records(shards);
    write_to_out(out, [&](std::ostream& os) { write_records(os, merged); });
}

}  // namespace qtraj
