#include "qtraj/statespace.hpp"

#include <stdexcept>

namespace qtraj {

std::uint64_t bose_hubbard_count(int n_atoms, int n_sites) {
    if (n_atoms < 0 || n_sites < 1) {
        throw std::invalid_argument("bose_hubbard_count: need N >= 0, L >= 1");
    }
    // C(N+L-1, L-1), multiplicative form with exact division at each step
    std::uint64_t result = 1;
    for (int i = 1; i <= n_sites - 1; ++i) {
        std::uint64_t next;
        if (__builtin_mul_overflow(result, static_cast<std::uint64_t>(n_atoms + i),
                                   &next)) {
            throw std::overflow_error("bose_hubbard_count: 64-bit overflow");
        }
        result = next / static_cast<std::uint64_t>(i);
    }
    return result;
}

int bad_cavity_e_max(int n_atoms) { return n_atoms == 1 ? 1 : 2; }

std::uint64_t bad_cavity_count(int n_atoms, int n_sites, int e_max) {
    return static_cast<std::uint64_t>(e_max + 1) *
           bose_hubbard_count(n_atoms, n_sites);
}

std::uint64_t total_states(const StateSpaceSpec& spec) {
    std::uint64_t bh = bose_hubbard_count(spec.n_atoms, spec.n_sites);
    if (spec.mode == SpaceMode::bad_cavity) {
        if (spec.n_atoms == 0) return bh;
        return static_cast<std::uint64_t>(bad_cavity_e_max(spec.n_atoms) + 1) * bh;
    }
    std::uint64_t mult = spec.n_atoms == 0 ? 3 : (spec.n_atoms == 1 ? 5 : 6);
    std::uint64_t total;
    if (__builtin_mul_overflow(mult, bh, &total)) {
        throw std::overflow_error("total_states: 64-bit overflow");
    }
    return total;
}

namespace {

void enumerate_rec(int remaining, int sites_left, OccupancyConfig& partial,
                   std::vector<OccupancyConfig>& out) {
    if (sites_left == 1) {
        partial.push_back(remaining);
        out.push_back(partial);
        partial.pop_back();
        return;
    }
    for (int n = remaining; n >= 0; --n) {
        partial.push_back(n);
        enumerate_rec(remaining - n, sites_left - 1, partial, out);
        partial.pop_back();
    }
}

}  // namespace

std::vector<OccupancyConfig> enumerate_configs(int n_atoms, int n_sites) {
    if (n_atoms < 0 || n_sites < 1) {
        throw std::invalid_argument("enumerate_configs: need N >= 0, L >= 1");
    }
    std::vector<OccupancyConfig> out;
    OccupancyConfig partial;
    enumerate_rec(n_atoms, n_sites, partial, out);
    return out;
}

namespace {

int config_index_23(const OccupancyConfig& config) {
    static const std::vector<OccupancyConfig> configs = enumerate_configs(2, 3);
    for (std::size_t i = 0; i < configs.size(); ++i) {
        if (configs[i] == config) return static_cast<int>(i);
    }
    throw std::out_of_range("appendix_index: config not in enumerate_configs(2,3)");
}

}  // namespace

int appendix_index(int n_photons, const OccupancyConfig& config, int n_excited) {
    if (n_photons < 0 || n_excited < 0 || n_photons + n_excited > 2) {
        throw std::out_of_range("appendix_index: excitation out of range");
    }
    int ci = config_index_23(config);
    int e = n_photons + n_excited;
    // sector offsets 0, 6, 18; photon number descending within a sector
    int sector_offset = e == 0 ? 0 : (e == 1 ? 6 : 18);
    int block = e - n_photons;  // 0 for the highest photon count
    return sector_offset + 6 * block + ci;
}

AppendixState appendix_unindex(int index) {
    if (index < 0 || index >= 36) {
        throw std::out_of_range("appendix_unindex: index out of 0..35");
    }
    static const std::vector<OccupancyConfig> configs = enumerate_configs(2, 3);
    int e, within;
    if (index < 6) {
        e = 0;
        within = index;
    } else if (index < 18) {
        e = 1;
        within = index - 6;
    } else {
        e = 2;
        within = index - 18;
    }
    int block = within / 6;
    int ci = within % 6;
    return AppendixState{e - block, configs[ci], block};
}

}  // namespace qtraj
