#pragma once

#include <cstdint>
#include <vector>

namespace qtraj {

using OccupancyConfig = std::vector<int>;  // (n_1, ..., n_L), sum = N

enum class SpaceMode { full, bad_cavity };

struct StateSpaceSpec {
    int n_atoms;
    int n_sites;
    SpaceMode mode;
};

/// Number of Bose-Hubbard configurations, (N+L-1)! / (N!(L-1)!).
/// Throws std::overflow_error if the count does not fit in 64 bits.
std::uint64_t bose_hubbard_count(int n_atoms, int n_sites);

/// Total basis size: the Bose-Hubbard count times the trajectory-state
/// multiplier (5 for one atom, 6 otherwise) in full mode, or (e_max + 1)
/// in bad-cavity mode with e_max = 1 for one atom and 2 otherwise.
std::uint64_t total_states(const StateSpaceSpec& spec);

/// Bad-cavity count for an explicit excitation cutoff; exposed so the
/// two readings of the multi-atom bad-cavity size can both be reported.
std::uint64_t bad_cavity_count(int n_atoms, int n_sites, int e_max);

/// Maximum excitation used by total_states in bad-cavity mode.
int bad_cavity_e_max(int n_atoms);

/// All occupancy vectors in lexicographically descending order;
/// index order is the stable one used throughout.
std::vector<OccupancyConfig> enumerate_configs(int n_atoms, int n_sites);

/// Flat index for the three-site, two-atom system: excitation sectors
/// (ground 0..5, first excited 6..17, second excited 18..35), photon
/// number descending within a sector, then config order. Bijective on 0..35.
int appendix_index(int n_photons, const OccupancyConfig& config, int n_excited);

struct AppendixState {
    int n_photons;
    OccupancyConfig config;
    int n_excited;
};

/// Inverse of appendix_index.
AppendixState appendix_unindex(int index);

}  // namespace qtraj
