#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "qtraj/dynamics.hpp"
#include "qtraj/model.hpp"

namespace qtraj {

/// Emission channel: spontaneous emission from a lattice site, or a photon
/// out the cavity mirror.
struct ChannelId {
    enum class Kind : std::uint8_t { gamma, kappa };
    Kind kind = Kind::kappa;
    int site = 0;  // 1-based for gamma channels, 0 for kappa

    friend bool operator==(const ChannelId&, const ChannelId&) = default;
};

inline ChannelId gamma_channel(int site) { return {ChannelId::Kind::gamma, site}; }
inline ChannelId kappa_channel() { return {ChannelId::Kind::kappa, 0}; }

std::string channel_name(const ChannelId& ch);                 // gamma1|gamma2|...|kappa
std::optional<ChannelId> parse_channel(const std::string& s);

struct JumpRecord {
    std::int64_t trajectory_id;
    double time;  // units 1/gamma, clock starts at 0 per trajectory
    ChannelId channel;
};

/// Counter-based uniform stream (splitmix64). Distinct (seed, id) pairs give
/// independent streams; drawing is a pure function of the counter.
class RngStream {
public:
    RngStream(std::uint64_t seed, std::uint64_t trajectory_id);
    double uniform();  // in [0, 1)

private:
    std::uint64_t state_;
};

struct JumpProbabilities {
    double p_gamma1;
    double p_gamma2;
    double p_kappa;
    double total() const { return p_gamma1 + p_gamma2 + p_kappa; }
};

/// Per-step jump probabilities for a normalized state.
JumpProbabilities jump_probabilities(const StateBC2& s, const ModelParams& p,
                                     double dt);

/// Partition [0, p1), [p1, p1+p2), [p1+p2, sum) of the unit interval;
/// u past the sum selects no jump. Throws if the probabilities sum to >= 1.
std::optional<ChannelId> select_jump(const JumpProbabilities& probs, double u);

/// Collapse operator application; result is unnormalized.
/// Throws std::runtime_error when the collapsed state has zero norm.
StateBC2 apply_collapse(const ChannelId& ch, const StateBC2& s,
                        const ModelParams& p);

/// Scales s to unit norm and returns the pre-normalization norm.
/// Throws std::runtime_error on a zero vector.
double renormalize(StateBC2& s);

struct Expectations {
    double e_site1;   // <sigma+_1 sigma-_1>
    double e_total;   // <sigma+ sigma->
    double i_kappa;   // <a^dag a>; P_kappa = 2 * i_kappa * dt
};

Expectations expectations(const StateBC2& s, const ModelParams& p);

enum class Backend { analytic, rk4 };

Backend parse_backend(const std::string& name);
std::string backend_name(Backend b);

/// One stochastic trajectory from |10g>. Deterministic in (p.seed, id).
std::vector<JumpRecord> run_trajectory(const ModelParams& p, Backend backend,
                                       std::int64_t trajectory_id);

/// n_trajectories independent trajectories with ids first_id..first_id+n-1,
/// merged in id order. The parallel path distributes trajectories over
/// OpenMP workers and produces output identical to the serial path.
std::vector<JumpRecord> run_ensemble_serial(const ModelParams& p, Backend backend,
                                            int n_trajectories,
                                            std::int64_t first_id = 0);
std::vector<JumpRecord> run_ensemble_parallel(const ModelParams& p, Backend backend,
                                              int n_trajectories,
                                              std::int64_t first_id = 0);

}  // namespace qtraj
