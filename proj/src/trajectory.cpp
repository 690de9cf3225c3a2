#include "qtraj/trajectory.hpp"

#include <cmath>
#include <stdexcept>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace qtraj {

std::string channel_name(const ChannelId& ch) {
    if (ch.kind == ChannelId::Kind::kappa) return "kappa";
    return "gamma" + std::to_string(ch.site);
}

std::optional<ChannelId> parse_channel(const std::string& s) {
    if (s == "kappa") return kappa_channel();
    if (s.rfind("gamma", 0) == 0 && s.size() > 5) {
        int site = 0;
        for (std::size_t i = 5; i < s.size(); ++i) {
            if (s[i] < '0' || s[i] > '9') return std::nullopt;
            site = site * 10 + (s[i] - '0');
        }
        if (site >= 1) return gamma_channel(site);
    }
    return std::nullopt;
}

namespace {

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ull;

inline std::uint64_t mix64(std::uint64_t x) {
    x ^= x >> 30;
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= x >> 27;
    x *= 0x94D049BB133111EBull;
    x ^= x >> 31;
    return x;
}

}  // namespace

RngStream::RngStream(std::uint64_t seed, std::uint64_t trajectory_id)
    : state_(mix64(mix64(seed) ^ (kGolden * (trajectory_id + 1)))) {}

double RngStream::uniform() {
    state_ += kGolden;
    std::uint64_t x = mix64(state_);
    return static_cast<double>(x >> 11) * 0x1.0p-53;
}

JumpProbabilities jump_probabilities(const StateBC2& s, const ModelParams& p,
                                     double dt) {
    const double e1 = std::norm(s.c10e);
    const double e2 = std::norm(s.c01e);
    const double cross = (s.c10e.real() * s.c10g.real() + s.c10e.imag() * s.c10g.imag()) +
                         (s.c01e.real() * s.c01g.real() + s.c01e.imag() * s.c01g.imag());
    const double i_kappa = p.Y * p.Y / p.kappa +
                           (p.Y * p.g / p.kappa) * 2.0 * cross +
                           (p.g * p.g / p.kappa) * (e1 + e2);
    return {p.gamma * e1 * dt, p.gamma * e2 * dt, 2.0 * i_kappa * dt};
}

std::optional<ChannelId> select_jump(const JumpProbabilities& probs, double u) {
    const double sum = probs.total();
    if (sum >= 1.0) {
        throw std::runtime_error(
            "select_jump: total jump probability >= 1, reduce dt");
    }
    if (u < probs.p_gamma1) return gamma_channel(1);
    if (u < probs.p_gamma1 + probs.p_gamma2) return gamma_channel(2);
    if (u < sum) return kappa_channel();
    return std::nullopt;
}

StateBC2 apply_collapse(const ChannelId& ch, const StateBC2& s,
                        const ModelParams& p) {
    StateBC2 r;
    if (ch.kind == ChannelId::Kind::gamma) {
        if (ch.site == 1) {
            r.c10g = s.c10e;
        } else if (ch.site == 2) {
            r.c01g = s.c01e;
        } else {
            throw std::invalid_argument("apply_collapse: unknown gamma site");
        }
    } else {
        const double yk = p.Y / p.kappa;
        const double gk = p.g / p.kappa;
        r.c10g = yk * s.c10g + gk * s.c10e;
        r.c01g = yk * s.c01g + gk * s.c01e;
        r.c10e = yk * s.c10e;
        r.c01e = yk * s.c01e;
    }
    if (r.norm2() == 0.0) {
        throw std::runtime_error("apply_collapse: jump from a dark state (" +
                                 channel_name(ch) + ")");
    }
    return r;
}

double renormalize(StateBC2& s) {
    const double n2 = s.norm2();
    if (n2 <= 0.0) throw std::runtime_error("renormalize: zero state");
    const double norm = std::sqrt(n2);
    const double inv = 1.0 / norm;
    s.c10g *= inv;
    s.c01g *= inv;
    s.c10e *= inv;
    s.c01e *= inv;
    return norm;
}

Expectations expectations(const StateBC2& s, const ModelParams& p) {
    const double e1 = std::norm(s.c10e);
    const double e2 = std::norm(s.c01e);
    const double cross =
        (std::conj(s.c10e) * s.c10g + std::conj(s.c01e) * s.c01g).real();
    const double i_kappa = p.Y * p.Y / p.kappa +
                           (p.Y * p.g / p.kappa) * 2.0 * cross +
                           (p.g * p.g / p.kappa) * (e1 + e2);
    return {e1, e1 + e2, i_kappa};
}

Backend parse_backend(const std::string& name) {
    if (name == "analytic") return Backend::analytic;
    if (name == "rk4") return Backend::rk4;
    throw std::invalid_argument("unknown backend: " + name);
}

std::string backend_name(Backend b) {
    return b == Backend::analytic ? "analytic" : "rk4";
}

std::vector<JumpRecord> run_trajectory(const ModelParams& p, Backend backend,
                                       std::int64_t trajectory_id) {
    const DerivedParams d = derive_params(p);
    RngStream rng(p.seed, static_cast<std::uint64_t>(trajectory_id));
    std::vector<JumpRecord> records;

    StateBC2 s;
    s.c10g = 1.0;  // ground state of the first well

    // analytic backend: closed form evaluated at elapsed time since the
    // last anchor, re-anchored at every jump
    StateBC2 anchor = s;
    double anchor_time = 0.0;

    const double dt = p.dt;
    auto deriv = [&](const StateBC2& x) { return deriv_bc2(x, d, p.J); };

    for (long long step = 0; step < p.n_steps; ++step) {
        const double t_next = static_cast<double>(step + 1) * dt;
        const JumpProbabilities probs = jump_probabilities(s, p, dt);
        const double u = rng.uniform();
        const std::optional<ChannelId> jump = select_jump(probs, u);
        if (jump) {
            s = apply_collapse(*jump, s, p);
            renormalize(s);
            records.push_back({trajectory_id, t_next, *jump});
            anchor = s;
            anchor_time = t_next;
        } else if (backend == Backend::rk4) {
            s = rk4_step(deriv, s, dt);
            renormalize(s);
        } else {
            s = propagate_analytic(anchor, t_next - anchor_time, d, p.J);
            renormalize(s);
        }
    }
    return records;
}

namespace {

std::vector<JumpRecord> flatten(std::vector<std::vector<JumpRecord>>&& per_id) {
    std::size_t total = 0;
    for (const auto& v : per_id) total += v.size();
    std::vector<JumpRecord> out;
    out.reserve(total);
    for (auto& v : per_id) {
        out.insert(out.end(), v.begin(), v.end());
    }
    return out;
}

}  // namespace

std::vector<JumpRecord> run_ensemble_serial(const ModelParams& p, Backend backend,
                                            int n_trajectories,
                                            std::int64_t first_id) {
    std::vector<std::vector<JumpRecord>> per_id(n_trajectories);
    for (int i = 0; i < n_trajectories; ++i) {
        per_id[i] = run_trajectory(p, backend, first_id + i);
    }
    return flatten(std::move(per_id));
}

std::vector<JumpRecord> run_ensemble_parallel(const ModelParams& p, Backend backend,
                                              int n_trajectories,
                                              std::int64_t first_id) {
    std::vector<std::vector<JumpRecord>> per_id(n_trajectories);
#pragma omp parallel for schedule(dynamic)
    for (int i = 0; i < n_trajectories; ++i) {
        per_id[i] = run_trajectory(p, backend, first_id + i);
    }
    return flatten(std::move(per_id));
}

}  // namespace qtraj
