#include "qtraj/dynamics.hpp"

#include <cmath>
#include <stdexcept>

#include "qtraj/statespace.hpp"

namespace qtraj {

namespace {

// i*a*z without a full complex product
inline cplx itimes(double a, const cplx& z) {
    return {-a * z.imag(), a * z.real()};
}

constexpr double kInvSqrt2 = 0.70710678118654752440;

}  // namespace

StateBC2 deriv_bc2(const StateBC2& s, const DerivedParams& d, double J) {
    StateBC2 r;
    r.c10g = itimes(J, s.c01g) + d.Ycal * s.c10e;
    r.c01g = itimes(J, s.c10g) + d.Ycal * s.c01e;
    r.c10e = itimes(J, s.c01e) - d.Ycal * s.c10g - d.Gamma * s.c10e;
    r.c01e = itimes(J, s.c10e) - d.Ycal * s.c01g - d.Gamma * s.c01e;
    return r;
}

StateBC2 deriv_bc2_weak(const StateBC2& s, const DerivedParams& d, double J) {
    StateBC2 r;
    r.c10g = itimes(J, s.c01g);
    r.c01g = itimes(J, s.c10g);
    r.c10e = itimes(J, s.c01e) - d.Ycal * s.c10g - d.Gamma * s.c10e;
    r.c01e = itimes(J, s.c10e) - d.Ycal * s.c01g - d.Gamma * s.c01e;
    return r;
}

SymmetricState to_symmetric(const StateBC2& s) {
    return {kInvSqrt2 * (s.c10g + s.c01g), kInvSqrt2 * (s.c10g - s.c01g),
            kInvSqrt2 * (s.c10e + s.c01e), kInvSqrt2 * (s.c10e - s.c01e)};
}

StateBC2 from_symmetric(const SymmetricState& d) {
    return {kInvSqrt2 * (d.dpg + d.dmg), kInvSqrt2 * (d.dpg - d.dmg),
            kInvSqrt2 * (d.dpe + d.dme), kInvSqrt2 * (d.dpe - d.dme)};
}

StateBC2 propagate_analytic(const StateBC2& s0, double t, const DerivedParams& d,
                            double J) {
    if (t < 0) throw std::invalid_argument("propagate_analytic: t < 0");
    SymmetricState d0 = to_symmetric(s0);
    cplx rot_p{std::cos(J * t), std::sin(J * t)};  // e^{+iJt}
    cplx rot_m = std::conj(rot_p);
    double decay = std::exp(-d.Gamma * t);
    // (e^{-Gamma t} - 1)/Gamma, continuous at Gamma = 0
    double drive_resp =
        d.Gamma != 0.0 ? (decay - 1.0) / d.Gamma : -t;
    cplx fp = d.Ycal * drive_resp * d0.dpg + decay * d0.dpe;
    cplx fm = d.Ycal * drive_resp * d0.dmg + decay * d0.dme;
    SymmetricState dt_state{rot_p * d0.dpg, rot_m * d0.dmg, rot_p * fp, rot_m * fm};
    return from_symmetric(dt_state);
}

StateWF6 deriv_wf6(const StateWF6& s, const ModelParams& p, int n_atoms) {
    if (n_atoms < 1) throw std::invalid_argument("deriv_wf6: need N >= 1");
    const double sqN = std::sqrt(static_cast<double>(n_atoms));
    const double sqNm1 = std::sqrt(static_cast<double>(n_atoms - 1));
    const double sq2 = std::sqrt(2.0);
    const cplx c00 = s.c[0], c10 = s.c[1], c01 = s.c[2];
    const cplx c20 = s.c[3], c11 = s.c[4], c02 = s.c[5];
    StateWF6 r;
    r.c[0] = 0.0;
    r.c[1] = p.Y + p.g * sqN * c11 - p.kappa * c10;
    r.c[2] = -p.g * sqN * c00 - 0.5 * p.gamma * c01;
    r.c[3] = sq2 * p.Y * c10 + p.g * sq2 * sqN * c11 - 2.0 * p.kappa * c20;
    // decay acts on C11 itself (corrected transcription typo)
    r.c[4] = p.Y * c01 - p.g * sq2 * sqN * c01 + p.g * sq2 * sqNm1 * c02 -
             (p.kappa + 0.5 * p.gamma) * c11;
    r.c[5] = -p.g * sq2 * sqNm1 * c11 - p.gamma * c02;
    return r;
}

namespace {

// config indices in enumerate_configs(2,3) order
enum Cfg { k200 = 0, k110 = 1, k101 = 2, k020 = 3, k011 = 4, k002 = 5 };

struct A36View {
    const std::array<cplx, 36>& c;
    // n photons, config, m excited
    const cplx& operator()(int n, Cfg cfg, int m) const {
        int e = n + m;
        int sector = e == 0 ? 0 : (e == 1 ? 6 : 18);
        return c[sector + 6 * m + cfg];
    }
};

}  // namespace

StateA36 deriv_a36(const StateA36& s, const ModelParams& p, bool corrections) {
    const double sq2 = std::sqrt(2.0);
    const double s200 = corrections ? sq2 : 1.0;  // 200-row tunneling factor
    A36View a{s.c};
    StateA36 out;

    auto set = [&](int n, Cfg cfg, int m, const cplx& v) {
        int e = n + m;
        int sector = e == 0 ? 0 : (e == 1 ? 6 : 18);
        out.c[sector + 6 * m + cfg] = v;
    };

    // shared per-config tunneling coupling inside one (n, m) block
    auto tun = [&](int n, int m, Cfg cfg) -> cplx {
        switch (cfg) {
            case k101:
                return itimes(p.J, a(n, k110, m) + a(n, k011, m));
            case k110:
                return itimes(p.J, a(n, k101, m) + sq2 * a(n, k200, m) +
                                       sq2 * a(n, k020, m));
            case k011:
                return itimes(p.J, a(n, k110, m) + sq2 * a(n, k002, m) +
                                       sq2 * a(n, k020, m));
            case k200:
                return itimes(p.J, s200 * a(n, k110, m));
            case k020:
                return itimes(p.J, sq2 * (a(n, k110, m) + a(n, k011, m)));
            case k002:
                return itimes(p.J, sq2 * a(n, k011, m));
        }
        return {};
    };
    auto onsite = [&](int n, int m, Cfg cfg) -> cplx {
        if (cfg == k200 || cfg == k020 || cfg == k002) {
            return itimes(-p.U, a(n, cfg, m));
        }
        return {};
    };

    for (int ci = 0; ci < 6; ++ci) {
        Cfg cfg = static_cast<Cfg>(ci);
        // ground sector
        set(0, cfg, 0, tun(0, 0, cfg) + onsite(0, 0, cfg));
        // first excited: one photon / one excited atom
        set(1, cfg, 0, tun(1, 0, cfg) + onsite(1, 0, cfg) + p.Y * a(0, cfg, 0) +
                           p.g * sq2 * a(0, cfg, 1) - p.kappa * a(1, cfg, 0));
        set(0, cfg, 1, tun(0, 1, cfg) + onsite(0, 1, cfg) -
                           p.g * sq2 * a(1, cfg, 0) -
                           0.5 * p.gamma * a(0, cfg, 1));
        // second excited: two photons / photon + excited / two excited
        set(2, cfg, 0, tun(2, 0, cfg) + onsite(2, 0, cfg) +
                           p.Y * sq2 * a(1, cfg, 0) + 2.0 * p.g * a(1, cfg, 1) -
                           2.0 * p.kappa * a(2, cfg, 0));
        // drive/coupling rows kept as printed ("+Y 2C^g - 2g 2C^g")
        set(1, cfg, 1, tun(1, 1, cfg) + onsite(1, 1, cfg) + p.Y * a(2, cfg, 0) -
                           2.0 * p.g * a(2, cfg, 0) -
                           (p.kappa + 0.5 * p.gamma) * a(1, cfg, 1));
        set(0, cfg, 2, tun(0, 2, cfg) + onsite(0, 2, cfg) -
                           p.g * sq2 * a(1, cfg, 1) - p.gamma * a(0, cfg, 2));
    }

    // As printed, the 110/011 rows of the doubly excited atomic sector read
    // the 020 amplitude from the singly excited sector.
    if (!corrections) {
        cplx v110 = itimes(p.J, a(0, k101, 2) + sq2 * a(0, k200, 2) +
                                    sq2 * a(0, k020, 1)) -
                    p.g * sq2 * a(1, k110, 1) - p.gamma * a(0, k110, 2);
        cplx v011 = itimes(p.J, a(0, k110, 2) + sq2 * a(0, k002, 2) +
                                    sq2 * a(0, k020, 1)) -
                    p.g * sq2 * a(1, k011, 1) - p.gamma * a(0, k011, 2);
        set(0, k110, 2, v110);
        set(0, k011, 2, v011);
    }
    return out;
}

}  // namespace qtraj
