#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <numbers>
#include <vector>

#include "pointlev/grids.hpp"
#include "pointlev/models.hpp"

namespace pointlev {

// Sector transforms between the log radial grid and uniform momentum grids.
// The t-side quadrature is plain trapezoid, which is spectrally accurate here
// because the integrands decay at both ends of the log grid. The k-side
// trapezoid gets Euler-Maclaurin endpoint corrections; the derivative of the
// oscillatory factor is taken analytically and only the smooth envelope is
// finite-differenced (differencing across the oscillation is meaningless once
// dk * r approaches 1).

using cxd = std::complex<double>;

namespace detail {

inline double sinc(double x) { return x == 0.0 ? 1.0 : std::sin(x) / x; }

inline double sincp(double x) {
    return x == 0.0 ? 0.0 : (std::cos(x) - sinc(x)) / x;
}

// cubic-interpolated J0 table; only the n=2 tier touches it
inline double j0_table(double x) {
    static const double h = 0.01;
    static const double x_max = 12100.0;
    static const std::vector<double> tab = [] {
        std::vector<double> v(static_cast<std::size_t>(x_max / h) + 4);
        for (std::size_t i = 0; i < v.size(); ++i)
            v[i] = std::cyl_bessel_j(0.0, h * static_cast<double>(i));
        return v;
    }();
    if (x < 0) x = -x;
    double u = x / h;
    std::size_t i = static_cast<std::size_t>(u);
    if (i + 2 >= tab.size()) return std::cyl_bessel_j(0.0, x);
    if (i == 0) i = 1;
    double a = u - static_cast<double>(i);
    double am1 = -a * (a - 1.0) * (a - 2.0) / 6.0;
    double a0 = (a * a - 1.0) * (a - 2.0) / 2.0;
    double a1 = -a * (a + 1.0) * (a - 2.0) / 2.0;
    double a2 = a * (a * a - 1.0) / 6.0;
    return am1 * tab[i - 1] + a0 * tab[i] + a1 * tab[i + 1] + a2 * tab[i + 2];
}

struct FdEnds {
    cxd d0, d1;
};

inline FdEnds fd_ends(const std::vector<cxd>& g, double dk) {
    std::size_t n = g.size();
    return {(-3.0 * g[0] + 4.0 * g[1] - g[2]) / (2.0 * dk),
            (3.0 * g[n - 1] - 4.0 * g[n - 2] + g[n - 3]) / (2.0 * dk)};
}

// trapezoid weight on index j of an n-point grid
inline double trap_w(std::size_t j, std::size_t n) {
    return (j == 0 || j + 1 == n) ? 0.5 : 1.0;
}

} // namespace detail

inline double sector_prefactor(Sector s) {
    return s == Sector::Radial2 ? 1.0 : std::sqrt(2.0 / std::numbers::pi);
}

// weight of f in the t-integrand for the sine/cosine accumulators
inline double sector_forward_weight(Sector s, double r) {
    switch (s) {
        case Sector::Radial3: return r * r;    // r^3 f sinc(kr) = (r^2 f) sin(kr)/k
        case Sector::Radial2: return r * r;
        default: return r;
    }
}

// Transform of f to the uniform momentum grid {m dk : m = 0..nk-1}. Phasor
// recurrence along the uniform k direction keeps this O(n nk) without trig
// calls in the inner loop.
inline std::vector<cxd> forward_uniform(Sector sec, const LogGrid& g,
                                        const std::vector<double>& f,
                                        double dk, std::size_t nk) {
    std::vector<cxd> out(nk);
    const double pref = sector_prefactor(sec);

    if (sec == Sector::Radial2) {
        std::vector<double> acc(nk, 0.0);
        for (std::size_t j = 0; j < g.n; ++j) {
            double w = detail::trap_w(j, g.n) * g.r[j] * g.r[j] * f[j];
            if (w == 0.0) continue;
            for (std::size_t m = 0; m < nk; ++m)
                acc[m] += w * detail::j0_table(dk * static_cast<double>(m) * g.r[j]);
        }
        for (std::size_t m = 0; m < nk; ++m) out[m] = g.dt * acc[m];
        return out;
    }

    std::vector<double> acc_c(nk, 0.0), acc_s(nk, 0.0);
    for (std::size_t j = 0; j < g.n; ++j) {
        double w = detail::trap_w(j, g.n) * sector_forward_weight(sec, g.r[j]) * f[j];
        if (w == 0.0) continue;
        double cs = std::cos(dk * g.r[j]), sn = std::sin(dk * g.r[j]);
        double pc = 1.0, ps = 0.0;
        for (std::size_t m = 0; m < nk; ++m) {
            acc_c[m] += w * pc;
            acc_s[m] += w * ps;
            double nc = pc * cs - ps * sn;
            ps = pc * sn + ps * cs;
            pc = nc;
        }
    }

    switch (sec) {
        case Sector::Even1: {
            for (std::size_t m = 0; m < nk; ++m) out[m] = pref * g.dt * acc_c[m];
            // analytic stub for the piece of the integral below r_min
            double rmin = g.r[0], f0 = f[0];
            for (std::size_t m = 0; m < nk; ++m) {
                double k = dk * static_cast<double>(m);
                out[m] += pref * f0 * (k == 0.0 ? rmin : std::sin(k * rmin) / k);
            }
            break;
        }
        case Sector::Odd1:
            for (std::size_t m = 0; m < nk; ++m)
                out[m] = cxd{0.0, -pref * g.dt * acc_s[m]};
            break;
        case Sector::Radial3: {
            double mom = 0.0;   // zero-momentum column: sinc(0) = 1, weight r^3 f
            for (std::size_t j = 0; j < g.n; ++j)
                mom += detail::trap_w(j, g.n) * g.r[j] * g.r[j] * g.r[j] * f[j];
            out[0] = pref * g.dt * mom;
            for (std::size_t m = 1; m < nk; ++m)
                out[m] = pref * g.dt * acc_s[m] / (dk * static_cast<double>(m));
            break;
        }
        default:
            break;
    }
    return out;
}

// Same transform at an arbitrary (small) list of momenta; direct evaluation,
// used by tests and oracles.
inline std::vector<cxd> forward_at(Sector sec, const LogGrid& g,
                                   const std::vector<double>& f,
                                   const std::vector<double>& ks) {
    std::vector<cxd> out(ks.size());
    const double pref = sector_prefactor(sec);
    for (std::size_t m = 0; m < ks.size(); ++m) {
        double k = ks[m];
        double ac = 0, as = 0;
        for (std::size_t j = 0; j < g.n; ++j) {
            double tw = detail::trap_w(j, g.n);
            double r = g.r[j];
            switch (sec) {
                case Sector::Radial3:
                    ac += tw * r * r * r * f[j] * detail::sinc(k * r);
                    break;
                case Sector::Radial2:
                    ac += tw * r * r * f[j] * detail::j0_table(k * r);
                    break;
                case Sector::Even1:
                    ac += tw * r * f[j] * std::cos(k * r);
                    break;
                case Sector::Odd1:
                    as += tw * r * f[j] * std::sin(k * r);
                    break;
            }
        }
        switch (sec) {
            case Sector::Even1: {
                double rmin = g.r[0];
                double tail = (k == 0.0) ? rmin : std::sin(k * rmin) / k;
                out[m] = pref * (g.dt * ac + f[0] * tail);
                break;
            }
            case Sector::Odd1:
                out[m] = cxd{0.0, -pref * g.dt * as};
                break;
            default:
                out[m] = pref * g.dt * ac;
                break;
        }
    }
    return out;
}

// Inverse transform of uniform-grid momentum data G back onto the grid radii.
inline std::vector<cxd> inverse_uniform(Sector sec, const LogGrid& g,
                                        const std::vector<cxd>& G, double dk) {
    const std::size_t nk = G.size();
    const double K = dk * static_cast<double>(nk - 1);
    const double pref = sector_prefactor(sec);
    const double em = dk * dk / 12.0;
    std::vector<cxd> out(g.n);

    if (sec == Sector::Radial2) {
        std::vector<cxd> H(nk);
        for (std::size_t m = 0; m < nk; ++m)
            H[m] = dk * static_cast<double>(m) * G[m];
        auto d = detail::fd_ends(H, dk);
        for (std::size_t j = 0; j < g.n; ++j) {
            double r = g.r[j];
            cxd acc{};
            for (std::size_t m = 0; m < nk; ++m)
                acc += detail::trap_w(m, nk) * detail::j0_table(dk * static_cast<double>(m) * r) * H[m];
            double x = K * r;
            cxd gp1 = -r * std::cyl_bessel_j(1.0, x) * H[nk - 1]
                    + detail::j0_table(x) * d.d1;
            cxd gp0 = d.d0;
            out[j] = pref * (dk * acc - em * (gp1 - gp0));
        }
        return out;
    }

    // Accumulation envelope: the factor multiplying cos/sin of (k r) in the
    // integrand. For n=3, sinc(kr) k^2 G = sin(kr) (k G) / r, so the sine
    // accumulator runs over k G while the endpoint correction differentiates
    // the true envelope k^2 G of sinc.
    std::vector<cxd> acc_env(nk), em_env;
    for (std::size_t m = 0; m < nk; ++m) {
        double k = dk * static_cast<double>(m);
        acc_env[m] = sec == Sector::Radial3 ? k * G[m] : G[m];
    }
    if (sec == Sector::Radial3) {
        em_env.resize(nk);
        for (std::size_t m = 0; m < nk; ++m) {
            double k = dk * static_cast<double>(m);
            em_env[m] = k * k * G[m];
        }
    }
    auto d = detail::fd_ends(sec == Sector::Radial3 ? em_env : G, dk);

    for (std::size_t j = 0; j < g.n; ++j) {
        double r = g.r[j];
        double cs = std::cos(dk * r), sn = std::sin(dk * r);
        double pc = 1.0, ps = 0.0;
        cxd acc_c{}, acc_s{};
        for (std::size_t m = 0; m < nk; ++m) {
            double tw = detail::trap_w(m, nk);
            acc_c += (tw * pc) * acc_env[m];
            acc_s += (tw * ps) * acc_env[m];
            double nc = pc * cs - ps * sn;
            ps = pc * sn + ps * cs;
            pc = nc;
        }
        double x = K * r;
        switch (sec) {
            case Sector::Even1: {
                cxd gp1 = -r * std::sin(x) * G[nk - 1] + std::cos(x) * d.d1;
                cxd gp0 = d.d0;
                out[j] = pref * (dk * acc_c - em * (gp1 - gp0));
                break;
            }
            case Sector::Odd1: {
                cxd gp1 = r * std::cos(x) * G[nk - 1] + std::sin(x) * d.d1;
                cxd gp0 = r * G[0];
                out[j] = cxd{0.0, 1.0} * pref * (dk * acc_s - em * (gp1 - gp0));
                break;
            }
            case Sector::Radial3: {
                cxd gp1 = r * detail::sincp(x) * em_env[nk - 1]
                        + detail::sinc(x) * d.d1;
                out[j] = pref * (dk * acc_s / r - em * gp1);
                break;
            }
            default:
                break;
        }
    }
    return out;
}

// Asymptotic power laws of the inverse transform of G at small and large r:
// v ~ c_left r^p_left as r -> 0 and v ~ c_right r^p_right as r -> inf. The
// large-r laws are the k = 0 boundary terms of the oscillatory integrals; the
// wave-operator pipeline continues v beyond the grid with them, because for
// the even sector the r^-2 tail carries norm that the isometry check needs.
struct TailLaws {
    bool have = false;
    double p_left = 0, p_right = 0;
    cxd c_left{}, c_right{};
};

inline TailLaws tail_laws(Sector sec, const std::vector<cxd>& G, double dk) {
    TailLaws tl;
    if (sec == Sector::Radial2) return tl;
    const std::size_t nk = G.size();
    const double pref = sector_prefactor(sec);
    auto moment = [&](int p) {
        cxd s{};
        for (std::size_t m = 0; m < nk; ++m) {
            double k = dk * static_cast<double>(m);
            s += detail::trap_w(m, nk) * std::pow(k, p) * G[m];
        }
        return dk * s;
    };
    cxd gp0 = (-3.0 * G[0] + 4.0 * G[1] - G[2]) / (2.0 * dk);
    cxd gpp0 = (2.0 * G[0] - 5.0 * G[1] + 4.0 * G[2] - G[3]) / (dk * dk);
    tl.have = true;
    switch (sec) {
        case Sector::Even1:
            tl.p_left = 0;
            tl.c_left = pref * moment(0);
            tl.p_right = -2;
            tl.c_right = -pref * gp0;
            break;
        case Sector::Odd1:
            tl.p_left = 1;
            tl.c_left = cxd{0.0, 1.0} * pref * moment(1);
            tl.p_right = -3;
            tl.c_right = cxd{0.0, -1.0} * pref * gpp0;
            break;
        case Sector::Radial3:
            tl.p_left = 0;
            tl.c_left = pref * moment(2);
            tl.p_right = -4;
            tl.c_right = -2.0 * pref * gp0;
            break;
        default:
            break;
    }
    return tl;
}

} // namespace pointlev
