#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <numbers>
#include <random>
#include <stdexcept>
#include <thread>
#include <vector>

#include "pointlev/fft.hpp"
#include "pointlev/gauss.hpp"
#include "pointlev/grids.hpp"
#include "pointlev/radial.hpp"
#include "pointlev/spline.hpp"
#include "pointlev/symbols.hpp"

namespace pointlev {

// Desk-scale verification of the stationary wave-operator formulas: the
// factorized form phi(A) eta(-Laplacian) applied through sector transforms
// and an FFT dilation multiplier, against direct momentum-kernel quadrature.

struct WaveopOptions {
    double k_max = 60.0;      // factorized route momentum cutoff
    double dk = 0.01;         // factorized route momentum step
    double dk_spline = 0.02;  // kernel route: spacing of the spline table
    double R = 60.0;          // kernel route momentum cutoff
    int gl_order = 8;
    double cmp_r_lo = 1e-3, cmp_r_hi = 60.0;
    int cmp_stride = 32;

    static WaveopOptions scaled(int scale) {
        WaveopOptions o;
        o.dk /= scale;
        o.dk_spline /= scale;
        o.cmp_stride *= scale;
        return o;
    }

    std::size_t nk() const {
        return static_cast<std::size_t>(std::lround(k_max / dk)) + 1;
    }
    std::size_t nk_spline() const {
        return static_cast<std::size_t>(std::lround(2.0 * R / dk_spline)) + 1;
    }
};

struct MultiplierResult {
    std::vector<cxd> core;     // result on the core grid, u-coordinates
    std::vector<cxd> padded;   // full padded buffer after the multiplier
};

// Apply a bounded function of the dilation generator as a Fourier multiplier
// on the padded log grid. The generator acts as multiplication by the dual
// variable tau of t under the forward DFT (translation check pins the sign).
inline MultiplierResult multiplier_apply(
    const LogGrid& g, const std::vector<cxd>& u_core,
    const std::function<cxd(double)>& mult,
    const TailLaws* tails = nullptr, double halfdim = 0.5) {
    const std::size_t M = g.padded_size(), off = g.pad_offset();
    std::vector<cxd> buf(M);
    for (std::size_t j = 0; j < g.n; ++j) buf[off + j] = u_core[j];
    if (tails && tails->have) {
        // continue u = r^(n/2) v beyond the grid by the power laws of v
        double el = tails->p_left + halfdim;   // u ~ c exp(el * t), t -> -inf
        double er = tails->p_right + halfdim;  // decays for the sectors used
        for (std::size_t j = 0; j < off; ++j) {
            double t = g.t_min - g.dt * static_cast<double>(off - j);
            buf[j] = tails->c_left * std::exp(el * t);
        }
        for (std::size_t j = off + g.n; j < M; ++j) {
            double t = g.t_min + g.dt * static_cast<double>(j - off);
            buf[j] = tails->c_right * std::exp(er * t);
        }
    }
    fft(buf);
    auto freqs = fft_freqs(M, g.dt);
    for (std::size_t j = 0; j < M; ++j) buf[j] *= mult(freqs[j]);
    ifft(buf);
    MultiplierResult res;
    res.padded = std::move(buf);
    res.core.assign(res.padded.begin() + static_cast<long>(off),
                    res.padded.begin() + static_cast<long>(off + g.n));
    return res;
}

struct FactorizedResult {
    std::vector<cxd> core_f;   // (W f)(r) on the grid radii
    std::vector<cxd> padded_u; // multiplier output incl. pad, u-coordinates
};

// W f = phi(A) eta(-Laplacian) f on one sector. psihat, if given, must be the
// forward transform of f on the options' uniform momentum grid (it does not
// depend on the coupling, so batteries reuse it across parameters).
inline FactorizedResult factorized_apply(
    Model m, double param, Direction dir, const LogGrid& g,
    const std::vector<double>& f, const WaveopOptions& opt,
    const std::vector<cxd>* psihat = nullptr) {
    Sector sec = model_sector(m);
    double hd = sector_halfdim(sec);
    std::vector<cxd> ph;
    if (!psihat) {
        ph = forward_uniform(sec, g, f, opt.dk, opt.nk());
        psihat = &ph;
    }
    std::vector<cxd> G(psihat->size());
    for (std::size_t i = 0; i < G.size(); ++i)
        G[i] = eta_sym_k(m, param, opt.dk * static_cast<double>(i), dir)
               * (*psihat)[i];
    std::vector<cxd> v = inverse_uniform(sec, g, G, opt.dk);
    std::vector<cxd> uv(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        uv[j] = std::pow(g.r[j], hd) * v[j];
    TailLaws tl = tail_laws(sec, G, opt.dk);
    auto mr = multiplier_apply(
        g, uv, [&](double tau) { return phi_sym(m, tau, dir); }, &tl, hd);
    FactorizedResult res;
    res.padded_u = std::move(mr.padded);
    res.core_f.resize(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        res.core_f[j] = mr.core[j] / std::pow(g.r[j], hd);
    return res;
}

// momentum scale on which the kernel prefactor varies, for panel sizing
inline double kernel_scale(Model m, double param) {
    switch (m) {
        case Model::Delta3: return 4.0 * std::numbers::pi * std::abs(param);
        case Model::Delta1: return std::abs(param) / 2.0;
        case Model::DeltaPrime1: return 2.0 / std::abs(param);
        case Model::Delta2: return 1.0;
    }
    return 1.0;
}

// Direct quadrature of the momentum-kernel form of W f at the radii r_out.
// Gauss-Legendre panels resolve both the e^{ikr} oscillation and the
// prefactor's transition region; psihat_spline, if given, must hold the
// forward transform on the spline grid (spacing dk_spline, up to 2R).
inline std::vector<cxd> kernel_apply(
    Model m, double param, const LogGrid& g, const std::vector<double>& f,
    const std::vector<double>& r_out, const WaveopOptions& opt,
    double R_override = 0.0,
    const std::vector<cxd>* psihat_spline = nullptr) {
    if (is_inf(param))
        return std::vector<cxd>(r_out.size());
    Sector sec = model_sector(m);
    const double R = R_override > 0.0 ? R_override : opt.R;
    std::vector<cxd> ph;
    if (!psihat_spline) {
        ph = forward_uniform(sec, g, f, opt.dk_spline, opt.nk_spline());
        psihat_spline = &ph;
    }
    UniformSpline<cxd> sp(0.0, opt.dk_spline, *psihat_spline);

    double rmax = opt.cmp_r_hi;
    double w = std::numbers::pi / (2.0 * rmax);
    double ks = kernel_scale(m, param);
    if (ks > 0.0) w = std::min(w, ks / 8.0);
    std::size_t npan = static_cast<std::size_t>(std::ceil(R / w));
    GaussRule gl = gauss_legendre(opt.gl_order);

    std::vector<double> kn, wn;
    std::vector<cxd> pre;
    kn.reserve(npan * gl.x.size());
    for (std::size_t p = 0; p < npan; ++p) {
        double lo = R * static_cast<double>(p) / static_cast<double>(npan);
        double hi = R * static_cast<double>(p + 1) / static_cast<double>(npan);
        double mid = 0.5 * (lo + hi), half = 0.5 * (hi - lo);
        for (std::size_t q = 0; q < gl.x.size(); ++q) {
            kn.push_back(mid + half * gl.x[q]);
            wn.push_back(half * gl.w[q]);
        }
    }
    pre.resize(kn.size());
    for (std::size_t i = 0; i < kn.size(); ++i) {
        double k = kn[i];
        cxd p;
        switch (m) {
            case Model::Delta3:
                p = k * k / cxd{4.0 * std::numbers::pi * param, -k};
                break;
            case Model::Delta1:
                p = cxd{0.0, -param} / cxd{2.0 * k, param};
                break;
            case Model::DeltaPrime1:
                p = cxd{0.0, param * k} / cxd{2.0, -param * k};
                break;
            case Model::Delta2: {
                double L = 2.0 * std::numbers::pi * param + euler_gamma
                         + std::log(k / 2.0);
                p = k * cxd{0.0, std::numbers::pi / 2.0}
                    / cxd{L, -std::numbers::pi / 2.0};
                break;
            }
        }
        pre[i] = wn[i] * p * sp(kn[i]);
    }

    const double c = std::sqrt(2.0 / std::numbers::pi);
    std::vector<cxd> out(r_out.size());
    for (std::size_t j = 0; j < r_out.size(); ++j) {
        double r = r_out[j];
        cxd acc{};
        if (m == Model::Delta2) {
            for (std::size_t i = 0; i < kn.size(); ++i) {
                double x = kn[i] * r;
                acc += pre[i] * cxd{std::cyl_bessel_j(0.0, x),
                                    std::cyl_neumann(0.0, x)};
            }
            out[j] = acc;
        } else {
            for (std::size_t i = 0; i < kn.size(); ++i) {
                double x = kn[i] * r;
                acc += pre[i] * cxd{std::cos(x), std::sin(x)};
            }
            out[j] = m == Model::Delta3 ? c * acc / r : c * acc;
        }
    }
    return out;
}

// indices of the comparison subset on the grid
inline std::vector<std::size_t> comparison_indices(const LogGrid& g,
                                                   const WaveopOptions& opt) {
    std::vector<std::size_t> idx;
    for (std::size_t j = 0; j < g.n;
         j += static_cast<std::size_t>(opt.cmp_stride))
        if (g.r[j] >= opt.cmp_r_lo && g.r[j] <= opt.cmp_r_hi) idx.push_back(j);
    return idx;
}

inline double rel_l2_u(const LogGrid& g, double halfdim,
                       const std::vector<std::size_t>& idx,
                       const std::vector<cxd>& a_on_idx,
                       const std::vector<cxd>& b_on_idx) {
    double num = 0, den = 0;
    for (std::size_t i = 0; i < idx.size(); ++i) {
        double wu = std::pow(g.r[idx[i]], halfdim);
        num += std::norm((a_on_idx[i] - b_on_idx[i]) * wu);
        den += std::norm(b_on_idx[i] * wu);
    }
    return std::sqrt(num / den);
}

// || u_f + W u_f || / || u_f || over the padded buffer; 1 for an isometry
inline double isometry_ratio(const LogGrid& g, const std::vector<cxd>& u_f,
                             const FactorizedResult& fr) {
    const std::size_t off = g.pad_offset();
    double acc = 0, nf = 0;
    for (std::size_t j = 0; j < fr.padded_u.size(); ++j) {
        cxd v = fr.padded_u[j];
        if (j >= off && j < off + g.n) {
            v += u_f[j - off];
            nf += std::norm(u_f[j - off]);
        }
        acc += std::norm(v);
    }
    return std::sqrt(acc / nf);
}

// Spectral-shift form of the B2 side contribution: w2 as the winding of s
// along the energy axis, quadratured on a tan-compactified log-energy grid
// with Richardson extrapolation.
inline double time_delay_w2(Model m, double param, std::size_t N = 1 << 21,
                            double T = 60.0) {
    cxd prev = s_lim(m, param, 0);
    cxd cur = s_sym_ell(m, param,
                        T * std::tan(std::numbers::pi * (0.5 / static_cast<double>(N) - 0.5)));
    double acc = 0;
    for (std::size_t j = 0; j < N; ++j) {
        cxd next = (j + 1 < N)
            ? s_sym_ell(m, param,
                        T * std::tan(std::numbers::pi
                                     * ((static_cast<double>(j + 1) + 0.5) / static_cast<double>(N) - 0.5)))
            : s_lim(m, param, 1);
        acc += (std::conj(cur) * (0.5 * (next - prev))).imag();
        prev = cur;
        cur = next;
    }
    return acc / (2.0 * std::numbers::pi);
}

inline double time_delay_w2_richardson(Model m, double param,
                                       std::size_t N = 1 << 21) {
    double a = time_delay_w2(m, param, N / 2);
    double b = time_delay_w2(m, param, N);
    return b + (b - a) / 3.0;
}

// ---------------------------------------------------------------------------
// verification battery

struct BatteryCase {
    Model model;
    double param;
    TestFunction tf;
    double rel_l2 = 0;            // kernel vs factorized, comparison subset
    double cutoff_delta = 0;      // kernel route R vs 2R
    double iso_minus = 0, iso_plus = 0;   // |ratio - 1| per direction
};

inline std::vector<double> battery_params(Model m, int count, std::uint64_t seed) {
    std::mt19937_64 rng(seed + static_cast<std::uint64_t>(m) * 7919);
    std::uniform_real_distribution<double> u(std::log(0.3), std::log(30.0));
    std::uniform_real_distribution<double> sgn(0.0, 1.0);
    std::vector<double> ps(count);
    for (auto& p : ps) {
        double mag = std::exp(u(rng));
        p = sgn(rng) < 0.5 ? -mag : mag;
    }
    return ps;
}

inline void run_battery_case(const LogGrid& g, const WaveopOptions& opt,
                             const std::vector<std::size_t>& idx,
                             const std::vector<double>& f,
                             const std::vector<cxd>& psihat,
                             const std::vector<cxd>& psihat_spline,
                             BatteryCase& bc) {
    Sector sec = model_sector(bc.model);
    double hd = sector_halfdim(sec);
    std::vector<cxd> uf(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        uf[j] = std::pow(g.r[j], hd) * f[j];

    auto fm = factorized_apply(bc.model, bc.param, Direction::Minus, g, f, opt,
                               &psihat);
    auto fp = factorized_apply(bc.model, bc.param, Direction::Plus, g, f, opt,
                               &psihat);
    bc.iso_minus = std::abs(isometry_ratio(g, uf, fm) - 1.0);
    bc.iso_plus = std::abs(isometry_ratio(g, uf, fp) - 1.0);

    std::vector<double> r_out(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) r_out[i] = g.r[idx[i]];
    auto ker = kernel_apply(bc.model, bc.param, g, f, r_out, opt, 0.0,
                            &psihat_spline);
    auto ker2 = kernel_apply(bc.model, bc.param, g, f, r_out, opt, 2.0 * opt.R,
                             &psihat_spline);
    std::vector<cxd> fac_sel(idx.size());
    for (std::size_t i = 0; i < idx.size(); ++i) fac_sel[i] = fm.core_f[idx[i]];
    bc.rel_l2 = rel_l2_u(g, hd, idx, fac_sel, ker);
    bc.cutoff_delta = rel_l2_u(g, hd, idx, ker2, ker);
}

inline std::vector<BatteryCase> run_battery(
    const std::vector<Model>& models, int params_per_model, std::uint64_t seed,
    int scale = 1, int jobs = 1) {
    LogGrid g = LogGrid::make(scale);
    WaveopOptions opt = WaveopOptions::scaled(scale);
    auto idx = comparison_indices(g, opt);

    std::vector<BatteryCase> cases;
    struct Prep {
        std::vector<double> f;
        std::vector<cxd> psihat, psihat_spline;
    };
    std::vector<Prep> preps;
    std::vector<std::size_t> prep_of;

    for (Model m : models) {
        Sector sec = model_sector(m);
        double hd = sector_halfdim(sec);
        auto params = battery_params(m, params_per_model, seed);
        for (const TestFunction& tf : battery_functions) {
            Prep pr;
            pr.f = battery_values(sec, tf, g.r);
            normalize(g, hd, pr.f);
            pr.psihat = forward_uniform(sec, g, pr.f, opt.dk, opt.nk());
            pr.psihat_spline =
                forward_uniform(sec, g, pr.f, opt.dk_spline, opt.nk_spline());
            preps.push_back(std::move(pr));
            for (double p : params) {
                BatteryCase bc;
                bc.model = m;
                bc.param = p;
                bc.tf = tf;
                cases.push_back(bc);
                prep_of.push_back(preps.size() - 1);
            }
        }
    }

    auto worker = [&](std::size_t lo, std::size_t hi) {
        for (std::size_t i = lo; i < hi; ++i)
            run_battery_case(g, opt, idx, preps[prep_of[i]].f,
                             preps[prep_of[i]].psihat,
                             preps[prep_of[i]].psihat_spline, cases[i]);
    };
    if (jobs <= 1) {
        worker(0, cases.size());
    } else {
        std::vector<std::thread> ts;
        std::size_t per = (cases.size() + jobs - 1) / jobs;
        for (int j = 0; j < jobs; ++j) {
            std::size_t lo = per * static_cast<std::size_t>(j);
            std::size_t hi = std::min(cases.size(), lo + per);
            if (lo >= hi) break;
            ts.emplace_back(worker, lo, hi);
        }
        for (auto& t : ts) t.join();
    }
    return cases;
}

} // namespace pointlev
