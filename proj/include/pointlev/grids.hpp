#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <vector>

#include "pointlev/models.hpp"

namespace pointlev {

// Canonical logarithmic radial grid, FFT-sized. u(t) = exp(n t / 2) f(exp(t))
// identifies the radial sector with L^2(dt), where dilations act by
// translation; the pad factor leaves room for spectral-multiplier tails.
struct LogGrid {
    double t_min, t_max, dt;
    std::size_t n;       // core points
    int pad;             // padded size = pad * n
    std::vector<double> t, r;

    static LogGrid make(int scale = 1) {
        LogGrid g;
        g.t_min = std::log(1e-6);
        g.t_max = std::log(1e2);
        g.n = std::size_t{1} << 14;
        g.n *= static_cast<std::size_t>(scale);
        g.pad = 4;
        g.dt = (g.t_max - g.t_min) / static_cast<double>(g.n);
        g.t.resize(g.n);
        g.r.resize(g.n);
        for (std::size_t j = 0; j < g.n; ++j) {
            g.t[j] = g.t_min + g.dt * static_cast<double>(j);
            g.r[j] = std::exp(g.t[j]);
        }
        return g;
    }

    std::size_t padded_size() const { return n * static_cast<std::size_t>(pad); }
    std::size_t pad_offset() const { return (padded_size() - n) / 2; }
};

inline double sector_halfdim(Sector s) {
    switch (s) {
        case Sector::Radial3: return 1.5;
        case Sector::Radial2: return 1.0;
        default: return 0.5;
    }
}

template <class V>
std::vector<std::complex<double>> to_u(const LogGrid& g, double halfdim,
                                       const std::vector<V>& f) {
    std::vector<std::complex<double>> u(g.n);
    for (std::size_t j = 0; j < g.n; ++j)
        u[j] = std::pow(g.r[j], halfdim) * f[j];
    return u;
}

inline double u_norm(const LogGrid& g,
                     const std::vector<std::complex<double>>& u) {
    double s = 0;
    for (const auto& x : u) s += std::norm(x);
    return std::sqrt(g.dt * s);
}

// Radial test functions for the verification battery: Gaussian bumps, with an
// extra factor of r in the odd sector so the functions lie in the right
// symmetry class.
struct TestFunction {
    double center, width;
};

inline std::vector<double> battery_values(Sector sec, TestFunction tf,
                                          const std::vector<double>& r) {
    std::vector<double> f(r.size());
    for (std::size_t j = 0; j < r.size(); ++j) {
        double d = (r[j] - tf.center) / tf.width;
        double g = std::exp(-0.5 * d * d);
        f[j] = sec == Sector::Odd1 ? r[j] * g : g;
    }
    return f;
}

inline constexpr TestFunction battery_functions[3] = {
    {0.0, 1.0}, {2.0, 0.5}, {0.0, 3.0}};

// normalize f to unit u-norm on the grid
inline void normalize(const LogGrid& g, double halfdim, std::vector<double>& f) {
    double s = 0;
    for (std::size_t j = 0; j < g.n; ++j) {
        double u = std::pow(g.r[j], halfdim) * f[j];
        s += u * u;
    }
    s = std::sqrt(g.dt * s);
    for (auto& x : f) x /= s;
}

} // namespace pointlev
