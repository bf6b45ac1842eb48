#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <numbers>

#include "pointlev/models.hpp"

namespace pointlev {

using cx = std::complex<double>;

inline constexpr double euler_gamma = 0.57721566490153286060651209008240243;

// Direction of the wave operator the symbols belong to. Minus is the one the
// winding / Levinson machinery uses throughout.
enum class Direction { Minus, Plus };

namespace detail {
inline double sech(double x) {
    return std::abs(x) > 700.0 ? 0.0 : 1.0 / std::cosh(x);
}
} // namespace detail

// Dilation-generator symbol r(a). All models land on one of two conjugate
// branches; both satisfy |r| = 1 and r(-inf) = 1, r(+inf) = -1.
inline cx r_sym(Model m, double a) {
    if (std::isinf(a)) return a > 0 ? cx{-1.0, 0.0} : cx{1.0, 0.0};
    double pa = std::numbers::pi * a;
    switch (m) {
        case Model::Delta3:
        case Model::DeltaPrime1:
            return {-std::tanh(pa), detail::sech(pa)};
        case Model::Delta2:
            return {-std::tanh(pa / 2.0), 0.0};
        case Model::Delta1:
            return {-std::tanh(pa), -detail::sech(pa)};
    }
    return {};
}

// phi(a) = (1 -+ r(a))/2; the Minus branch interpolates 0 at a=-inf to 1 at
// a=+inf, the Plus branch the reverse.
inline cx phi_sym(Model m, double a, Direction d = Direction::Minus) {
    cx r = r_sym(m, a);
    return d == Direction::Minus ? 0.5 * (1.0 - r) : 0.5 * (1.0 + r);
}

// Scattering symbol s at momentum k = sqrt(eps), for finite nonzero coupling.
// Each one is a Moebius transform of k (of log k for n=2) taking the unit
// circle through the low/high energy limits below.
inline cx s_sym_k(Model m, double param, double k) {
    switch (m) {
        case Model::Delta3: {
            cx num{4.0 * std::numbers::pi * param, k};
            cx den{4.0 * std::numbers::pi * param, -k};
            return num / den;
        }
        case Model::Delta2: {
            double L = 2.0 * std::numbers::pi * param + euler_gamma + std::log(k / 2.0);
            return cx{L, std::numbers::pi / 2.0} / cx{L, -std::numbers::pi / 2.0};
        }
        case Model::Delta1: {
            cx num{2.0 * k, -param};
            cx den{2.0 * k, param};
            return num / den;
        }
        case Model::DeltaPrime1: {
            cx num{2.0, param * k};
            cx den{2.0, -param * k};
            return num / den;
        }
    }
    return {};
}

// Exact limits of s at eps = 0 (end = 0) and eps = +inf (end = 1).
inline cx s_lim(Model m, double param, int end) {
    if (is_inf(param)) {
        // decoupled endpoints: s is constant in eps
        switch (m) {
            case Model::Delta3: return {1.0, 0.0};
            case Model::Delta2: return {1.0, 0.0};
            case Model::Delta1: return {-1.0, 0.0};
            case Model::DeltaPrime1: return {-1.0, 0.0};
        }
    }
    bool zero_coupling = (param == 0.0);
    switch (m) {
        case Model::Delta3:
            if (zero_coupling) return {-1.0, 0.0};
            return end == 0 ? cx{1.0, 0.0} : cx{-1.0, 0.0};
        case Model::Delta2:
            return {1.0, 0.0};   // double-log approach at both ends
        case Model::Delta1:
            if (zero_coupling) return {1.0, 0.0};
            return end == 0 ? cx{-1.0, 0.0} : cx{1.0, 0.0};
        case Model::DeltaPrime1:
            if (zero_coupling) return {1.0, 0.0};
            return end == 0 ? cx{1.0, 0.0} : cx{-1.0, 0.0};
    }
    return {};
}

// True when s does not depend on eps at all: the decoupled endpoints, and
// zero coupling for every family except n=2 (where alpha = 0 is an ordinary
// interior coupling; the symbol moves through log eps alone).
inline bool s_is_constant(Model m, double param) {
    return is_inf(param) || (param == 0.0 && m != Model::Delta2);
}

// s as a function of eps, handling the constant-coupling special cases and the
// exact endpoint values.
inline cx s_sym(Model m, double param, double eps) {
    if (s_is_constant(m, param)) return s_lim(m, param, 0);
    if (eps == 0.0) return s_lim(m, param, 0);
    if (std::isinf(eps)) return s_lim(m, param, 1);
    return s_sym_k(m, param, std::sqrt(eps));
}

// s parametrized by log-energy ell = log(eps). The n=2 symbol is evaluated
// directly in terms of ell so it stays meaningful far beyond the range where
// exp(ell) is representable; the others are exponentially close to their
// limits there, so clamping is exact in double precision.
inline cx s_sym_ell(Model m, double param, double ell) {
    if (s_is_constant(m, param)) return s_lim(m, param, 0);
    if (m == Model::Delta2) {
        double L = 2.0 * std::numbers::pi * param + euler_gamma
                 + 0.5 * ell - std::log(2.0);
        return cx{L, std::numbers::pi / 2.0} / cx{L, -std::numbers::pi / 2.0};
    }
    double cl = std::clamp(ell, -1200.0, 1200.0);
    return s_sym_k(m, param, std::exp(cl / 2.0));
}

// eta = s - 1 (Minus direction) or its conjugate (Plus direction).
inline cx eta_sym(Model m, double param, double eps, Direction d = Direction::Minus) {
    cx e = s_sym(m, param, eps) - 1.0;
    return d == Direction::Minus ? e : std::conj(e);
}

inline cx eta_sym_k(Model m, double param, double k, Direction d = Direction::Minus) {
    cx s = (s_is_constant(m, param) || k == 0.0)
               ? s_lim(m, param, 0)
               : s_sym_k(m, param, k);
    cx e = s - 1.0;
    return d == Direction::Minus ? e : std::conj(e);
}

} // namespace pointlev
