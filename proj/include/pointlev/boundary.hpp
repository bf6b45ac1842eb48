#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <limits>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "pointlev/symbols.hpp"

namespace pointlev {

// The boundary function Gamma(eps, a) = phi(a) eta(eps) + 1 is traversed along
// the edge of the compactified quadrant [0, inf] x [-inf, inf]. Both axes are
// mapped to t in [0, 1]:
//     eps(t) = tan(pi t / 2)^2         (B2 / B4, energy sides)
//     a(t)   = tan(pi (t - 1/2))       (B1 / B3, dilation sides)
//
// Near t = 1 the double grid of t itself collapses (1 - 1e-17 == 1), so side
// positions are stored as an anchor (0 or 1) plus an offset into the side,
// which keeps resolution ~1e-308 at both corners.

struct SideCoord {
    int anchor = 0;      // 0: measured from t=0, 1: measured from t=1
    double offset = 0;   // in [0, 1/2]
};

inline double coord_t(SideCoord c) {
    return c.anchor == 0 ? c.offset : 1.0 - c.offset;
}

// ordering along increasing t; never key on coord_t itself
inline bool coord_less(SideCoord a, SideCoord b) {
    if (a.anchor != b.anchor) return a.anchor < b.anchor;
    return a.anchor == 0 ? a.offset < b.offset : a.offset > b.offset;
}

inline bool coord_eq(SideCoord a, SideCoord b) {
    return a.anchor == b.anchor && a.offset == b.offset;
}

inline SideCoord coord_midpoint(SideCoord a, SideCoord b) {
    if (a.anchor == b.anchor)
        return {a.anchor, 0.5 * (a.offset + b.offset)};
    // anchors differ only near t = 1/2 where plain t is well conditioned
    double tm = 0.5 * (coord_t(a) + coord_t(b));
    return tm <= 0.5 ? SideCoord{0, tm} : SideCoord{1, 1.0 - tm};
}

inline double energy_of(SideCoord c) {
    double v = std::tan(std::numbers::pi * c.offset / 2.0);
    double v2 = v * v;
    if (c.anchor == 0) return v2;
    return v2 == 0.0 ? std::numeric_limits<double>::infinity() : 1.0 / v2;
}

inline double dilation_of(SideCoord c) {
    if (c.offset == 0.0)
        return c.anchor == 0 ? -std::numeric_limits<double>::infinity()
                             : std::numeric_limits<double>::infinity();
    double cot = std::cos(std::numbers::pi * c.offset)
               / std::sin(std::numbers::pi * c.offset);
    return c.anchor == 0 ? -cot : cot;
}

// Sides of the spectral square, numbered as in the traversal below.
enum class Side { B1, B2, B3, B4 };

inline int side_index(Side s) { return static_cast<int>(s); }

inline const char* side_name(Side s) {
    switch (s) {
        case Side::B1: return "B1";
        case Side::B2: return "B2";
        case Side::B3: return "B3";
        case Side::B4: return "B4";
    }
    return "?";
}

// One full counterclockwise loop: up the energy axis at a = +inf, across the
// top at eps = inf, down the energy axis at a = -inf, back along eps = 0.
// Sides whose traversal runs against increasing t are marked reversed.
struct SideSpec {
    Side side;
    bool reversed;
};

inline constexpr std::array<SideSpec, 4> loop_order = {{
    {Side::B2, false},
    {Side::B3, true},
    {Side::B4, true},
    {Side::B1, false},
}};

inline bool side_is_energy(Side s) { return s == Side::B2 || s == Side::B4; }

// coordinate on the side: eps for energy sides, a for dilation sides
inline double side_coordinate(Side s, SideCoord c) {
    return side_is_energy(s) ? energy_of(c) : dilation_of(c);
}

inline cx gamma_on_side(Model m, double param, Side s, SideCoord c) {
    switch (s) {
        case Side::B2:
            return phi_sym(m, std::numeric_limits<double>::infinity())
                   * eta_sym(m, param, energy_of(c)) + 1.0;
        case Side::B4:
            return phi_sym(m, -std::numeric_limits<double>::infinity())
                   * eta_sym(m, param, energy_of(c)) + 1.0;
        case Side::B1:
            return phi_sym(m, dilation_of(c)) * eta_sym(m, param, 0.0) + 1.0;
        case Side::B3:
            return phi_sym(m, dilation_of(c))
                   * eta_sym(m, param, std::numeric_limits<double>::infinity()) + 1.0;
    }
    return {};
}

// Initial sample set for one side, ascending in t: a uniform grid plus
// geometric ladders into both corners. The ladders matter: the n=2 symbol
// still moves at eps ~ exp(-4 pi alpha), which reaches t ~ 1e-110 for
// moderate alpha.
inline std::vector<SideCoord> initial_side_coords(int n_uniform) {
    std::vector<SideCoord> cs;
    double u0 = 1.0 / n_uniform;
    for (int j = 0; j <= n_uniform; ++j) {
        double t = static_cast<double>(j) / n_uniform;
        if (t <= 0.5) cs.push_back({0, t});
        else cs.push_back({1, 1.0 - t});
    }
    for (int anchor : {0, 1})
        for (double o = u0 / 2.0; o >= 1e-300; o *= 0.5)
            cs.push_back({anchor, o});
    std::sort(cs.begin(), cs.end(), coord_less);
    cs.erase(std::unique(cs.begin(), cs.end(), coord_eq), cs.end());
    return cs;
}

} // namespace pointlev
