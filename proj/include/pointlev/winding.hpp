#pragma once

#include <array>
#include <cmath>
#include <cstddef>
#include <iterator>
#include <stdexcept>
#include <vector>

#include "pointlev/boundary.hpp"

namespace pointlev {

struct WindingOptions {
    int uniform_per_side = 96;
    int max_passes = 20;          // cap on refinement sweeps
    double snap_tol = 1e-6;       // |total - nearest integer| allowed
    double min_modulus = 1e-9;    // Gamma vanishing on the loop is an error
};

// Refined samples along one side, in traversal order.
struct SideTrace {
    Side side;
    std::vector<double> t;
    std::vector<double> coord;    // eps or a
    std::vector<cx> gamma;
};

struct WindingReport {
    std::array<double, 4> w{};    // indexed by side_index, i.e. B1..B4
    double total = 0;
    long long snapped = 0;
    bool snap_ok = false;
    std::size_t samples = 0;
};

namespace detail {

// phase increment sum along ascending-t samples of one side, refining any gap
// whose principal phase step reaches pi/2. Once every step is below pi the
// unwrapped sum is exact; pi/2 leaves slack for curvature between samples.
inline double side_phase_sum(Model m, double param, Side s,
                             const WindingOptions& opt,
                             std::vector<SideCoord>& cs,
                             std::vector<cx>& vals) {
    vals.resize(cs.size());
    for (std::size_t i = 0; i < cs.size(); ++i) {
        vals[i] = gamma_on_side(m, param, s, cs[i]);
        if (std::abs(vals[i]) < opt.min_modulus)
            throw std::runtime_error("Gamma modulus below threshold on loop");
    }
    for (int pass = 0; pass < opt.max_passes; ++pass) {
        std::vector<SideCoord> add;
        for (std::size_t i = 0; i + 1 < cs.size(); ++i) {
            double d = std::arg(vals[i + 1] * std::conj(vals[i]));
            if (std::abs(d) >= std::numbers::pi / 2.0)
                add.push_back(coord_midpoint(cs[i], cs[i + 1]));
        }
        if (add.empty()) break;
        std::vector<SideCoord> merged;
        merged.reserve(cs.size() + add.size());
        std::merge(cs.begin(), cs.end(), add.begin(), add.end(),
                   std::back_inserter(merged), coord_less);
        merged.erase(std::unique(merged.begin(), merged.end(), coord_eq),
                     merged.end());
        cs.swap(merged);
        vals.resize(cs.size());
        for (std::size_t i = 0; i < cs.size(); ++i) {
            vals[i] = gamma_on_side(m, param, s, cs[i]);
            if (std::abs(vals[i]) < opt.min_modulus)
                throw std::runtime_error("Gamma modulus below threshold on loop");
        }
    }
    double sum = 0;
    for (std::size_t i = 0; i + 1 < cs.size(); ++i)
        sum += std::arg(vals[i + 1] * std::conj(vals[i]));
    return sum;
}

} // namespace detail

// Winding contribution of one side in traversal direction, in units of full
// turns.
inline double side_winding(Model m, double param, Side s, bool reversed,
                           const WindingOptions& opt = {},
                           SideTrace* trace = nullptr,
                           std::size_t* samples = nullptr) {
    std::vector<SideCoord> cs = initial_side_coords(opt.uniform_per_side);
    std::vector<cx> vals;
    double sum = detail::side_phase_sum(m, param, s, opt, cs, vals);
    if (samples) *samples = cs.size();
    if (trace) {
        trace->side = s;
        trace->t.clear();
        trace->coord.clear();
        trace->gamma.clear();
        std::size_t n = cs.size();
        for (std::size_t i = 0; i < n; ++i) {
            std::size_t j = reversed ? n - 1 - i : i;
            trace->t.push_back(coord_t(cs[j]));
            trace->coord.push_back(side_coordinate(s, cs[j]));
            trace->gamma.push_back(vals[j]);
        }
    }
    double w = sum / (2.0 * std::numbers::pi);
    return reversed ? -w : w;
}

inline double side_winding(Model m, double param, Side s,
                           const WindingOptions& opt = {}) {
    bool reversed = false;
    for (const auto& spec : loop_order)
        if (spec.side == s) reversed = spec.reversed;
    return side_winding(m, param, s, reversed, opt);
}

// Full boundary loop: per-side contributions, their sum, and the integer snap.
inline WindingReport full_winding(Model m, double param,
                                  const WindingOptions& opt = {},
                                  std::array<SideTrace, 4>* traces = nullptr) {
    WindingReport rep;
    for (const auto& spec : loop_order) {
        std::size_t n = 0;
        SideTrace* tr = traces ? &(*traces)[side_index(spec.side)] : nullptr;
        double w = side_winding(m, param, spec.side, spec.reversed, opt, tr, &n);
        rep.w[side_index(spec.side)] = w;
        rep.samples += n;
    }
    rep.total = rep.w[0] + rep.w[1] + rep.w[2] + rep.w[3];
    rep.snapped = std::llround(rep.total);
    rep.snap_ok = std::abs(rep.total - static_cast<double>(rep.snapped)) <= opt.snap_tol;
    return rep;
}

} // namespace pointlev
