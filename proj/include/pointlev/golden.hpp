#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "pointlev/boundary.hpp"
#include "pointlev/symbols.hpp"

namespace pointlev {

// Reference data for the coupling regimes of each model: the per-side winding
// contributions and the symbolic identity of Gamma restricted to each side.

struct SideWindings {
    double w1 = 0, w2 = 0, w3 = 0, w4 = 0;
    double total() const { return w1 + w2 + w3 + w4; }
};

inline SideWindings expected_windings(Model m, double param) {
    bool inf_p = is_inf(param);
    switch (m) {
        case Model::Delta3:
            if (inf_p) return {0, 0, 0, 0};
            if (param < 0) return {0, -0.5, -0.5, 0};
            if (param == 0) return {0.5, 0, -0.5, 0};
            return {0, 0.5, -0.5, 0};
        case Model::Delta2:
            if (inf_p) return {0, 0, 0, 0};
            return {0, -1, 0, 0};
        case Model::Delta1:
            if (inf_p) return {-0.5, 0, 0.5, 0};
            if (param < 0) return {-0.5, -0.5, 0, 0};
            if (param == 0) return {0, 0, 0, 0};
            return {-0.5, 0.5, 0, 0};
        case Model::DeltaPrime1:
            if (inf_p) return {0.5, 0, -0.5, 0};
            if (param < 0) return {0, -0.5, -0.5, 0};
            if (param == 0) return {0, 0, 0, 0};
            return {0, 0.5, -0.5, 0};
    }
    throw std::logic_error("bad model");
}

// On each side Gamma collapses to one of a few closed forms.
enum class SideSymbol { One, MinusOne, RSym, SSym };

inline const char* side_symbol_name(SideSymbol s) {
    switch (s) {
        case SideSymbol::One: return "1";
        case SideSymbol::MinusOne: return "-1";
        case SideSymbol::RSym: return "r";
        case SideSymbol::SSym: return "s";
    }
    return "?";
}

// Identify the restriction by probing interior points. Constants are claimed
// before r and s so that degenerate regimes (constant s, say) report the
// simpler symbol.
inline SideSymbol classify_side(Model m, double param, Side s,
                                double tol = 1e-12) {
    std::vector<SideCoord> probes;
    for (double t : {0.11, 0.29, 0.5})
        probes.push_back({0, t});
    for (double o : {0.31, 0.13, 1e-3})
        probes.push_back({1, o});
    auto matches = [&](auto&& model_fn) {
        for (const auto& c : probes) {
            cx got = gamma_on_side(m, param, s, c);
            if (std::abs(got - model_fn(c)) > tol) return false;
        }
        return true;
    };
    if (matches([&](SideCoord) { return cx{1.0, 0.0}; })) return SideSymbol::One;
    if (matches([&](SideCoord) { return cx{-1.0, 0.0}; }))
        return SideSymbol::MinusOne;
    if (!side_is_energy(s)
        && matches([&](SideCoord c) { return r_sym(m, dilation_of(c)); }))
        return SideSymbol::RSym;
    if (side_is_energy(s)
        && matches([&](SideCoord c) { return s_sym(m, param, energy_of(c)); }))
        return SideSymbol::SSym;
    throw std::runtime_error("side restriction matches no known symbol");
}

inline std::array<SideSymbol, 4> expected_symbols(Model m, double param) {
    using S = SideSymbol;
    bool inf_p = is_inf(param);
    switch (m) {
        case Model::Delta3:
            if (inf_p) return {S::One, S::One, S::One, S::One};
            if (param == 0)
                return {S::RSym, S::MinusOne, S::RSym, S::One};
            return {S::One, S::SSym, S::RSym, S::One};
        case Model::Delta2:
            if (inf_p) return {S::One, S::One, S::One, S::One};
            return {S::One, S::SSym, S::One, S::One};
        case Model::Delta1:
            if (inf_p) return {S::RSym, S::MinusOne, S::RSym, S::One};
            if (param == 0) return {S::One, S::One, S::One, S::One};
            return {S::RSym, S::SSym, S::One, S::One};
        case Model::DeltaPrime1:
            if (inf_p) return {S::RSym, S::MinusOne, S::RSym, S::One};
            if (param == 0) return {S::One, S::One, S::One, S::One};
            return {S::One, S::SSym, S::RSym, S::One};
    }
    throw std::logic_error("bad model");
}

// Parameter sets exercised by the verification table
inline std::vector<double> table_params(Model m) {
    switch (m) {
        case Model::Delta3: return {-1.0, -0.01, 0.0, 0.01, 1.0, ext_inf};
        case Model::Delta2: return {-3.0, 0.0, 3.0, ext_inf};
        default: return {-1.0, 0.0, 1.0, ext_inf};
    }
}

} // namespace pointlev
