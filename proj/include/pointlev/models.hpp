#pragma once

#include <array>
#include <cmath>
#include <numbers>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>

#include "pointlev/extended.hpp"

namespace pointlev {

// The four solvable point interactions. The coupling is alpha for the delta
// families and beta for the delta' family; +-inf selects the decoupled
// endpoint of each family.
enum class Model { Delta3, Delta2, Delta1, DeltaPrime1 };

inline constexpr std::array<Model, 4> all_models = {
    Model::Delta3, Model::Delta2, Model::Delta1, Model::DeltaPrime1};

inline std::string_view model_name(Model m) {
    switch (m) {
        case Model::Delta3: return "delta3";
        case Model::Delta2: return "delta2";
        case Model::Delta1: return "delta1";
        case Model::DeltaPrime1: return "deltaprime1";
    }
    return "?";
}

inline std::optional<Model> parse_model(std::string_view s) {
    for (Model m : all_models)
        if (s == model_name(m)) return m;
    return std::nullopt;
}

// Spatial dimension of the underlying Laplacian.
inline int model_dim(Model m) {
    switch (m) {
        case Model::Delta3: return 3;
        case Model::Delta2: return 2;
        default: return 1;
    }
}

// Sector of L^2 the interaction acts on: the s-wave (radial / even) channel
// for the delta families, the p-wave (odd) channel for delta'.
enum class Sector { Radial3, Radial2, Even1, Odd1 };

inline Sector model_sector(Model m) {
    switch (m) {
        case Model::Delta3: return Sector::Radial3;
        case Model::Delta2: return Sector::Radial2;
        case Model::Delta1: return Sector::Even1;
        case Model::DeltaPrime1: return Sector::Odd1;
    }
    throw std::logic_error("bad model");
}

struct PointSpectrum {
    int count = 0;                       // number of negative eigenvalues
    std::optional<double> energy;        // the eigenvalue when we track it
};

// Negative point spectrum of the interaction Hamiltonian.
//   n=3: one bound state iff alpha < 0, at -(4 pi alpha)^2.
//   n=2: one bound state for every finite alpha (energy not tracked here).
//   n=1 delta: one bound state iff alpha < 0, at -alpha^2/4.
//   n=1 delta': one bound state iff beta < 0, at -4/beta^2.
inline PointSpectrum point_spectrum(Model m, double param) {
    PointSpectrum ps;
    if (is_inf(param)) return ps;
    switch (m) {
        case Model::Delta3:
            if (param < 0) {
                ps.count = 1;
                double k = -4.0 * std::numbers::pi * param;
                ps.energy = -k * k;
            }
            break;
        case Model::Delta2:
            ps.count = 1;
            break;
        case Model::Delta1:
            if (param < 0) {
                ps.count = 1;
                ps.energy = -param * param / 4.0;
            }
            break;
        case Model::DeltaPrime1:
            if (param < 0) {
                ps.count = 1;
                ps.energy = -4.0 / (param * param);
            }
            break;
    }
    return ps;
}

} // namespace pointlev
