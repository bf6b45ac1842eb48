#pragma once

#include <cmath>
#include <cstdlib>
#include <vector>

#include "pointlev/models.hpp"
#include "pointlev/winding.hpp"

namespace pointlev {

// Topological Levinson theorem: the winding of Gamma around the spectral
// square equals minus the number of bound states.

struct LevinsonResult {
    Model model;
    double param = 0;
    WindingReport winding;
    int bound_states = 0;
    bool pass = false;
};

inline LevinsonResult check_levinson(Model m, double param,
                                     const WindingOptions& opt = {}) {
    LevinsonResult r;
    r.model = m;
    r.param = param;
    r.winding = full_winding(m, param, opt);
    r.bound_states = point_spectrum(m, param).count;
    r.pass = r.winding.snap_ok
          && r.winding.snapped == -static_cast<long long>(r.bound_states);
    return r;
}

// Log-spaced parameter sweep: n points per sign region between |p| = lo and
// |p| = hi, plus the p = 0 and p = inf endpoints.
inline std::vector<double> sweep_params(double lo, double hi, int n) {
    std::vector<double> ps;
    for (int sign : {-1, 1})
        for (int i = 0; i < n; ++i) {
            double f = n == 1 ? 0.0 : static_cast<double>(i) / (n - 1);
            ps.push_back(sign * lo * std::pow(hi / lo, f));
        }
    ps.push_back(0.0);
    ps.push_back(ext_inf);
    return ps;
}

// The n=2 transition energy exp(-4 pi alpha - 2 gamma) must stay inside
// double range (with the ladder reaching it), which caps that sweep at
// |alpha| ~ 40; the others are limited only by runtime.
inline double sweep_hi_default(Model m) {
    return m == Model::Delta2 ? 40.0 : 1e3;
}

inline std::vector<LevinsonResult> sweep_levinson(Model m, double lo, double hi,
                                                  int n,
                                                  const WindingOptions& opt = {}) {
    std::vector<LevinsonResult> out;
    for (double p : sweep_params(lo, hi, n))
        out.push_back(check_levinson(m, p, opt));
    return out;
}

} // namespace pointlev
