#pragma once

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include "json.hpp"

#include "pointlev/extended.hpp"
#include "pointlev/levinson.hpp"
#include "pointlev/waveop.hpp"
#include "pointlev/winding.hpp"

namespace pointlev {

// Serialization of the computed artifacts: loop samples as CSV, winding and
// wave-operator reports as JSON, Levinson sweeps as CSV.

inline nlohmann::json winding_to_json(const WindingReport& r) {
    return nlohmann::json{
        {"w1", r.w[0]}, {"w2", r.w[1]}, {"w3", r.w[2]}, {"w4", r.w[3]},
        {"w_total", r.total}, {"snapped", r.snapped},
        {"snap_ok", r.snap_ok}, {"samples", r.samples}};
}

inline void write_loop_csv(std::ostream& os,
                           const std::array<SideTrace, 4>& traces) {
    os << "side,t,eps_or_a,re,im\n";
    os << std::setprecision(17);
    for (const auto& spec : loop_order) {
        const SideTrace& tr = traces[side_index(spec.side)];
        for (std::size_t i = 0; i < tr.t.size(); ++i)
            os << side_name(tr.side) << ',' << tr.t[i] << ',' << tr.coord[i]
               << ',' << tr.gamma[i].real() << ',' << tr.gamma[i].imag()
               << '\n';
    }
}

inline void write_levinson_csv(std::ostream& os,
                               const std::vector<LevinsonResult>& rs) {
    os << "model,param,w1,w2,w3,w4,w_total,bound_states,pass\n";
    os << std::setprecision(17);
    for (const auto& r : rs) {
        os << model_name(r.model) << ',' << format_ext(r.param);
        for (double w : r.winding.w) os << ',' << w + 0.0;  // clear -0
        os << ',' << r.winding.total + 0.0 << ',' << r.bound_states << ','
           << (r.pass ? "true" : "false") << '\n';
    }
}

inline nlohmann::json levinson_to_json(const std::vector<LevinsonResult>& rs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& r : rs) {
        nlohmann::json j = winding_to_json(r.winding);
        j["model"] = std::string(model_name(r.model));
        j["param"] = format_ext(r.param);
        j["bound_states"] = r.bound_states;
        j["pass"] = r.pass;
        arr.push_back(std::move(j));
    }
    return arr;
}

inline nlohmann::json battery_to_json(const std::vector<BatteryCase>& bs) {
    nlohmann::json arr = nlohmann::json::array();
    for (const auto& b : bs) {
        arr.push_back(nlohmann::json{
            {"model", std::string(model_name(b.model))},
            {"param", b.param},
            {"test_fn", {{"center", b.tf.center}, {"width", b.tf.width}}},
            {"rel_L2_error", b.rel_l2},
            {"iso_minus", b.iso_minus},
            {"iso_plus", b.iso_plus},
            {"cutoff_doubled_delta", b.cutoff_delta}});
    }
    return arr;
}

} // namespace pointlev
