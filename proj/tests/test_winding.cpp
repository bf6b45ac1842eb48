#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "pointlev/golden.hpp"
#include "pointlev/winding.hpp"

using namespace pointlev;

namespace {

// independent phase accumulation: dense fixed sampling, no refinement logic
double brute_total(Model m, double param, int n_uniform) {
    double total = 0;
    for (const auto& spec : loop_order) {
        auto cs = initial_side_coords(n_uniform);
        double sum = 0;
        cx prev = gamma_on_side(m, param, spec.side, cs[0]);
        for (std::size_t i = 1; i < cs.size(); ++i) {
            cx cur = gamma_on_side(m, param, spec.side, cs[i]);
            sum += std::arg(cur * std::conj(prev));
            prev = cur;
        }
        total += (spec.reversed ? -sum : sum) / (2 * std::numbers::pi);
    }
    return total;
}

} // namespace

TEST_CASE("per-side windings across every tabulated coupling regime") {
    for (Model m : all_models)
        for (double p : table_params(m)) {
            auto rep = full_winding(m, p);
            auto want = expected_windings(m, p);
            INFO(model_name(m) << " param " << format_ext(p));
            CHECK(std::abs(rep.w[0] - want.w1) < 1e-9);
            CHECK(std::abs(rep.w[1] - want.w2) < 1e-9);
            CHECK(std::abs(rep.w[2] - want.w3) < 1e-9);
            CHECK(std::abs(rep.w[3] - want.w4) < 1e-9);
            CHECK(rep.snap_ok);
            CHECK(rep.snapped == std::llround(want.total()));
        }
}

TEST_CASE("refined winding agrees with dense brute-force sampling") {
    struct Case {
        Model m;
        double p;
    } cases[] = {
        {Model::Delta3, -0.37},
        {Model::Delta3, 5.1},
        {Model::Delta2, 2.0},
        {Model::Delta2, -0.04},
        {Model::Delta1, 0.7},
        {Model::Delta1, -13.0},
        {Model::DeltaPrime1, -0.02},
        {Model::DeltaPrime1, 3.3},
    };
    for (auto [m, p] : cases) {
        double fine = brute_total(m, p, 20000);
        auto rep = full_winding(m, p);
        INFO(model_name(m) << " param " << p);
        CHECK(std::abs(rep.total - fine) < 1e-9);
    }
}

TEST_CASE("traces come out in traversal order with matching endpoints") {
    std::array<SideTrace, 4> traces;
    auto rep = full_winding(Model::Delta3, -1.0, {}, &traces);
    CHECK(rep.snap_ok);

    const auto& b2 = traces[side_index(Side::B2)];
    REQUIRE(b2.coord.size() > 2);
    CHECK(b2.coord.front() == 0.0);
    CHECK(std::isinf(b2.coord.back()));
    CHECK(std::is_sorted(b2.coord.begin(), b2.coord.end()));
    // Gamma on the incoming-energy side is the scattering symbol
    CHECK(std::abs(b2.gamma.front() - s_sym(Model::Delta3, -1.0, 0.0)) < 1e-15);

    const auto& b3 = traces[side_index(Side::B3)];
    CHECK(std::isinf(b3.coord.front()));
    CHECK(b3.coord.front() > 0);
    CHECK(std::isinf(b3.coord.back()));
    CHECK(b3.coord.back() < 0);
    CHECK(std::is_sorted(b3.coord.rbegin(), b3.coord.rend()));

    const auto& b4 = traces[side_index(Side::B4)];
    CHECK(std::isinf(b4.coord.front()));
    CHECK(b4.coord.back() == 0.0);
    for (const auto& g : b4.gamma)
        CHECK(g == cx{1.0, 0.0});

    const auto& b1 = traces[side_index(Side::B1)];
    CHECK(b1.coord.front() == -std::numeric_limits<double>::infinity());
    CHECK(b1.coord.back() == std::numeric_limits<double>::infinity());
}

TEST_CASE("sample budget grows only where the phase actually moves") {
    // a nearly decoupled n=2 point packs its motion at eps ~ exp(-4 pi alpha);
    // refinement has to find it down the corner ladder
    auto rep = full_winding(Model::Delta2, 20.0);
    CHECK(rep.snap_ok);
    CHECK(rep.snapped == -1);
    CHECK(std::abs(rep.w[side_index(Side::B2)] + 1.0) < 1e-9);
}

TEST_CASE("loose snapping tolerances are reported, not hidden") {
    WindingOptions opt;
    opt.snap_tol = 1e-6;
    auto rep = full_winding(Model::Delta1, -2.5, opt);
    CHECK(rep.snap_ok);
    CHECK(std::abs(rep.total - rep.snapped) < 1e-9);
    CHECK(rep.samples > 4 * 96);
}
