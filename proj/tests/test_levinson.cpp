#include <catch2/catch_amalgamated.hpp>

#include <cmath>

#include "pointlev/golden.hpp"
#include "pointlev/levinson.hpp"

using namespace pointlev;

TEST_CASE("winding balances the point spectrum on the reference couplings") {
    for (Model m : all_models)
        for (double p : table_params(m)) {
            auto res = check_levinson(m, p);
            INFO(model_name(m) << " param " << format_ext(p));
            CHECK(res.pass);
            CHECK(res.winding.snapped == -res.bound_states);
        }
}

TEST_CASE("sweep parameter sets cover both signs and both endpoints") {
    auto ps = sweep_params(1e-3, 1e3, 5);
    REQUIRE(ps.size() == 12);
    int neg = 0, pos = 0, zero = 0, inf = 0;
    for (double p : ps) {
        if (is_inf(p)) ++inf;
        else if (p == 0) ++zero;
        else if (p < 0) ++neg;
        else ++pos;
    }
    CHECK(neg == 5);
    CHECK(pos == 5);
    CHECK(zero == 1);
    CHECK(inf == 1);
    CHECK(std::abs(ps[0] + 1e-3) < 1e-18);
    CHECK(std::abs(ps[4] + 1e3) < 1e-12);
}

TEST_CASE("short sweeps hold across every model") {
    for (Model m : all_models) {
        auto results = sweep_levinson(m, 1e-2, sweep_hi_default(m), 6);
        for (const auto& r : results) {
            INFO(model_name(m) << " param " << format_ext(r.param));
            CHECK(r.pass);
        }
    }
}

TEST_CASE("extreme couplings at the sweep edges still resolve") {
    for (double a : {-40.0, 40.0}) {
        auto r = check_levinson(Model::Delta2, a);
        CHECK(r.pass);
        CHECK(r.bound_states == 1);
    }
    for (double a : {-1e3, 1e3}) {
        auto r3 = check_levinson(Model::Delta3, a);
        CHECK(r3.pass);
        auto r1 = check_levinson(Model::Delta1, a);
        CHECK(r1.pass);
        auto rp = check_levinson(Model::DeltaPrime1, a);
        CHECK(rp.pass);
    }
}
