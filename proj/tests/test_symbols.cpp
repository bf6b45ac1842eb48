#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <complex>
#include <functional>
#include <numbers>
#include <vector>

#include "pointlev/symbols.hpp"

using namespace pointlev;

namespace {

std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> v;
    for (int i = 0; i < n; ++i)
        v.push_back(lo * std::pow(hi / lo, double(i) / (n - 1)));
    return v;
}

// root of a monotone continuous function by bisection; used as an independent
// check on the closed-form bound-state momenta
double bisect(const std::function<double(double)>& h, double a, double b) {
    double fa = h(a);
    for (int i = 0; i < 200; ++i) {
        double m = 0.5 * (a + b), fm = h(m);
        if ((fa < 0) == (fm < 0)) {
            a = m;
            fa = fm;
        } else {
            b = m;
        }
    }
    return 0.5 * (a + b);
}

} // namespace

TEST_CASE("dilation symbol branches and limits") {
    for (Model m : all_models) {
        CHECK(r_sym(m, ext_inf) == cx{-1.0, 0.0});
        CHECK(r_sym(m, -ext_inf) == cx{1.0, 0.0});
    }
    // the half-circle branches are unimodular; conjugate pair in n=1
    for (Model m : {Model::Delta3, Model::Delta1, Model::DeltaPrime1})
        for (double a : {-25.0, -3.0, -0.5, 0.0, 0.5, 3.0, 25.0})
            CHECK(std::abs(std::abs(r_sym(m, a)) - 1.0) < 1e-14);
    CHECK(r_sym(Model::Delta3, 0.3).imag() > 0);
    CHECK(r_sym(Model::DeltaPrime1, 0.3).imag() > 0);
    CHECK(r_sym(Model::Delta1, 0.3).imag() < 0);
    CHECK(std::abs(r_sym(Model::Delta3, 0.3) - std::conj(r_sym(Model::Delta1, 0.3))) < 1e-15);
    // the n=2 branch runs through the real diameter instead, decreasing
    double prev = 1.5;
    for (double a : {-9.0, -1.0, -0.1, 0.0, 0.1, 1.0, 9.0}) {
        cx r = r_sym(Model::Delta2, a);
        CHECK(r.imag() == 0.0);
        CHECK(std::abs(r.real()) <= 1.0);
        CHECK(r.real() < prev);
        prev = r.real();
    }
}

TEST_CASE("scattering symbol is unitary") {
    for (Model m : all_models)
        for (double p : {-7.0, -1.0, -0.05, 0.05, 1.0, 7.0})
            for (double eps : log_grid(1e-12, 1e12, 49))
                CHECK(std::abs(std::abs(s_sym(m, p, eps)) - 1.0) < 1e-12);
}

TEST_CASE("scattering symbol endpoint values per coupling regime") {
    // finite nonzero couplings
    for (double p : {-2.0, 0.7}) {
        CHECK(std::abs(s_sym(Model::Delta3, p, 0.0) - cx{1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::Delta3, p, ext_inf) - cx{-1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::Delta1, p, 0.0) - cx{-1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::Delta1, p, ext_inf) - cx{1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::DeltaPrime1, p, 0.0) - cx{1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::DeltaPrime1, p, ext_inf) - cx{-1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::Delta2, p, 0.0) - cx{1, 0}) < 1e-15);
        CHECK(std::abs(s_sym(Model::Delta2, p, ext_inf) - cx{1, 0}) < 1e-15);
    }
    // zero coupling collapses to a constant except in n=2
    for (double eps : {0.0, 0.3, 4.0}) {
        CHECK(s_sym(Model::Delta3, 0.0, eps) == cx{-1, 0});
        CHECK(s_sym(Model::Delta1, 0.0, eps) == cx{1, 0});
        CHECK(s_sym(Model::DeltaPrime1, 0.0, eps) == cx{1, 0});
    }
    CHECK(std::abs(s_sym(Model::Delta2, 0.0, 1e-9) - s_sym(Model::Delta2, 0.0, 1e9)) > 0.1);
    // decoupled endpoints are constant
    for (double eps : {0.0, 1.0, 1e8}) {
        CHECK(s_sym(Model::Delta3, ext_inf, eps) == cx{1, 0});
        CHECK(s_sym(Model::Delta2, ext_inf, eps) == cx{1, 0});
        CHECK(s_sym(Model::Delta1, ext_inf, eps) == cx{-1, 0});
        CHECK(s_sym(Model::DeltaPrime1, ext_inf, eps) == cx{-1, 0});
    }
}

TEST_CASE("the two direction symbols phi partition unity") {
    for (Model m : all_models)
        for (double a : {-9.0, -0.2, 0.0, 0.4, 11.0}) {
            cx sum = phi_sym(m, a, Direction::Minus) + phi_sym(m, a, Direction::Plus);
            CHECK(std::abs(sum - 1.0) == 0.0);
        }
    CHECK(std::abs(phi_sym(Model::Delta3, -ext_inf)) == 0.0);
    CHECK(std::abs(phi_sym(Model::Delta3, ext_inf) - 1.0) == 0.0);
}

TEST_CASE("log-energy form agrees with the energy form") {
    for (Model m : all_models)
        for (double p : {-3.0, 0.8})
            for (double eps : log_grid(1e-10, 1e10, 21)) {
                cx a = s_sym(m, p, eps);
                cx b = s_sym_ell(m, p, std::log(eps));
                CHECK(std::abs(a - b) < 1e-13);
            }
    // far outside double range for eps, the n=2 symbol keeps moving
    cx far = s_sym_ell(Model::Delta2, 1.0, -5e4);
    CHECK(std::abs(far - cx{1, 0}) > 1e-5);
    CHECK(std::abs(std::abs(far) - 1.0) < 1e-12);
}

TEST_CASE("bound state energies match independent root finding") {
    // the bound momentum kappa solves the continued denominator = 0
    for (double alpha : {-0.3, -2.0, -17.0}) {
        double kap = bisect([&](double k) { return 4 * std::numbers::pi * alpha + k; },
                            0.0, 1e4);
        auto ps = point_spectrum(Model::Delta3, alpha);
        REQUIRE(ps.count == 1);
        CHECK(std::abs(*ps.energy - (-kap * kap)) < 1e-9 * kap * kap);
    }
    for (double alpha : {-0.3, -2.0, -17.0}) {
        double kap = bisect([&](double k) { return 2 * k + alpha; }, 0.0, 1e4);
        auto ps = point_spectrum(Model::Delta1, alpha);
        REQUIRE(ps.count == 1);
        CHECK(std::abs(*ps.energy - (-kap * kap)) < 1e-9 * kap * kap);
    }
    for (double beta : {-0.3, -2.0, -17.0}) {
        double kap = bisect([&](double k) { return 2 + beta * k; }, 0.0, 1e4);
        auto ps = point_spectrum(Model::DeltaPrime1, beta);
        REQUIRE(ps.count == 1);
        CHECK(std::abs(*ps.energy - (-kap * kap)) < 1e-9 * kap * kap);
    }
    // positive couplings and the decoupled endpoint bind nothing
    CHECK(point_spectrum(Model::Delta3, 1.0).count == 0);
    CHECK(point_spectrum(Model::Delta1, 0.0).count == 0);
    CHECK(point_spectrum(Model::DeltaPrime1, 5.0).count == 0);
    CHECK(point_spectrum(Model::Delta2, ext_inf).count == 0);
    // n=2 binds at every finite coupling
    CHECK(point_spectrum(Model::Delta2, -8.0).count == 1);
    CHECK(point_spectrum(Model::Delta2, 0.0).count == 1);
    CHECK(point_spectrum(Model::Delta2, 8.0).count == 1);
}

TEST_CASE("n=3 delta and n=1 delta-prime are the same family in disguise") {
    for (double alpha : {-4.0, -0.9, 0.35, 2.0, 30.0}) {
        double beta = 1.0 / (2.0 * std::numbers::pi * alpha);
        for (double a : {-6.0, -0.4, 0.0, 1.2, 8.0})
            CHECK(std::abs(r_sym(Model::Delta3, a) - r_sym(Model::DeltaPrime1, a)) == 0.0);
        for (double eps : log_grid(1e-8, 1e8, 17))
            CHECK(std::abs(s_sym(Model::Delta3, alpha, eps)
                           - s_sym(Model::DeltaPrime1, beta, eps)) < 1e-14);
        auto p3 = point_spectrum(Model::Delta3, alpha);
        auto pp = point_spectrum(Model::DeltaPrime1, beta);
        CHECK(p3.count == pp.count);
        if (p3.count == 1)
            CHECK(std::abs(*p3.energy - *pp.energy) < 1e-12 * std::abs(*p3.energy));
    }
}
