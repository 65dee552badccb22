#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "phasefront/eos.hpp"
#include "phasefront/errors.hpp"
#include "phasefront/pearcey.hpp"

using namespace phasefront;

TEST_CASE("Lambda(0,0) closed form and origin moments") {
    const auto v = pearcey_moments(0.0, 0.0);
    // 8^{1/4} Gamma(1/4) / 2 by the substitution t = z^4/8
    CHECK(v.Lambda == doctest::Approx(3.048762374932).epsilon(1e-10));
    CHECK(v.log_scale == doctest::Approx(0.0).epsilon(1e-15));
    // second normalized moment: 8^{1/2} Gamma(3/4) / Gamma(1/4)
    CHECK(v.m[2] / v.m[0] == doctest::Approx(0.955977594972).epsilon(1e-9));
    CHECK(v.u == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(v.du_dX == doctest::Approx(-0.5 * 0.955977594972).epsilon(1e-9));
}

TEST_CASE("moment recursion identities from integration by parts") {
    // M3 = Y M1 - X M0 and M4 = Y M2 - X M1 + 2 M0; each moment comes from
    // its own quadrature, so these are real consistency checks.
    for (auto [X, Y] : {std::pair{1.5, -2.0}, {-3.0, 4.0}, {0.7, 6.0}, {-5.0, -8.0}}) {
        const auto v = pearcey_moments(X, Y);
        const double scale3 = std::abs(v.m[3]) + std::abs(v.m[0]) + 1.0;
        const double scale4 = std::abs(v.m[4]) + std::abs(v.m[0]) + 1.0;
        CHECK(std::abs(v.m[3] - (Y * v.m[1] - X * v.m[0])) <= 1e-10 * scale3);
        CHECK(std::abs(v.m[4] - (Y * v.m[2] - X * v.m[1] + 2.0 * v.m[0])) <= 1e-10 * scale4);
    }
}

TEST_CASE("profile symmetry: odd in X, zero on the axis") {
    for (double Y : {-5.0, 0.0, 5.0, 25.0})
        CHECK(std::abs(pearcey_moments(0.0, Y).u) <= 1e-9);
    for (auto [X, Y] : {std::pair{1.3, 2.4}, {4.0, -6.0}, {0.25, 9.0}}) {
        const double up = pearcey_moments(X, Y).u;
        const double um = pearcey_moments(-X, Y).u;
        CHECK(up == doctest::Approx(-um).epsilon(1e-10));
    }
}

TEST_CASE("structural fields of a PearceyValue") {
    for (auto [X, Y] : {std::pair{2.0, 1.0}, {-1.0, -1.0}, {3.0, -5.0}}) {
        const auto v = pearcey_moments(X, Y);
        CHECK(v.Lambda > 0.0);
        CHECK(v.u == doctest::Approx(-2.0 * v.dLambda_dX / v.Lambda).epsilon(1e-13));
        CHECK(v.dLambda_dY == v.d2Lambda_dX2); // identical by the moment algebra
    }
}

TEST_CASE("heat-equation residual") {
    CHECK(heat_residual(0.0, 0.0) <= 1e-8);
    CHECK(heat_residual(3.0, -5.0) <= 1e-6);
    CHECK(heat_residual(-2.0, 4.0) <= 1e-6);
}

TEST_CASE("advection-diffusion residual of u") {
    CHECK(burgers_residual(0.0, 2.0) <= 1e-8);
    CHECK(burgers_residual(0.0, -4.0) <= 1e-8);
    CHECK(burgers_residual(1.0, 2.0) <= 1e-6);
    CHECK(burgers_residual(0.5, -3.0) <= 1e-6);
}

TEST_CASE("second-order ODE residual of the rescaled profile") {
    CHECK(ode_residual(0.0, 3.0) <= 1e-8);
    CHECK(ode_residual(2.0, 1.0) <= 1e-6);
    CHECK(ode_residual(-1.0, -1.0) <= 1e-6);
}

TEST_CASE("inviscid cubic limit") {
    SUBCASE("Y = 0 reduces to a pure cube root") {
        CHECK(cubic_limit(8.0, 0.0) == doctest::Approx(-2.0).epsilon(1e-12));
        CHECK(cubic_limit(-27.0, 0.0) == doctest::Approx(3.0).epsilon(1e-12));
        CHECK(cubic_limit(0.5, 0.0) == doctest::Approx(-std::cbrt(0.5)).epsilon(1e-12));
    }
    SUBCASE("dominant saddle near the caustic") {
        const double root = cubic_limit(5.0, -10.0);
        CHECK(root == doctest::Approx(-0.4883533127285652).epsilon(1e-10));
        const double u = pearcey_moments(5.0, -10.0).u;
        CHECK(std::abs(root - u) / std::abs(u) <= 0.05);
    }
    SUBCASE("tie on the shock line is an error, quadrature gives the midpoint") {
        CHECK_THROWS_AS(cubic_limit(0.0, 4.0), InfeasibleError);
        CHECK(std::abs(pearcey_moments(0.0, 4.0).u) <= 1e-9);
    }
}

TEST_CASE("u is strictly decreasing in X before the caustic") {
    const double Y = -4.0;
    double prev = pearcey_moments(-6.0, Y).u;
    for (int i = 1; i <= 12; ++i) {
        const double X = -6.0 + i;
        const double cur = pearcey_moments(X, Y).u;
        CHECK(cur < prev);
        prev = cur;
    }
}

TEST_CASE("the viscous shock sharpens toward the outer saddles as Y grows") {
    const double s = std::sqrt(25.0);
    const double up = pearcey_moments(-0.5, 25.0).u;
    const double um = pearcey_moments(0.5, 25.0).u;
    CHECK(up >= 0.8 * s);
    CHECK(up <= s);
    CHECK(um <= -0.8 * s);
    CHECK(um >= -s);
}

TEST_CASE("sigma selection for hydrogen") {
    const auto eos = vdw_spec(hydrogen_params());
    const auto cp = critical_point(eos);
    const double sigma = sigma_matching(eos, cp, 1.0);
    CHECK(sigma < 0.0);
    CHECK(sigma == doctest::Approx(-0.763703).epsilon(1e-4));
    const double alpha1 = sigma * eos.alpha.d1(cp.V_c);
    CHECK(alpha1 < 0.0);
    // negative gamma0 flips the fourth-root argument negative here
    CHECK_THROWS_AS(sigma_matching(eos, cp, -1.0), InfeasibleError);
}

TEST_CASE("cubic coefficient identity c3 = gamma0 / (alpha' sigma^4)") {
    for (const auto& eos : {vdw_spec(hydrogen_params()), vdw_reduced()}) {
        const auto cp = critical_point(eos);
        const auto cc = local_cubic_coeffs(eos, cp);
        for (double g0 : {0.5, 1.0, 2.0}) {
            const double sigma = sigma_matching(eos, cp, g0);
            const double s4 = sigma * sigma * sigma * sigma;
            const double c3_alt = g0 / (eos.alpha.d1(cp.V_c) * s4);
            CHECK(cc.c3 == doctest::Approx(c3_alt).epsilon(1e-12));
        }
    }
}

TEST_CASE("the reduced gas admits the unit scaling constant") {
    // 6 g0 / (alpha' f''') = 1 exactly at g0 = 9/64: alpha' = 3/8, f''' = 9/4.
    const auto eos = vdw_reduced();
    const auto cp = critical_point(eos);
    const double sigma = sigma_matching(eos, cp, 9.0 / 64.0);
    CHECK(sigma == doctest::Approx(-1.0).epsilon(1e-9));
    const auto map = make_scaling_map(eos, cp, 9.0 / 64.0, 1e-6);
    CHECK(map.alpha1 == doctest::Approx(-3.0 / 8.0).epsilon(1e-9));
    CHECK(map.alpha0 == doctest::Approx(0.25).epsilon(1e-9));
    CHECK(map.alpha1 * map.gamma0 < 0.0);
}

TEST_CASE("scaling map fixes the critical point and stays odd in T") {
    const auto eos = vdw_reduced();
    const auto cp = critical_point(eos);
    const auto map = make_scaling_map(eos, cp, 9.0 / 64.0, 1e-6);

    const auto [X0, Y0] = map.xy(cp.P_c, cp.T_c);
    CHECK(X0 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(Y0 == doctest::Approx(0.0).epsilon(1e-12));
    CHECK(universal_volume(cp.P_c, cp.T_c, map) == doctest::Approx(cp.V_c).epsilon(1e-12));
    CHECK(map.in_window(cp.P_c, cp.T_c));
    CHECK_FALSE(map.in_window(cp.P_c, cp.T_c + 1.0));

    // X is odd under T -> 2 T_c - T at P = P_c, so the volume offset flips sign
    const double dT = 2.0 * std::pow(map.nu, 0.75) * std::abs(map.gamma0 / map.alpha1);
    const double dVp = universal_volume(cp.P_c, cp.T_c + dT, map) - cp.V_c;
    const double dVm = universal_volume(cp.P_c, cp.T_c - dT, map) - cp.V_c;
    CHECK(dVp == doctest::Approx(-dVm).epsilon(1e-10));

    CHECK_THROWS_AS(make_scaling_map(eos, cp, 9.0 / 64.0, 0.0), ConfigError);
}

TEST_CASE("universal volume tracks the exact isotherm roots off the shock line") {
    const auto eos = vdw_reduced();
    const auto cp = critical_point(eos);
    const auto map = make_scaling_map(eos, cp, 0.0036, 1e-6);
    for (auto [X, Y] : {std::pair{-36.0, -12.0}, {-20.0, -7.0}, {28.0, -12.0}}) {
        // invert the affine map to physical coordinates
        const double Pbar = -map.gamma0 / (map.alpha1 * map.alpha1) * Y * std::sqrt(map.nu);
        const double Tbar = -map.gamma0 / map.alpha1 * X * std::pow(map.nu, 0.75);
        const double P = cp.P_c + Pbar;
        const double T = cp.T_c + map.alpha0 * Pbar + Tbar;
        const double Vu = universal_volume(P, T, map);
        const auto roots = solve_volumes(P, T, eos);
        const double Vx = (X < 0.0) ? roots.front() : roots.back();
        CHECK(Vu == doctest::Approx(Vx).epsilon(2e-3));
    }
}
