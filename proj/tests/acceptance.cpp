// Acceptance gate: one line per criterion, nonzero exit when any fails.
#include <chrono>
#include <cmath>
#include <cstdio>
#include <exception>
#include <string>
#include <utility>
#include <vector>

#include "phasefront/analysis.hpp"
#include "phasefront/coexistence.hpp"
#include "phasefront/eos.hpp"
#include "phasefront/errors.hpp"
#include "phasefront/fit.hpp"
#include "phasefront/numerics.hpp"
#include "phasefront/pearcey.hpp"
#include "phasefront/shock.hpp"
#include "phasefront/viscous.hpp"

using namespace phasefront;

namespace {

int failures = 0;

std::string fmt(double v) {
    char buf[64];
    std::snprintf(buf, sizeof buf, "%.4g", v);
    return buf;
}

using Result = std::pair<bool, std::string>;

template <class F>
void criterion(int idx, const char* name, double budget_s, F&& body) {
    const auto t0 = std::chrono::steady_clock::now();
    bool ok = false;
    std::string detail;
    try {
        Result r = body();
        ok = r.first;
        detail = std::move(r.second);
    } catch (const std::exception& e) {
        detail = std::string("exception: ") + e.what();
    }
    const double secs =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_budget = budget_s <= 0.0 || secs < budget_s;
    const bool pass = ok && in_budget;
    if (!pass) ++failures;
    if (budget_s > 0.0)
        std::printf("[%s] %2d. %s: %s (%.2f s, budget %g s)\n", pass ? "PASS" : "FAIL", idx,
                    name, detail.c_str(), secs, budget_s);
    else
        std::printf("[%s] %2d. %s: %s (%.2f s)\n", pass ? "PASS" : "FAIL", idx, name,
                    detail.c_str(), secs);
    std::fflush(stdout);
}

Result hydrogen_critical_volume() {
    const auto eos = vdw_spec(hydrogen_params());
    const auto cp = critical_point(eos);
    const double rel = std::abs(cp.V_c - 0.07983) / 0.07983;
    return {rel <= 1e-4, "V_c=" + fmt(cp.V_c) + " rel_err=" + fmt(rel) + " <= 1e-4"};
}

Result hydrogen_sign_logic() {
    const auto eos = vdw_spec(hydrogen_params());
    const auto cp = critical_point(eos);
    const auto p = hydrogen_params();
    const double fppp = eos.f.d3(cp.V_c);
    const double a1p = eos.alpha.d1(cp.V_c);
    const double sigma = sigma_matching(eos, cp, 1.0);
    const double alpha1 = sigma * a1p;
    const bool ok = fppp > 0.0 && a1p > 0.0 &&
                    std::abs(a1p * p.n * p.R - 1.0) <= 1e-12 && sigma < 0.0 && alpha1 < 0.0;
    return {ok, "f'''=" + fmt(fppp) + ">0 alpha'=" + fmt(a1p) + "=1/(nR)>0 sigma=" +
                    fmt(sigma) + "<0 alpha1=" + fmt(alpha1) + "<0"};
}

Result pearcey_identities() {
    const auto axis = num::linspace(-10.0, 10.0, 21);
    double worst_heat = 0.0, worst_burgers = 0.0, worst_ode = 0.0;
    for (double X : axis)
        for (double Y : axis) {
            worst_heat = std::max(worst_heat, std::abs(heat_residual(X, Y)));
            worst_burgers = std::max(worst_burgers, std::abs(burgers_residual(X, Y)));
            worst_ode = std::max(worst_ode, std::abs(ode_residual(X, Y)));
        }
    const auto pv = pearcey_moments(0.0, 0.0);
    const double lam = pv.Lambda * std::exp(pv.log_scale);
    const double ref = std::pow(8.0, 0.25) * std::tgamma(0.25) / 2.0;
    const double lam_rel = std::abs(lam - ref) / ref;
    const bool ok =
        worst_heat <= 1e-6 && worst_burgers <= 1e-6 && worst_ode <= 1e-6 && lam_rel <= 1e-8;
    return {ok, "max residuals heat=" + fmt(worst_heat) + " burgers=" + fmt(worst_burgers) +
                    " ode=" + fmt(worst_ode) + " <= 1e-6; Lambda(0,0) rel_err=" +
                    fmt(lam_rel) + " <= 1e-8"};
}

Result universality_matching() {
    const auto eos = vdw_reduced();
    const auto cp = critical_point(eos);
    const double nu = 1e-6;
    const auto map = make_scaling_map(eos, cp, 0.0036, nu);

    std::vector<std::pair<double, double>> pts;
    for (double X : {-36.0, -28.0, -20.0, -14.0})
        for (double Y : {-5.0, -7.0, -9.0, -12.0}) pts.push_back({X, Y});
    for (double X : {14.0, 20.0, 28.0, 36.0}) pts.push_back({X, -12.0});

    double worst = 0.0;
    int used = 0;
    for (const auto& [X, Y] : pts) {
        const double Pbar = -map.gamma0 * Y / (map.alpha1 * map.alpha1);
        const double Tbar = -map.gamma0 * X / map.alpha1;
        const double P = cp.P_c + std::sqrt(nu) * Pbar;
        const double T = cp.T_c + map.alpha0 * (P - cp.P_c) + std::pow(nu, 0.75) * Tbar;
        if (!map.in_window(P, T)) return {false, "probe left the asymptotic window"};
        const double Vu = universal_volume(P, T, map);
        const auto roots = solve_volumes(P, T, eos);
        const double Vr = X < 0.0 ? roots.front() : roots.back();
        worst = std::max(worst, std::abs(Vu - Vr) / std::abs(Vr));
        ++used;
    }
    return {worst <= 1e-3 && used == 20,
            "20 in-window points, worst rel_err=" + fmt(worst) + " <= 1e-3"};
}

Result critical_exponents() {
    const auto eos = vdw_reduced();
    const auto map = make_scaling_map(eos, critical_point(eos), 9.0 / 64.0, 1e-6);
    const auto nus = num::logspace(1e-6, 1e-3, 7);
    const auto g = compressibility_scaling(map, nus);
    const auto b = volume_jump_scaling(map, nus);
    const bool ok = std::abs(g.value - 0.5) <= 0.02 && std::abs(b.value - 0.5) <= 0.02;
    return {ok, "gamma=" + fmt(g.value) + " beta=" + fmt(b.value) + " both within 0.50 +/- 0.02"};
}

Result maxwell_equals_gibbs() {
    const auto eos = vdw_reduced();
    double worst_gibbs = 0.0, worst_area = 0.0;
    for (double T : {0.7, 0.8, 0.9, 0.95}) {
        const auto sp = maxwell_pressure(T, eos);
        worst_gibbs = std::max(worst_gibbs, std::abs(gibbs_difference(sp.P_sat, T, eos)));
        worst_area = std::max(worst_area, std::abs(sp.area_residual));
    }
    return {worst_gibbs <= 1e-9 && worst_area <= 1e-10,
            "max |gibbs_difference|=" + fmt(worst_gibbs) + " <= 1e-9, max equal-areas residual=" +
                fmt(worst_area) + " <= 1e-10"};
}

Result clapeyron_equals_rh() {
    const auto eos = vdw_reduced();
    const auto vs = VolumeEntropySpec::vdw(*eos.vdw);
    const double h = 1e-5;
    double worst = 0.0;
    for (double T : num::linspace(0.5, 0.98, 25)) {
        const auto sp = maxwell_pressure(T, eos);
        const double rh = clapeyron_speed(sp, vs);
        const double slope =
            (maxwell_pressure(T + h, eos).P_sat - maxwell_pressure(T - h, eos).P_sat) /
            (2.0 * h);
        worst = std::max(worst, std::abs(rh - slope) / std::abs(slope));
    }
    return {worst <= 1e-4, "25 temperatures in [0.5, 0.98], worst rel gap=" + fmt(worst) +
                               " <= 1e-4"};
}

Result viscous_pde() {
    const auto eos = vdw_reduced();
    const auto& p = *eos.vdw;

    // part 1: vanishing-viscosity convergence to the characteristic solution
    const double P0 = 1.2, P1 = 0.9, T_lo = 1.2, T_hi = 2.0;
    GridSpec grid;
    grid.nt = 2048;
    grid.snapshots = 2;
    const BoundarySpec bc{characteristic_boundary(eos, T_lo, Branch::unique),
                          characteristic_boundary(eos, T_hi, Branch::unique)};
    const num::Fn ic = [&](double T) { return solve_volumes(P0, T, eos).front(); };

    const std::vector<double> nus = {1e-2, 1e-3, 1e-4};
    std::vector<double> errs;
    for (double nu : nus) {
        const auto coeffs = vdw_viscous_coeffs(p, 1.0, nu);
        const auto sol = evolve_viscous(coeffs, ic, P0, P1, T_lo, T_hi, bc, grid);
        const auto last = sol.row(sol.P.size() - 1);
        double e = 0.0;
        for (std::size_t j = 0; j < sol.T.size(); ++j)
            e = std::max(e, std::abs(last[j] - solve_volumes(P1, sol.T[j], eos).front()));
        errs.push_back(e);
    }
    std::vector<double> lx(nus.size()), ly(nus.size());
    for (std::size_t i = 0; i < nus.size(); ++i) {
        lx[i] = std::log(nus[i]);
        ly[i] = std::log(errs[i]);
    }
    const double order = num::fit_line(lx, ly).slope;

    // part 2: agreement with the universal profile across the shock window
    const double nu = 1e-4;
    const auto cp = critical_point(eos);
    const auto map = make_scaling_map(eos, cp, 9.0 / 64.0, nu);
    const double Pa = 1.12, Pb = 0.99, Ta = 0.97, Tb = 1.05;
    GridSpec fine;
    fine.nt = 4096;
    fine.snapshots = 2;
    const BoundarySpec bc2{characteristic_boundary(eos, Ta, Branch::unique),
                           characteristic_boundary(eos, Tb, Branch::unique)};
    const num::Fn ic2 = [&](double T) { return universal_volume(Pa, T, map); };
    const auto coeffs = constant_gamma_coeffs(p, 9.0 / 64.0, nu);
    const auto sol = evolve_viscous(coeffs, ic2, Pa, Pb, Ta, Tb, bc2, fine);

    const auto last = sol.row(sol.P.size() - 1);
    const double scale = std::abs(map.sigma) * std::pow(nu, 0.25);
    double num_max = 0.0, u_max = 0.0;
    for (std::size_t j = 0; j < sol.T.size(); ++j) {
        const auto [X, Y] = map.xy(Pb, sol.T[j]);
        if (std::abs(X) > 10.0) continue;
        const double expect = universal_volume(Pb, sol.T[j], map);
        num_max = std::max(num_max, std::abs(last[j] - expect));
        u_max = std::max(u_max, std::abs(expect - cp.V_c));
        (void)Y;
    }
    const double window_err = num_max / std::max(u_max, scale);
    const bool ok = order >= 0.9 && window_err <= 0.05;
    return {ok, "convergence order=" + fmt(order) + " >= 0.9; shock-window profile gap=" +
                    fmt(window_err) + " <= 0.05"};
}

Result shock_confluence() {
    // part 1: two-jump Burgers merge against the outer-state speed
    const BurgersColeHopf ch({-30.0, -0.1, 0.1, 3.9, 4.1, 40.0},
                             {4.0, 4.0, 2.0, 2.0, -2.0, -2.0});
    const double p6 = burgers_shock_position(ch, 6.0, 1.0, -10.0, 20.0);
    const double p10 = burgers_shock_position(ch, 10.0, 1.0, -10.0, 25.0);
    const double speed = (p10 - p6) / 4.0;
    const double rh = 0.5 * (4.0 + -2.0);
    const double merge_gap = std::abs(speed - rh);

    // part 2: fusion + vapor trajectories meeting at a synthetic triple point
    const auto eos = vdw_reduced();
    const double nb = eos.vdw->n * eos.vdw->b, nR = eos.vdw->n * eos.vdw->R;
    auto liquid_v = [&eos](double P, double T) { return solve_volumes(P, T, eos).front(); };
    auto gas_v = [&eos](double P, double T) { return solve_volumes(P, T, eos).back(); };
    const PhaseState solid{"solid", [](double, double) { return 0.45; },
                           [](double, double) { return -7.0; }};
    const PhaseState liquid{"liquid", liquid_v, [&, liquid_v](double P, double T) {
                                return nR * std::log(liquid_v(P, T) - nb);
                            }};
    const PhaseState gas{"gas", gas_v, [&, gas_v](double P, double T) {
                             return nR * std::log(gas_v(P, T) - nb);
                         }};

    const auto fusion = propagate_shock(solid, liquid, 0.9, 1.0, 0.88, 5e-4);
    const auto vapor = propagate_shock(liquid, gas, 0.9, 0.6469983519, 0.88, 5e-4);
    const auto ev = detect_confluence(fusion, vapor);

    const double Vg = gas_v(ev.P_triple, ev.T_triple);
    const double Sg = nR * std::log(Vg - nb);
    const double u3_direct = (Sg - -7.0) / (Vg - 0.45);
    const double u3_gap = std::abs(ev.U3 - u3_direct) / std::abs(u3_direct);
    const double on_a = std::abs(fusion.pressure_at(ev.T_triple) - ev.P_triple);
    const double on_b = std::abs(vapor.pressure_at(ev.T_triple) - ev.P_triple);

    const bool ok = merge_gap <= 1e-3 && u3_gap <= 1e-6 && on_a <= 1e-9 && on_b <= 1e-9;
    return {ok, "merge speed gap=" + fmt(merge_gap) + " <= 1e-3; U3 rel gap=" + fmt(u3_gap) +
                    " <= 1e-6 at T*=" + fmt(ev.T_triple)};
}

Result eos_fit_round_trip() {
    const auto eos = vdw_reduced();
    const auto grid = num::linspace(0.5, 5.0, 200);
    IsothermDataset d1, d2;
    d1.T = 1.2;
    d2.T = 1.5;
    d1.V = d2.V = grid;
    for (double v : grid) {
        d1.P.push_back(isotherm_pressure(v, d1.T, eos));
        d2.P.push_back(isotherm_pressure(v, d2.T, eos));
    }
    const auto fitted = fit_alpha_f(d1, d2);
    const auto& tab = *fitted.table;
    double worst_af = 0.0;
    for (std::size_t i = 0; i < tab.V.size(); ++i) {
        const double a = (3.0 * tab.V[i] - 1.0) / 8.0;
        const double f = 3.0 * (3.0 * tab.V[i] - 1.0) / (8.0 * tab.V[i] * tab.V[i]);
        worst_af = std::max(worst_af, std::abs(tab.alpha[i] - a) / a);
        worst_af = std::max(worst_af, std::abs(tab.f[i] - f) / std::max(1.0, std::abs(f)));
    }
    const auto curve = predict_isotherm(fitted, 1.35);
    double worst_p = 0.0;
    for (std::size_t i = 0; i < curve.V.size(); ++i) {
        const double truth = isotherm_pressure(curve.V[i], 1.35, eos);
        worst_p = std::max(worst_p, std::abs(curve.P[i] - truth) / std::max(1.0, std::abs(truth)));
    }
    return {worst_af <= 1e-6 && worst_p <= 1e-5,
            "alpha/f worst rel_err=" + fmt(worst_af) + " <= 1e-6; unseen isotherm worst rel_err=" +
                fmt(worst_p) + " <= 1e-5"};
}

} // namespace

int main() {
    criterion(1, "hydrogen critical volume", 1.0, hydrogen_critical_volume);
    criterion(2, "hydrogen sign logic", 0.0, hydrogen_sign_logic);
    criterion(3, "Pearcey identities on the 21x21 grid", 30.0, pearcey_identities);
    criterion(4, "universal volume matches the state surface", 10.0, universality_matching);
    criterion(5, "critical exponents gamma and beta", 30.0, critical_exponents);
    criterion(6, "Maxwell pressure equals the Gibbs condition", 0.0, maxwell_equals_gibbs);
    criterion(7, "Clapeyron slope equals the jump ratio", 0.0, clapeyron_equals_rh);
    criterion(8, "viscous marching: order and universal profile", 300.0, viscous_pde);
    criterion(9, "shock confluence and merge speeds", 60.0, shock_confluence);
    criterion(10, "two-isotherm fit round trip", 5.0, eos_fit_round_trip);

    std::printf("acceptance: %d/10 passed\n", 10 - failures);
    return failures == 0 ? 0 : 1;
}
