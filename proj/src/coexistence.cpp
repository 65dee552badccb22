#include "phasefront/coexistence.hpp"

#include <algorithm>
#include <cmath>

#include "phasefront/errors.hpp"

namespace phasefront {

VolumeEntropySpec VolumeEntropySpec::vdw(const VdwParams& p) {
    const double nb = p.n * p.b, nR = p.n * p.R;
    VolumeEntropySpec s;
    s.S0 = [nb, nR](double V) { return nR * std::log(V - nb); };
    s.S0_d1 = [nb, nR](double V) { return nR / (V - nb); };
    return s;
}

VolumeEntropySpec VolumeEntropySpec::from_eos(const EosSpec& eos, double V_ref) {
    VolumeEntropySpec s;
    const SurfaceFn alpha = eos.alpha;
    s.S0 = [alpha, V_ref](double V) {
        return num::integrate_gk([&](double v) { return 1.0 / alpha(v); }, V_ref, V);
    };
    s.S0_d1 = [alpha](double V) { return 1.0 / alpha(V); };
    return s;
}

namespace {

struct IsothermExtrema {
    double V_min, V_max; // volumes of the local pressure minimum / maximum
    double P_min, P_max;
};

// dP/dV = 0 where N(V) = -f'(V) alpha(V) - (T - f(V)) alpha'(V) vanishes.
IsothermExtrema find_spinodal(double T, const EosSpec& eos, const CriticalPoint& cp) {
    auto N = [&](double V) {
        return -eos.f.d1(V) * eos.alpha(V) - (T - eos.f(V)) * eos.alpha.d1(V);
    };
    auto collect = [&](const std::vector<double>& grid) {
        std::vector<double> roots;
        for (const auto& [a, b] : num::sign_change_brackets(N, grid))
            roots.push_back(a == b ? a : num::bracket_root(N, a, b));
        return roots;
    };
    SolveOptions opts;
    double lo, hi;
    if (eos.vdw) {
        lo = eos.vdw->n * eos.vdw->b * (1.0 + 1e-9);
        hi = 1e3 * cp.V_c;
    } else {
        lo = eos.V_lo;
        hi = eos.V_hi;
    }
    auto roots = collect(lo > 0.0 ? num::logspace(lo, hi, opts.scan_points)
                                  : num::linspace(lo, hi, opts.scan_points));
    if (roots.size() < 2) {
        // near T_c the extrema sit within O(sqrt(T_c - T)) of V_c; refine there
        const CubicCoeffs cc = local_cubic_coeffs(eos, cp);
        const double dT = std::max(cp.T_c - T, 0.0);
        const double w = 6.0 * std::sqrt(dT * std::abs(cc.c1 / (3.0 * cc.c3 * eos.alpha(cp.V_c))));
        if (w > 0.0)
            roots = collect(num::linspace(std::max(lo, cp.V_c - w), std::min(hi, cp.V_c + w),
                                          opts.scan_points));
    }
    if (roots.size() < 2)
        throw ConvergenceError("spinodal: isotherm extrema not found at T=" + std::to_string(T));
    std::sort(roots.begin(), roots.end());
    IsothermExtrema ex;
    ex.V_min = roots.front();
    ex.V_max = roots.back();
    ex.P_min = isotherm_pressure(ex.V_min, T, eos);
    ex.P_max = isotherm_pressure(ex.V_max, T, eos);
    if (ex.P_min > ex.P_max) {
        std::swap(ex.V_min, ex.V_max);
        std::swap(ex.P_min, ex.P_max);
    }
    return ex;
}

struct AreaEval {
    double area;
    double V_l, V_g;
};

// Signed equal-areas defect: integral of (P_iso - P) between the outer roots.
AreaEval area_defect(double P, double T, const EosSpec& eos) {
    const auto roots = solve_volumes(P, T, eos);
    if (roots.size() < 2)
        throw ConvergenceError("maxwell: missing outer roots at P=" + std::to_string(P));
    const double V_l = roots.front(), V_g = roots.back();
    // relative-error quadrature: the equal-areas defect cancels two O(1) lobes, so an
    // absolute tolerance has no usable scale (the lobes dwarf |P| (V_g - V_l) at low T)
    const double area = num::integrate_gk(
        [&](double V) { return isotherm_pressure(V, T, eos) - P; }, V_l, V_g, 1e-13, 15);
    return {area, V_l, V_g};
}

} // namespace

std::pair<double, double> spinodal_volumes(double T, const EosSpec& eos, const CriticalPoint* cp) {
    const CriticalPoint c = cp ? *cp : critical_point(eos);
    const auto ex = find_spinodal(T, eos, c);
    return {std::min(ex.V_min, ex.V_max), std::max(ex.V_min, ex.V_max)};
}

SaturationPoint maxwell_pressure(double T, const EosSpec& eos, const CriticalPoint* cp,
                                 double P_hint) {
    const CriticalPoint c = cp ? *cp : critical_point(eos);
    if (!(T > 0.0)) throw ConfigError("maxwell_pressure: T must be positive");
    if (T >= c.T_c * (1.0 - 1e-6))
        throw InfeasibleError("maxwell_pressure: no phase transition at T >= T_c (1 - 1e-6)");

    const auto ex = find_spinodal(T, eos, c);
    const double nudge = 1e-12 * std::max(std::abs(ex.P_max), std::abs(c.P_c));
    double P_hi = ex.P_max - nudge;
    double P_lo = ex.P_min + nudge;
    auto defect = [&](double P) { return area_defect(P, T, eos).area; };
    bool bracketed = false;
    if (P_hint > 0.0) {
        const double a = std::max(std::max(P_lo, nudge), 0.7 * P_hint);
        const double b = std::min(P_hi, 1.4 * P_hint);
        if (a < b && defect(a) > 0.0 && defect(b) < 0.0) {
            P_lo = a;
            P_hi = b;
            bracketed = true;
        }
    }
    if (!bracketed && P_lo <= 0.0) {
        // the loop dips below zero pressure; outer roots only exist for P > 0
        P_lo = 0.5 * P_hi;
        int guard = 0;
        while (area_defect(P_lo, T, eos).area < 0.0) {
            P_lo *= 0.5;
            if (++guard > 200)
                throw ConvergenceError("maxwell_pressure: failed to bracket the equal-areas point");
        }
    }
    double P_sat = num::bracket_root(defect, P_lo, P_hi);
    // Newton polish: dA/dP = -(V_g - V_l)
    for (int i = 0; i < 3; ++i) {
        const auto ev = area_defect(P_sat, T, eos);
        const double dA = -(ev.V_g - ev.V_l);
        if (dA == 0.0) break;
        const double step = -ev.area / dA;
        if (!std::isfinite(step) || std::abs(step) > 0.1 * P_sat) break;
        P_sat += step;
    }

    const auto ev = area_defect(P_sat, T, eos);
    SaturationPoint sp;
    sp.T = T;
    sp.P_sat = P_sat;
    sp.V_l = ev.V_l;
    sp.V_g = ev.V_g;
    sp.delta_V = ev.V_g - ev.V_l;
    sp.delta_S =
        num::integrate_gk([&](double V) { return 1.0 / eos.alpha(V); }, ev.V_l, ev.V_g, 1e-13);
    sp.latent_heat = T * sp.delta_S;
    sp.area_residual = ev.area;
    return sp;
}

double gibbs_difference(double P, double T, const EosSpec& eos) {
    const auto roots = solve_volumes(P, T, eos);
    if (roots.size() != 3)
        throw ConfigError("gibbs_difference: isotherm has " + std::to_string(roots.size()) +
                          " roots at this (P, T); need exactly 3");
    // integral of V dP along the isotherm path, parameterized by V; relative-error
    // quadrature keeps the cancellation resolvable at any pressure scale
    return num::integrate_gk(
        [&](double V) { return V * isotherm_pressure_dV(V, T, eos); }, roots.front(), roots.back(),
        1e-13, 15);
}

CoexistenceCurve coexistence_curve(double T_lo, double T_hi, int steps, const EosSpec& eos) {
    const CriticalPoint c = critical_point(eos);
    if (!(0.0 < T_lo && T_lo < T_hi && T_hi < c.T_c))
        throw ConfigError("coexistence_curve: need 0 < T_lo < T_hi < T_c");
    if (steps < 2) throw ConfigError("coexistence_curve: need at least 2 steps");
    CoexistenceCurve curve;
    curve.points.reserve(static_cast<std::size_t>(steps));
    double hint = 0.0;
    for (double T : num::linspace(T_lo, T_hi, steps)) {
        try {
            curve.points.push_back(maxwell_pressure(T, eos, &c, hint));
        } catch (const Error& e) {
            throw ConvergenceError("coexistence_curve: failure at T=" + std::to_string(T) + ": " +
                                   e.what());
        }
        hint = curve.points.back().P_sat;
    }
    return curve;
}

double clapeyron_speed(const SaturationPoint& sp, const VolumeEntropySpec& s) {
    const double dV = sp.V_g - sp.V_l;
    const double scale = std::max(std::abs(sp.V_g), std::abs(sp.V_l));
    if (std::abs(dV) <= 1e-12 * scale)
        throw ConfigError("clapeyron_speed: degenerate volume jump (too close to T_c)");
    return (s.S0(sp.V_g) - s.S0(sp.V_l)) / dV;
}

} // namespace phasefront
