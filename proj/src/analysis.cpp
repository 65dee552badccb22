#include "phasefront/analysis.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "phasefront/errors.hpp"

namespace phasefront {

ScalingMap with_nu(ScalingMap map, double nu) {
    if (!(nu > 0.0)) throw ConfigError("with_nu: nu must be positive");
    map.nu = nu;
    return map;
}

double critical_compressibility(const ScalingMap& map) {
    if (!(map.nu > 0.0)) throw ConfigError("critical_compressibility: nu must be positive");
    const auto pv = pearcey_moments(0.0, 0.0);
    const double dVdP = map.sigma * map.alpha0 * map.alpha1 / map.gamma0 * pv.du_dX /
                        std::sqrt(map.nu);
    return -dVdP / map.cp.V_c;
}

double critical_compressibility_fd(const ScalingMap& map) {
    if (!(map.nu > 0.0)) throw ConfigError("critical_compressibility_fd: nu must be positive");
    const double dX = 1e-4;
    const double dP =
        dX * std::pow(map.nu, 0.75) * std::abs(map.gamma0 / (map.alpha1 * map.alpha0));
    if (!map.in_window(map.cp.P_c + dP, map.cp.T_c) ||
        !map.in_window(map.cp.P_c - dP, map.cp.T_c))
        throw ConfigError("critical_compressibility_fd: probe leaves the asymptotic window");
    const double Vp = universal_volume(map.cp.P_c + dP, map.cp.T_c, map);
    const double Vm = universal_volume(map.cp.P_c - dP, map.cp.T_c, map);
    return -(Vp - Vm) / (2.0 * dP) / map.cp.V_c;
}

namespace {

void require_sweep(const std::vector<double>& nu_list) {
    if (nu_list.size() < 6)
        throw ConfigError("exponent fit: need at least 6 viscosity samples");
    const auto [lo, hi] = std::minmax_element(nu_list.begin(), nu_list.end());
    if (!(*lo > 0.0)) throw ConfigError("exponent fit: viscosities must be positive");
    if (*hi / *lo < 1e3 * (1.0 - 1e-9))
        throw ConfigError("exponent fit: viscosity sweep must span at least 3 decades");
}

ExponentEstimate fit_loglog(std::string name, double sign, const std::vector<double>& nu_list,
                            std::vector<double> quantity) {
    std::vector<double> lx(nu_list.size()), ly(nu_list.size());
    for (std::size_t i = 0; i < nu_list.size(); ++i) {
        if (!(quantity[i] > 0.0))
            throw ConvergenceError("exponent fit: nonpositive measured quantity");
        lx[i] = std::log(nu_list[i]);
        ly[i] = std::log(quantity[i]);
    }
    const auto fit = num::fit_line(lx, ly);
    if (!std::isfinite(fit.slope) || !std::isfinite(fit.slope_stderr))
        throw ConfigError("exponent fit: ill-conditioned least squares");
    ExponentEstimate est;
    est.name = std::move(name);
    est.value = sign * fit.slope;
    est.std_err = fit.slope_stderr;
    const auto [lo, hi] = std::minmax_element(nu_list.begin(), nu_list.end());
    est.nu_lo = *lo;
    est.nu_hi = *hi;
    est.nu = nu_list;
    est.quantity = std::move(quantity);
    return est;
}

} // namespace

ExponentEstimate compressibility_scaling(const ScalingMap& map,
                                         const std::vector<double>& nu_list) {
    require_sweep(nu_list);
    std::vector<double> kt;
    kt.reserve(nu_list.size());
    for (double nu : nu_list) kt.push_back(critical_compressibility_fd(with_nu(map, nu)));
    return fit_loglog("gamma", -1.0, nu_list, std::move(kt));
}

ExponentEstimate volume_jump_scaling(const ScalingMap& map, const std::vector<double>& nu_list,
                                     double delta_p_d) {
    if (!(delta_p_d > 0.0)) throw ConfigError("volume_jump_scaling: delta_p_d must be positive");
    require_sweep(nu_list);
    std::vector<double> jump;
    jump.reserve(nu_list.size());
    for (double nu : nu_list) {
        const ScalingMap m = with_nu(map, nu);
        jump.push_back(std::abs(nu * delta_p_d * critical_compressibility_fd(m) * map.cp.V_c));
    }
    return fit_loglog("beta", +1.0, nu_list, std::move(jump));
}

namespace {

// second derivative on a possibly nonuniform 3-point stencil
double d2_3pt(double fm, double f0, double fp, double hm, double hp) {
    return 2.0 * (fm / (hm * (hm + hp)) - f0 / (hm * hp) + fp / (hp * (hm + hp)));
}

} // namespace

EntropyConvexityReport entropy_convexity_check(const ViscousEntropySpec& spec,
                                               const FieldSolution& sol, const Region& region) {
    const std::size_t nr = sol.P.size(), nc = sol.T.size();
    if (nr < 3 || nc < 5)
        throw ConfigError("entropy_convexity_check: need >= 3 pressure rows and >= 5 "
                          "temperature columns");

    // S on the grid, interior columns only (V_T, V_TT stencils)
    std::vector<double> S(nr * nc, 0.0);
    for (std::size_t i = 0; i < nr; ++i)
        for (std::size_t j = 1; j + 1 < nc; ++j) {
            const double hm = sol.T[j] - sol.T[j - 1], hp = sol.T[j + 1] - sol.T[j];
            const double V = sol.value(i, j);
            const double Vm = sol.value(i, j - 1), Vp = sol.value(i, j + 1);
            const double V_T = (Vp - Vm) / (hm + hp);
            const double V_TT = d2_3pt(Vm, V, Vp, hm, hp);
            S[i * nc + j] = spec.S0(V) + spec.nu * (spec.S1(V) * V_T + spec.S2(V) * V_TT) +
                            spec.F(sol.T[j]);
        }

    struct Sample {
        double P, T, spp, hess;
    };
    std::vector<Sample> samples;
    double spp_scale = 0.0, hess_scale = 0.0;
    for (std::size_t i = 1; i + 1 < nr; ++i) {
        const double hPm = sol.P[i] - sol.P[i - 1], hPp = sol.P[i + 1] - sol.P[i];
        for (std::size_t j = 2; j + 2 < nc; ++j) {
            if (!region.contains(sol.P[i], sol.T[j])) continue;
            const double hTm = sol.T[j] - sol.T[j - 1], hTp = sol.T[j + 1] - sol.T[j];
            const double s_pp =
                d2_3pt(S[(i - 1) * nc + j], S[i * nc + j], S[(i + 1) * nc + j], hPm, hPp);
            const double s_tt =
                d2_3pt(S[i * nc + j - 1], S[i * nc + j], S[i * nc + j + 1], hTm, hTp);
            const double s_pt = (S[(i + 1) * nc + j + 1] - S[(i + 1) * nc + j - 1] -
                                 S[(i - 1) * nc + j + 1] + S[(i - 1) * nc + j - 1]) /
                                ((hPm + hPp) * (hTm + hTp));
            const double hess = s_pp * s_tt - s_pt * s_pt;
            samples.push_back({sol.P[i], sol.T[j], s_pp, hess});
            spp_scale = std::max(spp_scale, std::abs(s_pp));
            hess_scale = std::max(hess_scale, std::abs(hess));
        }
    }
    if (samples.empty())
        throw ConfigError("entropy_convexity_check: region selects no interior grid points");

    EntropyConvexityReport rep;
    rep.points_checked = samples.size();
    rep.min_spp = samples.front().spp;
    rep.min_hessian = samples.front().hess;
    const double eps_spp = 1e-10 * spp_scale, eps_hess = 1e-10 * hess_scale;
    for (const auto& s : samples) {
        rep.min_spp = std::min(rep.min_spp, s.spp);
        rep.min_hessian = std::min(rep.min_hessian, s.hess);
        if (s.spp < -eps_spp) rep.spp_violations.push_back({s.P, s.T, s.spp});
        if (s.hess < -eps_hess) rep.hessian_violations.push_back({s.P, s.T, s.hess});
    }
    return rep;
}

IsentropeConvexityReport isentrope_convexity_check(const ViscousEntropySpec& spec,
                                                   const FieldSolution& sol,
                                                   const Region& region) {
    const std::size_t nr = sol.P.size(), nc = sol.T.size();
    if (nr < 5 || nc < 5)
        throw ConfigError("isentrope_convexity_check: need >= 5 pressure rows and >= 5 "
                          "temperature columns");

    // per-column natural splines P(V); columns where V is not strictly
    // monotone in the march direction stay empty and are skipped
    std::vector<std::unique_ptr<num::CubicSpline>> col(nc);
    for (std::size_t j = 0; j < nc; ++j) {
        std::vector<double> v(nr), p(nr);
        bool inc = true, dec = true;
        for (std::size_t i = 0; i < nr; ++i) {
            v[i] = sol.value(i, j);
            p[i] = sol.P[i];
            if (i > 0) {
                inc = inc && v[i] > v[i - 1];
                dec = dec && v[i] < v[i - 1];
            }
        }
        if (!inc && !dec) continue;
        if (dec) {
            std::reverse(v.begin(), v.end());
            std::reverse(p.begin(), p.end());
        }
        col[j] = std::make_unique<num::CubicSpline>(std::move(v), std::move(p));
    }

    auto c_dir = [&](double V, double T) {
        const double st = spec.F.d1(T);
        if (std::abs(st) < 1e-300)
            throw ConfigError("isentrope_convexity_check: S_T vanishes (need F'(T) != 0)");
        return spec.S0.d1(V) / st;
    };
    // G(V, T_j) = P_V - c P_T with P_T across neighboring columns
    auto G = [&](double V, std::size_t j) {
        const double pt =
            ((*col[j + 1])(V) - (*col[j - 1])(V)) / (sol.T[j + 1] - sol.T[j - 1]);
        return col[j]->deriv(1, V) - c_dir(V, sol.T[j]) * pt;
    };

    IsentropeConvexityReport rep;
    bool first = true;
    for (std::size_t j = 2; j + 2 < nc; ++j) {
        bool ok = true;
        for (std::size_t jj = j - 2; jj <= j + 2; ++jj) ok = ok && col[jj] != nullptr;
        for (std::size_t i = 2; i + 2 < nr; ++i) {
            const double V0 = sol.value(i, j), T0 = sol.T[j];
            if (!region.contains(sol.P[i], T0)) continue;
            if (!ok) {
                ++rep.excluded;
                continue;
            }
            if (col[j]->deriv(1, V0) >= 0.0) {
                ++rep.excluded;
                continue;
            }
            const double hv = 1e-3 * std::abs(sol.value(i + 1, j) - sol.value(i - 1, j));
            if (!(hv > 0.0)) {
                ++rep.excluded;
                continue;
            }
            const double gv = (G(V0 + hv, j) - G(V0 - hv, j)) / (2.0 * hv);
            const double gt = (G(V0, j + 1) - G(V0, j - 1)) / (sol.T[j + 1] - sol.T[j - 1]);
            const double D = gv - c_dir(V0, T0) * gt;
            ++rep.points_checked;
            if (first || D < rep.min_value) rep.min_value = D;
            first = false;
            if (D <= 0.0) rep.violations.push_back({V0, T0, D});
        }
    }
    if (rep.points_checked == 0 && rep.excluded == 0)
        throw ConfigError("isentrope_convexity_check: region selects no interior grid points");
    return rep;
}

} // namespace phasefront
