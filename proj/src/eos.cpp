#include "phasefront/eos.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <memory>

#include "phasefront/errors.hpp"

namespace phasefront {

namespace {

void check_params(const VdwParams& p) {
    if (!(p.a > 0.0) || !(p.b > 0.0) || !(p.n > 0.0) || !(p.R > 0.0))
        throw ConfigError("vdw_spec: a, b, n, R must all be positive");
}

double volume_scale(const EosSpec& eos) {
    if (eos.vdw) return 3.0 * eos.vdw->n * eos.vdw->b;
    return 0.5 * (eos.V_lo + eos.V_hi);
}

void check_domain(double V, const EosSpec& eos) {
    if (!(V > eos.V_lo) || !(V < eos.V_hi))
        throw ConfigError("volume " + std::to_string(V) + " outside the admissible interval (" +
                          std::to_string(eos.V_lo) + ", " + std::to_string(eos.V_hi) + ")");
}

std::pair<double, double> scan_window(const EosSpec& eos, const SolveOptions& opts) {
    double lo = opts.V_lo, hi = opts.V_hi;
    if (lo <= 0.0) {
        if (eos.vdw) {
            const double nb = eos.vdw->n * eos.vdw->b;
            lo = nb * (1.0 + 1e-9);
        } else {
            lo = eos.V_lo;
        }
    }
    if (hi <= 0.0) {
        if (eos.vdw)
            hi = 1e3 * 3.0 * eos.vdw->n * eos.vdw->b;
        else
            hi = eos.V_hi;
    }
    if (!(lo < hi)) throw ConfigError("solve_volumes: empty scan window");
    return {lo, hi};
}

} // namespace

EosSpec vdw_spec(const VdwParams& p) {
    check_params(p);
    EosSpec e;
    const double nb = p.n * p.b;
    const double nR = p.n * p.R;
    const double na_R = p.n * p.a / p.R;       // n a / R
    const double nnab_R = p.n * nb * p.a / p.R; // n^2 a b / R
    e.alpha.value = [nb, nR](double V) { return (V - nb) / nR; };
    e.alpha.d1 = [nR](double) { return 1.0 / nR; };
    e.alpha.d2 = [](double) { return 0.0; };
    e.alpha.d3 = [](double) { return 0.0; };
    e.f.value = [na_R, nnab_R](double V) { return na_R / V - nnab_R / (V * V); };
    e.f.d1 = [na_R, nnab_R](double V) {
        const double V2 = V * V;
        return -na_R / V2 + 2.0 * nnab_R / (V2 * V);
    };
    e.f.d2 = [na_R, nnab_R](double V) {
        const double V3 = V * V * V;
        return 2.0 * na_R / V3 - 6.0 * nnab_R / (V3 * V);
    };
    e.f.d3 = [na_R, nnab_R](double V) {
        const double V4 = V * V * V * V;
        return -6.0 * na_R / V4 + 24.0 * nnab_R / (V4 * V);
    };
    e.V_lo = nb;
    e.V_hi = std::numeric_limits<double>::infinity();
    e.name = "vdw";
    e.vdw = p;
    return e;
}

EosSpec vdw_reduced() {
    EosSpec e = vdw_spec({3.0, 1.0 / 3.0, 1.0, 8.0 / 3.0});
    e.name = "vdw-reduced";
    return e;
}

VdwParams hydrogen_params() {
    return {24.76e-3, 0.02661e-3, 1000.0, 8.3144};
}

EosSpec tabulated_spec(std::vector<double> V, std::vector<double> alpha, std::vector<double> f) {
    if (V.size() < 4 || alpha.size() != V.size() || f.size() != V.size())
        throw ConfigError("tabulated_spec: need >= 4 matching samples");
    for (double a : alpha)
        if (!(a > 0.0)) throw ConfigError("tabulated_spec: alpha must be positive everywhere");
    EosSpec e;
    e.V_lo = V.front();
    e.V_hi = V.back();
    e.name = "tabulated";
    e.table = TabulatedData{V, alpha, f};
    auto sa = std::make_shared<num::CubicSpline>(V, std::move(alpha));
    auto sf = std::make_shared<num::CubicSpline>(std::move(V), std::move(f));
    e.alpha.value = [sa](double v) { return sa->deriv(0, v); };
    e.alpha.d1 = [sa](double v) { return sa->deriv(1, v); };
    e.alpha.d2 = [sa](double v) { return sa->deriv(2, v); };
    e.alpha.d3 = [sa](double v) { return sa->deriv(3, v); };
    e.f.value = [sf](double v) { return sf->deriv(0, v); };
    e.f.d1 = [sf](double v) { return sf->deriv(1, v); };
    e.f.d2 = [sf](double v) { return sf->deriv(2, v); };
    e.f.d3 = [sf](double v) { return sf->deriv(3, v); };
    return e;
}

double isotherm_pressure(double V, double T, const EosSpec& eos) {
    check_domain(V, eos);
    return (T - eos.f(V)) / eos.alpha(V);
}

double isotherm_pressure_dV(double V, double T, const EosSpec& eos) {
    check_domain(V, eos);
    const double a = eos.alpha(V);
    return (-eos.f.d1(V) * a - (T - eos.f(V)) * eos.alpha.d1(V)) / (a * a);
}

std::vector<double> solve_volumes(double P, double T, const EosSpec& eos,
                                  const SolveOptions& opts) {
    if (!std::isfinite(P) || !std::isfinite(T))
        throw ConfigError("solve_volumes: P and T must be finite");
    std::vector<double> roots;
    const double scale = volume_scale(eos);
    if (eos.vdw) {
        // The surface residual times -nRV^2 is the cubic
        //   P V^3 - (nRT + nbP) V^2 + n^2 a V - n^3 a b = 0.
        const VdwParams& p = *eos.vdw;
        const double nb = p.n * p.b, nR = p.n * p.R;
        if (P != 0.0) {
            const auto cand = num::cubic_real_roots(-(nR * T + nb * P) / P, p.n * p.n * p.a / P,
                                                    -p.n * p.n * p.n * p.a * p.b / P);
            for (double r : cand)
                if (r > nb) roots.push_back(r);
        } else {
            // nRT V^2 - n^2 a V + n^3 a b = 0
            const double disc = p.n * p.n * p.n * p.a * (p.n * p.a - 4.0 * p.b * nR * T);
            if (disc >= 0.0) {
                const double s = std::sqrt(disc);
                for (double r : {(p.n * p.n * p.a - s) / (2.0 * nR * T),
                                 (p.n * p.n * p.a + s) / (2.0 * nR * T)})
                    if (r > nb) roots.push_back(r);
            }
        }
    } else {
        const auto [lo, hi] = scan_window(eos, opts);
        const auto grid = lo > 0.0 ? num::logspace(lo, hi, opts.scan_points)
                                   : num::linspace(lo, hi, opts.scan_points);
        auto h = [&](double V) { return eos.residual(P, T, V); };
        for (const auto& [a, b] : num::sign_change_brackets(h, grid))
            roots.push_back(a == b ? a : num::bracket_root(h, a, b));
    }
    std::sort(roots.begin(), roots.end());
    std::vector<double> out;
    for (double r : roots)
        if (out.empty() || r - out.back() > opts.dedupe_rel * scale) out.push_back(r);
    if (out.empty())
        throw ConvergenceError("solve_volumes: no roots at P=" + std::to_string(P) +
                               ", T=" + std::to_string(T) + " (bracket scan exhausted)");
    return out;
}

namespace {

// Spurious sign changes of g can appear near the edges of spline-backed
// specs; prefer the root whose flanks keep a consistent, large |g|.
double select_root(const EosSpec& eos, const std::vector<double>& cand, double lo, double hi) {
    auto g = [&](double V) {
        return eos.f.d2(V) * eos.alpha.d1(V) - eos.f.d1(V) * eos.alpha.d2(V);
    };
    if (cand.size() == 1) return cand.front();
    const double margin = 0.05 * (hi - lo);
    double best = cand.front(), best_score = -1.0;
    for (double r : cand) {
        const double a = std::max(lo, r - margin), b = std::min(hi, r + margin);
        const double ga = g(a), gb = g(b);
        if ((ga > 0.0) == (gb > 0.0)) continue; // flanks do not straddle: wiggle artifact
        const double score = std::min(std::abs(ga), std::abs(gb));
        if (score > best_score) {
            best_score = score;
            best = r;
        }
    }
    return best;
}

} // namespace

CriticalPoint critical_point(const EosSpec& eos) {
    SolveOptions opts;
    auto [lo, hi] = scan_window(eos, opts);
    if (eos.table) {
        // spline end conditions distort second derivatives at the very edges
        const double trim = 0.02 * (hi - lo);
        lo += trim;
        hi -= trim;
    }
    auto g = [&](double V) {
        return eos.f.d2(V) * eos.alpha.d1(V) - eos.f.d1(V) * eos.alpha.d2(V);
    };
    const auto grid =
        lo > 0.0 ? num::logspace(lo, hi, opts.scan_points) : num::linspace(lo, hi, opts.scan_points);
    std::vector<double> cand;
    for (const auto& [a, b] : num::sign_change_brackets(g, grid)) {
        const double r = (a == b) ? a : num::bracket_root(g, a, b);
        const double ar = eos.alpha(r), ad = eos.alpha.d1(r);
        if (ad == 0.0) continue;
        const double P = -eos.f.d1(r) / ad;
        const double T = ar * P + eos.f(r);
        if (std::isfinite(P) && std::isfinite(T) && ar > 0.0) cand.push_back(r);
    }
    if (cand.empty()) throw ConvergenceError("critical_point: no critical volume in the domain");
    const double V_c = select_root(eos, cand, lo, hi);
    const double P_c = -eos.f.d1(V_c) / eos.alpha.d1(V_c);
    const double T_c = eos.alpha(V_c) * P_c + eos.f(V_c);
    const CriticalPoint cp{V_c, P_c, T_c};
    local_cubic_coeffs(eos, cp); // rejects degenerate critical points
    return cp;
}

CubicCoeffs local_cubic_coeffs(const EosSpec& eos, const CriticalPoint& cp) {
    const double c1 = eos.alpha.d1(cp.V_c);
    const double c3 = (eos.f.d3(cp.V_c) + eos.alpha.d3(cp.V_c) * cp.P_c) / 6.0;
    const double Tscale = std::max(std::abs(cp.T_c), 1e-300);
    if (std::abs(c3) * cp.V_c * cp.V_c * cp.V_c <= 1e-10 * Tscale)
        throw InfeasibleError("degenerate critical point: cubic coefficient vanishes");
    return {c1, c3};
}

} // namespace phasefront
