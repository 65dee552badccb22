#include "phasefront/pearcey.hpp"

#include <algorithm>
#include <cmath>
#include <vector>

#include "phasefront/errors.hpp"
#include "phasefront/numerics.hpp"

namespace phasefront {

namespace {

double exponent(double z, double X, double Y) {
    return (z * z * z * z - 2.0 * Y * z * z + 4.0 * X * z) / 8.0;
}

// Integration breakpoints: the real saddles of the exponent (integrand peaks).
std::vector<double> saddles(double X, double Y) {
    return num::cubic_real_roots(0.0, -Y, X);
}

} // namespace

PearceyValue pearcey_moments(double X, double Y, double rel_tol) {
    if (!(rel_tol > 0.0)) throw ConfigError("pearcey_moments: tolerance must be positive");
    auto crit = saddles(X, Y);
    double E_min = exponent(crit.front(), X, Y);
    for (double z : crit) E_min = std::min(E_min, exponent(z, X, Y));

    // truncate where the normalized integrand drops below e^{-45} ~ 3e-20
    const double cut = 45.0;
    auto grow = [&](double z, double dir) {
        double step = 0.5;
        while (exponent(z, X, Y) - E_min < cut) {
            z += dir * step;
            step *= 1.5;
        }
        return z;
    };
    const double z_lo = grow(crit.front() - 0.5, -1.0);
    const double z_hi = grow(crit.back() + 0.5, +1.0);

    std::vector<double> bounds{z_lo};
    for (double z : crit)
        if (z > bounds.back()) bounds.push_back(z);
    if (z_hi > bounds.back()) bounds.push_back(z_hi);

    std::array<double, 5> M{};
    for (int k = 0; k < 5; ++k) {
        auto g = [&](double z) {
            double zk = 1.0;
            for (int j = 0; j < k; ++j) zk *= z;
            return zk * std::exp(-(exponent(z, X, Y) - E_min));
        };
        double total = 0.0;
        for (std::size_t i = 0; i + 1 < bounds.size(); ++i)
            total += num::integrate_gk(g, bounds[i], bounds[i + 1], rel_tol);
        M[static_cast<std::size_t>(k)] = total;
    }
    if (!(M[0] > 0.0)) throw ConvergenceError("pearcey_moments: quadrature collapsed");

    PearceyValue v;
    v.X = X;
    v.Y = Y;
    v.log_scale = -E_min;
    v.m = M;
    v.Lambda = M[0];
    v.dLambda_dX = -0.5 * M[1];
    v.dLambda_dY = 0.25 * M[2];
    v.d2Lambda_dX2 = 0.25 * M[2];
    const double m1 = M[1] / M[0], m2 = M[2] / M[0], m3 = M[3] / M[0];
    v.u = m1;
    v.du_dX = -0.5 * (m2 - m1 * m1);
    v.d2u_dX2 = 0.25 * (m3 - 3.0 * m1 * m2 + 2.0 * m1 * m1 * m1);
    v.du_dY = 0.25 * (m3 - m1 * m2);
    return v;
}

namespace {

constexpr double kFdStep = 3e-3;

// five-point centered first derivative
template <typename F> double fd5(F&& f, double h) {
    return (-f(2.0 * h) + 8.0 * f(h) - 8.0 * f(-h) + f(-2.0 * h)) / (12.0 * h);
}

} // namespace

double heat_residual(double X, double Y) {
    const PearceyValue c = pearcey_moments(X, Y);
    auto lam = [&](double dy) {
        const PearceyValue p = pearcey_moments(X, Y + dy);
        return p.Lambda * std::exp(p.log_scale - c.log_scale);
    };
    const double dLdY = fd5(lam, kFdStep);
    return std::abs(dLdY - c.d2Lambda_dX2) / c.Lambda;
}

double burgers_residual(double X, double Y) {
    const PearceyValue c = pearcey_moments(X, Y);
    auto u = [&](double dy) { return pearcey_moments(X, Y + dy).u; };
    const double u_Y = fd5(u, kFdStep);
    return std::abs(u_Y + c.u * c.du_dX - c.d2u_dX2);
}

double ode_residual(double X, double Y) {
    const double s = std::pow(2.0, -0.25);
    const double p = -std::pow(2.0, 0.75);
    const double q = std::sqrt(2.0);
    const PearceyValue v = pearcey_moments(p * X, q * Y);
    const double w = s * v.u;
    const double wX = s * p * v.du_dX;
    const double wXX = s * p * p * v.d2u_dX2;
    return std::abs(wXX + 3.0 * w * wX + w * w * w - Y * w - X);
}

double cubic_limit(double X, double Y) {
    if (X == 0.0 && Y > 0.0)
        throw InfeasibleError(
            "cubic_limit: outer saddles tie on the shock line (X = 0, Y > 0)");
    const auto roots = saddles(X, Y);
    double best = roots.front();
    double best_E = exponent(best, X, Y);
    for (double z : roots) {
        const double E = exponent(z, X, Y);
        if (E < best_E) {
            best_E = E;
            best = z;
        }
    }
    return best;
}

double sigma_matching(const EosSpec& eos, const CriticalPoint& cp, double gamma0) {
    const double ap = eos.alpha.d1(cp.V_c);
    const double A = eos.f.d3(cp.V_c) + eos.alpha.d3(cp.V_c) * cp.P_c;
    if (ap == 0.0 || A == 0.0)
        throw InfeasibleError("sigma_matching: degenerate critical point (alpha' or cubic "
                              "coefficient vanishes)");
    const double arg = 6.0 * gamma0 / (ap * A);
    if (!(arg > 0.0))
        throw InfeasibleError("sigma_matching: fourth-root argument is not positive; sigma "
                              "would be complex (no bounded universal regime)");
    const double s0 = std::pow(arg, 0.25);
    return (ap * gamma0 > 0.0) ? -s0 : s0; // enforce alpha1 gamma0 < 0
}

std::pair<double, double> ScalingMap::xy(double P, double T) const {
    const double lam2 = std::sqrt(nu);
    const double lam3 = std::pow(nu, 0.75);
    const double Pbar = (P - cp.P_c) / lam2;
    const double Tbar = (T - cp.T_c - alpha0 * (P - cp.P_c)) / lam3;
    return {-(alpha1 / gamma0) * Tbar, -(alpha1 * alpha1 / gamma0) * Pbar};
}

bool ScalingMap::in_window(double P, double T, double cap) const {
    const auto [X, Y] = xy(P, T);
    return std::abs(X) <= cap && std::abs(Y) <= cap;
}

ScalingMap make_scaling_map(const EosSpec& eos, const CriticalPoint& cp, double gamma0,
                            double nu) {
    if (!(nu > 0.0)) throw ConfigError("make_scaling_map: nu must be positive");
    ScalingMap m;
    m.cp = cp;
    m.alpha0 = eos.alpha(cp.V_c);
    m.sigma = sigma_matching(eos, cp, gamma0);
    m.alpha1 = m.sigma * eos.alpha.d1(cp.V_c);
    m.gamma0 = gamma0;
    m.nu = nu;
    return m;
}

double universal_volume(double P, double T, const ScalingMap& map) {
    const auto [X, Y] = map.xy(P, T);
    return map.cp.V_c + map.sigma * std::pow(map.nu, 0.25) * pearcey_moments(X, Y).u;
}

} // namespace phasefront
