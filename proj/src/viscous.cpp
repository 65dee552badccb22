#include "phasefront/viscous.hpp"

#include <algorithm>
#include <cmath>
#include <memory>

#include "phasefront/errors.hpp"

namespace phasefront {

ViscousCoeffs coeffs_from_entropy(const ViscousEntropySpec& spec) {
    if (!(spec.V_lo < spec.V_hi))
        throw ConfigError("coeffs_from_entropy: need V_lo < V_hi");
    const SmoothFn S0 = spec.S0, S1 = spec.S1, S2 = spec.S2;
    auto s0d = [S0](double V) {
        const double d = S0.d1(V);
        if (!(d > 0.0)) throw InfeasibleError("coeffs_from_entropy: S0' must stay positive");
        return d;
    };
    ViscousCoeffs c;
    c.nu = spec.nu;
    c.alpha = [s0d](double V) { return 1.0 / s0d(V); };
    c.gamma = [S1, S2, s0d](double V) {
        const double d = s0d(V);
        return S1(V) / d - S2(V) / (d * d);
    };
    c.gamma_d1 = [S0, S1, S2, s0d](double V) {
        const double d = s0d(V), dd = S0.d2(V);
        return S1.d1(V) / d - S1(V) * dd / (d * d) - S2.d1(V) / (d * d) +
               2.0 * S2(V) * dd / (d * d * d);
    };
    c.beta = [S0, S1, S2, s0d](double V) {
        const double a = 1.0 / s0d(V);
        const double ap = -S0.d2(V) * a * a; // alpha' = -S0''/(S0')^2
        return a * a * a * S1.d1(V) + 2.0 * a * a * ap * S1(V) - a * a * S2.d1(V) -
               a * ap * S2(V);
    };
    // antiderivative of alpha tabulated once over the working interval
    const int n = 2049;
    auto Vs = num::linspace(spec.V_lo, spec.V_hi, n);
    std::vector<double> acc(Vs.size(), 0.0);
    auto alpha_fn = c.alpha;
    // one non-adaptive 31-point rule per fine panel: exact to roundoff for smooth alpha
    for (std::size_t i = 1; i < Vs.size(); ++i)
        acc[i] = acc[i - 1] + num::integrate_gk(alpha_fn, Vs[i - 1], Vs[i], 1e-13, 0);
    auto spl = std::make_shared<num::CubicSpline>(std::move(Vs), std::move(acc));
    c.alpha_anti = [spl](double V) { return spl->deriv(0, V); };
    return c;
}

ViscousEntropySpec vdw_viscous_spec(const VdwParams& p, double c, double nu, double V_lo,
                                    double V_hi) {
    const double nb = p.n * p.b, nR = p.n * p.R;
    ViscousEntropySpec s;
    s.S0 = {[nb, nR](double V) { return nR * std::log(V - nb); },
            [nb, nR](double V) { return nR / (V - nb); },
            [nb, nR](double V) { return -nR / ((V - nb) * (V - nb)); }};
    s.S1 = {[c](double) { return c; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
    s.S2 = {[](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
    s.F = {[](double) { return 0.0; }, [](double) { return 0.0; }, [](double) { return 0.0; }};
    s.nu = nu;
    s.V_lo = V_lo;
    s.V_hi = V_hi;
    return s;
}

namespace {

ViscousCoeffs from_poly(const PolyCoeffs& q, double nu) {
    ViscousCoeffs c;
    c.nu = nu;
    c.poly = q;
    c.alpha = [q](double V) { return q.a0 + q.a1 * V; };
    c.alpha_anti = [q](double V) { return q.a0 * V + 0.5 * q.a1 * V * V; };
    c.gamma = [q](double V) { return q.g0 + q.g1 * V; };
    c.gamma_d1 = [q](double) { return q.g1; };
    c.beta = [q](double V) { return q.b0 + V * (q.b1 + V * q.b2); };
    return c;
}

} // namespace

ViscousCoeffs vdw_viscous_coeffs(const VdwParams& p, double c, double nu) {
    const double nb = p.n * p.b, nR = p.n * p.R;
    const double a0 = -nb / nR, a1 = 1.0 / nR;
    PolyCoeffs q;
    q.a0 = a0;
    q.a1 = a1;
    // gamma = c alpha, beta = 2 c alpha' alpha^2 with alpha' = 1/(nR)
    q.g0 = c * a0;
    q.g1 = c * a1;
    q.b0 = 2.0 * c * a1 * a0 * a0;
    q.b1 = 4.0 * c * a1 * a1 * a0;
    q.b2 = 2.0 * c * a1 * a1 * a1;
    return from_poly(q, nu);
}

ViscousCoeffs constant_gamma_coeffs(const VdwParams& p, double gamma0, double nu) {
    const double nb = p.n * p.b, nR = p.n * p.R;
    PolyCoeffs q;
    q.a0 = -nb / nR;
    q.a1 = 1.0 / nR;
    q.g0 = gamma0;
    return from_poly(q, nu);
}

namespace {

struct StageResult {
    double flux_left = 0.0;  // F_{1/2}
    double flux_right = 0.0; // F_{n-3/2}
};

// k_i = -dir [ (F_{i+1/2} - F_{i-1/2})/h + nu (beta - gamma') V_T^2 ] on the
// interior; F_{i+1/2} = avg(A) + nu gamma(mid) (V_{i+1} - V_i)/h.
StageResult eval_rhs(const ViscousCoeffs& c, const std::vector<double>& V, double h, double dir,
                     std::vector<double>& F, std::vector<double>& k) {
    const std::size_t n = V.size();
    const double nu = c.nu;
    if (c.poly) {
        const PolyCoeffs q = *c.poly;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double Ai = q.a0 * V[i] + 0.5 * q.a1 * V[i] * V[i];
            const double Aj = q.a0 * V[i + 1] + 0.5 * q.a1 * V[i + 1] * V[i + 1];
            const double Vm = 0.5 * (V[i] + V[i + 1]);
            F[i] = 0.5 * (Ai + Aj) + nu * (q.g0 + q.g1 * Vm) * (V[i + 1] - V[i]) / h;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double dc = (V[i + 1] - V[i - 1]) / (2.0 * h);
            const double src = nu * (q.b0 + V[i] * (q.b1 + V[i] * q.b2) - q.g1) * dc * dc;
            k[i] = -dir * ((F[i] - F[i - 1]) / h + src);
        }
    } else {
        for (std::size_t i = 0; i + 1 < n; ++i) {
            const double Vm = 0.5 * (V[i] + V[i + 1]);
            F[i] = 0.5 * (c.alpha_anti(V[i]) + c.alpha_anti(V[i + 1])) +
                   nu * c.gamma(Vm) * (V[i + 1] - V[i]) / h;
        }
        for (std::size_t i = 1; i + 1 < n; ++i) {
            const double dc = (V[i + 1] - V[i - 1]) / (2.0 * h);
            const double src = nu * (c.beta(V[i]) - c.gamma_d1(V[i])) * dc * dc;
            k[i] = -dir * ((F[i] - F[i - 1]) / h + src);
        }
    }
    return {F[0], F[n - 2]};
}

} // namespace

FieldSolution evolve_viscous(const ViscousCoeffs& coeffs, const num::Fn& V0, double P0, double P1,
                             double T_lo, double T_hi, const BoundarySpec& bc,
                             const GridSpec& grid) {
    if (grid.nt < 8) throw ConfigError("evolve_viscous: need at least 8 spatial nodes");
    if (!(T_lo < T_hi)) throw ConfigError("evolve_viscous: need T_lo < T_hi");
    if (P0 == P1) throw ConfigError("evolve_viscous: P0 and P1 must differ");
    if (!(grid.cfl > 0.0) || grid.cfl > 1.0)
        throw ConfigError("evolve_viscous: cfl must lie in (0, 1]");
    if (grid.snapshots < 2) throw ConfigError("evolve_viscous: need at least 2 snapshots");

    const double dir = (P1 > P0) ? 1.0 : -1.0;
    const double L = std::abs(P1 - P0);
    const std::size_t n = static_cast<std::size_t>(grid.nt);
    const double h = (T_hi - T_lo) / (grid.nt - 1);

    FieldSolution sol;
    sol.T = num::linspace(T_lo, T_hi, grid.nt);
    std::vector<double> V(n);
    for (std::size_t j = 0; j < n; ++j) V[j] = V0(sol.T[j]);
    V.front() = bc.left(P0);
    V.back() = bc.right(P0);

    if (coeffs.nu > 0.0) {
        double gmin = std::numeric_limits<double>::infinity(), gabs = 0.0;
        for (double v : V) {
            const double g = coeffs.gamma(v);
            gmin = std::min(gmin, -dir * g);
            gabs = std::max(gabs, std::abs(g));
        }
        if (gabs > 0.0 && !(gmin > 0.0))
            throw ConfigError("evolve_viscous: ill-posed marching direction (diffusion "
                              "coefficient -sign(P1-P0) nu gamma is not positive)");
    }

    const auto targets = num::linspace(0.0, L, grid.snapshots);
    auto record = [&](std::size_t level) {
        sol.P.push_back(P0 + dir * targets[level]);
        sol.V.insert(sol.V.end(), V.begin(), V.end());
    };
    record(0);

    std::vector<double> F(n - 1), k1(n, 0.0), k2(n, 0.0), Vs(n);
    double zeta = 0.0;
    std::size_t level = 1;
    const double eps = 1e-12 * L;

    while (zeta < L - eps) {
        double amax = 0.0, gmax = 0.0;
        for (double v : V) {
            amax = std::max(amax, std::abs(coeffs.alpha(v)));
            gmax = std::max(gmax, std::abs(coeffs.gamma(v)));
        }
        double dz = grid.cfl * h / std::max(amax, 1e-300);
        if (coeffs.nu * gmax > 0.0)
            dz = std::min(dz, grid.cfl * h * h / (2.0 * coeffs.nu * gmax));
        dz = std::min(dz, targets[level] - zeta);
        if (!(dz > 0.0)) throw ConvergenceError("evolve_viscous: step size collapsed");

        const double P_next = P0 + dir * (zeta + dz);
        const auto b1 = eval_rhs(coeffs, V, h, dir, F, k1);
        for (std::size_t j = 1; j + 1 < n; ++j) Vs[j] = V[j] + dz * k1[j];
        Vs.front() = bc.left(P_next);
        Vs.back() = bc.right(P_next);
        const auto b2 = eval_rhs(coeffs, Vs, h, dir, F, k2);

        double mass_delta = 0.0;
        for (std::size_t j = 1; j + 1 < n; ++j) {
            const double Vnew = V[j] + 0.5 * dz * (k1[j] + k2[j]);
            mass_delta += (Vnew - V[j]) * h;
            V[j] = Vnew;
        }
        V.front() = bc.left(P_next);
        V.back() = bc.right(P_next);

        const double flux_acc = -dir * 0.5 * dz *
                                ((b1.flux_right - b1.flux_left) + (b2.flux_right - b2.flux_left));
        sol.max_flux_residual = std::max(sol.max_flux_residual, std::abs(mass_delta - flux_acc));

        zeta += dz;
        ++sol.steps_taken;
        if (sol.steps_taken > grid.max_steps)
            throw ConvergenceError("evolve_viscous: step budget exhausted");

        for (double v : V)
            if (!std::isfinite(v) || std::abs(v) > grid.max_norm)
                throw ConvergenceError("evolve_viscous: instability detected (solution norm "
                                       "blew up)");

        if (zeta >= targets[level] - eps) {
            record(level);
            ++level;
            if (level >= targets.size()) break;
        }
    }
    if (sol.P.size() < static_cast<std::size_t>(grid.snapshots)) record(targets.size() - 1);
    return sol;
}

FieldSolution evolve_viscous(const ViscousEntropySpec& spec, const num::Fn& V0, double P0,
                             double P1, double T_lo, double T_hi, const BoundarySpec& bc,
                             const GridSpec& grid) {
    return evolve_viscous(coeffs_from_entropy(spec), V0, P0, P1, T_lo, T_hi, bc, grid);
}

num::Fn characteristic_boundary(const EosSpec& eos, double T_edge, Branch branch) {
    return [eos, T_edge, branch](double P) {
        const auto roots = solve_volumes(P, T_edge, eos);
        switch (branch) {
        case Branch::smallest:
            return roots.front();
        case Branch::largest:
            return roots.back();
        default:
            if (roots.size() != 1)
                throw ConvergenceError("characteristic_boundary: surface multivalued at the "
                                       "requested edge");
            return roots.front();
        }
    };
}

FieldSolution characteristic_solution(const EosSpec& eos, const std::vector<double>& Ps,
                                      const std::vector<double>& Ts, Branch branch) {
    FieldSolution sol;
    sol.P = Ps;
    sol.T = Ts;
    sol.V.reserve(Ps.size() * Ts.size());
    for (double P : Ps)
        for (double T : Ts) {
            const auto roots = solve_volumes(P, T, eos);
            double v = roots.front();
            if (branch == Branch::largest)
                v = roots.back();
            else if (branch == Branch::unique && roots.size() != 1)
                throw ConvergenceError("characteristic_solution: surface multivalued at P=" +
                                       std::to_string(P) + ", T=" + std::to_string(T));
            sol.V.push_back(v);
        }
    return sol;
}

BurgersColeHopf::BurgersColeHopf(std::vector<double> xi, std::vector<double> u0)
    : xi_(std::move(xi)), u0_(std::move(u0)) {
    if (xi_.size() < 2 || u0_.size() != xi_.size())
        throw ConfigError("BurgersColeHopf: need >= 2 matching samples");
    for (std::size_t i = 1; i < xi_.size(); ++i)
        if (!(xi_[i] > xi_[i - 1]))
            throw ConfigError("BurgersColeHopf: nodes must be strictly increasing");
    lo_ = xi_.front();
    hi_ = xi_.back();
    psi_nodes_.assign(xi_.size(), 0.0);
    for (std::size_t i = 1; i < xi_.size(); ++i)
        psi_nodes_[i] = psi_nodes_[i - 1] +
                        0.5 * (u0_[i - 1] + u0_[i]) * (xi_[i] - xi_[i - 1]);
}

BurgersColeHopf::BurgersColeHopf(num::Fn psi, double xi_lo, double xi_hi)
    : psi_fn_(std::move(psi)), lo_(xi_lo), hi_(xi_hi) {
    if (!(lo_ < hi_)) throw ConfigError("BurgersColeHopf: need xi_lo < xi_hi");
}

double BurgersColeHopf::psi(double x) const {
    if (psi_fn_) return psi_fn_(x);
    if (x <= lo_) return psi_nodes_.front() + u0_.front() * (x - lo_);
    if (x >= hi_) return psi_nodes_.back() + u0_.back() * (x - hi_);
    auto it = std::upper_bound(xi_.begin(), xi_.end(), x);
    const std::size_t i = static_cast<std::size_t>(std::distance(xi_.begin(), it)) - 1;
    const double t = x - xi_[i], hseg = xi_[i + 1] - xi_[i];
    return psi_nodes_[i] + u0_[i] * t + 0.5 * (u0_[i + 1] - u0_[i]) * t * t / hseg;
}

double BurgersColeHopf::initial(double X) const {
    if (!psi_fn_) {
        if (X <= lo_) return u0_.front();
        if (X >= hi_) return u0_.back();
        auto it = std::upper_bound(xi_.begin(), xi_.end(), X);
        const std::size_t i = static_cast<std::size_t>(std::distance(xi_.begin(), it)) - 1;
        const double t = (X - xi_[i]) / (xi_[i + 1] - xi_[i]);
        return (1.0 - t) * u0_[i] + t * u0_[i + 1];
    }
    const double e = 1e-6 * std::max(1.0, std::abs(X));
    return (psi_fn_(X + e) - psi_fn_(X - e)) / (2.0 * e);
}

double BurgersColeHopf::value(double X, double Y) const {
    if (Y == 0.0) return initial(X);
    if (Y < 0.0) throw ConfigError("BurgersColeHopf: Y must be nonnegative");
    auto W = [&](double xi) {
        const double d = X - xi;
        return d * d / (4.0 * Y) + 0.5 * psi(xi);
    };
    // locate the exponent minimum: coarse scan, then golden-section refine
    const double spread = std::sqrt(4.0 * Y * 45.0) + 1.0;
    const double s_lo = std::min(lo_, X) - spread, s_hi = std::max(hi_, X) + spread;
    const auto scan = num::linspace(s_lo, s_hi, 2049);
    std::size_t ibest = 0;
    double Wbest = W(scan[0]);
    for (std::size_t i = 1; i < scan.size(); ++i) {
        const double w = W(scan[i]);
        if (w < Wbest) {
            Wbest = w;
            ibest = i;
        }
    }
    double a = scan[ibest > 0 ? ibest - 1 : 0];
    double b = scan[std::min(ibest + 1, scan.size() - 1)];
    const double gr = 0.5 * (std::sqrt(5.0) - 1.0);
    double x1 = b - gr * (b - a), x2 = a + gr * (b - a);
    double f1 = W(x1), f2 = W(x2);
    for (int it = 0; it < 120 && (b - a) > 1e-13 * (1.0 + std::abs(a)); ++it) {
        if (f1 < f2) {
            b = x2;
            x2 = x1;
            f2 = f1;
            x1 = b - gr * (b - a);
            f1 = W(x1);
        } else {
            a = x1;
            x1 = x2;
            f1 = f2;
            x2 = a + gr * (b - a);
            f2 = W(x2);
        }
    }
    const double Wmin = std::min(f1, f2);

    const double cut = 45.0;
    auto grow = [&](double z, double dblir) {
        double step = 0.5 * std::sqrt(Y) + 0.1;
        while (W(z) - Wmin < cut) {
            z += dblir * step;
            step *= 1.5;
        }
        return z;
    };
    const double z_lo = grow(a - 0.1, -1.0), z_hi = grow(b + 0.1, +1.0);

    std::vector<double> bounds{z_lo};
    if (!psi_fn_)
        for (double node : xi_)
            if (node > z_lo && node < z_hi) bounds.push_back(node);
    if (0.5 * (a + b) > bounds.back() && 0.5 * (a + b) < z_hi) bounds.push_back(0.5 * (a + b));
    std::sort(bounds.begin(), bounds.end());
    bounds.push_back(z_hi);

    double den = 0.0, numr = 0.0;
    for (std::size_t i = 0; i + 1 < bounds.size(); ++i) {
        den += num::integrate_gk([&](double xi) { return std::exp(-(W(xi) - Wmin)); },
                                 bounds[i], bounds[i + 1], 1e-12);
        numr += num::integrate_gk(
            [&](double xi) { return (X - xi) / Y * std::exp(-(W(xi) - Wmin)); }, bounds[i],
            bounds[i + 1], 1e-12);
    }
    if (!(den > 0.0)) throw ConvergenceError("BurgersColeHopf: kernel quadrature collapsed");
    return numr / den;
}

BurgersField burgers_evolve(const BurgersColeHopf& ch, const std::vector<double>& Xs,
                            const std::vector<double>& Ys) {
    BurgersField f;
    f.X = Xs;
    f.Y = Ys;
    f.u.reserve(Xs.size() * Ys.size());
    for (double Y : Ys)
        for (double X : Xs) f.u.push_back(ch.value(X, Y));
    return f;
}

double burgers_shock_position(const BurgersColeHopf& ch, double Y, double level, double X_lo,
                              double X_hi) {
    return num::bracket_root([&](double X) { return ch.value(X, Y) - level; }, X_lo, X_hi, 1e-13);
}

} // namespace phasefront
