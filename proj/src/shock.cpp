#include "phasefront/shock.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

#include "phasefront/errors.hpp"

namespace phasefront {

double rh_speed(double V_left, double S_left, double V_right, double S_right) {
    const double dV = V_right - V_left;
    const double scale = std::max({1.0, std::abs(V_left), std::abs(V_right)});
    if (std::abs(dV) <= 1e-14 * scale)
        throw ConfigError("rh_speed: degenerate volume jump");
    return (S_right - S_left) / dV;
}

double rh_speed(const PhaseState& left, const PhaseState& right, double P, double T) {
    return rh_speed(left.V(P, T), left.S(P, T), right.V(P, T), right.S(P, T));
}

namespace {

// pchip evaluation over trajectory nodes regardless of march direction
double interp_nodes(const std::vector<double>& T, const std::vector<double>& Y, double t) {
    if (T.size() < 2) throw ConfigError("ShockTrajectory: need >= 2 nodes to interpolate");
    std::vector<std::size_t> idx(T.size());
    std::iota(idx.begin(), idx.end(), std::size_t{0});
    std::sort(idx.begin(), idx.end(), [&](std::size_t i, std::size_t j) { return T[i] < T[j]; });
    std::vector<double> ts(T.size()), ys(T.size());
    for (std::size_t i = 0; i < idx.size(); ++i) {
        ts[i] = T[idx[i]];
        ys[i] = Y[idx[i]];
    }
    return num::Pchip(std::move(ts), std::move(ys))(t);
}

} // namespace

double ShockTrajectory::pressure_at(double T_query) const { return interp_nodes(T, P, T_query); }

double ShockTrajectory::speed_at(double T_query) const { return interp_nodes(T, U, T_query); }

double ShockTrajectory::t_min() const { return *std::min_element(T.begin(), T.end()); }

double ShockTrajectory::t_max() const { return *std::max_element(T.begin(), T.end()); }

ShockTrajectory propagate_shock(const PhaseState& left, const PhaseState& right, double T0,
                                double P0, double T_end, double step) {
    if (!(step > 0.0)) throw ConfigError("propagate_shock: step must be positive");
    if (T_end == T0) throw ConfigError("propagate_shock: empty integration range");

    auto speed = [&](double t, double p) { return rh_speed(left, right, p, t); };

    ShockTrajectory traj;
    traj.left = left;
    traj.right = right;
    const double span = T_end - T0;
    const std::size_t nsteps = static_cast<std::size_t>(std::ceil(std::abs(span) / step));
    const double hstep = span / static_cast<double>(nsteps);

    double t = T0, p = P0;
    traj.T.push_back(t);
    traj.P.push_back(p);
    traj.U.push_back(speed(t, p));
    for (std::size_t i = 0; i < nsteps; ++i) {
        const double k1 = speed(t, p);
        const double k2 = speed(t + 0.5 * hstep, p + 0.5 * hstep * k1);
        const double k3 = speed(t + 0.5 * hstep, p + 0.5 * hstep * k2);
        const double k4 = speed(t + hstep, p + hstep * k3);
        p += hstep / 6.0 * (k1 + 2.0 * k2 + 2.0 * k3 + k4);
        t = T0 + span * static_cast<double>(i + 1) / static_cast<double>(nsteps);
        if (!std::isfinite(p)) throw ConvergenceError("propagate_shock: pressure diverged");
        traj.T.push_back(t);
        traj.P.push_back(p);
        traj.U.push_back(speed(t, p));
    }
    return traj;
}

namespace {

const PhaseState& outer_state(const ShockTrajectory& traj, const std::string& shared) {
    if (traj.left.label == shared) return traj.right;
    return traj.left;
}

} // namespace

ConfluenceEvent detect_confluence(const ShockTrajectory& a, const ShockTrajectory& b) {
    const double t_lo = std::max(a.t_min(), b.t_min());
    const double t_hi = std::min(a.t_max(), b.t_max());
    if (!(t_lo < t_hi))
        throw ConvergenceError("detect_confluence: trajectories share no T range");

    auto gap = [&](double t) { return a.pressure_at(t) - b.pressure_at(t); };
    const auto ts = num::linspace(t_lo, t_hi, 257);
    double t_star = ts.front();
    bool found = false;
    double g_prev = gap(ts.front());
    if (g_prev == 0.0) {
        found = true;
    } else {
        for (std::size_t i = 1; i < ts.size() && !found; ++i) {
            const double g = gap(ts[i]);
            if (g == 0.0) {
                t_star = ts[i];
                found = true;
            } else if (g_prev * g < 0.0) {
                t_star = num::bracket_root(gap, ts[i - 1], ts[i], 1e-14);
                found = true;
            }
            g_prev = g;
        }
    }
    if (!found)
        throw ConvergenceError("detect_confluence: no intersection in the shared T range");

    ConfluenceEvent ev;
    ev.T_triple = t_star;
    ev.P_triple = 0.5 * (a.pressure_at(t_star) + b.pressure_at(t_star));

    const double Ua = rh_speed(a.left, a.right, ev.P_triple, ev.T_triple);
    const double Ub = rh_speed(b.left, b.right, ev.P_triple, ev.T_triple);
    const double u_scale = std::max({1.0, std::abs(Ua), std::abs(Ub)});
    if (std::abs(Ua - Ub) <= 1e-10 * u_scale) {
        ev.degenerate = true;
        ev.U1 = ev.U2 = Ua;
        const bool a_first = a.left.label + a.right.label <= b.left.label + b.right.label;
        ev.incoming = a_first ? std::vector<ShockTrajectory>{a, b}
                              : std::vector<ShockTrajectory>{b, a};
        return ev;
    }
    const bool a_faster = Ua > Ub;
    ev.U1 = a_faster ? Ua : Ub;
    ev.U2 = a_faster ? Ub : Ua;
    ev.incoming = a_faster ? std::vector<ShockTrajectory>{a, b}
                           : std::vector<ShockTrajectory>{b, a};

    std::string shared;
    int n_shared = 0;
    for (const std::string& la : {a.left.label, a.right.label})
        if (la == b.left.label || la == b.right.label) {
            shared = la;
            ++n_shared;
        }
    if (n_shared != 1)
        throw ConfigError("detect_confluence: trajectories must share exactly one phase label");

    const PhaseState& oa = outer_state(a, shared);
    const PhaseState& ob = outer_state(b, shared);
    const bool a_smaller = oa.V(ev.P_triple, ev.T_triple) <= ob.V(ev.P_triple, ev.T_triple);
    const PhaseState& dense = a_smaller ? oa : ob;
    const PhaseState& dilute = a_smaller ? ob : oa;
    ev.U3 = rh_speed(dense, dilute, ev.P_triple, ev.T_triple);

    // outgoing front marches toward decreasing P from the event
    const double span_a = a.t_max() - a.t_min();
    const double span_b = b.t_max() - b.t_min();
    double span = 0.25 * std::min(span_a, span_b);
    const double dir = (ev.U3 >= 0.0) ? -1.0 : 1.0;
    for (int attempt = 0; attempt < 5; ++attempt) {
        try {
            ev.outgoing = propagate_shock(dense, dilute, ev.T_triple, ev.P_triple,
                                          ev.T_triple + dir * span, span / 100.0);
            return ev;
        } catch (const Error&) {
            span *= 0.5;
        }
    }
    ev.outgoing.left = dense;
    ev.outgoing.right = dilute;
    ev.outgoing.T = {ev.T_triple};
    ev.outgoing.P = {ev.P_triple};
    ev.outgoing.U = {ev.U3};
    return ev;
}

} // namespace phasefront
