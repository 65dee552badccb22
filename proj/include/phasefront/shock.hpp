#pragma once

#include <functional>
#include <string>
#include <vector>

#include "phasefront/numerics.hpp"

namespace phasefront {

// One thermodynamic phase near a coexistence line: volume and entropy as
// functions of (P, T). Only entropy differences at common T ever enter, so a
// V-only entropy (temperature part dropped) is acceptable.
struct PhaseState {
    std::string label;
    std::function<double(double P, double T)> V;
    std::function<double(double P, double T)> S;
};

// Front speed dP/dT between two states: ratio of entropy and volume jumps.
// Antisymmetric in both numerator and denominator, hence swap-invariant.
double rh_speed(double V_left, double S_left, double V_right, double S_right);
double rh_speed(const PhaseState& left, const PhaseState& right, double P, double T);

// Phase boundary on the P-T plane, parameterized by T in march order.
struct ShockTrajectory {
    PhaseState left, right;
    std::vector<double> T;
    std::vector<double> P;
    std::vector<double> U; // dP/dT at each node

    double pressure_at(double T_query) const; // shape-preserving interpolation
    double speed_at(double T_query) const;
    double t_min() const;
    double t_max() const;
};

// Fixed-step RK4 integration of dP/dT = (S_right - S_left)/(V_right - V_left)
// from (T0, P0) to T_end. step > 0 is the nominal |dT|; the last step is
// shortened to land on T_end exactly. State-evaluation failures propagate.
ShockTrajectory propagate_shock(const PhaseState& left, const PhaseState& right, double T0,
                                double P0, double T_end, double step);

struct ConfluenceEvent {
    double T_triple = 0.0;
    double P_triple = 0.0;
    double U1 = 0.0; // faster incoming speed at the event
    double U2 = 0.0; // slower incoming speed at the event
    double U3 = 0.0; // outgoing speed: RH of the two outer states at the event
    bool degenerate = false; // tangency: incoming speeds equal at contact
    std::vector<ShockTrajectory> incoming; // ordered faster first
    ShockTrajectory outgoing; // seeded at the event with the outer states
};

// First intersection of two trajectories over their shared T range. The two
// trajectories must share exactly one phase label; the outgoing front joins
// the remaining outer states and marches toward decreasing P. Symmetric in
// its arguments. Throws ConvergenceError when no intersection exists and
// ConfigError when the label topology is ambiguous.
ConfluenceEvent detect_confluence(const ShockTrajectory& a, const ShockTrajectory& b);

} // namespace phasefront
