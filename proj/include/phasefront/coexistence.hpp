#pragma once

#include <vector>

#include "phasefront/eos.hpp"
#include "phasefront/numerics.hpp"

namespace phasefront {

/// Volume-dependent entropy component S0(V) with its derivative. The link to
/// the state surface is alpha(V) = 1/S0'(V); S0 is strictly increasing.
struct VolumeEntropySpec {
    num::Fn S0, S0_d1;

    /// S0(V) = nR log(V - nb), the constant fixed to zero.
    static VolumeEntropySpec vdw(const VdwParams& p);

    /// S0 recovered from the surface by quadrature of 1/alpha from V_ref.
    static VolumeEntropySpec from_eos(const EosSpec& eos, double V_ref);
};

struct SaturationPoint {
    double T = 0.0;
    double P_sat = 0.0;
    double V_l = 0.0;
    double V_g = 0.0;
    double delta_S = 0.0;     // S0(V_g) - S0(V_l)
    double delta_V = 0.0;     // V_g - V_l
    double latent_heat = 0.0; // T * delta_S
    double area_residual = 0.0;
};

struct CoexistenceCurve {
    std::vector<SaturationPoint> points; // ascending in T
};

/// The two isotherm extrema (local min, then local max in V order) bounding
/// the unstable branch at T < T_c.
std::pair<double, double> spinodal_volumes(double T, const EosSpec& eos,
                                           const CriticalPoint* cp = nullptr);

/// Equal-areas saturation pressure at temperature T: the unique P with
/// integral of (P_iso(V) - P) over the outer roots equal to zero. Refuses
/// T >= T_c (1 - 1e-6). Pass the critical point to skip recomputing it and a
/// positive P_hint (e.g. a neighboring saturation pressure) to seed the
/// bracket before falling back to the spinodal one.
SaturationPoint maxwell_pressure(double T, const EosSpec& eos, const CriticalPoint* cp = nullptr,
                                 double P_hint = 0.0);

/// Gibbs potential difference between the outer isotherm branches at (P, T),
/// the integral of V dP along the multivalued isotherm (parameterized by V).
/// Requires exactly three volume roots. Negative below the saturation
/// pressure, zero at it, positive above.
double gibbs_difference(double P, double T, const EosSpec& eos);

/// Saturation points on an ascending temperature grid, each solve warm-started
/// from the previous pressure.
CoexistenceCurve coexistence_curve(double T_lo, double T_hi, int steps, const EosSpec& eos);

/// Shock speed of the phase boundary, U = delta_S / delta_V; identical to the
/// slope dP_sat/dT of the coexistence curve.
double clapeyron_speed(const SaturationPoint& sp, const VolumeEntropySpec& s);

} // namespace phasefront
