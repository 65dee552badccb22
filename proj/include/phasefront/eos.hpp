#pragma once

#include <optional>
#include <string>
#include <vector>

#include "phasefront/numerics.hpp"

namespace phasefront {

/// Van der Waals parameters: (P + n^2 a / V^2)(V - n b) = n R T.
struct VdwParams {
    double a; // mean-field attraction, Pa m^6 / mol^2
    double b; // covolume, m^3 / mol
    double n; // mole number
    double R; // gas constant, J / (K mol)
};

/// Scalar coefficient surface with analytic derivatives up to third order.
struct SurfaceFn {
    num::Fn value, d1, d2, d3;
    double operator()(double V) const { return value(V); }
};

/// Sample table backing a fitted or user-supplied equation of state.
struct TabulatedData {
    std::vector<double> V, alpha, f;
};

/// State surface T - alpha(V) P - f(V) = 0 on the open volume interval
/// (V_lo, V_hi). alpha must stay positive on the interval.
struct EosSpec {
    SurfaceFn alpha, f;
    double V_lo = 0.0;
    double V_hi = 0.0;
    std::string name;
    std::optional<VdwParams> vdw;
    std::optional<TabulatedData> table;

    double residual(double P, double T, double V) const {
        return T - alpha(V) * P - f(V);
    }
};

struct ThermoPoint {
    double P, T, V;
};

struct CriticalPoint {
    double V_c, P_c, T_c;
};

/// Coefficients of the local surface T̄ = c1 V̄ P̄ + c3 V̄³ around a critical
/// point, where V̄ = V - V_c, P̄ = P - P_c, T̄ = T - T_c - alpha(V_c)(P - P_c).
struct CubicCoeffs {
    double c1, c3;
};

EosSpec vdw_spec(const VdwParams& p);

/// Reduced van der Waals gas: critical point at V_c = P_c = T_c = 1.
EosSpec vdw_reduced();

/// Molecular hydrogen, 1000 moles, SI units.
VdwParams hydrogen_params();

/// Equation of state from sampled (V, alpha(V), f(V)); natural cubic splines
/// supply the derivative evaluations. V must be strictly increasing and
/// alpha positive.
EosSpec tabulated_spec(std::vector<double> V, std::vector<double> alpha, std::vector<double> f);

/// P = (T - f(V)) / alpha(V). Throws on V outside the admissible interval.
double isotherm_pressure(double V, double T, const EosSpec& eos);

/// dP/dV along the isotherm at (V, T).
double isotherm_pressure_dV(double V, double T, const EosSpec& eos);

struct SolveOptions {
    int scan_points = 4096;   // bracket scan resolution for non-closed-form specs
    double dedupe_rel = 1e-9; // merge roots closer than this times the volume scale
    double V_lo = 0.0;        // scan window override; 0 keeps the spec default
    double V_hi = 0.0;
};

/// All volumes solving T - alpha(V) P - f(V) = 0, ascending. One root above
/// the critical temperature, one or three below. Throws ConvergenceError if
/// the scan finds none.
std::vector<double> solve_volumes(double P, double T, const EosSpec& eos,
                                  const SolveOptions& opts = {});

/// Locate the critical point: the volume where f'' alpha' - f' alpha'' = 0,
/// then P_c = -f'/alpha', T_c = alpha P_c + f. Degenerate critical points
/// (vanishing cubic coefficient) are rejected.
CriticalPoint critical_point(const EosSpec& eos);

/// c1 = alpha'(V_c), c3 = (f'''(V_c) + alpha'''(V_c) P_c) / 6.
CubicCoeffs local_cubic_coeffs(const EosSpec& eos, const CriticalPoint& cp);

} // namespace phasefront
