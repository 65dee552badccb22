#pragma once

#include <array>
#include <utility>

#include "phasefront/eos.hpp"

namespace phasefront {

/// Quartic-exponent line integral Lambda(X, Y) = integral of
/// exp(-(z^4 - 2 Y z^2 + 4 X z)/8) dz and the wave profile
/// u = -2 d(log Lambda)/dX, with X/Y derivatives taken analytically through
/// the moments M_k = integral of z^k exp(-E) dz.
///
/// All Lambda-scale fields are normalized by exp(log_scale), so the true
/// integral is Lambda * exp(log_scale); ratios (u and its derivatives) are
/// unaffected. The normalization keeps evaluations finite for |X|, |Y| up
/// to ~50 where the raw integral overflows.
struct PearceyValue {
    double X = 0.0, Y = 0.0;
    double Lambda = 0.0;
    double dLambda_dX = 0.0;
    double dLambda_dY = 0.0;
    double d2Lambda_dX2 = 0.0;
    double u = 0.0;
    double du_dX = 0.0;
    double d2u_dX2 = 0.0;
    double du_dY = 0.0;
    double log_scale = 0.0;
    std::array<double, 5> m{}; // moments M_0..M_4, same normalization as Lambda
};

PearceyValue pearcey_moments(double X, double Y, double rel_tol = 1e-11);

/// |Lambda_Y - Lambda_XX| / Lambda with Lambda_Y from centered finite
/// differences and Lambda_XX from moments. The identity is exact in the
/// integral representation, so the residual measures pure numerics.
double heat_residual(double X, double Y);

/// |u_Y + u u_X - u_XX| with u_Y from finite differences.
double burgers_residual(double X, double Y);

/// Residual of the second-order ODE w'' + 3 w w' + w^3 - Y w = X satisfied by
/// the rescaled profile w(X, Y) = 2^{-1/4} u(-2^{3/4} X, 2^{1/2} Y).
double ode_residual(double X, double Y);

/// Inviscid limit of u: the dominant real root of z^3 - Y z + X = 0 (the
/// saddle minimizing the exponent). Exactly on the shock line (X = 0, Y > 0)
/// the two outer saddles tie and an InfeasibleError is thrown.
double cubic_limit(double X, double Y);

/// Matching constant sigma = [6 gamma0 / (alpha'(V_c) (f''' + alpha''' P_c))]^{1/4}
/// with the fourth-root sign fixed by alpha1 gamma0 < 0, alpha1 = sigma alpha'(V_c).
/// Throws InfeasibleError when the root argument is not positive (complex sigma).
double sigma_matching(const EosSpec& eos, const CriticalPoint& cp, double gamma0);

/// Affine map between physical displacements and the universal (X, Y) plane:
///   Pbar = (P - P_c) / nu^{1/2},
///   Tbar = (T - T_c - alpha0 (P - P_c)) / nu^{3/4},
///   X = -(alpha1/gamma0) Tbar,  Y = -(alpha1^2/gamma0) Pbar,
///   V = V_c + sigma nu^{1/4} u(X, Y).
struct ScalingMap {
    CriticalPoint cp;
    double alpha0 = 0.0; // alpha(V_c)
    double alpha1 = 0.0; // sigma * alpha'(V_c)
    double gamma0 = 0.0;
    double sigma = 0.0;
    double nu = 0.0;

    std::pair<double, double> xy(double P, double T) const;
    /// True when the mapped |X|, |Y| stay within the trusted asymptotic range.
    bool in_window(double P, double T, double cap = 50.0) const;
};

ScalingMap make_scaling_map(const EosSpec& eos, const CriticalPoint& cp, double gamma0, double nu);

/// V_c + sigma nu^{1/4} u(X(P,T), Y(P,T)).
double universal_volume(double P, double T, const ScalingMap& map);

} // namespace phasefront
