#pragma once

#include <optional>
#include <vector>

#include "phasefront/eos.hpp"
#include "phasefront/numerics.hpp"

namespace phasefront {

/// Scalar function of one variable with two derivatives.
struct SmoothFn {
    num::Fn value, d1, d2;
    double operator()(double x) const { return value(x); }
};

/// First-order entropy expansion S = S0(V) + nu (S1(V) V_T + S2(V) V_TT) + F(T)
/// on the working volume interval [V_lo, V_hi]. S0 must be strictly increasing.
struct ViscousEntropySpec {
    SmoothFn S0, S1, S2;
    SmoothFn F; // temperature component; only its derivatives matter
    double nu = 0.0;
    double V_lo = 0.0, V_hi = 0.0;
};

/// Closed-form coefficient set alpha = a0 + a1 V, gamma = g0 + g1 V,
/// beta = b0 + b1 V + b2 V^2, letting the marching loop skip the generic
/// std::function dispatch.
struct PolyCoeffs {
    double a0 = 0.0, a1 = 0.0;
    double g0 = 0.0, g1 = 0.0;
    double b0 = 0.0, b1 = 0.0, b2 = 0.0;
};

/// Coefficients of V_P + alpha(V) V_T + nu beta(V) V_T^2 + nu gamma(V) V_TT = 0.
/// alpha_anti is an antiderivative of alpha (any constant), used by the
/// flux-form discretization.
struct ViscousCoeffs {
    num::Fn alpha, beta, gamma, gamma_d1, alpha_anti;
    double nu = 0.0;
    std::optional<PolyCoeffs> poly;
};

/// alpha = 1/S0', gamma = S1/S0' - S2/(S0')^2,
/// beta = alpha^3 S1' + 2 alpha^2 alpha' S1 - alpha^2 S2' - alpha alpha' S2
/// with alpha' = -S0''/(S0')^2.
ViscousCoeffs coeffs_from_entropy(const ViscousEntropySpec& spec);

/// Entropy spec for a van der Waals gas with constant S1 = c and S2 = 0.
ViscousEntropySpec vdw_viscous_spec(const VdwParams& p, double c, double nu, double V_lo,
                                    double V_hi);

/// Fast-form coefficients for the spec above: gamma = c alpha,
/// beta = 2 c alpha' alpha^2.
ViscousCoeffs vdw_viscous_coeffs(const VdwParams& p, double c, double nu);

/// Fast-form coefficients with the van der Waals alpha but constant gamma and
/// zero beta: the exactly Burgers-reducible case used near the critical point.
ViscousCoeffs constant_gamma_coeffs(const VdwParams& p, double gamma0, double nu);

struct GridSpec {
    int nt = 2048;        // spatial (temperature) nodes
    double cfl = 0.4;     // fraction of the explicit stability bound
    int snapshots = 9;    // retained marching levels, both ends included
    double max_norm = 1e6;
    long max_steps = 50'000'000;
};

/// Dirichlet values at the two temperature edges as functions of P.
struct BoundarySpec {
    num::Fn left, right;
};

struct FieldSolution {
    std::vector<double> P; // retained marching levels
    std::vector<double> T; // spatial grid
    std::vector<double> V; // row-major, V[i * T.size() + j] at (P[i], T[j])
    /// Worst per-step gap between the interior mass change and the boundary
    /// flux accounting. Pure roundoff when beta == gamma' (no source term);
    /// otherwise measures the accumulated source contribution.
    double max_flux_residual = 0.0;
    long steps_taken = 0;

    double value(std::size_t i, std::size_t j) const { return V[i * T.size() + j]; }
    std::vector<double> row(std::size_t i) const {
        return {V.begin() + static_cast<std::ptrdiff_t>(i * T.size()),
                V.begin() + static_cast<std::ptrdiff_t>((i + 1) * T.size())};
    }
};

/// March V(P, T) from the initial isotherm V0(T) at P0 to P1 with Heun (RK2)
/// steps and second-order central differences in T, in conservative flux
/// form. The marching direction must keep the diffusion coefficient
/// -sign(P1-P0) nu gamma positive (ConfigError otherwise); the step obeys the
/// explicit diffusive and advective bounds.
FieldSolution evolve_viscous(const ViscousCoeffs& coeffs, const num::Fn& V0, double P0, double P1,
                             double T_lo, double T_hi, const BoundarySpec& bc,
                             const GridSpec& grid = {});

FieldSolution evolve_viscous(const ViscousEntropySpec& spec, const num::Fn& V0, double P0,
                             double P1, double T_lo, double T_hi, const BoundarySpec& bc,
                             const GridSpec& grid = {});

/// Boundary function P -> V from the characteristic (inviscid) solution at a
/// fixed temperature edge: the indicated root of the state surface.
enum class Branch { smallest, largest, unique };
num::Fn characteristic_boundary(const EosSpec& eos, double T_edge, Branch branch);

/// Single-valued characteristic solution sampled on a (P, T) grid; rows where
/// the surface is multivalued pick the requested branch.
FieldSolution characteristic_solution(const EosSpec& eos, const std::vector<double>& Ps,
                                      const std::vector<double>& Ts, Branch branch);

/// Exact solution operator of u_Y + u u_X = u_XX built on the heat-kernel
/// convolution of exp(-Psi/2), Psi the antiderivative of the initial profile.
class BurgersColeHopf {
public:
    /// Piecewise-linear initial data on strictly increasing nodes, held
    /// constant beyond the ends.
    BurgersColeHopf(std::vector<double> xi, std::vector<double> u0);
    /// Analytic initial potential Psi with Psi' = u0, valid on all of R.
    BurgersColeHopf(num::Fn psi, double xi_lo, double xi_hi);

    double initial(double X) const;
    /// u(X, Y) for Y > 0 by adaptive quadrature of the two Cole-Hopf
    /// integrals, normalized at the exponent minimum.
    double value(double X, double Y) const;

private:
    double psi(double xi) const;
    std::vector<double> xi_, u0_, psi_nodes_;
    num::Fn psi_fn_;
    double lo_ = 0.0, hi_ = 0.0;
};

struct BurgersField {
    std::vector<double> X, Y, u; // row-major over (Y, X)
};

BurgersField burgers_evolve(const BurgersColeHopf& ch, const std::vector<double>& Xs,
                            const std::vector<double>& Ys);

/// X where u(X, Y) crosses `level` within [X_lo, X_hi] (bracketed root).
double burgers_shock_position(const BurgersColeHopf& ch, double Y, double level, double X_lo,
                              double X_hi);

} // namespace phasefront
