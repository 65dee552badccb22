"""Equations of state as nonlinear-wave solutions of conservation laws.

Thin Python façade over the C++ core: isotherm roots, critical points,
Maxwell fronts, the universal critical profile and shock kinematics.
"""

from ._core import (  # noqa: F401
    BurgersColeHopf,
    ConfigError,
    ConvergenceError,
    CriticalPoint,
    CubicCoeffs,
    EosSpec,
    Error,
    FieldSolution,
    InfeasibleError,
    PearceyValue,
    SaturationPoint,
    ScalingMap,
    VdwParams,
    __version__,
    burgers_residual,
    clapeyron_speed,
    coexistence_curve,
    critical_compressibility,
    critical_point,
    cubic_limit,
    evolve_characteristic,
    fit_alpha_f,
    gibbs_difference,
    heat_residual,
    hydrogen_params,
    isotherm_pressure,
    local_cubic_coeffs,
    make_scaling_map,
    maxwell_pressure,
    ode_residual,
    pearcey_moments,
    predict_isotherm,
    sigma_matching,
    solve_volumes,
    tabulated_spec,
    universal_volume,
    vdw_reduced,
    vdw_spec,
    with_nu,
)
