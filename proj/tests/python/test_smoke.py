"""End-to-end smoke checks for the Python bindings."""

import math

import pytest

import phasefront as pf


def linspace(lo, hi, n):
    step = (hi - lo) / (n - 1)
    return [lo + step * i for i in range(n)]


def test_version_string():
    assert pf.__version__ == "0.1.0"


def test_hydrogen_critical_point():
    eos = pf.vdw_spec(pf.hydrogen_params())
    cp = pf.critical_point(eos)
    assert cp.V_c == pytest.approx(0.07983, rel=1e-4)
    assert cp.T_c == pytest.approx(33.159, rel=1e-3)
    assert cp.P_c == pytest.approx(1.295082e6, rel=1e-3)


def test_reduced_maxwell_front():
    eos = pf.vdw_reduced()
    sp = pf.maxwell_pressure(0.9, eos)
    assert sp.P_sat == pytest.approx(0.6469983519, rel=1e-6)
    assert sp.V_l == pytest.approx(0.60340190, rel=1e-5)
    assert sp.V_g == pytest.approx(2.34884238, rel=1e-5)
    assert sp.delta_S == pytest.approx(5.35986981, rel=1e-5)
    assert pf.clapeyron_speed(sp, eos) == pytest.approx(3.07078350, rel=1e-5)
    assert pf.gibbs_difference(sp.P_sat, 0.9, eos) == pytest.approx(0.0, abs=1e-9)


def test_volume_roots_bracket_the_front():
    eos = pf.vdw_reduced()
    roots = pf.solve_volumes(0.6469983519, 0.9, eos)
    assert len(roots) == 3
    assert roots == sorted(roots)
    for v in roots:
        assert pf.isotherm_pressure(v, 0.9, eos) == pytest.approx(0.6469983519, rel=1e-9)


def test_pearcey_normalisation():
    pv = pf.pearcey_moments(0.0, 0.0)
    lam = pv.Lambda * math.exp(pv.log_scale)
    ref = 8.0**0.25 * math.gamma(0.25) / 2.0
    assert lam == pytest.approx(ref, rel=1e-10)
    assert pv.u == pytest.approx(0.0, abs=1e-10)
    assert abs(pf.heat_residual(1.5, -2.0)) < 1e-8


def test_scaling_map_round_trip():
    eos = pf.vdw_reduced()
    cp = pf.critical_point(eos)
    m = pf.make_scaling_map(eos, cp, 9.0 / 64.0, 1e-6)
    assert m.sigma == pytest.approx(-1.0, rel=1e-9)
    assert m.alpha1 == pytest.approx(-3.0 / 8.0, rel=1e-9)
    X, Y = m.xy(cp.P_c, cp.T_c)
    assert X == pytest.approx(0.0, abs=1e-12)
    assert Y == pytest.approx(0.0, abs=1e-12)
    assert pf.universal_volume(cp.P_c, cp.T_c, m) == pytest.approx(cp.V_c, abs=1e-8)
    with pytest.raises(pf.ConfigError):
        pf.with_nu(m, 0.0)


def test_infeasible_above_critical():
    eos = pf.vdw_reduced()
    with pytest.raises(pf.InfeasibleError):
        pf.maxwell_pressure(1.2, eos)


def test_fit_round_trip():
    eos = pf.vdw_reduced()
    grid = linspace(0.5, 4.0, 200)
    p1 = [pf.isotherm_pressure(v, 1.2, eos) for v in grid]
    p2 = [pf.isotherm_pressure(v, 1.5, eos) for v in grid]
    fitted = pf.fit_alpha_f(1.2, grid, p1, 1.5, grid, p2)
    V, P = pf.predict_isotherm(fitted, 1.35)
    worst = max(
        abs(p - pf.isotherm_pressure(v, 1.35, eos)) / max(1.0, abs(p))
        for v, p in zip(V, P)
    )
    assert worst < 1e-5
    cp = pf.critical_point(fitted)
    assert cp.V_c == pytest.approx(1.0, rel=1e-3)


def test_characteristic_march_smoke():
    eos = pf.vdw_reduced()
    sol = pf.evolve_characteristic(
        eos, c=1.0, nu=1e-3, P0=1.2, P1=1.1, T_lo=1.5, T_hi=2.0, nt=256, snapshots=2
    )
    assert len(sol.P) == 2
    assert len(sol.row(0)) == len(sol.T)
    assert all(math.isfinite(v) for v in sol.row(1))
    assert sol.max_flux_residual < 1e-3


def test_burgers_merge_smoke():
    ch = pf.BurgersColeHopf([-5.0, -0.1, 0.1, 5.0], [2.0, 2.0, 0.0, 0.0])
    assert ch.initial(-3.0) == pytest.approx(2.0)
    # single shock of speed 1: the profile midpoint sits near X = Y
    u = ch.value(2.0, 2.0)
    assert u == pytest.approx(1.0, abs=0.05)
