from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import solve_ivp

from bilab import scalar_dynamics as sd
from bilab.lagrangians import scalar_closed_form
from oracles import frw_bi_udot, homogeneous_udot


# --- static --------------------------------------------------------------------------

def test_static_lagrangian_is_diagonal_reduction(rng):
    for _ in range(20):
        phi, d = rng.uniform(-1, 2), rng.normal()
        # static gradients are spacelike: g^{mn} d_m phi d_n phi = +phi'^2
        assert sd.static_lagrangian(phi, d) == pytest.approx(scalar_closed_form("diagonal", phi, d * d), abs=1e-14)


@settings(max_examples=40, deadline=None)
@given(st.floats(-2, 3), st.floats(-3, 3))
def test_derrick_function_is_scaling_derivative(phi, d):
    h = 1e-6
    Lp = (sd.static_lagrangian(phi, d + h) - sd.static_lagrangian(phi, d - h)) / (2 * h)
    expected = (d * Lp - 3 * sd.static_lagrangian(phi, d)) / 3
    assert sd.derrick_f(phi, d) == pytest.approx(expected, abs=1e-6)


@settings(max_examples=200, deadline=None)
@given(st.floats(-2, 3), st.floats(-3, 3))
def test_derrick_function_non_negative(phi, d):
    assert sd.derrick_f(phi, d) >= -1e-12


def test_derrick_zeros_at_vacua():
    assert sd.derrick_f(0.0, 0.0) == 0 and sd.derrick_f(1.0, 0.0) == 0
    assert sd.derrick_f(0.5, 0.0) > 0 and sd.derrick_f(0.0, 0.1) > 0


# --- homogeneous ---------------------------------------------------------------------

def test_homogeneous_equation_matches_euler_lagrange(rng):
    f = homogeneous_udot()
    for _ in range(30):
        p, u = rng.uniform(-1, 2), rng.uniform(-1, 1)
        assert sd.homogeneous_rhs(0, [p, u])[1] == pytest.approx(f(p, u), rel=1e-9, abs=1e-12)


def test_homogeneous_sector_uses_timelike_sign(rng):
    # time derivatives enter with g^{00} = -1: grad = -u^2
    for _ in range(10):
        p, u = rng.uniform(-1, 2), rng.uniform(-0.5, 0.5)
        L = 1 - ((1 - 3 * u * u) ** 2 + 16 * (p * (p - 1)) ** 2) ** 0.25 * math.sqrt(1 + 4 * (p * (p - 1)) ** 2)
        assert L == pytest.approx(scalar_closed_form("diagonal", p, -u * u), abs=1e-14)


def test_energy_conserved_along_trajectory():
    sol = sd.integrate_homogeneous((0.15, 0.05), 10.0, dense_output=True)
    E = sd.homogeneous_energy(sol.y[0], sol.y[1])
    assert np.ptp(E) < 1e-9


@pytest.mark.parametrize("phi0", [0.05, 0.2, 0.9])
def test_closed_orbits(phi0):
    T, end = sd.orbit_period((phi0, 0.0))
    assert T is not None
    assert np.allclose(end, [phi0, 0.0], atol=1e-6)


@settings(max_examples=10, deadline=None)
@given(st.floats(0.02, 0.25), st.floats(-0.1, 0.1))
def test_period_time_reversal(phi0, u0):
    E = sd.homogeneous_energy(phi0, u0)
    # move to the turning point with the same energy on the phi < 1/2 side
    from scipy.optimize import brentq
    p_turn = brentq(lambda p: sd.homogeneous_energy(p, 0.0) - E, 1e-9, 0.5)
    T1, _ = sd.orbit_period((p_turn, 0.0))
    sol = sd.integrate_homogeneous((phi0, u0), 30.0, dense_output=True)
    solr = sd.integrate_homogeneous((phi0, -u0), 30.0, dense_output=True)
    assert T1 is not None
    # the reversed start lies on the same orbit: it must come back after one period
    assert np.allclose(sol.sol(T1), [phi0, u0], atol=1e-6)
    assert np.allclose(solr.sol(T1), [phi0, -u0], atol=1e-6)


def test_singular_set_census():
    pts = sd.singular_set()
    assert len(pts) == 16
    assert sum(p.lifted for p in pts) == 14
    assert all(p.residual < 1e-10 for p in pts)
    unlifted = [p for p in pts if not p.lifted]
    assert all(p.phi == pytest.approx(0.5) for p in unlifted)
    assert sorted(abs(p.u) for p in unlifted)[0] == pytest.approx(0.38229447, abs=1e-7)


def test_singular_set_depends_on_box():
    assert len(sd.singular_set(((-0.5, 1.5), (-1.0, 1.0)))) == 14
    assert len(sd.singular_set(((0.4, 0.6), (0.0, 2.0)))) == 2


def test_singular_curve_event():
    rows = sd.portrait([0.0], [0.5], t_max=5.0)
    assert rows[0][2] == "singular"
    rows = sd.portrait([0.1], [0.0], t_max=5.0)
    assert rows[0][2] == "regular"


# --- FRW -------------------------------------------------------------------------------

def test_free_constraint_defect_decays():
    m2, b, rho0 = 1.3, 0.7, 0.2
    y0 = [0.4, -0.2, 0.0]
    rho = sd.frw_free_rho(y0[0], y0[1], m2, b, rho0)
    y0[2] = math.sqrt(rho / 3) * 1.01      # small initial violation
    sol = solve_ivp(sd.frw_free_rhs, (0, 10), y0, args=(m2, b, rho0), rtol=1e-11, atol=1e-13,
                    method="DOP853", dense_output=True)

    def defect(t):
        y = sol.sol(t)
        return sd.friedmann_defect(y, sd.frw_free_rho(y[0], y[1], m2, b, rho0))

    # dD/dt = -2 H D, so D(t) = D(0) exp(-2 int H)
    from scipy.integrate import quad
    for t in (2.0, 5.0, 10.0):
        expected = defect(0) * math.exp(-2 * quad(lambda s: sol.sol(s)[2], 0, t)[0])
        assert defect(t) == pytest.approx(expected, rel=1e-6)


def test_bi_equation_matches_euler_lagrange(rng):
    f = frw_bi_udot()
    for _ in range(10):
        beta, gamma = rng.uniform(1, 4), rng.uniform(0.3, 1.2)
        y = (rng.uniform(-0.5, 1.5), rng.uniform(-0.3, 0.3), rng.uniform(0, 0.5))
        assert sd.frw_bi_rhs(0, y, beta, gamma)[1] == pytest.approx(f(*y, beta, gamma), rel=1e-9, abs=1e-12)


def test_bi_constraint_preserved():
    beta, gamma = 3.0, 0.8
    m = sd.BIScalar(beta, gamma)
    y0 = np.array([0.1, 0.05, 0.0])
    y0[2] = math.sqrt(m.rho(0.1, 0.05) / 3)
    sol = solve_ivp(sd.frw_bi_rhs, (0, 30), y0, args=(beta, gamma), rtol=1e-11, atol=1e-13, method="DOP853")
    y = sol.y[:, -1]
    assert abs(sd.friedmann_defect(y, m.rho(y[0], y[1]))) < 1e-10


def test_bi_rhs_linearises_to_free_field():
    # about phi = 0 the field equation is the free one with m^2 = 4 gamma^2 for any beta,
    # and the Hubble equation is the free one with b = 3 / beta^2 at large beta
    gamma, H = 0.6, 0.05
    target = np.array([[0.0, 1.0], [-4 * gamma ** 2, -3 * H]])
    for beta in (10.0, 100.0, 1000.0):
        J = sd._jacobian(lambda z: sd.frw_bi_rhs(0, (z[0], z[1], H), beta, gamma)[:2], (0.0, 0.0), 1e-6)
        assert np.allclose(J, target, atol=1e-8)
    eps, beta = 1e-4, 1e3
    for y in [(eps, 0.0, H), (0.0, eps, H), (eps, -eps, H)]:
        bi = sd.frw_bi_rhs(0, y, beta, gamma)[2] + H * H
        free = sd.frw_free_rhs(0, y, 4 * gamma ** 2, 3 / beta ** 2)[2] + H * H
        assert bi == pytest.approx(free, rel=1e-4)


def test_fixed_point_eigenvalues():
    for beta, gamma in [(10.0, 0.7), (2.0, 1.1)]:
        for fp in sd.frw_fixed_points(beta, gamma):
            closed = sorted([fp["lambda_plus"], fp["lambda_minus"]], key=lambda z: (z.real, z.imag))
            num = sorted(fp["numeric_eigenvalues"], key=lambda z: (z.real, z.imag))
            assert np.allclose(closed, num, atol=1e-8)
            assert abs(sd.frw_bi_rhs(0, (fp["phi0"], 0.0, fp["H0"]), beta, gamma)[2]) < 1e-12


def test_vacuum_oscillation_frequency():
    gamma = 0.9
    fp = sd.frw_fixed_points(50.0, gamma)[0]
    assert fp["lambda_plus"] == pytest.approx(2j * gamma)


def test_quadratic_fit_matches_closed_forms():
    beta, gamma = 4.0, 0.9
    for fp in sd.frw_fixed_points(beta, gamma):
        rho0, b, m2 = sd.rho_quadratic_fit(beta, gamma, fp["phi0"])
        assert rho0 == pytest.approx(fp["rho0"], abs=1e-6)
        assert m2 == pytest.approx(fp["m2"], rel=1e-6)


def test_lambda_plus_series():
    gamma = 0.8
    beta = 1e3 * gamma ** 2
    fp = sd.frw_fixed_points(beta, gamma)[2]
    assert fp["lambda_plus"].real == pytest.approx(fp["lambda_plus_series"], rel=1e-3)


def test_fixed_points_merge_as_gamma_vanishes():
    fps = sd.frw_fixed_points(1.0, 1e-6)
    assert all(abs(fp["phi0"]) <= 1e-6 for fp in fps)
    assert all(abs(fp["lambda_plus"]) < 1e-5 for fp in fps)


def test_bi_scalar_validation():
    with pytest.raises(ValueError):
        sd.BIScalar(beta=0.0)
