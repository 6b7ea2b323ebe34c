from __future__ import annotations

import math

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.integrate import quad

from bilab import soliton as so
from bilab.lagrangians import bina, bina_su2_closed, invariants_su2
from bilab.liealg import build_su2
from oracles import generic_origin_c2_c3, soliton_udot, unit_origin_c4


def _slope(rs, res):
    return np.polyfit(np.log(rs), np.log(np.abs(res)), 1)[0]


# --- reduced field ------------------------------------------------------------------

def test_monopole_energy_constant():
    assert so.MONOPOLE_ENERGY == pytest.approx(1.2360497849, abs=1e-9)
    val, _ = quad(lambda r: so.energy_integrand(0.0, 0.0, math.log(r)) / r, 0, np.inf, limit=200)
    assert val == pytest.approx(so.MONOPOLE_ENERGY, abs=1e-9)


@settings(max_examples=30, deadline=None)
@given(st.floats(-1.5, 1.5), st.floats(-2, 2), st.floats(0.2, 3))
def test_ansatz_field_reduces_to_invariants(k, kp, r):
    x = r * np.array([0.48, -0.6, 0.64])
    s = so.thooft_field(k, kp, x)
    P, Q2, K3 = invariants_su2(s, build_su2())
    P2, _, K32 = so.thooft_invariants(k, kp, r)
    assert P == pytest.approx(P2, rel=1e-10, abs=1e-12)
    assert K3 == pytest.approx(K32, rel=1e-10, abs=1e-12)
    assert Q2 == pytest.approx(0, abs=1e-10 * max(1, P * P))
    assert bina(s, build_su2()) == pytest.approx(bina_su2_closed(P2, 0, K32), rel=1e-10, abs=1e-12)


@settings(max_examples=30, deadline=None)
@given(st.floats(-1.5, 1.5), st.floats(-2, 2), st.floats(-2, 2))
def test_reduced_density_is_determinant_lagrangian(k, u, tau):
    r = math.exp(tau)
    x = r * np.array([0.0, 0.6, 0.8])
    s = so.thooft_field(k, u / r, x)
    assert so.reduced_action_density(k, u, tau) == pytest.approx(r ** 3 * bina(s, build_su2()),
                                                                   rel=1e-9, abs=1e-12)
    assert so.energy_integrand(k, u, tau) >= 0


def test_equation_of_motion_matches_euler_lagrange(rng):
    f = soliton_udot()
    for _ in range(30):
        k, u, t = rng.uniform(-1.5, 1.5), rng.uniform(-2, 2), rng.uniform(-2, 2)
        assert so.rhs(t, [k, u])[1] == pytest.approx(f(k, u, t), rel=1e-9, abs=1e-12)


def test_friction_tends_to_one_for_weak_fields():
    assert so.gamma_friction(0.999, 1e-3, 50.0) == pytest.approx(1.0, abs=1e-6)


# --- series --------------------------------------------------------------------------

@pytest.mark.parametrize("k0,a", [(0.3, 0.7), (-0.5, 1.3), (0.0, 2.0)])
def test_generic_origin_coefficients(k0, a):
    c = so.series_origin_generic(k0, a, 3)
    c2, c3 = generic_origin_c2_c3(k0, a)
    assert c[2] == pytest.approx(c2, rel=1e-12, abs=1e-14)
    assert c[3] == pytest.approx(c3, rel=1e-12)


@pytest.mark.parametrize("b", [0.5, 0.1, 2.0])
def test_unit_origin_coefficients(b):
    c = so.series_origin_unit(b, -1, 5)
    assert c[4] == pytest.approx(-unit_origin_c4(b), rel=1e-12)
    assert c[1] == 0 and c[3] == pytest.approx(0, abs=1e-14) and c[5] == pytest.approx(0, abs=1e-12)


@pytest.mark.parametrize("c", [0.05, 0.7, 3.0, 1e4])
def test_infinity_coefficients(c):
    co = so.series_infinity(c, 1, 4)
    assert co[1] == -c
    assert co[2] == pytest.approx(0.75 * c * c, rel=1e-12)


def test_generic_origin_rejects_degenerate():
    with pytest.raises(ValueError):
        so.series_origin_generic(1.0, 0.5)
    with pytest.raises(ValueError):
        so.series_origin_generic(0.2, 0.0)


def test_series_residual_orders():
    rs = 0.02 * 2.0 ** -np.arange(5)
    gen = so.series_origin_generic(0.3, 0.7, 3)
    assert _slope(rs, so.series_residual(gen, rs)) == pytest.approx(4.0, abs=0.2)
    unit = so.series_origin_unit(0.5, 1, 4)
    assert _slope(rs * 5, so.series_residual(unit, rs * 5)) == pytest.approx(6.0, abs=0.2)
    big = 5.0 * 2.0 ** np.arange(5)
    inf = so.series_infinity(0.7, 1, 6)
    assert _slope(big, so.series_residual(inf, big, True)) == pytest.approx(-7.0, abs=0.2)


# --- shooting ------------------------------------------------------------------------

def test_shoot_converges_with_regular_origin():
    p = so.shoot(3.0)
    assert p.converged
    assert -1 < p.k0 < 1
    assert p.k[-1] == pytest.approx(1.0, abs=1e-2)
    assert p.nodes >= 1
    # energy from the sampled profile agrees with the integrator accumulator
    assert so.energy(p) == pytest.approx(p.energy, rel=1e-5)


def test_small_c_needs_smaller_matching_radius():
    p = so.shoot(-9.0)
    assert p.converged


def test_large_c_approaches_point_charge():
    for t in (15.0, 20.0):
        p = so.shoot(t)
        assert p.converged
        assert p.energy == pytest.approx(so.MONOPOLE_ENERGY, abs=1e-2)


def test_monopole_profile_energy():
    assert so.energy(so.monopole_profile()) == pytest.approx(so.MONOPOLE_ENERGY, rel=2e-3)


def test_vacuum_profile_has_no_energy():
    tau = np.linspace(-5, 5, 101)
    p = so.Profile(0.0, tau, np.ones_like(tau), np.zeros_like(tau))
    assert so.energy(p) == 0


def test_count_nodes():
    assert so.count_nodes(np.array([1.0, 0.5, -0.1, -0.3, 0.2])) == 2
    assert so.count_nodes(np.array([1.0, 1e-20, 1.0])) == 0


def test_scan_order_independent_of_workers():
    taus = [-1.0, 0.5, 2.0]
    a = so.scan(taus, workers=1)
    b = so.scan(taus, workers=2)
    assert [r["tau_c"] for r in a] == taus
    assert a == b
