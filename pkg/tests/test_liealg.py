from __future__ import annotations

import itertools

import numpy as np
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st
from scipy.spatial.transform import Rotation

from bilab.liealg import (LieBasis, build_su2, build_sun, build_u1, k_tensor, k_tensor_array,
                          symmetrize)
from oracles import k4_delta


@pytest.mark.parametrize("basis", [build_su2(), build_su2(0.3), build_sun(3), build_sun(4, 0.5), build_u1()],
                         ids=lambda b: b.name)
def test_product_law_closes(basis):
    assert basis.closure_residual() < 1e-13


def test_su2_structure_constants():
    s = 0.7
    b = build_su2(s)
    eps = np.zeros((3, 3, 3))
    for (i, j, k), sign in zip(itertools.permutations(range(3)), (1, -1, -1, 1, 1, -1)):
        eps[i, j, k] = sign
    assert np.allclose(b.C, 2 * s * eps, atol=1e-14)
    assert np.allclose(b.g, s * s * np.eye(3), atol=1e-14)
    assert np.allclose(b.S, 0, atol=1e-14)


def test_su3_has_symmetric_tensor():
    b = build_sun(3)
    assert np.max(np.abs(b.S)) > 0.1
    assert np.allclose(b.S, np.swapaxes(b.S, 1, 2), atol=1e-13)


def test_sun2_is_su2():
    assert np.allclose(build_sun(2, 0.4).T, build_su2(0.4).T)


def test_k4_su2_delta_identity():
    assert np.allclose(k_tensor_array(build_su2(), 4), k4_delta(), atol=1e-14)


def test_k2_is_metric():
    for b in (build_su2(0.6), build_sun(3)):
        assert np.allclose(k_tensor_array(b, 2), b.g)


def test_k_tensor_single_matches_array():
    b = build_sun(3)
    K = k_tensor_array(b, 3)
    for idx in [(0, 1, 2), (3, 4, 7), (7, 7, 7)]:
        assert k_tensor(b, idx) == pytest.approx(K[idx], abs=1e-14)


def test_k_tensor_rejects_bad_indices():
    with pytest.raises(IndexError):
        k_tensor(build_su2(), (0, 3))
    with pytest.raises(ValueError):
        k_tensor(build_su2(), ())


def test_rejects_hermitian_generators():
    with pytest.raises(ValueError):
        LieBasis(np.array([[[1.0, 0], [0, -1.0]]]))
    with pytest.raises(ValueError):
        build_su2(-1.0)


@settings(max_examples=25, deadline=None)
@given(st.lists(st.floats(-3, 3), min_size=3, max_size=3))
def test_rotated_su2_basis_closes_with_same_metric(rv):
    R = Rotation.from_rotvec(rv).as_matrix()
    T = np.einsum("ab,bij->aij", R, build_su2().T)
    b = LieBasis(T)
    assert b.closure_residual() < 1e-12
    assert np.allclose(b.g, np.eye(3), atol=1e-12)
    # K4 is an invariant tensor of SO(3)
    assert np.allclose(k_tensor_array(b, 4), k4_delta(), atol=1e-12)


@settings(max_examples=20, deadline=None)
@given(st.integers(0, 2 ** 31))
def test_symmetrize_idempotent_and_invariant(seed):
    K = np.random.default_rng(seed).normal(size=(3, 3, 3, 3))
    S = symmetrize(K)
    assert np.allclose(symmetrize(S), S)
    assert np.allclose(S, S.transpose(1, 0, 3, 2))
