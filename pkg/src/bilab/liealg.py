"""Anti-Hermitian matrix bases for su(n) / u(1) and their structure tensors.

A basis stores generators ``T[a]`` (shape ``(N, d_R, d_R)``) together with
the coefficients of the product law

    T_a T_b = -g_ab 1 + 1/2 C^c_ab T_c + i/2 S^c_ab T_c

which are recovered numerically from the matrices themselves.
"""
from __future__ import annotations

import itertools
import math
from dataclasses import dataclass
from functools import cached_property

import numpy as np

_PAULI = np.array(
    [[[0, 1], [1, 0]], [[0, -1j], [1j, 0]], [[1, 0], [0, -1]]], dtype=complex
)


def kron(*mats):
    """Kronecker product of any number of matrices, left to right."""
    out = np.asarray(mats[0])
    for m in mats[1:]:
        out = np.kron(out, m)
    return out


def _real_coords(T):
    # real-linear coordinates of each generator (re and im parts flattened)
    flat = T.reshape(T.shape[0], -1)
    return np.concatenate([flat.real, flat.imag], axis=1).T


def _expand(M, T):
    """Real coefficients x^c with M = sum_c x^c T_c (least squares) and residual."""
    A = _real_coords(T)
    m = M.reshape(-1)
    rhs = np.concatenate([m.real, m.imag])
    x, *_ = np.linalg.lstsq(A, rhs, rcond=None)
    return x, float(np.max(np.abs(A @ x - rhs), initial=0.0))


@dataclass(frozen=True)
class LieBasis:
    """Generators of a matrix Lie algebra plus derived tensors.

    ``C[c, a, b]`` holds C^c_ab, ``S[c, a, b]`` holds S^c_ab and ``g[a, b]``
    the Killing-type metric g_ab = -tr(T_a T_b)/d_R.
    """

    T: np.ndarray
    name: str = ""

    def __post_init__(self):
        T = np.asarray(self.T, dtype=complex)
        if T.ndim != 3 or T.shape[1] != T.shape[2]:
            raise ValueError("generators must have shape (N, d, d)")
        if not np.allclose(T.conj().transpose(0, 2, 1), -T, atol=1e-12):
            raise ValueError("generators must be anti-Hermitian")
        object.__setattr__(self, "T", T)

    @property
    def N(self) -> int:
        return self.T.shape[0]

    @property
    def d_R(self) -> int:
        return self.T.shape[1]

    @cached_property
    def g(self) -> np.ndarray:
        return -np.einsum("aij,bji->ab", self.T, self.T).real / self.d_R

    @cached_property
    def _tensors(self):
        N, T = self.N, self.T
        C = np.zeros((N, N, N))
        S = np.zeros((N, N, N))
        eye = np.eye(self.d_R)
        worst = 0.0
        for a in range(N):
            for b in range(N):
                comm = T[a] @ T[b] - T[b] @ T[a]
                C[:, a, b], r1 = _expand(comm, T)
                anti = T[a] @ T[b] + T[b] @ T[a] + 2 * self.g[a, b] * eye
                if np.max(np.abs(anti)) > 0:
                    s, r2 = _expand(anti, 1j * T)
                else:
                    s, r2 = np.zeros(N), 0.0
                S[:, a, b] = s
                worst = max(worst, r1, r2)
        return C, S, worst

    @property
    def C(self) -> np.ndarray:
        return self._tensors[0]

    @property
    def S(self) -> np.ndarray:
        return self._tensors[1]

    def closure_residual(self) -> float:
        """Max deviation of the product law; ~1e-15 when the basis closes."""
        C, S, _ = self._tensors
        T = self.T
        eye = np.eye(self.d_R)
        lhs = np.einsum("aij,bjk->abik", T, T)
        rhs = (
            -self.g[:, :, None, None] * eye
            + 0.5 * np.einsum("cab,cij->abij", C, T)
            + 0.5j * np.einsum("cab,cij->abij", S, T)
        )
        return float(np.max(np.abs(lhs - rhs)))


def build_su2(s: float = 1.0) -> LieBasis:
    """su(2) fundamental with T_a = -i s sigma_a, so [T_a, T_b] = 2 s eps_abc T_c."""
    if s <= 0:
        raise ValueError("normalisation must be positive")
    return LieBasis(-1j * s * _PAULI, name=f"su2(s={s:g})")


def gell_mann(n: int) -> np.ndarray:
    """Generalised Gell-Mann matrices, tr(l_a l_b) = 2 delta_ab."""
    mats = []
    for j in range(n):
        for k in range(j + 1, n):
            m = np.zeros((n, n), complex)
            m[j, k] = m[k, j] = 1
            mats.append(m)
    for j in range(n):
        for k in range(j + 1, n):
            m = np.zeros((n, n), complex)
            m[j, k] = -1j
            m[k, j] = 1j
            mats.append(m)
    for l in range(1, n):
        m = np.zeros((n, n), complex)
        m[np.arange(l), np.arange(l)] = 1
        m[l, l] = -l
        mats.append(m * math.sqrt(2.0 / (l * (l + 1))))
    return np.array(mats)


def build_sun(n: int, s: float = 1.0) -> LieBasis:
    """su(n) fundamental, T_a = -i s lambda_a with generalised Gell-Mann lambda.

    For n = 2 this is the same basis as ``build_su2(s)``.
    """
    if n < 2:
        raise ValueError("n must be >= 2")
    return LieBasis(-1j * s * gell_mann(n), name=f"su{n}(s={s:g})")


def build_u1() -> LieBasis:
    """Abelian case: a single generator T = i acting on C."""
    return LieBasis(np.array([[[1j]]]), name="u1")


def k_tensor(basis: LieBasis, indices) -> float:
    """K_{a1..an} = (-1)^floor(n/2) / d_R * tr(T_a1 ... T_an), zero-based indices."""
    idx = list(indices)
    if not idx:
        raise ValueError("need at least one index")
    if any(i < 0 or i >= basis.N for i in idx):
        raise IndexError("generator index out of range")
    prod = np.eye(basis.d_R, dtype=complex)
    for i in idx:
        prod = prod @ basis.T[i]
    val = (-1) ** (len(idx) // 2) * np.trace(prod) / basis.d_R
    return float(val.real)


def k_tensor_array(basis: LieBasis, n: int) -> np.ndarray:
    """All components K_{a1..an} at once, as an n-index real array."""
    T = basis.T
    P = T
    for _ in range(n - 1):
        P = np.einsum("...ij,bjk->...bik", P, T)
    tr = np.einsum("...ii->...", P)
    return ((-1) ** (n // 2) * tr / basis.d_R).real


def symmetrize(K: np.ndarray) -> np.ndarray:
    """Average of an n-index array over all index permutations."""
    n = K.ndim
    perms = list(itertools.permutations(range(n)))
    return sum(np.transpose(K, p) for p in perms) / len(perms)
