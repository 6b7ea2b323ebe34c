"""Derivation-based calculus on C(M) x M_n with a module of K x K matrices.

A connection is stored pointwise: the spacetime components ``A[mu]``, their
first derivatives ``dA[mu, nu] = d_mu A_nu``, the algebraic components
``phi[a]`` (one per derivation) and ``dphi[mu, a] = d_mu phi_a``.  All
entries are K x K complex matrices, anti-Hermitian for unitary connections.
"""
from __future__ import annotations

from dataclasses import dataclass, field

import numpy as np

from .liealg import LieBasis


@dataclass
class NCConnection:
    basis: LieBasis
    A: np.ndarray          # (d, K, K)
    phi: np.ndarray        # (N, K, K)
    dA: np.ndarray | None = None      # (d, d, K, K)
    dphi: np.ndarray | None = None    # (d, N, K, K)
    hermitian: bool = field(default=True)

    def __post_init__(self):
        self.A = np.asarray(self.A, dtype=complex)
        self.phi = np.asarray(self.phi, dtype=complex)
        d, K = self.A.shape[0], self.phi.shape[-1]
        if self.phi.shape[0] != self.basis.N:
            raise ValueError("need one phi component per derivation")
        if self.A.shape[1:] != (K, K) or self.phi.shape[1:] != (K, K):
            raise ValueError("module matrices must all be K x K")
        if self.dA is None:
            self.dA = np.zeros((d, d, K, K), complex)
        if self.dphi is None:
            self.dphi = np.zeros((d, self.basis.N, K, K), complex)
        self.dA = np.asarray(self.dA, dtype=complex)
        self.dphi = np.asarray(self.dphi, dtype=complex)
        if self.hermitian:
            for arr in (self.A, self.phi, self.dA, self.dphi):
                if not np.allclose(np.swapaxes(arr, -1, -2).conj(), -arr, atol=1e-10):
                    raise ValueError("unitary connection needs anti-Hermitian components")

    @property
    def d(self) -> int:
        return self.A.shape[0]

    @property
    def K(self) -> int:
        return self.phi.shape[-1]


def nc_curvature(conn: NCConnection, mass: float = 1.0):
    """Curvature blocks (F_munu, F_mua, F_ab).

    F_munu = d_mu A_nu - d_nu A_mu + [A_mu, A_nu]
    F_mua  = d_mu phi_a + [A_mu, phi_a]
    F_ab   = [phi_a, phi_b] - mass * C^c_ab phi_c

    ``mass`` rescales the structure-constant term; 1 is the plain
    derivation calculus.
    """
    A, dA, phi, dphi = conn.A, conn.dA, conn.phi, conn.dphi
    F_st = dA - np.swapaxes(dA, 0, 1)
    F_st = F_st + np.einsum("mij,njk->mnik", A, A) - np.einsum("nij,mjk->mnik", A, A)
    F_mix = dphi + np.einsum("mij,ajk->maik", A, phi) - np.einsum("aij,mjk->maik", phi, A)
    F_int = np.einsum("aij,bjk->abik", phi, phi) - np.einsum("bij,ajk->abik", phi, phi)
    F_int = F_int - mass * np.einsum("cab,cij->abij", conn.basis.C, phi)
    return F_st, F_mix, F_int


def _frob(X):
    # tr(X^dagger X) summed over leading indices
    return float(np.sum(np.abs(X) ** 2))


def ncym_density(conn: NCConnection, metric=None, mass: float = 1.0) -> float:
    """Euclidean Yang-Mills density 1/4|F_munu|^2 + 1/2|F_mua|^2 + 1/4|F_ab|^2.

    Each |X|^2 is tr(X^dagger X), i.e. minus tr(X^2) for anti-Hermitian X, so
    the density is non-negative.  ``metric`` must be positive definite.
    """
    d = conn.d
    g = np.eye(d) if metric is None else np.asarray(metric, float)
    if g.shape != (d, d):
        raise ValueError("metric has wrong shape")
    ev = np.linalg.eigvalsh(g)
    if np.any(ev <= 0):
        raise ValueError("ncym_density needs a Euclidean (positive definite) metric")
    # orthonormal frame so every contraction becomes a plain sum of squares
    w, V = np.linalg.eigh(np.linalg.inv(g))
    E = V * np.sqrt(w)
    F_st, F_mix, F_int = nc_curvature(conn, mass)
    F_st = np.einsum("mp,nq,mnij->pqij", E, E, F_st)
    F_mix = np.einsum("mp,maij->paij", E, F_mix)
    return 0.25 * _frob(F_st) + 0.5 * _frob(F_mix) + 0.25 * _frob(F_int)


def is_flat(conn: NCConnection, tol: float = 1e-10, mass: float = 1.0) -> bool:
    """True when every curvature block vanishes to within ``tol``."""
    return all(np.max(np.abs(F), initial=0.0) < tol for F in nc_curvature(conn, mass))


def integer_partitions(K: int):
    """Partitions of K as non-increasing tuples, largest part first."""
    if K < 0:
        raise ValueError("K must be non-negative")

    def rec(n, cap):
        if n == 0:
            yield ()
            return
        for p in range(min(n, cap), 0, -1):
            for rest in rec(n - p, p):
                yield (p,) + rest

    return list(rec(K, K))


def spin_matrices(dim: int):
    """Hermitian spin operators J_x, J_y, J_z of an irreducible block of size dim."""
    j = (dim - 1) / 2.0
    m = j - np.arange(dim)
    Jz = np.diag(m).astype(complex)
    # <m+1|J+|m> on the superdiagonal (basis ordered from m=j downwards)
    jp = np.sqrt(j * (j + 1) - m[1:] * (m[1:] + 1))
    Jp = np.diag(jp, 1).astype(complex)
    Jm = Jp.conj().T
    return np.array([(Jp + Jm) / 2, (Jp - Jm) / 2j, Jz])


def _su2_frame(basis: LieBasis) -> np.ndarray:
    # T_a = -i sum_b m_ab sigma_b for any basis of the su(2) fundamental
    if basis.N != 3 or basis.d_R != 2:
        raise ValueError("su(2) representations need the 3-generator 2x2 basis")
    from .liealg import _PAULI

    return (0.5j * np.einsum("aij,bji->ab", basis.T, _PAULI)).real


def su2_rep(basis: LieBasis, blocks) -> np.ndarray:
    """Block-diagonal representation matrices R_a with the basis' structure constants."""
    m = _su2_frame(basis)
    K = int(sum(blocks))
    R = np.zeros((3, K, K), complex)
    off = 0
    for n in blocks:
        J = spin_matrices(n)
        R[:, off:off + n, off:off + n] = -2j * np.einsum("ab,bij->aij", m, J)
        off += n
    return R


def su2_reps_for_module(K: int, basis: LieBasis):
    """One flat scalar configuration phi_a = R_a per partition of K.

    Each entry is ``(partition, R)`` where R has shape (3, K, K); the trivial
    partition 1+1+...+1 gives phi = 0.
    """
    if K < 1:
        raise ValueError("module size must be positive")
    return [(p, su2_rep(basis, p)) for p in integer_partitions(K)]


def spherical_connection(psi: complex, phi: complex, eta: float, x) -> tuple[np.ndarray, np.ndarray]:
    """Spherically symmetric potentials at the point ``x`` (Euclidean components).

    Returns ``(A, Phi)`` with ``A[i, a]`` the gauge potential A_i^a and
    ``Phi[a, b]`` the internal components phi^a_b:

        A_i^a   = Re(psi - i phi)/r P^a_i + Im(psi - i phi)/r eps_iac n^c
        phi^a_b = Re(phi) P^a_b + Im(phi) eps_bad n^d + eta n^a n_b

    with n = x/r and P the projector transverse to n.
    """
    x = np.asarray(x, float)
    r = float(np.linalg.norm(x))
    if r == 0:
        raise ValueError("the origin is excluded")
    n = x / r
    P = np.eye(3) - np.outer(n, n)
    eps = levi_civita()
    Xn = np.einsum("iac,c->ia", eps, n)  # Xn[i, a] = eps_iac n^c
    w = complex(psi) - 1j * complex(phi)
    A = (w.real * P + w.imag * Xn) / r
    # Phi[a, b] = Re(phi) P_ab + Im(phi) eps_bad n^d + eta n_a n_b
    Phi = complex(phi).real * P + complex(phi).imag * np.einsum("bad,d->ab", eps, n)
    Phi = Phi + eta * np.outer(n, n)
    return A, Phi


def phi_prime(phi):
    """The alternative parameterisation phi' = 1 - phi (an involution)."""
    return 1 - phi


def levi_civita() -> np.ndarray:
    eps = np.zeros((3, 3, 3))
    eps[0, 1, 2] = eps[1, 2, 0] = eps[2, 0, 1] = 1
    eps[0, 2, 1] = eps[2, 1, 0] = eps[1, 0, 2] = -1
    return eps
