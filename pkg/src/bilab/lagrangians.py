"""Born-Infeld type Lagrangians: abelian, non-abelian prescriptions and the
derivation-based (noncommutative) variant.

Conventions: metric signature (-,+,+,+) for Lorentzian samples, field
strengths stored with lower indices as ``F[a, mu, nu]``.  The hat lift is
the mixed tensor F^mu_nu tensored with the generators, so every prescription
is a function of the matrix ``X = F_hat / beta``.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

from .liealg import LieBasis, build_u1, k_tensor_array, symmetrize
from .nc_calculus import NCConnection, integer_partitions, nc_curvature


def minkowski(d: int = 4) -> np.ndarray:
    return np.diag([-1.0] + [1.0] * (d - 1))


def euclidean(d: int = 4) -> np.ndarray:
    return np.eye(d)


@dataclass
class FieldSample:
    """Field strengths ``F[a, mu, nu]`` at one point, with metric and BI scale."""

    F: np.ndarray
    metric: np.ndarray
    beta: float = 1.0

    def __post_init__(self):
        F = np.asarray(self.F, dtype=float)
        if F.ndim == 2:
            F = F[None]
        g = np.asarray(self.metric, dtype=float)
        if F.ndim != 3 or F.shape[1] != F.shape[2] or g.shape != F.shape[1:]:
            raise ValueError("F must be (N, d, d) and the metric (d, d)")
        if not np.allclose(F, -np.swapaxes(F, 1, 2), atol=1e-12):
            raise ValueError("field strengths must be antisymmetric")
        if not np.allclose(g, g.T) or abs(np.linalg.det(g)) < 1e-14:
            raise ValueError("metric must be symmetric and non-degenerate")
        if not self.beta > 0:
            raise ValueError("beta must be positive")
        self.F = F
        self.metric = g

    @property
    def d(self) -> int:
        return self.F.shape[1]

    @property
    def N(self) -> int:
        return self.F.shape[0]

    @property
    def ginv(self) -> np.ndarray:
        return np.linalg.inv(self.metric)

    def mixed(self) -> np.ndarray:
        """F^a{}^mu{}_nu = g^{mu rho} F^a_{rho nu}."""
        return np.einsum("mr,arn->amn", self.ginv, self.F)


def random_field(rng, N: int, metric, scale: float = 1.0, beta: float = 1.0) -> FieldSample:
    d = np.asarray(metric).shape[0]
    F = rng.normal(scale=scale, size=(N, d, d))
    return FieldSample(F - np.swapaxes(F, 1, 2), metric, beta)


def field_from_eb(E, B) -> np.ndarray:
    """4x4 F_{mu nu} for electric E and magnetic B, with F_0i = -E_i, F_ij = eps_ijk B_k."""
    E, B = np.asarray(E, float), np.asarray(B, float)
    F = np.zeros((4, 4))
    F[0, 1:] = -E
    F[1:, 0] = E
    F[1, 2], F[2, 3], F[3, 1] = B[2], B[0], B[1]
    F[2, 1], F[3, 2], F[1, 3] = -B[2], -B[0], -B[1]
    return F


def hat_lift(sample: FieldSample, basis: LieBasis) -> np.ndarray:
    """F_hat = sum_a F^a{}^mu{}_nu (x) T_a, a (d d_R) x (d d_R) complex matrix."""
    if basis.N != sample.N:
        raise ValueError("field has %d components but the basis %d" % (sample.N, basis.N))
    return np.einsum("amn,aij->minj", sample.mixed(), basis.T).reshape(
        sample.d * basis.d_R, sample.d * basis.d_R
    )


# --- abelian -----------------------------------------------------------------

def pfaffian4(F, G=None) -> float:
    """Polarised Pfaffian (1/8) eps^{mnrs} F_mn G_rs of 4x4 antisymmetric matrices."""
    G = F if G is None else G
    return 0.5 * (
        F[0, 1] * G[2, 3] + G[0, 1] * F[2, 3]
        - F[0, 2] * G[1, 3] - G[0, 2] * F[1, 3]
        + F[0, 3] * G[1, 2] + G[0, 3] * F[1, 2]
    )


def bi_abelian(sample: FieldSample) -> float:
    """beta^2 (1 - sqrt|det(1 + g^-1 F / beta)|) for a single abelian field."""
    if sample.N != 1:
        raise ValueError("abelian density takes a single field strength")
    b = sample.beta
    X = sample.mixed()[0] / b
    return b * b * (1.0 - math.sqrt(abs(np.linalg.det(np.eye(sample.d) + X))))


def abelian_invariants(sample: FieldSample) -> tuple[float, float]:
    """(P, S2) with P = 1/4 F_mn F^mn and S2 = -Pf(F)^2 / det g (d = 4).

    In (-,+,+,+) this is P = (B^2 - E^2)/2 and S2 = (E.B)^2.
    """
    if sample.N != 1 or sample.d != 4:
        raise ValueError("invariant form needs one field in d = 4")
    F = sample.F[0]
    gi = sample.ginv
    P = 0.25 * np.einsum("mn,mr,ns,rs->", F, gi, gi, F)
    S2 = -pfaffian4(F) ** 2 / np.linalg.det(sample.metric)
    return float(P), float(S2)


def bi_invariant_form(P: float, S2: float, beta: float = 1.0) -> float:
    b2 = beta * beta
    return b2 * (1.0 - math.sqrt(abs(1.0 + 2 * P / b2 - S2 / (b2 * b2))))


def _radicand(E, B):
    E, B = np.asarray(E, float), np.asarray(B, float)
    return 1.0 - E @ E + B @ B - (E @ B) ** 2


def lagrangian_eb(E, B) -> float:
    """1 - sqrt(1 - E^2 + B^2 - (E.B)^2) (beta = 1)."""
    R = _radicand(E, B)
    if R <= 0:
        raise ValueError("outside the admissible field domain")
    return 1.0 - math.sqrt(R)


def constitutive(E, B):
    """Inductions (D, H) = (dL/dE, -dL/dB) at beta = 1."""
    E, B = np.asarray(E, float), np.asarray(B, float)
    R = _radicand(E, B)
    if R <= 0:
        raise ValueError("outside the admissible field domain")
    s = math.sqrt(R)
    eb = E @ B
    return (E + eb * B) / s, (B - eb * E) / s


def hamiltonian_density(D, B) -> float:
    """sqrt(1 + B^2 + D^2 + |B x D|^2) - 1."""
    D, B = np.asarray(D, float), np.asarray(B, float)
    c = np.cross(B, D)
    return math.sqrt(1.0 + B @ B + D @ D + c @ c) - 1.0


def fields_from_inductions(D, B):
    """(E, H) = (dH/dD, dH/dB): the inverse of ``constitutive``."""
    D, B = np.asarray(D, float), np.asarray(B, float)
    c = np.cross(B, D)
    s = math.sqrt(1.0 + B @ B + D @ D + c @ c)
    bd = B @ D
    return (D * (1 + B @ B) - bd * B) / s, (B * (1 + D @ D) - bd * D) / s


def duality_rotate(D, B, alpha: float):
    """D + iB -> exp(i alpha) (D + iB)."""
    ca, sa = math.cos(alpha), math.sin(alpha)
    D, B = np.asarray(D, float), np.asarray(B, float)
    return ca * D - sa * B, sa * D + ca * B


# --- non-abelian prescriptions ------------------------------------------------

def _scaled_lift(sample, basis):
    return hat_lift(sample, basis) / sample.beta


def bina(sample: FieldSample, basis: LieBasis, alpha: float = 1.0, J=None) -> float:
    """alpha (1 - |det(1_2 (x) 1 + J (x) X)|^(1/(4 d_R))), X = F_hat / beta.

    J must square to -1 with unit determinant.  Without J the doubled
    determinant is evaluated as |det(1 - iX)|^2, which is the J = -i sigma_3
    case.
    """
    X = _scaled_lift(sample, basis)
    n = X.shape[0]
    if J is None:
        val = abs(np.linalg.det(np.eye(n) - 1j * X)) ** (1.0 / (2 * basis.d_R))
    else:
        J = np.asarray(J, complex)
        if not np.allclose(J @ J, -np.eye(2)) or not np.isclose(np.linalg.det(J), 1):
            raise ValueError("J must satisfy J^2 = -1 and det J = 1")
        big = np.eye(2 * n) + np.kron(J, X)
        val = abs(np.linalg.det(big)) ** (1.0 / (4 * basis.d_R))
    return alpha * (1.0 - val)


def park(sample: FieldSample, basis: LieBasis, alpha: float = 1.0) -> float:
    """alpha (|det(1 + X)|^(1/(2 d_R)) - 1), X = F_hat / beta."""
    X = _scaled_lift(sample, basis)
    return alpha * (abs(np.linalg.det(np.eye(X.shape[0]) + X)) ** (1.0 / (2 * basis.d_R)) - 1.0)


def lift_traces(sample: FieldSample, basis: LieBasis, kmax: int = 4) -> np.ndarray:
    """tr(X^k) for k = 0..kmax, X = F_hat / beta."""
    X = _scaled_lift(sample, basis)
    out = np.empty(kmax + 1, complex)
    P = np.eye(X.shape[0], dtype=complex)
    for k in range(kmax + 1):
        out[k] = np.trace(P)
        P = P @ X
    return out


def invariants_su2(sample: FieldSample, basis: LieBasis) -> tuple[float, float, float]:
    """(P, Q2, K3) of the rescaled lift for an su(2) fundamental basis.

    2P = Tr2/4, Q2 = Tr4/8 - Tr2^2/32, K3 = -Tr3/12 with Tr_k = tr(X^k).
    For T_a = -i sigma_a and beta = 1 these are 2P = (F^a, F_a) and
    K3 = 1/6 eps_abc tr(F^a F^b F^c).
    """
    if basis.N != 3 or basis.d_R != 2:
        raise ValueError("closed form needs the su(2) fundamental")
    t = lift_traces(sample, basis, 4).real
    return t[2] / 8.0, t[4] / 8.0 - t[2] ** 2 / 32.0, -t[3] / 12.0


def bina_su2_closed(P: float, Q2: float, K3: float) -> float:
    """1 - ((1 + 2P - Q2)^2 + (2 K3)^2)^(1/4)."""
    return 1.0 - ((1.0 + 2 * P - Q2) ** 2 + 4 * K3 * K3) ** 0.25


def bina_order4(sample: FieldSample, basis: LieBasis, alpha: float = 1.0) -> float:
    """Quartic truncation -Tr2/(4 d_R) + Tr4/(8 d_R) - Tr2^2/(32 d_R^2)."""
    t = lift_traces(sample, basis, 4).real
    dR = basis.d_R
    return alpha * (-t[2] / (4 * dR) + t[4] / (8 * dR) - t[2] ** 2 / (32 * dR * dR))


def trace_log_det(M, exponent: float = 1.0, order: int | None = None) -> complex:
    """(det(1 + M))^exponent summed over partitions up to total degree ``order``.

    Each degree-n term is (-1)^n prod_p (1/alpha_p!) (-exponent tr(M^p)/p)^alpha_p
    over partitions n = sum_p p alpha_p.  The default order 2 dim(M) makes
    the sum exact for integer exponents.
    """
    M = np.asarray(M, complex)
    if M.ndim != 2 or M.shape[0] != M.shape[1]:
        raise ValueError("M must be square")
    order = 2 * M.shape[0] if order is None else int(order)
    tr = [0j]
    P = np.eye(M.shape[0], dtype=complex)
    for _ in range(order):
        P = P @ M
        tr.append(np.trace(P))
    total = 0j
    for n in range(order + 1):
        for part in integer_partitions(n):
            term = (-1) ** n
            for p in set(part):
                a = part.count(p)
                term *= (-exponent * tr[p] / p) ** a / math.factorial(a)
            total += term
    return total


def pairings(sample: FieldSample) -> tuple[np.ndarray, np.ndarray]:
    """(F^a, F^b) = 1/2 F^a_mn F^b^mn and the dual product tensor (d = 4).

    The dual product (F^a, *F^b)(F^c, *F^d) is returned as
    -4 pf(F^a, F^b) pf(F^c, F^d) / det g, which is the Lorentzian value and
    its analytic continuation for other signatures.
    """
    if sample.d != 4:
        raise ValueError("dual pairing needs d = 4")
    F, gi = sample.F, sample.ginv
    Pab = 0.5 * np.einsum("amn,mr,ns,brs->ab", F, gi, gi, F)
    N = sample.N
    pf = np.array([[pfaffian4(F[a], F[b]) for b in range(N)] for a in range(N)])
    DD = -4.0 * np.einsum("ab,cd->abcd", pf, pf) / np.linalg.det(sample.metric)
    return Pab, DD


def sym_trace_order4(sample: FieldSample, basis: LieBasis, alpha: float = 1.0) -> float:
    """Symmetrised-trace prescription through quartic order.

    -1/2 (F^a,F^b) K_ab + 1/8 [(F^a,F^b)(F^c,F^d) + (F^a,*F^b)(F^c,*F^d)] K_(abcd)
    with K_(abcd) the fully symmetrised four-index tensor.
    """
    Pab, DD = pairings(sample)
    b2 = sample.beta ** 2
    K2 = k_tensor_array(basis, 2)
    K4s = symmetrize(k_tensor_array(basis, 4))
    quad = -0.5 * np.einsum("ab,ab->", Pab, K2) / b2
    quart = 0.125 * np.einsum("abcd,abcd->", np.einsum("ab,cd->abcd", Pab, Pab) + DD, K4s) / (b2 * b2)
    return alpha * float(quad + quart)


def sym_trace_order4_traces(sample: FieldSample, basis: LieBasis, alpha: float = 1.0) -> float:
    """Same quartic truncation built from spacetime matrix traces.

    With f_a = F^a{}^mu{}_nu / beta, t2_ab = tr(f_a f_b) and
    t4_abcd = tr(f_a f_b f_c f_d), the value is
    1/4 t2.K_ab + 1/8 t4.K_(abcd) - 1/32 (t2 t2).K_(abcd).
    """
    f = sample.mixed() / sample.beta
    t2 = np.einsum("amn,bnm->ab", f, f)
    t4 = np.einsum("amn,bnp,cpq,dqm->abcd", f, f, f, f)
    K2 = k_tensor_array(basis, 2)
    K4s = symmetrize(k_tensor_array(basis, 4))
    val = (0.25 * np.sum(t2 * K2) + 0.125 * np.sum(t4 * K4s)
           - np.sum(np.einsum("ab,cd->abcd", t2, t2) * K4s) / 32)
    return alpha * float(val)


def galtsov_kerner_invariants(sample: FieldSample, basis: LieBasis) -> tuple[float, float]:
    """(P, S) = (1/4 g_ab F^a F^b, 1/4 g_ab F~^a F^b) for a Lorentzian d = 4 sample."""
    if sample.d != 4:
        raise ValueError("needs d = 4")
    F, gi = sample.F, sample.ginv
    P = 0.25 * np.einsum("ab,amn,mr,ns,brs->", basis.g, F, gi, gi, F)
    pf = sum(basis.g[a, b] * pfaffian4(F[a], F[b]) for a in range(sample.N) for b in range(sample.N))
    S = pf / math.sqrt(abs(np.linalg.det(sample.metric)))
    return float(P), float(S)


def galtsov_kerner(P: float, S: float) -> float:
    """1 - sqrt(1 + 2P - S^2)."""
    val = 1.0 + 2 * P - S * S
    if val < 0:
        raise ValueError("negative radicand")
    return 1.0 - math.sqrt(val)


def galtsov_kerner_field(sample: FieldSample, basis: LieBasis, alpha: float = 1.0) -> float:
    P, S = galtsov_kerner_invariants(sample, basis)
    b2 = sample.beta ** 2
    return alpha * galtsov_kerner(P / b2, S / b2)


# --- derivation-based prescription --------------------------------------------

def _big_curvature(conn: NCConnection, metric, mass: float):
    F_st, F_mix, F_int = nc_curvature(conn, mass)
    d, N, K = conn.d, conn.basis.N, conn.K
    D = d + N
    W = np.zeros((D, D, K, K), complex)
    W[:d, :d] = F_st
    W[:d, d:] = F_mix
    W[d:, :d] = -np.swapaxes(F_mix, 0, 1)
    W[d:, d:] = F_int
    Gi = np.eye(D)
    Gi[:d, :d] = np.linalg.inv(np.asarray(metric, float))
    Wmix = np.einsum("AB,BCij->ACij", Gi, W)
    return Wmix.transpose(0, 2, 1, 3).reshape(D * K, D * K)


def binc(conn: NCConnection, metric, beta: float = 1.0, mass: float = 1.0,
         exponent: float | None = None, J=None) -> float:
    """1 - |det(1_2 (x) 1 + J (x) Omega_hat / beta)|^exponent.

    Omega_hat is the full curvature with one index raised by the block metric
    diag(g, 1).  ``exponent`` defaults to 1/(4K) for a module of K x K
    matrices, which reproduces the ordinary prescription when the scalars
    vanish and the abelian density when K = 1.
    """
    metric = np.asarray(metric, float)
    if metric.shape != (conn.d, conn.d):
        raise ValueError("metric dimension does not match the connection")
    X = _big_curvature(conn, metric, mass) / beta
    e = 1.0 / (4 * conn.K) if exponent is None else exponent
    n = X.shape[0]
    if J is None:
        det2 = abs(np.linalg.det(np.eye(n) - 1j * X)) ** 2
    else:
        det2 = abs(np.linalg.det(np.eye(2 * n) + np.kron(np.asarray(J, complex), X)))
    return 1.0 - det2 ** e


def schur_matrix(conn: NCConnection, metric, beta: float = 1.0, mass: float = 1.0) -> np.ndarray:
    """M = i F_ab - g^{mn} D_m phi_a D_n phi_b (scaled by beta), size (N K)^2.

    With vanishing spacetime curvature det(1 + i Omega_hat) = det(1 + M).
    """
    F_st, F_mix, F_int = nc_curvature(conn, mass)
    if np.max(np.abs(F_st), initial=0.0) > 1e-12:
        raise ValueError("Schur reduction needs vanishing spacetime curvature")
    gi = np.linalg.inv(np.asarray(metric, float))
    DD = np.einsum("mn,maij,nbjk->abik", gi, F_mix, F_mix)
    M = (1j * F_int / beta - DD / beta ** 2)
    N, K = conn.basis.N, conn.K
    return M.transpose(0, 2, 1, 3).reshape(N * K, N * K)


def binc_schur(conn: NCConnection, metric, beta: float = 1.0, mass: float = 1.0) -> float:
    M = schur_matrix(conn, metric, beta, mass)
    return 1.0 - abs(np.linalg.det(np.eye(M.shape[0]) + M)) ** (1.0 / (2 * conn.K))


def sqrt_det_cubic(M) -> complex:
    """1 + t1 - t2 + t3 + t1^2/2 - t1 t2 + t1^3/6 with t_k = tr(M^k)/(2k).

    For the 2x2-module Schur matrix this is an exact square root of det(1 + M).
    """
    M = np.asarray(M, complex)
    M2 = M @ M
    t1 = np.trace(M) / 2
    t2 = np.trace(M2) / 4
    t3 = np.trace(M2 @ M) / 6
    return 1 + t1 - t2 + t3 + t1 ** 2 / 2 - t1 * t2 + t1 ** 3 / 6


SCALAR_ANSATZE = ("diagonal", "per_generator", "single_direction", "single_generator")


def _per_generator_sqrt(phi, G, m):
    # closed-form traces for phi_a = phi_a T_a (no sum)
    p1, p2, p3 = phi
    B = 2 * np.array([p2 * p3 - m * p1, p1 * p3 - m * p2, p1 * p2 - m * p3])
    pairs = [(1, 2), (0, 2), (0, 1)]   # the two indices other than c
    G2 = G @ G
    h1 = np.trace(G)
    h2 = -2 * B @ B + np.sum(G * G) - 2j * sum(2 * G[a, b] * B[c] for c, (a, b) in enumerate(pairs))
    h3 = (
        6j * B[0] * B[1] * B[2]
        + 6 * np.sum(B ** 2 * np.diag(G))
        - 3 * (B @ G @ B + (B @ B) * np.trace(G))
        - 3j * sum(2 * B[c] * G2[a, b] for c, (a, b) in enumerate(pairs))
        + np.trace(G2 @ G)
    )
    t1, t2, t3 = h1, h2 / 2, h3 / 3
    return 1 + t1 - t2 + t3 + t1 ** 2 / 2 - t1 * t2 + t1 ** 3 / 6


def scalar_closed_form(ansatz: str, phi, grad, beta: float = 1.0, mass: float = 1.0) -> float:
    """Closed-form scalar Lagrangians for an su(2) module of 2x2 matrices.

    ``grad`` is the metric contraction of scalar gradients: a number for the
    diagonal ansatz, otherwise the 3x3 matrix G_ab = g^{mn} d_m phi_a d_n phi_b.

    diagonal          phi_a = phi T_a
    per_generator     phi_a = phi_a T_a (no sum)
    single_direction  phi_a = delta_a1 phi^b T_b
    single_generator  phi_a = phi_a T_1
    """
    b2 = beta * beta
    if ansatz == "diagonal":
        a = float(grad) / b2
        s = float(phi) * (float(phi) - mass)
        s2 = s * s / b2
        return 1.0 - ((1 + 3 * a) ** 2 + 16 * s2) ** 0.25 * math.sqrt(1 + 4 * s2)
    phi = np.asarray(phi, float)
    G = np.asarray(grad, float) / b2
    if phi.shape != (3,) or G.shape != (3, 3):
        raise ValueError("expected three scalars and a 3x3 gradient matrix")
    if ansatz == "per_generator":
        # F_ab is quadratic in phi plus a mass-linear term: rescale both by sqrt(beta)
        rb = math.sqrt(beta)
        root = _per_generator_sqrt(phi / rb, G, mass / rb)
        return 1.0 - math.sqrt(abs(root))
    if ansatz == "single_direction":
        a = np.trace(G)
        s = mass ** 2 * (phi @ phi) / b2
        return 1.0 - math.sqrt(abs((1 + a) * (1 + 4 * s)))
    if ansatz == "single_generator":
        v = mass * phi / beta
        one_g = np.eye(3) + G
        return 1.0 - math.sqrt(abs(np.linalg.det(one_g) + 4 * v @ one_g @ v))
    raise ValueError(f"unknown ansatz {ansatz!r}")


def scalar_connection(ansatz: str, phi, dphi, basis: LieBasis, d: int = 4) -> NCConnection:
    """Build the 2x2-module connection (A = 0) realising one of the scalar ansatze.

    ``dphi`` holds spacetime derivatives: shape (d,) for the diagonal ansatz,
    otherwise (d, 3).
    """
    T = basis.T
    phi = np.asarray(phi, float)
    dphi = np.asarray(dphi, float)
    P = np.zeros((3, 2, 2), complex)
    dP = np.zeros((d, 3, 2, 2), complex)
    if ansatz == "diagonal":
        P = float(phi) * T
        dP = np.einsum("m,aij->maij", dphi, T)
    elif ansatz == "per_generator":
        P = phi[:, None, None] * T
        dP = dphi[:, :, None, None] * T[None]
    elif ansatz == "single_direction":
        P[0] = np.einsum("b,bij->ij", phi, T)
        dP[:, 0] = np.einsum("mb,bij->mij", dphi, T)
    elif ansatz == "single_generator":
        P = phi[:, None, None] * T[0]
        dP = dphi[:, :, None, None] * T[0]
    else:
        raise ValueError(f"unknown ansatz {ansatz!r}")
    return NCConnection(basis, np.zeros((d, 2, 2)), P, dphi=dP)


PRESCRIPTIONS = ("bi", "bina", "sym4", "park", "gk", "binc")


def abelian_basis() -> LieBasis:
    return build_u1()
