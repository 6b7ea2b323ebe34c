"""Dynamics of the scalar sector of the derivation-based Lagrangian.

Diagonal ansatz phi_a = phi T_a with s = phi (phi - 1).  Covers the static
virial (Derrick) function, the homogeneous equation of motion with its
singular curve, and flat FRW cosmologies for a free field and for the
Born-Infeld scalar.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numpy.polynomial import Polynomial
from scipy.integrate import solve_ivp

SINGULAR_TOL = 1e-8
STALL_TOL = 1e-6      # integrator stalls this close to g = 0 count as reaching it
DEFAULT_BOX = ((-0.5, 1.5), (-1.5, 1.5))   # (phi range, u range)


# --- static: virial function -----------------------------------------------------

def static_lagrangian(phi, dphi):
    s = phi * (phi - 1)
    p = dphi * dphi
    return 1 - ((1 + 3 * p) ** 2 + 16 * s * s) ** 0.25 * np.sqrt(1 + 4 * s * s)


def derrick_f(phi, dphi):
    """sqrt(A)/B^(3/4) [(1+3p)(1+2p) + 16 s^2] - 1 with p = phi'^2.

    A = 1 + 4 s^2 and B = (1 + 3p)^2 + 16 s^2; equals (phi' dL/dphi' - 3L)/3
    for the static Lagrangian.
    """
    phi = np.asarray(phi, float)
    dphi = np.asarray(dphi, float)
    s = phi * (phi - 1)
    p = dphi * dphi
    A = 1 + 4 * s * s
    B = (1 + 3 * p) ** 2 + 16 * s * s
    return np.sqrt(A) / B ** 0.75 * ((1 + 3 * p) * (1 + 2 * p) + 16 * s * s) - 1


# --- homogeneous motion ---------------------------------------------------------------

def _gh(phi, u):
    s = phi * (phi - 1)
    X = s * s
    Y = u * u
    g = 16 * X * (1 - 9 * Y) + (1 - 3 * Y) ** 2
    h = ((1 - 3 * Y) ** 2 + 16 * X) * (1 - Y + 8 * X) - 6 * (1 + 4 * X) * (1 - 3 * Y) * Y
    return s, X, g, h


def singular_parts(phi, u):
    """(numerator, denominator) of du/dt: -4 s s' h and (1 + 4X) g."""
    s, X, g, h = _gh(phi, u)
    return -4 * s * (2 * phi - 1) * h, (1 + 4 * X) * g


def homogeneous_rhs(t, y):
    """(phi, u) -> (u, -4 s s' h / ((1 + 4X) g)) for phi = phi(t)."""
    phi, u = y[0], y[1]
    num, den = singular_parts(phi, u)
    return np.array([u, num / den])


def homogeneous_energy(phi, u):
    """Conserved energy u dL/du - L of the homogeneous motion."""
    s = phi * (phi - 1)
    A = 1 + 4 * s * s
    B = (1 - 3 * u * u) ** 2 + 16 * s * s
    return np.sqrt(A) * (1 - 3 * u * u + 16 * s * s) / B ** 0.75 - 1


def _g_event(t, y):
    return singular_parts(y[0], y[1])[1]


_g_event.terminal = True


def _near_event(t, y):
    return abs(singular_parts(y[0], y[1])[1]) - SINGULAR_TOL


_near_event.terminal = True
_near_event.direction = -1


def integrate_homogeneous(y0, t_max: float, rtol: float = 1e-10, atol: float = 1e-12, **kw):
    """solve_ivp on the homogeneous system, stopping on the singular curve."""
    return solve_ivp(homogeneous_rhs, (0.0, t_max), list(y0), method="DOP853", rtol=rtol,
                     atol=atol, events=[_g_event, _near_event], **kw)


def orbit_period(y0, t_max: float = 100.0):
    """Time between the start and the second return to the start's turning line.

    ``y0`` must have u = 0 (a turning point).  Returns (period, end_state) or
    (None, None) when the singular curve is hit first.
    """
    def turn(t, y):
        return y[1]

    turn.direction = 0
    sol = solve_ivp(homogeneous_rhs, (0.0, t_max), list(y0), method="DOP853", rtol=1e-12,
                    atol=1e-13, events=[turn, _g_event, _near_event], dense_output=True)
    hits = [t for t in sol.t_events[0] if t > 1e-9]
    if sol.t_events[1].size or sol.t_events[2].size or len(hits) < 2:
        return None, None
    T = hits[1]
    return T, sol.sol(T)


def portrait(phis, us, t_max: float = 20.0):
    """Classify trajectories from a grid of initial conditions.

    Each row is (phi0, u0, status, t_end, phi_end, u_end).  Status is
    'singular' when the curve g = 0 is reached (an event, or the step size
    collapsing within STALL_TOL of the curve), 'failed' for any other
    integrator breakdown and 'regular' when t_max is reached.
    """
    rows = []
    for p0 in phis:
        for u0 in us:
            sol = integrate_homogeneous((p0, u0), t_max)
            hit = any(ev.size for ev in sol.t_events)
            if not hit and sol.status == -1:
                hit = abs(singular_parts(sol.y[0, -1], sol.y[1, -1])[1]) < STALL_TOL
                status = "singular" if hit else "failed"
            else:
                status = "singular" if hit else "regular"
            rows.append((float(p0), float(u0), status,
                         float(sol.t[-1]), float(sol.y[0, -1]), float(sol.y[1, -1])))
    return rows


@dataclass
class SingularPoint:
    phi: float
    u: float
    branch: str          # which factor of the numerator vanishes
    residual: float
    lifted: bool
    directions: tuple    # admissible du/dphi slopes of trajectories through the point


def _phi_from_s(s):
    # real roots of phi^2 - phi - s = 0
    disc = 1 + 4 * s
    if disc < -1e-14:
        return []
    r = math.sqrt(max(disc, 0.0))
    return sorted({(1 - r) / 2, (1 + r) / 2})


def _candidates():
    pts = []
    # s = 0: g = (1 - 3Y)^2
    for phi in (0.0, 1.0):
        for sg in (1, -1):
            pts.append((phi, sg / math.sqrt(3), "s"))
    # s' = 0: phi = 1/2, X = 1/16, g quadratic in Y
    Yp = Polynomial([0, 1])
    gq = 16 / 16 * (1 - 9 * Yp) + (1 - 3 * Yp) ** 2
    for Y in gq.roots():
        if abs(Y.imag) < 1e-12 and Y.real >= 0:
            for sg in (1, -1):
                pts.append((0.5, sg * math.sqrt(Y.real), "ds"))
    # h = 0 on g = 0: eliminate X = -(1 - 3Y)^2 / (16 (1 - 9Y))
    q = 16 * (1 - 9 * Yp)
    Xn = -((1 - 3 * Yp) ** 2)         # X = Xn / q
    hn = ((1 - 3 * Yp) ** 2 * q + 16 * Xn) * ((1 - Yp) * q + 8 * Xn) - 6 * (q + 4 * Xn) * (1 - 3 * Yp) * Yp * q
    for Y in hn.roots():
        if abs(Y.imag) > 1e-9 or Y.real < 0:
            continue
        Y = Y.real
        X = Xn(Y) / q(Y)
        if X <= 1e-12:
            continue                    # X = 0 duplicates the s = 0 branch
        for s in (math.sqrt(X), -math.sqrt(X)):
            for phi in _phi_from_s(s):
                for sg in (1, -1):
                    pts.append((phi, sg * math.sqrt(Y), "h"))
    return pts


def _polish(phi, u, branch):
    # Newton on (g, factor) to remove root-finding round-off
    def F(z):
        s, X, g, h = _gh(z[0], z[1])
        f2 = {"s": s, "ds": 2 * z[0] - 1, "h": h}[branch]
        return np.array([g, f2])

    z = np.array([phi, u], float)
    for _ in range(8):
        f = F(z)
        if np.max(np.abs(f)) < 1e-15:
            break
        J = np.empty((2, 2))
        for j in range(2):
            dz = np.zeros(2)
            dz[j] = 1e-7
            J[:, j] = (F(z + dz) - F(z - dz)) / 2e-7
        try:
            step = np.linalg.solve(J, f)
        except np.linalg.LinAlgError:
            break    # degenerate crossing: the closed-form value is already exact
        z = z - step
    return z


def _directions(phi, u, h=1e-4):
    """Real slopes mu = du/dphi of trajectories through a singular point.

    Along the ray (phi, u) + t (1, mu) the ratio num/den tends to
    n_k(1, mu) / d_k(1, mu), its leading homogeneous parts of order k.  A
    trajectory with that slope needs du/dt = mu u, i.e. the polynomial
    mu u d_k - n_k of degree k + 1 must vanish with d_k != 0.
    """
    def lead(mu, order):
        fp = np.array(singular_parts(phi + h, u + mu * h))
        fm = np.array(singular_parts(phi - h, u - mu * h))
        return (fp - fm) / (2 * h) if order == 1 else (fp + fm) / (2 * h * h)

    mus = np.linspace(-2, 2, 8)
    size = {k: np.max(np.abs([lead(m, k) for m in mus])) for k in (1, 2)}
    for order in (1, 2):
        parts = np.array([lead(m, order) for m in mus])
        scale = size[order]
        if order == 1 and scale < 1e-4 * size[2]:
            continue              # linear parts vanish (truncation noise only): go higher
        vals = mus * u * parts[:, 1] - parts[:, 0]
        coeffs = np.polyfit(mus, vals / scale, order + 1)
        out = []
        for r in np.roots(coeffs):
            if abs(r.imag) < 1e-6 and abs(lead(r.real, order)[1]) > 1e-6 * scale:
                out.append(float(r.real))
        return tuple(sorted(out))
    return ()


def singular_set(box=DEFAULT_BOX, tol: float = 1e-10) -> list[SingularPoint]:
    """Points where g = 0 and the numerator 4 s s' h vanish, inside ``box``.

    A point is 'lifted' when some trajectory passes through it with a finite
    real slope du/dphi, i.e. the 0/0 indeterminacy resolves along that path.
    """
    (p_lo, p_hi), (u_lo, u_hi) = box
    out = []
    for phi, u, br in _candidates():
        phi, u = _polish(phi, u, br)
        if not (p_lo <= phi <= p_hi and u_lo <= u <= u_hi):
            continue
        num, den = singular_parts(phi, u)
        res = float(max(abs(num), abs(den)))
        if res > tol:
            raise ArithmeticError(f"singular point residual {res:.2e} above tolerance")
        dirs = _directions(phi, u)
        out.append(SingularPoint(float(phi), float(u), br, res, bool(dirs), dirs))
    out.sort(key=lambda p: (p.phi, p.u))
    return out


# --- FRW ---------------------------------------------------------------------------------

def frw_free_rhs(t, y, m2: float, b: float = 1.0, rho0: float = 0.0, kappa: float = 1.0):
    """(phi, u, H) for a free scalar with vacuum energy rho0 in flat FRW."""
    phi, u, H = y
    k2 = kappa * kappa
    return np.array([
        u,
        -m2 * phi - 3 * H * u,
        b * k2 / 3 * (0.5 * m2 * phi * phi - u * u) + k2 * rho0 / 3 - H * H,
    ])


def frw_free_rho(phi, u, m2, b=1.0, rho0=0.0):
    return b * (0.5 * u * u + 0.5 * m2 * phi * phi) + rho0


def frw_free_linearization(H0: float, m2: float) -> np.ndarray:
    return np.array([[0, 1, 0], [-m2, -3 * H0, 0], [0, 0, -2 * H0]], float)


class BIScalar:
    """L(phi, u) = 1 - B^(1/4) A^(1/2) with A = 1 + 4 sigma, B = (1 - 3y)^2 + 16 sigma,
    sigma = phi^2 (phi - gamma)^2 / beta^2 and y = u^2 / beta^2."""

    def __init__(self, beta: float = 1.0, gamma: float = 1.0):
        if beta <= 0:
            raise ValueError("beta must be positive")
        self.beta, self.gamma = float(beta), float(gamma)

    def _sig(self, phi):
        b2 = self.beta ** 2
        q = phi * (phi - self.gamma)
        return q * q / b2, 2 * q * (2 * phi - self.gamma) / b2

    def parts(self, phi, u):
        b2 = self.beta ** 2
        sig, dsig = self._sig(phi)
        y = u * u / b2
        A = 1 + 4 * sig
        B = (1 - 3 * y) ** 2 + 16 * sig
        return sig, dsig, y, A, B

    def L(self, phi, u):
        _, _, _, A, B = self.parts(phi, u)
        return 1 - B ** 0.25 * np.sqrt(A)

    def momentum(self, phi, u):
        _, _, y, A, B = self.parts(phi, u)
        return 3 * u * (1 - 3 * y) * np.sqrt(A) * B ** -0.75 / self.beta ** 2

    def rho(self, phi, u):
        """Energy density u dL/du - L."""
        sig, _, y, A, B = self.parts(phi, u)
        return np.sqrt(A) * (1 - 3 * y + 16 * sig) / B ** 0.75 - 1

    def derivatives(self, phi, u):
        """(L_phi, Pi, Pi_u, Pi_phi) with Pi = dL/du."""
        b2 = self.beta ** 2
        sig, dsig, y, A, B = self.parts(phi, u)
        A_p, B_p = 4 * dsig, 16 * dsig
        B_u = -12 * u * (1 - 3 * y) / b2
        sA = np.sqrt(A)
        L_phi = -(0.25 * B ** -0.75 * B_p * sA + 0.5 * B ** 0.25 * A_p / sA)
        W = sA * B ** -0.75
        W_u = -0.75 * sA * B ** -1.75 * B_u
        W_p = 0.5 * A_p / sA * B ** -0.75 - 0.75 * sA * B ** -1.75 * B_p
        Pi = 3 * u * (1 - 3 * y) * W / b2
        Pi_u = 3 / b2 * ((1 - 9 * y) * W + u * (1 - 3 * y) * W_u)
        Pi_p = 3 * u * (1 - 3 * y) * W_p / b2
        return L_phi, Pi, Pi_u, Pi_p


def frw_bi_rhs(t, y, beta: float = 1.0, gamma: float = 1.0, kappa: float = 1.0, _model=None):
    """(phi, u, H) for the Born-Infeld scalar in flat FRW.

    Field equation d/dt(dL/du) + 3H dL/du = dL/dphi; the Hubble rate follows
    dH/dt = -kappa^2 (rho + 3p)/6 - H^2 with p = L.
    """
    m = _model or BIScalar(beta, gamma)
    phi, u, H = y
    L_phi, Pi, Pi_u, Pi_p = m.derivatives(phi, u)
    du = (L_phi - Pi_p * u - 3 * H * Pi) / Pi_u
    rho = u * Pi - m.L(phi, u)
    p = m.L(phi, u)
    dH = -kappa ** 2 * (rho + 3 * p) / 6 - H * H
    return np.array([u, du, dH])


def friedmann_defect(y, rho, kappa: float = 1.0) -> float:
    """H^2 - kappa^2 rho / 3."""
    return y[2] ** 2 - kappa ** 2 * rho / 3


def _jacobian(f, y, eps=1e-6):
    y = np.asarray(y, float)
    J = np.empty((len(y), len(y)))
    for j in range(len(y)):
        d = np.zeros(len(y))
        d[j] = eps
        J[:, j] = (f(y + d) - f(y - d)) / (2 * eps)
    return J


def frw_fixed_points(beta: float, gamma: float, kappa: float = 1.0) -> list[dict]:
    """Fixed points phi0 in {0, gamma, gamma/2} with effective m^2 and rho0.

    For each: closed-form m^2 and rho0, H0 = kappa sqrt(rho0/3), the
    eigenvalues -3H0/2 +- sqrt(9H0^2 - 4m^2)/2 and those of a numerical
    Jacobian of ``frw_bi_rhs`` restricted to (phi, u).
    """
    model = BIScalar(beta, gamma)
    x = gamma ** 4 / beta ** 2
    out = []
    for label, phi0 in (("0", 0.0), ("gamma", gamma), ("gamma/2", gamma / 2)):
        if label == "gamma/2":
            m2 = -2 * gamma ** 2 * (1 + x / 2) / (1 + x / 4)
            rho0 = (1 + x) ** 0.25 * math.sqrt(1 + x / 4) - 1
        else:
            m2, rho0 = 4 * gamma ** 2, 0.0
        H0 = kappa * math.sqrt(rho0 / 3)
        disc = complex(9 * H0 * H0 - 4 * m2) ** 0.5
        lam = (-1.5 * H0 + 0.5 * disc, -1.5 * H0 - 0.5 * disc)

        def f2(z):
            return frw_bi_rhs(0, (z[0], z[1], H0), beta, gamma, kappa, _model=model)[:2]

        J = _jacobian(f2, (phi0, 0.0), eps=1e-6 * max(1.0, abs(gamma)))
        ev = np.linalg.eigvals(J)
        ev = ev[np.argsort(-ev.real)]
        entry = dict(point=label, phi0=phi0, m2=m2, rho0=rho0, H0=H0,
                     lambda_plus=lam[0], lambda_minus=lam[1],
                     numeric_eigenvalues=tuple(complex(e) for e in ev),
                     stable=m2 > 0)
        if label == "gamma/2":
            entry["lambda_plus_series"] = math.sqrt(2) * gamma - 0.75 * kappa * math.sqrt(x / 2)
        out.append(entry)
    return out


def rho_quadratic_fit(beta: float, gamma: float, phi0: float, h: float = 1e-2, n: int = 9):
    """Least-squares fit of rho near (phi0, 0) to rho0 + b u^2/2 + b m^2 dphi^2/2.

    Quartic terms are fitted too so that they do not leak into the quadratic
    coefficients.  Returns (rho0, b, m2).
    """
    model = BIScalar(beta, gamma)
    grid = np.linspace(-h, h, n)
    P, U = np.meshgrid(grid, grid, indexing="ij")
    P, U = P.ravel(), U.ravel()
    monos = [(i, j) for i in range(7) for j in range(0, 7, 2) if i + j <= 6]
    A = np.stack([P ** i * U ** j for i, j in monos], axis=1)
    rho = model.rho(phi0 + P, U)
    coef, *_ = np.linalg.lstsq(A, rho, rcond=None)
    c = dict(zip(monos, coef))
    b = 2 * c[(0, 2)]
    return float(c[(0, 0)]), float(b), float(2 * c[(2, 0)] / b)
