"""Static spherically symmetric su(2) solitons of the determinant prescription.

Radial profile k(r) in the 't Hooft ansatz, written in tau = log r with
k' = dk/dtau = u.  The field equations reduce to

    k' = u,   u' = gamma(k, u, r) u + k (k^2 - 1)

Solutions regular at the origin and tending to the vacuum k = 1 at infinity
are found by integrating inward from the asymptotic series and matching to
the generic small-r series.
"""
from __future__ import annotations

import math
from concurrent.futures import ProcessPoolExecutor
from dataclasses import asdict, dataclass, field, replace

import numpy as np
from scipy.integrate import solve_ivp, simpson
from scipy.optimize import root

from .lagrangians import FieldSample, minkowski
from .nc_calculus import levi_civita

MONOPOLE_ENERGY = math.gamma(0.25) ** 2 / (6 * math.sqrt(math.pi))


# --- reduced field --------------------------------------------------------------

def thooft_invariants(k, kp, r):
    """(P, Q2, K3) of the ansatz at radius r; kp = dk/dr."""
    w = 1 - k * k
    rk = r * kp
    P = 0.5 * (w * w + 2 * rk * rk) / r ** 4
    K3 = w * rk * rk / r ** 6
    return P, 0.0 * P, K3


def thooft_field(k: float, kp: float, x) -> FieldSample:
    """Static magnetic su(2) field of the ansatz at the point x (signature -+++)."""
    x = np.asarray(x, float)
    r = float(np.linalg.norm(x))
    n = x / r
    Pt = np.eye(3) - np.outer(n, n)
    Bm = (np.outer(n, n) * (1 - k * k) - r * kp * Pt) / r ** 2   # B[a, i]
    F = np.zeros((3, 4, 4))
    F[:, 1:, 1:] = np.einsum("ijk,ak->aij", levi_civita(), Bm)
    return FieldSample(F, minkowski())


def _A_minus_one(k, u, r):
    # A - 1 with A = (1 + a^2)((1 + 2b)^2 + a^2), all terms non-negative
    a = (1 - k * k) / r ** 2
    b = u * u / r ** 4
    a2 = a * a
    return 4 * b + 4 * b * b + 2 * a2 + a2 * (4 * b + 4 * b * b + a2)


def energy_integrand(k, u, tau):
    """(A^(1/4) - 1) e^{3 tau}: minus the reduced Lagrangian in tau."""
    r = np.exp(tau)
    return np.expm1(0.25 * np.log1p(_A_minus_one(k, u, r))) * r ** 3


def reduced_action_density(k, u, tau):
    """(1 - A^(1/4)) e^{3 tau}."""
    return -energy_integrand(k, u, tau)


def gamma_friction(k, u, r):
    w = 1 - k * k
    r4 = r ** 4
    D1 = r4 + w * w
    num = 6 * u * w * (k * u * u + 2 * u * w + k * w * w) * (r4 + 2 * u * u + w * w)
    den = D1 * ((r4 + 2 * u * u) ** 2 + w * w * (r4 + 6 * u * u))
    return 1 - 2 * (u * u + 2 * u * k * w + w * w) / D1 + num / den


def rhs(tau, y):
    k, u = y[0], y[1]
    return np.array([u, gamma_friction(k, u, math.exp(tau)) * u + k * (k * k - 1)])


def ode_residual(k, u, du, r):
    """du/dtau - gamma u - k (k^2 - 1)."""
    return du - gamma_friction(k, u, r) * u - k * (k * k - 1)


# --- power series ------------------------------------------------------------------

def _mul(a, b):
    return np.convolve(a, b)[: len(a)]


def _cleared_residual(c, at_infinity: bool, scale: float = 1.0):
    """ODE residual times its denominators, as a truncated power series.

    Near the origin the series variable is r; at infinity it is z = scale/r,
    the scale keeping coefficients O(1) for large c.
    """
    L = len(c)
    n = np.arange(L)
    k = c
    sgn = -1.0 if at_infinity else 1.0
    u = sgn * n * c
    du = n * n * c
    one = np.zeros(L)
    one[0] = 1
    x4 = np.zeros(L)
    if L > 4:
        x4[4] = scale ** -4 if at_infinity else 1.0
    w = one - _mul(k, k)
    u2, w2 = _mul(u, u), _mul(w, w)
    if at_infinity:
        # every factor divided by r^4 so that the series start at 1
        D1 = one + _mul(w2, x4)
        D2 = _mul(one + 2 * _mul(u2, x4), one + 2 * _mul(u2, x4)) + _mul(_mul(w2, x4), one + 6 * _mul(u2, x4))
        P1 = _mul(u2 + 2 * _mul(_mul(u, k), w) + w2, x4)
        tail = _mul(one + _mul(2 * u2 + w2, x4), _mul(x4, x4))
    else:
        D1 = x4 + w2
        D2 = _mul(x4 + 2 * u2, x4 + 2 * u2) + _mul(w2, x4 + 6 * u2)
        P1 = u2 + 2 * _mul(_mul(u, k), w) + w2
        tail = x4 + 2 * u2 + w2
    N2 = 6 * _mul(_mul(_mul(u, w), _mul(k, u2) + 2 * _mul(u, w) + _mul(k, w2)), tail)
    D12 = _mul(D1, D2)
    return _mul(du - _mul(k, _mul(k, k) - one), D12) - _mul(u, D12 - 2 * _mul(P1, D2) + N2)


def _solve_series(c_fixed, order: int, at_infinity: bool, shift: int, scale: float = 1.0):
    """Fill coefficients c_n, n = len(c_fixed)..order, order by order.

    The unknown c_n first enters the cleared residual linearly at order
    n + shift (2 for the generic origin family, 12 for k(0) = +-1, 0 at
    infinity); it is chosen to cancel that coefficient.
    """
    L = order + shift + 1
    c = np.zeros(L)
    c[: len(c_fixed)] = c_fixed
    for n in range(len(c_fixed), order + 1):
        m = n + shift
        c[n] = 0.0
        R0 = _cleared_residual(c, at_infinity, scale)[m]
        c[n] = 1.0
        R1 = _cleared_residual(c, at_infinity, scale)[m]
        if R1 == R0:
            raise ArithmeticError("coefficient does not enter the residual")
        c[n] = -R0 / (R1 - R0)
    return c[: order + 1]


def series_origin_generic(k0: float, a: float, order: int = 3) -> np.ndarray:
    """Coefficients of k = k0 + a r + c2 r^2 + ... with |k0| != 1, a != 0."""
    if abs(abs(k0) - 1) < 1e-12 or a == 0:
        raise ValueError("generic family needs |k0| != 1 and a != 0")
    return _solve_series([k0, a], order, False, 2)


def series_origin_unit(b: float, sign: int = 1, order: int = 4) -> np.ndarray:
    """Coefficients of k = sign (1 - b r^2 + c4 r^4 + ...)."""
    return sign * _solve_series([1.0, 0.0, -b], order, False, 12)


def series_infinity(c: float, sign: int = 1, order: int = 6) -> np.ndarray:
    """Coefficients in x = 1/r of k = sign (1 - c x + 3c^2/4 x^2 + ...)."""
    s = max(c, 1.0)
    scaled = _solve_series([1.0, -c / s], order, True, 0, scale=s)
    return sign * scaled * s ** np.arange(order + 1)


def series_eval(coeffs, r, at_infinity: bool = False):
    """(k, u, du/dtau) of a truncated series at radius r."""
    c = np.asarray(coeffs, float)
    n = np.arange(len(c))
    z = 1.0 / r if at_infinity else r
    zp = np.power.outer(np.asarray(z, float), n)
    sgn = -1.0 if at_infinity else 1.0
    return zp @ c, zp @ (sgn * n * c), zp @ (n * n * c)


def series_residual(coeffs, r, at_infinity: bool = False):
    """ODE residual of a truncated series evaluated at r."""
    k, u, du = series_eval(coeffs, r, at_infinity)
    return ode_residual(k, u, du, r)


# --- shooting ----------------------------------------------------------------------

@dataclass
class ShootConfig:
    r_min: float = 1e-3
    r_max_factor: float = 1e3
    rtol: float = 1e-10
    atol: float = 1e-12
    order_infinity: int = 6
    order_origin: int = 3
    match_tol: float = 1e-6
    r_min_floor: float = 1e-7     # matching radius is divided by 10 down to this
    samples_per_unit: int = 200
    method: str = "DOP853"


@dataclass
class Profile:
    tau_c: float
    tau: np.ndarray = field(repr=False)
    k: np.ndarray = field(repr=False)
    u: np.ndarray = field(repr=False)
    k0: float = float("nan")
    a: float = float("nan")
    nodes: int = 0
    energy: float = float("nan")
    residual: float = float("inf")
    converged: bool = False
    message: str = ""

    def summary(self) -> dict:
        d = asdict(self)
        for key in ("tau", "k", "u"):
            d.pop(key)
        return d


def _rhs_with_energy(tau, y):
    k, u = y[0], y[1]
    out = rhs(tau, y)
    return np.array([out[0], out[1], -energy_integrand(k, u, tau)])


def count_nodes(u, floor: float = 1e-14) -> int:
    """Number of sign changes of u, ignoring points with |u| below ``floor``."""
    s = np.sign(u[np.abs(u) > floor])
    return int(np.count_nonzero(s[1:] != s[:-1]))


def _fit_origin(k_end, u_end, r, order):
    def resid(p):
        try:
            c = series_origin_generic(p[0], p[1], order)
        except (ValueError, ArithmeticError):
            return np.array([1e3, 1e3])
        k, u, _ = series_eval(c, r)
        return np.array([k - k_end, (u - u_end) / r])

    guess = np.array([k_end - u_end, u_end / r])
    sol = root(resid, guess, method="hybr", options={"xtol": 1e-14})
    return sol.x, sol.success


def shoot(tau_c: float, config: ShootConfig | None = None) -> Profile:
    """Integrate inward from the asymptotic family labelled by c = e^{tau_c}.

    If the small-r match misses ``match_tol`` the matching radius is reduced
    tenfold and the integration repeated, down to ``r_min_floor``.
    """
    cfg = config or ShootConfig()
    prof = _shoot_once(tau_c, cfg)
    r_min = cfg.r_min
    while not prof.converged and r_min / 10 >= cfg.r_min_floor * (1 - 1e-9) and np.isfinite(prof.k0):
        r_min /= 10
        prof = _shoot_once(tau_c, replace(cfg, r_min=r_min))
    return prof


def _shoot_once(tau_c: float, cfg: ShootConfig) -> Profile:
    c = math.exp(tau_c)
    r_max = cfg.r_max_factor * max(c, 1.0)
    t0, t1 = math.log(r_max), math.log(cfg.r_min)
    coeff = series_infinity(c, 1, cfg.order_infinity)
    k_inf, u_inf, _ = series_eval(coeff, r_max, at_infinity=True)
    sol = solve_ivp(_rhs_with_energy, (t0, t1), [k_inf, u_inf, 0.0], method=cfg.method,
                    rtol=cfg.rtol, atol=cfg.atol, dense_output=True)
    npts = max(int((t0 - t1) * cfg.samples_per_unit), 200)
    tau = np.linspace(t1, t0, npts)
    prof = Profile(tau_c, tau, np.full(npts, np.nan), np.full(npts, np.nan))
    if sol.status != 0 or not np.all(np.isfinite(sol.y[:, -1])):
        prof.message = sol.message
        return prof
    Y = sol.sol(tau)
    prof.k, prof.u = Y[0], Y[1]
    prof.nodes = count_nodes(prof.u) + 1
    k_end, u_end, E_bulk = sol.y[:, -1]
    (k0, a), ok = _fit_origin(k_end, u_end, cfg.r_min, cfg.order_origin)
    prof.k0, prof.a = float(k0), float(a)
    # compare the fitted small-r series with the integrated profile further out
    r_chk = 4 * cfg.r_min
    kc, uc, _ = series_eval(series_origin_generic(k0, a, cfg.order_origin), r_chk) if ok else (np.nan, np.nan, 0)
    ki, ui, _ = sol.sol(math.log(r_chk))
    prof.residual = float(abs(kc - ki) + abs(uc - ui))
    # tails: integrand tends to a constant in r near 0 and decays like r^-4 at infinity
    f_min = float(energy_integrand(k_end, u_end, t1)) / cfg.r_min
    f_max = float(energy_integrand(k_inf, u_inf, t0)) / r_max
    prof.energy = float(E_bulk) + f_min * cfg.r_min + f_max * r_max / 3.0
    prof.converged = bool(ok and prof.residual < cfg.match_tol and abs(k0) < 1)
    prof.message = "ok" if prof.converged else "matching failed"
    return prof


def energy(profile: Profile) -> float:
    """Energy of a sampled profile: Simpson in tau plus power-law tail estimates."""
    tau, k, u = profile.tau, profile.k, profile.u
    f = energy_integrand(k, u, tau)
    bulk = simpson(f, x=tau)
    r = np.exp(tau)
    g = f / r   # integrand per unit r
    head = g[0] * r[0]
    # local power law g ~ r^-p from the last two samples
    p = -math.log(g[-1] / g[-2]) / (tau[-1] - tau[-2]) if g[-1] > 0 and g[-2] > 0 else 4.0
    tail = g[-1] * r[-1] / (p - 1) if p > 1 else 0.0
    return float(bulk + head + tail)


def monopole_profile(tau_min: float = math.log(1e-3), tau_max: float = math.log(1e4), n: int = 20001) -> Profile:
    """The point-like solution k = 0 sampled on a tau grid."""
    tau = np.linspace(tau_min, tau_max, n)
    return Profile(float("inf"), tau, np.zeros(n), np.zeros(n), k0=0.0, converged=True)


def _shoot_summary(args):
    tau_c, cfg = args
    return shoot(tau_c, cfg).summary()


def scan(tau_values, config: ShootConfig | None = None, workers: int = 1) -> list[dict]:
    """Shoot for every tau_c; results come back in input order."""
    cfg = config or ShootConfig()
    jobs = [(float(t), cfg) for t in tau_values]
    if workers <= 1:
        return [_shoot_summary(j) for j in jobs]
    with ProcessPoolExecutor(max_workers=workers) as ex:
        return list(ex.map(_shoot_summary, jobs))
