"""Independent symbolic derivations used as test oracles."""
from __future__ import annotations

from functools import lru_cache

import numpy as np
import sympy as sp


@lru_cache(maxsize=None)
def soliton_udot():
    """u' from the Euler-Lagrange equation of r^3 (1 - A^(1/4)) in tau = log r."""
    k, u, ud, t = sp.symbols("k u ud tau", real=True)
    r = sp.exp(t)
    a = (1 - k ** 2) / r ** 2
    b = u ** 2 / r ** 4
    A = (1 + a ** 2 + 2 * b) ** 2 + 4 * a ** 2 * b ** 2
    L = (1 - A ** sp.Rational(1, 4)) * sp.exp(3 * t)
    Lu = sp.diff(L, u)
    eq = sp.diff(Lu, k) * u + sp.diff(Lu, u) * ud + sp.diff(Lu, t) - sp.diff(L, k)
    return sp.lambdify((k, u, t), sp.solve(eq, ud)[0], "numpy")


@lru_cache(maxsize=None)
def homogeneous_udot():
    """du/dt for L(phi, u) = 1 - ((1 - 3u^2)^2 + 16 s^2)^(1/4) sqrt(1 + 4 s^2)."""
    f, u, ud = sp.symbols("phi u ud", real=True)
    s = f * (f - 1)
    L = 1 - ((1 - 3 * u ** 2) ** 2 + 16 * s ** 2) ** sp.Rational(1, 4) * sp.sqrt(1 + 4 * s ** 2)
    Lu = sp.diff(L, u)
    eq = sp.diff(Lu, f) * u + sp.diff(Lu, u) * ud - sp.diff(L, f)
    return sp.lambdify((f, u), sp.solve(eq, ud)[0], "numpy")


@lru_cache(maxsize=None)
def frw_bi_udot():
    """du/dt from d/dt(a^3 dL/du) = a^3 dL/dphi, written with H = a'/a."""
    t = sp.symbols("t", real=True)
    beta, gamma = sp.symbols("beta gamma", positive=True)
    f, u, ud, H = sp.symbols("phi u ud H", real=True)
    a = sp.Function("a")(t)
    F = sp.Function("F")(t)
    s2 = (F * (F - gamma)) ** 2 / beta ** 2
    y = sp.diff(F, t) ** 2 / beta ** 2
    L = 1 - ((1 - 3 * y) ** 2 + 16 * s2) ** sp.Rational(1, 4) * sp.sqrt(1 + 4 * s2)
    Lag = a ** 3 * L
    eq = sp.diff(sp.diff(Lag, sp.diff(F, t)), t) - sp.diff(Lag, F)
    eq = eq / a ** 3
    eq = eq.subs(sp.diff(a, t), H * a).subs(sp.diff(F, t, 2), ud).subs(sp.diff(F, t), u).subs(F, f)
    sol = sp.solve(sp.simplify(eq), ud)[0]
    return sp.lambdify((f, u, H, beta, gamma), sol, "numpy")


def k4_delta(n: int = 3) -> np.ndarray:
    """delta_ab delta_cd - delta_ac delta_bd + delta_ad delta_bc."""
    d = np.eye(n)
    return (np.einsum("ab,cd->abcd", d, d) - np.einsum("ac,bd->abcd", d, d)
            + np.einsum("ad,bc->abcd", d, d))


def generic_origin_c2_c3(k0: float, a: float) -> tuple[float, float]:
    g = 1 - k0 * k0
    c2 = -k0 * (5 * a * a / (6 * g) + g / (12 * a * a))
    c3 = (a ** 8 * (52 - 70 * g) - 9 * a ** 4 * g ** 3 + (g - 1) * g ** 4) / (108 * a ** 5 * g * g)
    return c2, c3


def unit_origin_c4(b: float) -> float:
    return (3 * b ** 2 + 92 * b ** 4 + 608 * b ** 6) / (10 + 200 * b ** 2 + 1600 * b ** 4)
