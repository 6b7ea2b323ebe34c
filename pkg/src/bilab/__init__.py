"""Born-Infeld type Lagrangians for abelian, non-abelian and derivation-based gauge fields."""
from __future__ import annotations

__version__ = "0.1.0"

from . import lagrangians, liealg, nc_calculus, scalar_dynamics, soliton

__all__ = ["liealg", "nc_calculus", "lagrangians", "soliton", "scalar_dynamics", "__version__"]
