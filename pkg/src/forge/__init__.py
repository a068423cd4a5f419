"""Exact computer algebra for quantum groupoids over noncommutative bases.

Everything is computed over a fixed cyclotomic field Q(zeta_n) with exact
arithmetic; all verifiers report named per-axiom residuals instead of booleans.
"""

from forge.scalars import Field, Scalar
from forge.linalg import Vec, LinearMap, Subspace, span, solve

__all__ = ["Field", "Scalar", "Vec", "LinearMap", "Subspace", "span", "solve"]
