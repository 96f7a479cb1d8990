"""Physicists' Hermite polynomials and normalized Hermite functions, exact."""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache
from math import factorial

from .polygauss import Poly, PolyGauss
from .scalar import Scalar

__all__ = ["hermite_poly", "hermite_function", "hermite_norm"]


@lru_cache(maxsize=None)
def _hermite_int_coeffs(n: int) -> tuple[int, ...]:
    # H_{m+1} = 2 q H_m - 2 m H_{m-1}, i.e. q H_m = H_{m+1}/2 + m H_{m-1}
    if n == 0:
        return (1,)
    if n == 1:
        return (0, 2)
    prev, cur = _hermite_int_coeffs(n - 2), _hermite_int_coeffs(n - 1)
    out = [0] * (n + 1)
    for i, c in enumerate(cur):
        out[i + 1] += 2 * c
    for i, c in enumerate(prev):
        out[i] -= 2 * (n - 1) * c
    return tuple(out)


def hermite_poly(n: int) -> Poly:
    """``H_n(q)`` with exact integer coefficients."""
    if n < 0:
        raise ValueError(f"Hermite index must be nonnegative, got {n}")
    return Poly(_hermite_int_coeffs(n))


@lru_cache(maxsize=None)
def hermite_norm(n: int) -> Scalar:
    """``(2^n n! sqrt(pi))^(-1/2)``."""
    return Scalar.sqrt(Fraction(1, 2**n * factorial(n))) * Scalar.pi_power(-1)


@lru_cache(maxsize=None)
def hermite_function(n: int) -> PolyGauss:
    """Normalized ``psi_n(q) = H_n(q) exp(-q^2/2) / sqrt(2^n n! sqrt(pi))``."""
    return PolyGauss({Fraction(1, 2): hermite_poly(n) * hermite_norm(n)})
