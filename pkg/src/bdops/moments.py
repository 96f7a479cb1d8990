"""Moments of Hermite functions, the f-polynomials, and their growth.

``A_even(j, k) = int q^(2j) psi_{2k}(q) dq`` and
``A_odd(j, k) = int q^(2j+1) psi_{2k+1}(q) dq`` are built from the
three-term recurrence in ``k`` seeded by the closed form at ``j = 0``.
They factor as ``f_j(k) * c_even(k)`` and ``(f_j(k+1) + f_j(k)) * c_odd(k)``
with integer polynomials ``f_j`` of degree ``j``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Callable, Iterable

import numpy as np

from .polygauss import Poly
from .scalar import Scalar

__all__ = [
    "MomentCoefficient",
    "FPolynomial",
    "column_constant",
    "moment_A_even",
    "moment_A_odd",
    "moment_A",
    "f_poly",
    "f_sum_poly",
    "column_poly",
    "log_column_constant",
    "moment_A_float",
    "asymptotic_exponent",
    "geometric_k_grid",
]

PARITIES = ("even", "odd")


def _check_parity(parity: str) -> None:
    if parity not in PARITIES:
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")


@dataclass(frozen=True)
class MomentCoefficient:
    parity: str
    j: int
    k: int
    value: Scalar


@dataclass(frozen=True)
class FPolynomial:
    """Integer polynomial in ``k`` of degree ``j``."""

    j: int
    poly: Poly

    def __call__(self, k) -> Fraction:
        return self.poly(Fraction(k)).as_fraction()

    @property
    def coefficients(self) -> list[Fraction]:
        return [c.as_fraction() for c in self.poly.coeffs]

    def __str__(self) -> str:
        return self.poly.to_string("k")


@lru_cache(maxsize=None)
def column_constant(parity: str, k: int) -> Scalar:
    """``sqrt(2) pi^(1/4) sqrt((2k)!)/(2^k k!)`` (even) or ``pi^(1/4) sqrt((2k+1)!)/(2^k k!)`` (odd)."""
    _check_parity(parity)
    if k < 0:
        raise ValueError("k must be nonnegative")
    denom = 2**k * math.factorial(k)
    if parity == "even":
        return Scalar.sqrt(2 * math.factorial(2 * k)) * Scalar.pi_power(1) * Fraction(1, denom)
    return Scalar.sqrt(math.factorial(2 * k + 1)) * Scalar.pi_power(1) * Fraction(1, denom)


@lru_cache(maxsize=None)
def moment_A_even(j: int, k: int) -> Scalar:
    """``int q^(2j) psi_{2k} dq`` by the recurrence in ``j``."""
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    if j == 0:
        # pi^(1/4) sqrt((2k)!) / (2^(k-1/2) k!)
        return Scalar.sqrt(Fraction(2 * math.factorial(2 * k), 4**k * math.factorial(k) ** 2)) * Scalar.pi_power(1)
    out = Scalar.sqrt((2 * k + 2) * (2 * k + 1)) * Fraction(1, 2) * moment_A_even(j - 1, k + 1)
    out = out + moment_A_even(j - 1, k) * Fraction(4 * k + 1, 2)
    if k > 0:
        out = out + Scalar.sqrt(2 * k * (2 * k - 1)) * Fraction(1, 2) * moment_A_even(j - 1, k - 1)
    return out


@lru_cache(maxsize=None)
def moment_A_odd(j: int, k: int) -> Scalar:
    """``int q^(2j+1) psi_{2k+1} dq`` from the even family at ``k`` and ``k+1``."""
    if j < 0 or k < 0:
        raise ValueError("j and k must be nonnegative")
    return (Scalar.sqrt(Fraction(2 * k + 2, 2)) * moment_A_even(j, k + 1)
            + Scalar.sqrt(Fraction(2 * k + 1, 2)) * moment_A_even(j, k))


def moment_A(parity: str, j: int, k: int) -> Scalar:
    _check_parity(parity)
    return moment_A_even(j, k) if parity == "even" else moment_A_odd(j, k)


@lru_cache(maxsize=None)
def f_poly(j: int) -> FPolynomial:
    """``f_j(k) = (2k+1)/2 f_{j-1}(k+1) + (2k+1/2) f_{j-1}(k) + k f_{j-1}(k-1)``, ``f_0 = 1``."""
    if j < 0:
        raise ValueError("j must be nonnegative")
    if j == 0:
        return FPolynomial(0, Poly([1]))
    prev = f_poly(j - 1).poly
    poly = (prev.translate(1) * Poly([Fraction(1, 2), 1])
            + prev * Poly([Fraction(1, 2), 2])
            + prev.translate(-1).shift(1))
    return FPolynomial(j, poly)


@lru_cache(maxsize=None)
def f_sum_poly(j: int) -> FPolynomial:
    """``f_j(k+1) + f_j(k)`` expanded."""
    p = f_poly(j).poly
    return FPolynomial(j, p.translate(1) + p)


def column_poly(parity: str, j: int) -> FPolynomial:
    """The integer factor of ``A(j, k)``: ``f_j`` (even) or ``f_j(k+1)+f_j(k)`` (odd)."""
    _check_parity(parity)
    return f_poly(j) if parity == "even" else f_sum_poly(j)


# ---------------------------------------------------------------------------
# float path for large k (log-domain factorials)

_LN2 = math.log(2.0)
_LNPI4 = 0.25 * math.log(math.pi)


def log_column_constant(parity: str, k: float) -> float:
    _check_parity(parity)
    if parity == "even":
        return 0.5 * _LN2 + _LNPI4 + 0.5 * math.lgamma(2 * k + 1) - k * _LN2 - math.lgamma(k + 1)
    return _LNPI4 + 0.5 * math.lgamma(2 * k + 2) - k * _LN2 - math.lgamma(k + 1)


def _even_float(j: int, k: int) -> float:
    lo = max(0, k - j)
    vals = {kk: math.exp(log_column_constant("even", kk)) for kk in range(lo, k + j + 1)}
    for level in range(1, j + 1):
        nxt = {}
        for kk in range(max(0, k - (j - level)), k + (j - level) + 1):
            v = 0.5 * math.sqrt((2 * kk + 2) * (2 * kk + 1)) * vals[kk + 1] + (2 * kk + 0.5) * vals[kk]
            if kk > 0:
                v += 0.5 * math.sqrt(2 * kk * (2 * kk - 1)) * vals[kk - 1]
            nxt[kk] = v
        vals = nxt
    return vals[k]


def moment_A_float(parity: str, j: int, k: int) -> float:
    """Float ``A(j, k)`` via the same recurrences, seeded with log-gamma; good for k ~ 10^4."""
    _check_parity(parity)
    if parity == "even":
        return _even_float(j, k)
    return math.sqrt(k + 1) * _even_float(j, k + 1) + math.sqrt(k + 0.5) * _even_float(j, k)


# ---------------------------------------------------------------------------
# exponent fitting


def geometric_k_grid(lo: int, hi: int, num: int = 64) -> np.ndarray:
    return np.unique(np.rint(np.geomspace(lo, hi, num)).astype(int))


def asymptotic_exponent(sampler: Callable[[int], float], k_values: Iterable[int] | tuple[int, int]) -> float:
    """Least-squares slope of ``log sampler(k)`` against ``log k``.

    ``k_values`` is either explicit sample points or a ``(lo, hi)`` window,
    meaning every integer in it.
    """
    if isinstance(k_values, tuple) and len(k_values) == 2:
        k_values = range(k_values[0], k_values[1] + 1)
    ks = np.asarray(list(k_values), dtype=float)
    if ks.size < 2 or ks.min() <= 0:
        raise ValueError("need at least two positive sample points")
    if ks.max() / ks.min() < 10:
        raise ValueError("sample window must span at least one decade")
    vals = np.array([float(sampler(int(k))) for k in ks])
    if np.any(~(vals > 0)):
        bad = ks[~(vals > 0)][0]
        raise ValueError(f"non-positive sample at k={int(bad)}; cannot take log")
    slope, _ = np.polyfit(np.log(ks), np.log(vals), 1)
    return float(slope)
