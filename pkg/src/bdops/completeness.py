"""Finite, computable ingredients of the completeness argument.

Given a vector ``phi`` orthogonal to every basic vector with a fixed index
tail ``k_1..k_N``, its Hermite coefficient at ``k_0`` is tied to the fixed
ones through ``-phi_{k0} C_{0,0}[Psi] = |Phi~|``, where ``Phi~`` is the
moment matrix with first row ``(0, phi_{k1}, ..., phi_{kN})``. This module
computes that determinant, its polynomial structure in ``k_0``, its growth
rate, and the nonsingularity of the map from fixed coefficients to the
cofactors ``C_{j,0}[Phi~]``.
"""

from __future__ import annotations

import math
import random
from dataclasses import dataclass, field
from fractions import Fraction

import numpy as np

from .linalg import det
from .moments import (
    asymptotic_exponent,
    column_constant,
    column_poly,
    log_column_constant,
    moment_A,
    moment_A_float,
)
from .polygauss import Poly
from .scalar import ZERO, Scalar

__all__ = [
    "OrthogonalityInstance",
    "AnnihilatorVerdict",
    "coefficient_ratio_n1",
    "coefficient_ratio_n1_float",
    "l2_partial_sums",
    "phi_tilde_matrix",
    "phi_k0_determinant",
    "phi_k0_determinant_float",
    "fixed_cofactors",
    "k0_root_polynomial",
    "integer_roots",
    "determinant_growth_exponent",
    "annihilator_matrix",
    "annihilator_kernel_test",
    "random_instance",
]


# ---------------------------------------------------------------------------
# order-1 growth laws


def coefficient_ratio_n1(parity: str, n: int, m: int) -> Scalar:
    """``phi_{h(m)} / phi_{h(n)}`` forced by orthogonality to all order-1 basic vectors."""
    return column_constant(parity, m) / column_constant(parity, n)


def coefficient_ratio_n1_float(parity: str, n: int, m: int) -> float:
    return math.exp(log_column_constant(parity, m) - log_column_constant(parity, n))


def l2_partial_sums(parity: str, n: int, M_values) -> dict[int, float]:
    """``sum_{0 <= m <= M, m != n} ratio(m)^2`` for each ``M``; the ``m = n`` slot is the free coefficient."""
    M_values = sorted(set(int(M) for M in M_values))
    out, total, m = {}, 0.0, 0
    for M in M_values:
        while m <= M:
            if m != n:
                total += coefficient_ratio_n1_float(parity, n, m) ** 2
            m += 1
        out[M] = total
    return out


# ---------------------------------------------------------------------------
# the Phi~ determinant


@dataclass(frozen=True)
class OrthogonalityInstance:
    parity: str
    indices: tuple[int, ...]
    coefficients: tuple = field(default=())
    seed: int | None = None

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        idx = tuple(int(k) for k in self.indices)
        if len(set(idx)) != len(idx):
            raise ValueError(f"duplicate fixed indices {list(idx)}")
        if len(self.coefficients) != len(idx):
            raise ValueError("need one coefficient per fixed index")
        object.__setattr__(self, "indices", idx)
        object.__setattr__(self, "coefficients", tuple(Scalar.coerce(c) for c in self.coefficients))

    @property
    def N(self) -> int:
        return len(self.indices)

    def is_degenerate(self) -> bool:
        return all(c.is_zero() for c in self.coefficients)


def _check_k0(inst: OrthogonalityInstance, k0: int) -> None:
    if k0 in inst.indices:
        raise ValueError(f"k0={k0} collides with fixed indices {list(inst.indices)}")
    if k0 < 0:
        raise ValueError("k0 must be nonnegative")


def phi_tilde_matrix(inst: OrthogonalityInstance, k0: int) -> list[list[Scalar]]:
    cols = (k0,) + inst.indices
    rows = [[ZERO, *inst.coefficients]]
    rows += [[moment_A(inst.parity, j, k) for k in cols] for j in range(inst.N)]
    return rows


def phi_k0_determinant(inst: OrthogonalityInstance, k0: int) -> Scalar:
    """Exact ``|Phi~|`` with the free column at ``k0``."""
    _check_k0(inst, k0)
    return det(phi_tilde_matrix(inst, k0), zero=ZERO)


def phi_k0_determinant_float(inst: OrthogonalityInstance, k0: int) -> float:
    _check_k0(inst, k0)
    cols = (k0,) + inst.indices
    m = np.empty((inst.N + 1, inst.N + 1))
    m[0] = [0.0] + [float(c) for c in inst.coefficients]
    for j in range(inst.N):
        m[j + 1] = [moment_A_float(inst.parity, j, k) for k in cols]
    return float(np.linalg.det(m))


def fixed_cofactors(inst: OrthogonalityInstance) -> list[Scalar]:
    """``C_{j+1,0}[Phi~]`` for ``j = 0..N-1``; independent of ``k0``."""
    phi_row = list(inst.coefficients)
    a_rows = [[moment_A(inst.parity, j, k) for k in inst.indices] for j in range(inst.N)]
    out = []
    for j in range(inst.N):
        sub = [phi_row] + [r for jj, r in enumerate(a_rows) if jj != j]
        d = det(sub, zero=ZERO)
        out.append(d if (j + 1) % 2 == 0 else -d)
    return out


def k0_root_polynomial(inst: OrthogonalityInstance) -> Poly:
    """``sum_j g_j(k0) C_{j+1,0}[Phi~]`` with ``g_j = f_j`` (even) or ``f_j(k+1)+f_j(k)`` (odd).

    ``|Phi~|(k0)`` equals this polynomial times the nonzero column constant at ``k0``.
    """
    out = Poly()
    for j, c in enumerate(fixed_cofactors(inst)):
        out = out + column_poly(inst.parity, j).poly * c
    return out


def integer_roots(poly: Poly, window: tuple[int, int], exclude=()) -> list[int]:
    lo, hi = window
    return [k for k in range(lo, hi + 1) if k not in exclude and poly(k).is_zero()]


def determinant_growth_exponent(inst: OrthogonalityInstance, window: tuple[int, int] = (100, 2000)) -> float:
    return asymptotic_exponent(lambda k0: abs(phi_k0_determinant_float(inst, k0)), window)


# ---------------------------------------------------------------------------
# the cofactor map phi -> (|Phi~_1|, ..., |Phi~_N|)


@dataclass(frozen=True)
class AnnihilatorVerdict:
    parity: str
    indices: tuple[int, ...]
    matrix: tuple[tuple[Scalar, ...], ...]
    determinant: Scalar

    @property
    def nonsingular(self) -> bool:
        return not self.determinant.is_zero()

    def __bool__(self) -> bool:
        return self.nonsingular


def annihilator_matrix(parity: str, indices) -> list[list[Scalar]]:
    """``L[j][i]``: coefficient of ``phi_{k_{i+1}}`` in ``|Phi~_{j+1}|``.

    ``Phi~_{j+1}`` drops the first column and the moment row ``j`` of ``Phi~``;
    expanding it along the coefficient row gives these signed minors.
    """
    indices = tuple(int(k) for k in indices)
    if len(set(indices)) != len(indices):
        raise ValueError(f"duplicate indices {list(indices)}")
    N = len(indices)
    a_rows = [[moment_A(parity, j, k) for k in indices] for j in range(N)]
    L = []
    for j in range(N):
        rows = [r for jj, r in enumerate(a_rows) if jj != j]
        line = []
        for i in range(N):
            sub = [[x for c, x in enumerate(r) if c != i] for r in rows]
            d = det(sub, zero=ZERO)
            line.append(d if i % 2 == 0 else -d)
        L.append(line)
    return L


def annihilator_kernel_test(parity: str, indices) -> AnnihilatorVerdict:
    """Nonsingular verdict means only the zero coefficient vector kills every ``|Phi~_j|``."""
    L = annihilator_matrix(parity, indices)
    return AnnihilatorVerdict(parity, tuple(indices), tuple(map(tuple, L)), det(L, zero=ZERO))


def random_instance(parity: str, N: int, rng: random.Random, max_index: int = 12, max_coeff: int = 9) -> OrthogonalityInstance:
    """Distinct fixed indices in ``[0, max_index]`` and nonzero integer coefficients."""
    indices = tuple(sorted(rng.sample(range(max_index + 1), N)))
    coeffs = tuple(rng.choice([c for c in range(-max_coeff, max_coeff + 1) if c]) for _ in range(N))
    return OrthogonalityInstance(parity, indices, coeffs)
