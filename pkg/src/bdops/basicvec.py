"""Determinant-built domain vectors with vanishing low moments.

For an index set ``k_0 < ... < k_N`` of one parity, the vector

    phi = det [ psi_{h(k_0)} ... psi_{h(k_N)} ;  A(j, k_i) for j = 0..N-1 ]

(expanded along the function row) has ``int q^l phi = 0`` for ``l = 0..N``.
Here ``h(k) = 2k`` (even) or ``2k+1`` (odd).

Two exact routes are provided. The primary one factors each column as
``A(j, k_i) = F[j][i] * c_i`` with integer ``F`` and single-term ``c_i``, so
the cofactors are integer minors times products of column constants. The
second expands the Scalar determinant directly and serves as a cross-check.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import prod

from .hermite import hermite_function
from .linalg import det, det_int
from .moments import column_constant, column_poly, moment_A
from .polygauss import PolyGauss, moment
from .report import CheckRecord, VerificationReport
from .scalar import ONE, ZERO, Scalar

__all__ = [
    "DegenerateSpecError",
    "BasicVectorSpec",
    "MomentMatrix",
    "RationalReduction",
    "hermite_index",
    "basic_vector_order1",
    "moment_matrix",
    "basic_vector",
    "basic_vector_determinant",
    "rational_reduction",
    "normalized_coefficients",
    "verify_moment_conditions",
    "row_duplication_determinant",
]


class DegenerateSpecError(ValueError):
    """Index set would give the zero vector (repeated indices)."""


def hermite_index(parity: str, k: int) -> int:
    return 2 * k if parity == "even" else 2 * k + 1


@dataclass(frozen=True)
class BasicVectorSpec:
    parity: str
    order: int
    indices: tuple[int, ...]

    def __post_init__(self):
        if self.parity not in ("even", "odd"):
            raise ValueError(f"parity must be 'even' or 'odd', got {self.parity!r}")
        if self.order < 1:
            raise ValueError(f"order must be a positive integer, got {self.order}")
        idx = tuple(int(k) for k in self.indices)
        if len(idx) != self.order + 1:
            raise ValueError(f"order {self.order} needs {self.order + 1} indices, got {len(idx)}")
        if any(k < 0 for k in idx):
            raise ValueError("indices must be nonnegative")
        if len(set(idx)) != len(idx):
            raise DegenerateSpecError(f"duplicate indices in {list(idx)}")
        # ascending canonical order; reordering may flip the overall sign
        object.__setattr__(self, "indices", tuple(sorted(idx)))

    @classmethod
    def parse(cls, text: str) -> BasicVectorSpec:
        """``"even:2:0,1,2"`` -> spec."""
        try:
            parity, order, idx = text.split(":")
            return cls(parity, int(order), tuple(int(x) for x in idx.split(",")))
        except DegenerateSpecError:
            raise
        except ValueError as exc:
            raise ValueError(f"bad basis spec {text!r}: {exc}") from None

    @property
    def hermite_indices(self) -> tuple[int, ...]:
        return tuple(hermite_index(self.parity, k) for k in self.indices)

    def __str__(self) -> str:
        return f"{self.parity}:{self.order}:{','.join(map(str, self.indices))}"


@dataclass(frozen=True)
class MomentMatrix:
    """Rows ``A(j, k_i)``, ``j = 0..N-1``; the function row is implicit."""

    parity: str
    hermite_indices: tuple[int, ...]
    entries: tuple[tuple[Scalar, ...], ...]


def moment_matrix(spec: BasicVectorSpec) -> MomentMatrix:
    rows = tuple(tuple(moment_A(spec.parity, j, k) for k in spec.indices) for j in range(spec.order))
    return MomentMatrix(spec.parity, spec.hermite_indices, rows)


def _combine(coeffs, hermite_indices) -> PolyGauss:
    out = PolyGauss()
    for c, h in zip(coeffs, hermite_indices):
        if not c.is_zero():
            out = out + hermite_function(h) * c
    return out


def basic_vector_order1(parity: str, m: int, n: int) -> PolyGauss:
    """``A_n psi_{h(m)} - A_m psi_{h(n)}`` with ``A`` the zeroth (even) or first (odd) moment."""
    if m == n:
        raise DegenerateSpecError(f"m == n == {m} gives the zero vector")
    if parity not in ("even", "odd"):
        raise ValueError(f"parity must be 'even' or 'odd', got {parity!r}")
    a_m, a_n = moment_A(parity, 0, m), moment_A(parity, 0, n)
    return hermite_function(hermite_index(parity, m)) * a_n - hermite_function(hermite_index(parity, n)) * a_m


@dataclass(frozen=True)
class RationalReduction:
    """``C_{0,i}[Psi] = minors[i] * prod_{j != i} column_constants[j]``."""

    spec: BasicVectorSpec
    minors: tuple[int, ...]
    column_constants: tuple[Scalar, ...]

    def cofactors(self) -> tuple[Scalar, ...]:
        cs = self.column_constants
        return tuple(
            prod((cs[j] for j in range(len(cs)) if j != i), start=ONE) * m
            for i, m in enumerate(self.minors)
        )

    def reduced_vector(self) -> PolyGauss:
        """``sum_i minors[i] / c_i psi_i``: the vector divided by ``prod c``."""
        return _combine([c.inverse() * m for c, m in zip(self.column_constants, self.minors)],
                        self.spec.hermite_indices)


def _integer_column_matrix(spec: BasicVectorSpec) -> list[list[int]]:
    rows = []
    for j in range(spec.order):
        fp = column_poly(spec.parity, j)
        row = []
        for k in spec.indices:
            v = fp(k)
            if v.denominator != 1:
                raise ArithmeticError(f"column polynomial {j} not integral at k={k}")
            row.append(int(v))
        rows.append(row)
    return rows


def rational_reduction(spec: BasicVectorSpec) -> RationalReduction:
    """Integer cofactor minors of the f-value matrix plus per-column radical factors."""
    F = _integer_column_matrix(spec)
    minors = []
    for i in range(spec.order + 1):
        sub = [[x for c, x in enumerate(row) if c != i] for row in F]
        d = det_int(sub)
        minors.append(d if i % 2 == 0 else -d)
    consts = tuple(column_constant(spec.parity, k) for k in spec.indices)
    return RationalReduction(spec, tuple(int(m) for m in minors), consts)


def basic_vector(spec: BasicVectorSpec) -> PolyGauss:
    """Raw cofactor-scale basic vector via the integer-minor route."""
    red = rational_reduction(spec)
    if not any(red.minors):
        raise ArithmeticError(f"all cofactor minors vanish for {spec}")
    return _combine(red.cofactors(), spec.hermite_indices)


def basic_vector_determinant(spec: BasicVectorSpec) -> PolyGauss:
    """Same vector by direct Scalar cofactor expansion of the moment matrix."""
    rows = moment_matrix(spec).entries
    coeffs = []
    for i in range(spec.order + 1):
        sub = [[x for c, x in enumerate(row) if c != i] for row in rows]
        d = det(sub, zero=ZERO)
        coeffs.append(d if i % 2 == 0 else -d)
    return _combine(coeffs, spec.hermite_indices)


def normalized_coefficients(spec: BasicVectorSpec) -> list[float]:
    """Unit-L2-norm Hermite coefficients (float; the exact norm is not in the Scalar ring)."""
    cof = [float(c) for c in rational_reduction(spec).cofactors()]
    norm = sum(c * c for c in cof) ** 0.5
    return [c / norm for c in cof]


def row_duplication_determinant(spec: BasicVectorSpec, ell: int) -> Scalar:
    """Determinant with the function row replaced by the ell-th moments of the column functions."""
    top = [moment(hermite_function(h), ell) for h in spec.hermite_indices]
    return det([top] + [list(r) for r in moment_matrix(spec).entries], zero=ZERO)


def verify_moment_conditions(phi: PolyGauss, N: int, subject: str | None = None) -> VerificationReport:
    """Exact residuals ``int q^l phi`` for ``l = 0..N``; passes iff all are zero."""
    report = VerificationReport(subject or f"moment conditions up to {N}")
    for ell in range(N + 1):
        r = moment(phi, ell)
        report.add(CheckRecord.exact_zero(f"moment[{ell}]", r))
    return report
