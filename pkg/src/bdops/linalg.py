"""Exact determinants and cofactors over any commutative ring.

Entries only need ``+``, ``-`` and ``*``; no division is used by the
generic path, which matters for :class:`~bdops.scalar.Scalar` where only
single-term values are invertible.
"""

from __future__ import annotations

from fractions import Fraction
from functools import lru_cache

__all__ = ["det", "det_int", "minor", "cofactor"]


def det(matrix, zero=0):
    """Laplace expansion along rows, memoized over the remaining column set.

    Cost is ``O(n 2^n)`` ring multiplications; intended for ``n <= 8``.
    """
    rows = [list(r) for r in matrix]
    n = len(rows)
    if n == 0:
        return zero + 1
    if any(len(r) != n for r in rows):
        raise ValueError("determinant of a non-square matrix")

    @lru_cache(maxsize=None)
    def sub(r: int, cols: frozenset):
        if r == n:
            return None  # empty product marker
        total = zero
        ordered = sorted(cols)
        for pos, c in enumerate(ordered):
            a = rows[r][c]
            if not a:
                continue
            rest = sub(r + 1, cols - {c})
            term = a if rest is None else a * rest
            total = total + term if pos % 2 == 0 else total - term
        return total

    return sub(0, frozenset(range(n)))


def det_int(matrix) -> int | Fraction:
    """Bareiss fraction-free elimination for integer or rational matrices."""
    m = [[Fraction(x) for x in row] for row in matrix]
    n = len(m)
    if n == 0:
        return 1
    sign, prev = 1, Fraction(1)
    for k in range(n - 1):
        if m[k][k] == 0:
            swap = next((i for i in range(k + 1, n) if m[i][k] != 0), None)
            if swap is None:
                return 0
            m[k], m[swap] = m[swap], m[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * m[k][k] - m[i][k] * m[k][j]) / prev
        prev = m[k][k]
    out = sign * m[-1][-1]
    return int(out) if out.denominator == 1 else out


def minor(matrix, i: int, j: int):
    """Matrix with row ``i`` and column ``j`` removed."""
    return [[x for c, x in enumerate(row) if c != j] for r, row in enumerate(matrix) if r != i]


def cofactor(matrix, i: int, j: int, zero=0):
    """``(-1)^(i+j)`` times the determinant of the ``(i, j)`` minor (0-based)."""
    d = det(minor(matrix, i, j), zero=zero)
    return d if (i + j) % 2 == 0 else -d
