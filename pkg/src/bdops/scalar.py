"""Exact constants of the form sum_i c_i * sqrt(r_i) * pi**(b_i/4).

Every closed-form integral of a polynomial times a Gaussian with rational
width lands in this ring: rational coefficients, square roots of rationals,
and quarter powers of pi. Representation is canonical (radicands are
square-free positive integers), so ``==`` is an exact zero test.
"""

from __future__ import annotations

import math
from fractions import Fraction
from functools import lru_cache
from numbers import Rational

import mpmath

__all__ = ["Scalar", "split_square", "ZERO", "ONE"]

_SMALL_PRIMES: tuple[int, ...] = tuple(
    p for p in range(2, 2000) if all(p % d for d in range(2, math.isqrt(p) + 1))
)


@lru_cache(maxsize=4096)
def split_square(n: int) -> tuple[int, int]:
    """Return ``(s, r)`` with ``n == s*s*r`` and ``r`` square-free."""
    if n <= 0:
        raise ValueError(f"split_square needs a positive integer, got {n}")
    s, r = 1, 1
    for p in _SMALL_PRIMES:
        if p * p > n:
            break
        e = 0
        while n % p == 0:
            n //= p
            e += 1
        if e:
            s *= p ** (e // 2)
            if e % 2:
                r *= p
    if n > 1:
        root = math.isqrt(n)
        if root * root == n:
            s *= root
        elif n < _SMALL_PRIMES[-1] ** 2:
            r *= n
        else:
            import sympy

            for p, e in sympy.factorint(n).items():
                s *= p ** (e // 2)
                if e % 2:
                    r *= p
    return s, r


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, (int, Rational)):
        return Fraction(x)
    raise TypeError(f"cannot convert {type(x).__name__} to an exact rational")


class Scalar:
    """Immutable element of Q[sqrt(r), pi**(1/4)].

    ``terms`` maps ``(radicand, pi_quarter_power)`` to a nonzero Fraction.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: dict[tuple[int, int], Fraction] | None = None):
        self._terms = {k: v for k, v in (terms or {}).items() if v}
        self._hash = None

    # constructors -------------------------------------------------------

    @classmethod
    def rational(cls, x) -> Scalar:
        x = _as_fraction(x)
        return cls({(1, 0): x}) if x else cls()

    @classmethod
    def sqrt(cls, x) -> Scalar:
        """Exact square root of a nonnegative rational."""
        x = _as_fraction(x)
        if x < 0:
            raise ValueError("square root of a negative rational")
        if x == 0:
            return cls()
        # sqrt(p/q) = sqrt(p*q)/q
        s, r = split_square(x.numerator * x.denominator)
        return cls({(r, 0): Fraction(s, x.denominator)})

    @classmethod
    def pi_power(cls, quarters: int) -> Scalar:
        """``pi ** (quarters/4)``."""
        return cls({(1, quarters): Fraction(1)})

    @classmethod
    def coerce(cls, x) -> Scalar:
        return x if isinstance(x, Scalar) else cls.rational(x)

    # inspection ---------------------------------------------------------

    @property
    def terms(self) -> dict[tuple[int, int], Fraction]:
        return dict(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    def is_rational(self) -> bool:
        return not self._terms or set(self._terms) == {(1, 0)}

    def is_monomial(self) -> bool:
        return len(self._terms) == 1

    def as_fraction(self) -> Fraction:
        if not self.is_rational():
            raise ValueError(f"{self} is not rational")
        return self._terms.get((1, 0), Fraction(0))

    # arithmetic ---------------------------------------------------------

    def __add__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.rational(other)
            except TypeError:
                return NotImplemented
        out = dict(self._terms)
        for k, v in other._terms.items():
            out[k] = out.get(k, 0) + v
        return Scalar(out)

    __radd__ = __add__

    def __neg__(self) -> Scalar:
        return Scalar({k: -v for k, v in self._terms.items()})

    def __sub__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.rational(other)
            except TypeError:
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other) -> Scalar:
        return (-self) + other

    def __mul__(self, other) -> Scalar:
        if not isinstance(other, Scalar):
            try:
                f = _as_fraction(other)
            except TypeError:
                return NotImplemented
            return Scalar({k: v * f for k, v in self._terms.items()}) if f else Scalar()
        out: dict[tuple[int, int], Fraction] = {}
        for (r1, b1), c1 in self._terms.items():
            for (r2, b2), c2 in other._terms.items():
                g = math.gcd(r1, r2)
                key = ((r1 // g) * (r2 // g), b1 + b2)
                out[key] = out.get(key, 0) + c1 * c2 * g
        return Scalar(out)

    __rmul__ = __mul__

    def inverse(self) -> Scalar:
        """Reciprocal; defined for single-term values only."""
        if len(self._terms) != 1:
            raise ZeroDivisionError(f"no exact inverse for {self}")
        ((r, b), c), = self._terms.items()
        # 1/(c sqrt(r) pi^(b/4)) = sqrt(r)/(c r) pi^(-b/4)
        return Scalar({(r, -b): 1 / (c * r)})

    def __truediv__(self, other) -> Scalar:
        if isinstance(other, Scalar):
            return self * other.inverse()
        f = _as_fraction(other)
        return self * (1 / f)

    def __pow__(self, n: int) -> Scalar:
        if n < 0:
            return self.inverse() ** (-n)
        out, base = ONE, self
        while n:
            if n & 1:
                out = out * base
            base = base * base
            n >>= 1
        return out

    # comparison ---------------------------------------------------------

    def __eq__(self, other) -> bool:
        if not isinstance(other, Scalar):
            try:
                other = Scalar.rational(other)
            except TypeError:
                return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    # evaluation ---------------------------------------------------------

    def to_mpf(self, dps: int = 30) -> mpmath.mpf:
        with mpmath.workdps(dps):
            total = mpmath.mpf(0)
            for (r, b), c in self._terms.items():
                term = mpmath.mpf(c.numerator) / c.denominator
                if r != 1:
                    term *= mpmath.sqrt(r)
                if b:
                    term *= mpmath.pi ** (mpmath.mpf(b) / 4)
                total += term
            return +total

    def __float__(self) -> float:
        return float(self.to_mpf())

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for (r, b), c in sorted(self._terms.items()):
            factors = []
            if r != 1:
                factors.append(f"sqrt({r})")
            if b:
                e = Fraction(b, 4)
                factors.append("pi" if e == 1 else f"pi^({e})")
            mag = abs(c)
            if factors:
                head = "" if mag == 1 else f"{mag}*"
                body = head + "*".join(factors)
            else:
                body = str(mag)
            parts.append(("-" if c < 0 else "+", body))
        s = ("-" if parts[0][0] == "-" else "") + parts[0][1]
        for sign, body in parts[1:]:
            s += f" {sign} {body}"
        return s

    def __repr__(self) -> str:
        return f"Scalar({self})"


ZERO = Scalar()
ONE = Scalar.rational(1)
