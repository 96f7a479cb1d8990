"""Exact algebra of polynomial-Gaussian functions.

A ``PolyGauss`` is a finite sum ``sum_a P_a(q) exp(-a q^2)`` with rational
widths ``a > 0`` and polynomials over :class:`~bdops.scalar.Scalar`.
Antiderivatives of such functions leave the class only through
``erf(sqrt(a) q)`` terms and plain polynomials, which is what ``ExtFunc``
holds. Moments, inner products and antiderivatives are all exact.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import comb, prod

import mpmath

from .scalar import ONE, ZERO, Scalar

__all__ = [
    "Poly",
    "PolyGauss",
    "ExtFunc",
    "L2Certificate",
    "TailEnvelope",
    "scalar_mul",
    "gaussian_moment",
    "moment",
    "antiderivative_from_minus_inf",
    "l2_inner",
    "is_square_integrable",
    "tail_upper_bound",
]


def scalar_mul(a: Scalar, b: Scalar) -> Scalar:
    return Scalar.coerce(a) * Scalar.coerce(b)


# ---------------------------------------------------------------------------
# polynomials


class Poly:
    """Dense polynomial with :class:`Scalar` coefficients, index = power."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs=()):
        cs = [Scalar.coerce(c) for c in coeffs]
        while cs and cs[-1].is_zero():
            cs.pop()
        self.coeffs: tuple[Scalar, ...] = tuple(cs)

    @classmethod
    def monomial(cls, power: int, coeff=1) -> Poly:
        return cls([ZERO] * power + [Scalar.coerce(coeff)])

    @classmethod
    def constant(cls, c) -> Poly:
        return cls([c])

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def coeff(self, i: int) -> Scalar:
        return self.coeffs[i] if 0 <= i < len(self.coeffs) else ZERO

    @property
    def leading(self) -> Scalar:
        return self.coeffs[-1] if self.coeffs else ZERO

    def __add__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        n = max(len(self.coeffs), len(other.coeffs))
        return Poly([self.coeff(i) + other.coeff(i) for i in range(n)])

    __radd__ = __add__

    def __neg__(self) -> Poly:
        return Poly([-c for c in self.coeffs])

    def __sub__(self, other) -> Poly:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self + (-other)

    def __mul__(self, other) -> Poly:
        if isinstance(other, Poly):
            if self.is_zero() or other.is_zero():
                return Poly()
            out = [ZERO] * (len(self.coeffs) + len(other.coeffs) - 1)
            for i, a in enumerate(self.coeffs):
                if a.is_zero():
                    continue
                for j, b in enumerate(other.coeffs):
                    if not b.is_zero():
                        out[i + j] = out[i + j] + a * b
            return Poly(out)
        s = Scalar.coerce(other)
        return Poly([c * s for c in self.coeffs])

    __rmul__ = __mul__

    def shift(self, k: int) -> Poly:
        """Multiply by ``q**k``."""
        if self.is_zero():
            return self
        return Poly([ZERO] * k + list(self.coeffs))

    def derivative(self) -> Poly:
        return Poly([c * i for i, c in enumerate(self.coeffs)][1:])

    def reflect(self) -> Poly:
        """``P(-q)``."""
        return Poly([c if i % 2 == 0 else -c for i, c in enumerate(self.coeffs)])

    def translate(self, c: int | Fraction) -> Poly:
        """``P(q + c)`` for rational ``c``."""
        c = Fraction(c)
        out = [ZERO] * len(self.coeffs)
        for i, a in enumerate(self.coeffs):
            if a.is_zero():
                continue
            for j in range(i + 1):
                out[j] = out[j] + a * (comb(i, j) * c ** (i - j))
        return Poly(out)

    def parity(self) -> str | None:
        """``"even"``/``"odd"`` for single-parity polynomials, else None."""
        powers = {i % 2 for i, c in enumerate(self.coeffs) if not c.is_zero()}
        if not powers:
            return "even"
        if len(powers) == 2:
            return None
        return "even" if powers == {0} else "odd"

    def __call__(self, x):
        """Exact Horner evaluation at a rational or Scalar point."""
        acc = ZERO
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc

    def evaluate(self, x, dps: int = 30):
        cs = [c.to_mpf(dps) for c in self.coeffs]
        with mpmath.workdps(dps):
            return mpmath.polyval(cs[::-1], mpmath.mpf(x)) if cs else mpmath.mpf(0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poly):
            other = Poly.constant(other)
        return self.coeffs == other.coeffs

    def __hash__(self):
        return hash(self.coeffs)

    def to_string(self, var: str = "q") -> str:
        if not self.coeffs:
            return "0"
        parts = []
        for i, c in enumerate(self.coeffs):
            if c.is_zero():
                continue
            mono = "" if i == 0 else (var if i == 1 else f"{var}^{i}")
            cs = str(c)
            if " " in cs:
                cs = f"({cs})"
            if mono:
                parts.append(mono if cs == "1" else ("-" + mono if cs == "-1" else f"{cs}*{mono}"))
            else:
                parts.append(cs)
        return " + ".join(parts).replace("+ -", "- ")

    def __str__(self) -> str:
        return self.to_string()

    def __repr__(self) -> str:
        return f"Poly({self})"


# ---------------------------------------------------------------------------
# polynomial-Gaussian functions


def _width(alpha) -> Fraction:
    a = Fraction(alpha)
    if a <= 0:
        raise ValueError(f"Gaussian width must be positive, got {alpha}")
    return a


def _merge(a: dict, b: dict, sign: int = 1) -> dict:
    out = dict(a)
    for k, p in b.items():
        p = p if sign > 0 else -p
        out[k] = out[k] + p if k in out else p
    return {k: p for k, p in out.items() if not p.is_zero()}


class PolyGauss:
    """Immutable ``sum_a P_a(q) exp(-a q^2)`` keyed by width ``a``."""

    __slots__ = ("terms",)

    def __init__(self, terms: dict | None = None):
        clean = {}
        for a, p in (terms or {}).items():
            p = p if isinstance(p, Poly) else Poly(p)
            if not p.is_zero():
                a = _width(a)
                clean[a] = clean[a] + p if a in clean else p
        self.terms: dict[Fraction, Poly] = {a: p for a, p in sorted(clean.items()) if not p.is_zero()}

    @classmethod
    def gaussian(cls, alpha=Fraction(1, 2), poly: Poly | None = None) -> PolyGauss:
        return cls({_width(alpha): poly if poly is not None else Poly([1])})

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: PolyGauss) -> PolyGauss:
        return PolyGauss(_merge(self.terms, other.terms))

    def __sub__(self, other: PolyGauss) -> PolyGauss:
        return PolyGauss(_merge(self.terms, other.terms, -1))

    def __neg__(self) -> PolyGauss:
        return PolyGauss({a: -p for a, p in self.terms.items()})

    def __mul__(self, other) -> PolyGauss:
        if isinstance(other, PolyGauss):
            out: dict[Fraction, Poly] = {}
            for a, p in self.terms.items():
                for b, r in other.terms.items():
                    out[a + b] = out[a + b] + p * r if a + b in out else p * r
            return PolyGauss(out)
        # Poly or scalar factor
        return PolyGauss({a: p * other for a, p in self.terms.items()})

    __rmul__ = __mul__

    def shift(self, k: int) -> PolyGauss:
        return PolyGauss({a: p.shift(k) for a, p in self.terms.items()})

    def reflect(self) -> PolyGauss:
        return PolyGauss({a: p.reflect() for a, p in self.terms.items()})

    def derivative(self) -> PolyGauss:
        # (P e^{-a q^2})' = (P' - 2 a q P) e^{-a q^2}
        return PolyGauss({a: p.derivative() - p.shift(1) * (2 * a) for a, p in self.terms.items()})

    def parity(self) -> str | None:
        ps = {p.parity() for p in self.terms.values()}
        if not ps:
            return "even"
        return ps.pop() if len(ps) == 1 and None not in ps else None

    def evaluate(self, x, dps: int = 30):
        with mpmath.workdps(dps):
            x = mpmath.mpf(x)
            return +sum(
                (p.evaluate(x, dps) * mpmath.exp(-mpmath.mpf(a.numerator) / a.denominator * x * x)
                 for a, p in self.terms.items()),
                mpmath.mpf(0),
            )

    def __eq__(self, other) -> bool:
        return isinstance(other, PolyGauss) and self.terms == other.terms

    def __hash__(self):
        return hash(tuple(self.terms.items()))

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"({p})*exp(-{a}*q^2)" for a, p in self.terms.items())

    def __repr__(self) -> str:
        return f"PolyGauss({self})"


@dataclass(frozen=True)
class ExtFunc:
    """``G(q) + sum_a S_a(q) erf(sqrt(a) q) + U(q)`` with ``G`` a PolyGauss."""

    gauss: PolyGauss = field(default_factory=PolyGauss)
    erf_terms: dict = field(default_factory=dict)
    free: Poly = field(default_factory=Poly)

    def __post_init__(self):
        clean = {_width(a): p for a, p in self.erf_terms.items() if not p.is_zero()}
        object.__setattr__(self, "erf_terms", dict(sorted(clean.items())))

    @classmethod
    def from_polygauss(cls, f: PolyGauss) -> ExtFunc:
        return cls(gauss=f)

    def __add__(self, other: ExtFunc) -> ExtFunc:
        return ExtFunc(self.gauss + other.gauss, _merge(self.erf_terms, other.erf_terms), self.free + other.free)

    def __neg__(self) -> ExtFunc:
        return ExtFunc(-self.gauss, {a: -p for a, p in self.erf_terms.items()}, -self.free)

    def __sub__(self, other: ExtFunc) -> ExtFunc:
        return self + (-other)

    def __mul__(self, other) -> ExtFunc:
        """Multiply by a Poly or a scalar."""
        return ExtFunc(self.gauss * other, {a: p * other for a, p in self.erf_terms.items()}, self.free * other)

    __rmul__ = __mul__

    def shift(self, k: int) -> ExtFunc:
        return ExtFunc(self.gauss.shift(k), {a: p.shift(k) for a, p in self.erf_terms.items()}, self.free.shift(k))

    def is_zero(self) -> bool:
        return self.gauss.is_zero() and not self.erf_terms and self.free.is_zero()

    def erf_part(self) -> Poly:
        """Sum of all erf polynomials (they share the limit +-1 at +-inf)."""
        return sum(self.erf_terms.values(), Poly())

    def asymptotic_polynomials(self) -> tuple[Poly, Poly]:
        """Polynomials the function approaches at ``+inf`` and ``-inf``: ``U+S`` and ``U-S``."""
        s = self.erf_part()
        return self.free + s, self.free - s

    def derivative(self) -> ExtFunc:
        gauss = self.gauss.derivative()
        for a, s in self.erf_terms.items():
            # d/dq erf(sqrt(a) q) = 2 sqrt(a/pi) exp(-a q^2)
            gauss = gauss + PolyGauss({a: s * (2 * Scalar.sqrt(a) * Scalar.pi_power(-2))})
        return ExtFunc(gauss, {a: s.derivative() for a, s in self.erf_terms.items()}, self.free.derivative())

    def evaluate_parts(self, x, dps: int = 30):
        """``(gauss_part, erf_part, free_part)`` at ``x`` as mpf values."""
        with mpmath.workdps(dps):
            x = mpmath.mpf(x)
            g = self.gauss.evaluate(x, dps)
            e = sum(
                (p.evaluate(x, dps) * mpmath.erf(mpmath.sqrt(mpmath.mpf(a.numerator) / a.denominator) * x)
                 for a, p in self.erf_terms.items()),
                mpmath.mpf(0),
            )
            u = self.free.evaluate(x, dps)
            return +g, +e, +u

    def evaluate(self, x, dps: int = 30):
        with mpmath.workdps(dps):
            return +sum(self.evaluate_parts(x, dps))

    def __str__(self) -> str:
        parts = []
        if not self.gauss.is_zero():
            parts.append(str(self.gauss))
        parts += [f"({p})*erf(sqrt({a})*q)" for a, p in self.erf_terms.items()]
        if not self.free.is_zero():
            parts.append(f"({self.free})")
        return " + ".join(parts) or "0"


# ---------------------------------------------------------------------------
# integrals


def _double_factorial(n: int) -> int:
    return prod(range(n, 0, -2)) if n > 0 else 1


def gaussian_moment(power: int, alpha) -> Scalar:
    """``int q^power exp(-alpha q^2) dq`` over the real line."""
    alpha = _width(alpha)
    if power % 2:
        return ZERO
    s = power // 2
    # (2s-1)!! (2 alpha)^(-s) sqrt(pi/alpha)
    return Scalar.sqrt(1 / alpha) * Scalar.pi_power(2) * (Fraction(_double_factorial(2 * s - 1)) / (2 * alpha) ** s)


def moment(f: PolyGauss, ell: int) -> Scalar:
    """``int q^ell f(q) dq``, exact."""
    total = ZERO
    for a, p in f.terms.items():
        for i, c in enumerate(p.coeffs):
            if (i + ell) % 2 == 0 and not c.is_zero():
                total = total + c * gaussian_moment(i + ell, a)
    return total


def antiderivative_from_minus_inf(f: PolyGauss) -> ExtFunc:
    """``F(q) = int_{-inf}^q f(t) dt`` in closed form.

    Uses ``int t^a e^{-w t^2} = -t^{a-1} e^{-w t^2}/(2w) + (a-1)/(2w) int t^{a-2} e^{-w t^2}``
    down to ``a = 0`` (erf) or ``a = 1`` (pure Gaussian).
    """
    gauss: dict[Fraction, Poly] = {}
    erf: dict[Fraction, Poly] = {}
    free = ZERO
    for w, p in f.terms.items():
        work = list(p.coeffs)
        out = [ZERO] * max(len(work) - 1, 0)
        inv2w = 1 / (2 * w)
        for a in range(len(work) - 1, 0, -1):
            c = work[a]
            if c.is_zero():
                continue
            out[a - 1] = out[a - 1] - c * inv2w
            if a >= 2:
                work[a - 2] = work[a - 2] + c * ((a - 1) * inv2w)
        c0 = work[0] if work else ZERO
        if not c0.is_zero():
            # int_{-inf}^q e^{-w t^2} dt = (1/2) sqrt(pi/w) (1 + erf(sqrt(w) q))
            half = c0 * gaussian_moment(0, w) * Fraction(1, 2)
            erf[w] = Poly([half])
            free = free + half
        gauss[w] = Poly(out)
    return ExtFunc(PolyGauss(gauss), erf, Poly([free]))


def l2_inner(f: PolyGauss, g: PolyGauss) -> Scalar:
    """``int f g dq`` for real-valued ``f, g``."""
    return moment(f * g, 0)


@dataclass(frozen=True)
class L2Certificate:
    passed: bool
    offending: dict

    def __bool__(self) -> bool:
        return self.passed


def is_square_integrable(F: ExtFunc) -> L2Certificate:
    """Exact L^2 membership: every erf polynomial and the free polynomial must vanish.

    Since erf -> +-1 at +-inf, the function tends to ``U+S`` and ``U-S``;
    both vanish identically iff ``S == 0`` and ``U == 0``.
    """
    offending = {f"erf[{a}]": p for a, p in F.erf_terms.items()}
    if not F.free.is_zero():
        offending["free"] = F.free
    return L2Certificate(not offending, offending)


@dataclass(frozen=True)
class TailEnvelope:
    """Leading behaviour ``coefficient * |q|^power * exp(-alpha q^2)`` of a tail integral."""

    kind: str  # "exponential" | "zero"
    power: int | None = None
    alpha: Fraction | None = None
    coefficient: Scalar | None = None

    def satisfies_power_decay(self, k: int) -> bool:
        """True when the tail is ``O(|q|^-k)``; exponential tails beat every power."""
        return self.kind in ("exponential", "zero")

    def __str__(self) -> str:
        if self.kind == "zero":
            return "0"
        return f"{self.coefficient}*|q|^{self.power}*exp(-{self.alpha}*q^2)"


def tail_upper_bound(f: PolyGauss, ell: int) -> TailEnvelope:
    """Leading envelope of ``|int_{|q|}^inf t^ell f(+-t) dt|`` as ``|q| -> inf``.

    The slowest Gaussian dominates; for ``c t^d e^{-a t^2}`` the tail is
    ``~ |c|/(2a) |q|^(d-1) e^{-a q^2}``. Both signs share degree and |c|.
    """
    if f.is_zero():
        return TailEnvelope("zero")
    a = min(f.terms)
    p = f.terms[a]
    d = p.degree + ell
    c = p.leading
    if float(c) < 0:
        c = -c
    return TailEnvelope("exponential", d - 1, a, c * (1 / (2 * a)))
