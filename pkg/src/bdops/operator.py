"""Position-space action of T_{-m,n} on polynomial-Gaussian functions.

The kernel is taken as ``(q+q')^n (q-q')^(m_inv-1) sgn(q-q')`` with the
physical prefactor set to one (it is a nonzero complex constant and cannot
change domain membership; see :func:`kernel_constant`). ``m_inv`` is the
power of ``p^{-1}``; the shifted exponent used in the kernel expansion is
``m_inv - 1`` and the operator order is ``N = n + m_inv - 1``.

With ``F_l(q) = int_{-inf}^q t^l phi(t) dt`` and ``M_l`` the full moment,
``int sgn(q-t) t^l phi(t) dt = 2 F_l(q) - M_l``, so

    (T phi)(q) = sum_l d_l q^(N-l) (2 F_l(q) - M_l).
"""

from __future__ import annotations

from dataclasses import dataclass
from math import comb, factorial

from .polygauss import (
    ExtFunc,
    Poly,
    PolyGauss,
    antiderivative_from_minus_inf,
    is_square_integrable,
    moment,
    tail_upper_bound,
)
from .report import CheckRecord, VerificationReport

__all__ = [
    "OperatorIndex",
    "KernelExpansion",
    "kernel_coefficients",
    "kernel_constant",
    "apply_operator",
    "domain_membership",
    "operators_of_order",
]


@dataclass(frozen=True)
class OperatorIndex:
    m_inv: int
    n: int

    def __post_init__(self):
        if self.m_inv < 1:
            raise ValueError(f"m_inv must be >= 1, got {self.m_inv}")
        if self.n < 0:
            raise ValueError(f"n must be >= 0, got {self.n}")

    @property
    def order(self) -> int:
        return self.n + self.m_inv - 1

    def __str__(self) -> str:
        return f"T[-{self.m_inv},{self.n}]"


def operators_of_order(N: int) -> list[OperatorIndex]:
    """All ``(m_inv, n)`` with ``m_inv + n - 1 == N``, including ``n = 0``."""
    return [OperatorIndex(m, N + 1 - m) for m in range(1, N + 2)]


@dataclass(frozen=True)
class KernelExpansion:
    """``(q+q')^n (q-q')^(m_inv-1) = sum_l d_l q^(N-l) q'^l``."""

    index: OperatorIndex
    coefficients: tuple[int, ...]


def kernel_coefficients(idx: OperatorIndex) -> KernelExpansion:
    m, n = idx.m_inv - 1, idx.n
    d = tuple(
        sum((-1) ** k * comb(n, ell - k) * comb(m, k) for k in range(0, min(ell, m) + 1) if ell - k <= n)
        for ell in range(idx.order + 1)
    )
    return KernelExpansion(idx, d)


def kernel_constant(idx: OperatorIndex, hbar: float = 1.0) -> complex:
    """Display prefactor ``i (-1)^((m-1)/2) / (2^(n+1) hbar^m (m-1)!)`` with ``m = m_inv``."""
    m = idx.m_inv
    return 1j * (1j ** (m - 1)) / (2 ** (idx.n + 1) * hbar**m * factorial(m - 1))


def apply_operator(idx: OperatorIndex, phi: PolyGauss) -> ExtFunc:
    """Exact image of ``phi`` (constant prefactor dropped)."""
    out = ExtFunc()
    N = idx.order
    for ell, d in enumerate(kernel_coefficients(idx).coefficients):
        if d == 0:
            continue
        g = phi.shift(ell)
        F = antiderivative_from_minus_inf(g)
        inner = F * 2 - ExtFunc(free=Poly([moment(phi, ell)]))
        out = out + inner.shift(N - ell) * d
    return out


def domain_membership(idx: OperatorIndex, phi: PolyGauss, subject: str | None = None) -> VerificationReport:
    """Moment residuals, exact L2 certificate of the image, and tail classes.

    Passes iff every moment ``l = 0..N`` vanishes, the image has no erf or
    free part, and each tail ``int_{|q|}^inf t^l phi(+-t) dt`` is
    ``O(|q|^-(N-l+1))``.
    """
    N = idx.order
    report = VerificationReport(subject or f"{idx} domain membership")
    for ell in range(N + 1):
        report.add(CheckRecord.exact_zero(f"moment[{ell}]", moment(phi, ell)))
    image = apply_operator(idx, phi)
    cert = is_square_integrable(image)
    report.add(CheckRecord(
        "image_l2",
        cert.passed,
        {k: str(p) for k, p in cert.offending.items()},
        {},
        "erf and free parts identically zero" if cert else "non-decaying polynomial parts present",
    ))
    for ell in range(N + 1):
        env = tail_upper_bound(phi, ell)
        need = N - ell + 1
        report.add(CheckRecord(
            f"tail[{ell}]",
            env.satisfies_power_decay(need),
            {"envelope": str(env)},
            {},
            f"{env.kind}; required O(|q|^-{need})",
        ))
    return report
