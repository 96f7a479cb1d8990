"""Partial sums of the harmonic-oscillator arrival-time series and domain nesting."""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .operator import OperatorIndex, apply_operator, domain_membership, operators_of_order
from .polygauss import ExtFunc, PolyGauss, is_square_integrable
from .report import CheckRecord, VerificationReport

__all__ = [
    "DEFAULT_SERIES_CAP",
    "DomainError",
    "HOSeriesSpec",
    "ho_partial_sum_apply",
    "domain_nesting_check",
    "partial_sum_report",
]

DEFAULT_SERIES_CAP = 3


class DomainError(ValueError):
    """Input is not in the domain of the operator being applied."""

    def __init__(self, message: str, report: VerificationReport):
        super().__init__(message)
        self.report = report


@dataclass(frozen=True)
class HOSeriesSpec:
    """``-sum_{k=0}^K (-1)^k mu^(2k+1) omega^(2k)/(2k+1) T_{-(2k+1),2k+1}``."""

    K: int
    mu: Fraction = Fraction(1)
    omega: Fraction = Fraction(1)
    cap: int = DEFAULT_SERIES_CAP

    def __post_init__(self):
        object.__setattr__(self, "mu", Fraction(self.mu))
        object.__setattr__(self, "omega", Fraction(self.omega))
        if self.K < 0:
            raise ValueError("K must be nonnegative")
        if self.K > self.cap:
            raise ValueError(f"K={self.K} exceeds the series cap {self.cap}")
        if self.mu <= 0:
            raise ValueError("mu must be positive")
        if self.omega < 0:
            raise ValueError("omega must be nonnegative")

    def coefficient(self, k: int) -> Fraction:
        return Fraction((-1) ** (k + 1)) * self.mu ** (2 * k + 1) * self.omega ** (2 * k) / (2 * k + 1)

    @staticmethod
    def term_index(k: int) -> OperatorIndex:
        return OperatorIndex(2 * k + 1, 2 * k + 1)

    @property
    def order(self) -> int:
        return 4 * self.K + 1


def ho_partial_sum_apply(spec: HOSeriesSpec, phi: PolyGauss) -> ExtFunc:
    """Exact image of ``phi`` under the K-th partial sum.

    Raises :class:`DomainError` unless ``phi`` is in the domain of the
    highest-order term, which contains the domains of all lower terms.
    """
    top = domain_membership(spec.term_index(spec.K), phi)
    if not top.passed:
        raise DomainError(f"input fails {spec.term_index(spec.K)}: {top.failures()}", top)
    out = ExtFunc()
    for k in range(spec.K + 1):
        c = spec.coefficient(k)
        if c:
            out = out + apply_operator(spec.term_index(k), phi) * c
    return out


def domain_nesting_check(N_high: int, N_low: int, phi: PolyGauss) -> VerificationReport:
    """Check that ``phi`` lies in the domain of every operator of order ``N_low``.

    ``N_low = 0`` covers ``T_{-1,0}``, whose only condition is a zero mean.
    """
    if N_low > N_high:
        raise ValueError(f"N_low={N_low} exceeds N_high={N_high}")
    if N_low < 0:
        raise ValueError("N_low must be nonnegative")
    report = VerificationReport(f"domain nesting {N_high} -> {N_low}")
    for idx in operators_of_order(N_low):
        report.absorb(domain_membership(idx, phi), str(idx))
    if N_low >= 1:
        report.absorb(domain_membership(OperatorIndex(1, 0), phi), str(OperatorIndex(1, 0)))
    report.info["operators"] = [str(i) for i in operators_of_order(N_low)]
    return report


def partial_sum_report(spec: HOSeriesSpec, phi: PolyGauss) -> VerificationReport:
    report = VerificationReport(f"HO partial sum K={spec.K}")
    for k in range(spec.K + 1):
        img = apply_operator(spec.term_index(k), phi)
        report.add(CheckRecord(f"term[{k}]_l2", is_square_integrable(img).passed))
    total = ho_partial_sum_apply(spec, phi)
    report.add(CheckRecord("sum_l2", is_square_integrable(total).passed))
    return report
