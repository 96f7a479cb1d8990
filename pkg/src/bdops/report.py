"""Serializable pass/fail records shared by every certificate."""

from __future__ import annotations

import json
from dataclasses import asdict, dataclass, field
from typing import Any

from . import __version__
from .scalar import Scalar


def _num(x) -> float | None:
    try:
        v = float(x)
    except (OverflowError, ValueError, TypeError):
        return None
    return v if v == v and abs(v) != float("inf") else None


@dataclass
class CheckRecord:
    name: str
    passed: bool
    exact: dict[str, str] = field(default_factory=dict)
    values: dict[str, float | None] = field(default_factory=dict)
    detail: str = ""

    @classmethod
    def exact_zero(cls, name: str, residual: Scalar, detail: str = "") -> CheckRecord:
        return cls(name, residual.is_zero(), {"residual": str(residual)}, {"residual": _num(residual)}, detail)

    @classmethod
    def within(cls, name: str, value: float, expected: float, tol: float, detail: str = "") -> CheckRecord:
        ok = abs(value - expected) <= tol
        return cls(name, ok, {}, {"value": _num(value), "expected": expected, "tolerance": tol}, detail)


@dataclass
class FitRecord:
    name: str
    slope: float
    expected: float
    tolerance: float
    window: tuple[int, int]

    @property
    def passed(self) -> bool:
        return abs(self.slope - self.expected) <= self.tolerance


@dataclass
class VerificationReport:
    subject: str
    checks: list[CheckRecord] = field(default_factory=list)
    fits: list[FitRecord] = field(default_factory=list)
    seed: int | None = None
    version: str = __version__
    info: dict[str, Any] = field(default_factory=dict)
    # the only field allowed to differ between identical runs
    timestamp: dict[str, Any] | None = None

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks) and all(f.passed for f in self.fits)

    def __bool__(self) -> bool:
        return self.passed

    def add(self, check: CheckRecord) -> CheckRecord:
        self.checks.append(check)
        return check

    def add_fit(self, fit: FitRecord) -> FitRecord:
        self.fits.append(fit)
        return fit

    def absorb(self, other: VerificationReport, prefix: str) -> None:
        for c in other.checks:
            self.checks.append(CheckRecord(f"{prefix}/{c.name}", c.passed, c.exact, c.values, c.detail))
        for f in other.fits:
            self.fits.append(FitRecord(f"{prefix}/{f.name}", f.slope, f.expected, f.tolerance, f.window))

    def failures(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed] + [f.name for f in self.fits if not f.passed]

    def to_dict(self) -> dict:
        return {
            "subject": self.subject,
            "passed": self.passed,
            "checks": [asdict(c) for c in self.checks],
            "fits": [dict(asdict(f), passed=f.passed, window=list(f.window)) for f in self.fits],
            "seed": self.seed,
            "version": self.version,
            "info": self.info,
            "timestamp": self.timestamp,
        }

    def to_json(self) -> str:
        return json.dumps(self.to_dict(), indent=2, sort_keys=True)
