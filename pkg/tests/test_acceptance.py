"""One test per acceptance criterion; each prints a PASS/FAIL line with its tolerance."""

import pytest

from bdops.config import RunConfig
from bdops.suites import CRITERIA, run_criterion

from conftest import RESULT_LINES

TOLERANCE = {
    1: "exact", 2: "exact", 3: "exact", 4: "exact", 5: "exact", 6: "exact",
    7: "slope +-0.02", 8: "slope +-0.02; ratio > 10", 9: "exact; slope +-0.05",
    10: "exact", 11: "exact",
}


@pytest.fixture(scope="module")
def cfg():
    return RunConfig(seed=42)


@pytest.mark.parametrize("criterion", CRITERIA, ids=lambda c: f"criterion{c.number:02d}")
def test_criterion(criterion, cfg):
    report, elapsed = run_criterion(criterion, cfg)
    status = "PASS" if report.passed else "FAIL"
    line = f"{status} criterion {criterion.number:2d} [{TOLERANCE[criterion.number]}] {criterion.title} ({elapsed:.2f}s)"
    RESULT_LINES.append(line)
    print("\n" + line)
    for f in report.fits:
        if not f.passed:
            print(f"    fit {f.name}: slope {f.slope:.4f}, expected {f.expected} +- {f.tolerance}")
    for c in report.checks:
        if not c.passed:
            print(f"    check {c.name} {c.exact or ''} {c.detail}")
    assert report.passed, report.failures()
