"""Certificate suites: one function per acceptance criterion, grouped by topic.

Each criterion returns a :class:`VerificationReport`; :func:`run_suite`
times them, enforces the runtime budgets, and merges everything into one
deterministic report.
"""

from __future__ import annotations

import random
import time
from dataclasses import dataclass
from datetime import datetime, timezone
from fractions import Fraction
from typing import Callable

from .basicvec import (
    BasicVectorSpec,
    basic_vector,
    basic_vector_determinant,
    basic_vector_order1,
    row_duplication_determinant,
)
from .completeness import (
    annihilator_kernel_test,
    coefficient_ratio_n1_float,
    determinant_growth_exponent,
    integer_roots,
    k0_root_polynomial,
    l2_partial_sums,
    phi_k0_determinant,
    random_instance,
)
from .config import RunConfig
from .hermite import hermite_function
from .moments import (
    asymptotic_exponent,
    column_constant,
    f_poly,
    f_sum_poly,
    moment_A_even,
    moment_A_float,
    moment_A_odd,
)
from .operator import OperatorIndex, apply_operator, domain_membership, operators_of_order
from .polygauss import ExtFunc, Poly, PolyGauss, is_square_integrable, moment
from .report import CheckRecord, FitRecord, VerificationReport
from .scalar import Scalar
from .series import HOSeriesSpec, domain_nesting_check, ho_partial_sum_apply

__all__ = ["Criterion", "CRITERIA", "SUITES", "run_criterion", "run_suite", "sample_specs"]

# reference tables of f_j and f_j(k+1)+f_j(k), ascending powers of k
F_TABLE = {
    0: [1],
    1: [1, 4],
    2: [3, 8, 16],
    3: [15, 68, 48, 64],
    4: [105, 368, 800, 256, 256],
    5: [945, 4596, 4960, 7040, 1280, 1024],
}
F_SUM_TABLE = {
    0: [2],
    1: [6, 8],
    2: [30, 48, 32],
    3: [210, 424, 288, 128],
    4: [1890, 4128, 3904, 1536, 512],
    5: [20790, 50472, 48960, 29440, 7680, 2048],
}

WORKED_EXAMPLE = PolyGauss({1: Poly([1, 0, -2])})
GAUSSIAN = PolyGauss({1: Poly([1])})


def sample_specs(cfg: RunConfig) -> list[BasicVectorSpec]:
    """Seeded index sets: ``index_sets_per_case`` per (parity, N), N = 1..5."""
    rng = random.Random(cfg.seed)
    specs = []
    for parity in ("even", "odd"):
        for N in range(1, 6):
            seen: set[tuple[int, ...]] = set()
            while len(seen) < cfg.index_sets_per_case:
                seen.add(tuple(sorted(rng.sample(range(cfg.max_index + 1), N + 1))))
            specs += [BasicVectorSpec(parity, N, idx) for idx in sorted(seen)]
    return specs


# ---------------------------------------------------------------------------
# criteria


def c01_worked_example(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("T[-1,1] applied to (1-2q^2)exp(-q^2)")
    img = apply_operator(OperatorIndex(1, 1), WORKED_EXAMPLE)
    expected = ExtFunc(PolyGauss({1: Poly([1, 0, 4])}))
    r.add(CheckRecord("image == (1+4q^2)exp(-q^2)", img == expected, {"image": str(img)}))
    r.add(CheckRecord("erf part == 0", not img.erf_terms))
    r.add(CheckRecord("free part == 0", img.free.is_zero()))
    return r


def c02_gaussian_witness(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("T[-1,1] applied to exp(-q^2)")
    img = apply_operator(OperatorIndex(1, 1), GAUSSIAN)
    upper, lower = img.asymptotic_polynomials()
    sqrt_pi = Scalar.pi_power(2)
    r.add(CheckRecord("not square integrable", not is_square_integrable(img).passed, {"image": str(img)}))
    r.add(CheckRecord(
        "growth at +inf is sqrt(pi) q",
        upper.degree == 1 and upper.leading == sqrt_pi,
        {"polynomial_at_plus_inf": str(upper), "polynomial_at_minus_inf": str(lower)},
    ))
    return r


def c03_f_tables(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("f-polynomial tables")
    for j in range(6):
        got = f_poly(j).coefficients
        r.add(CheckRecord(f"f[{j}]", got == F_TABLE[j], {"poly": str(f_poly(j))}))
        got = f_sum_poly(j).coefficients
        r.add(CheckRecord(f"f_sum[{j}]", got == F_SUM_TABLE[j], {"poly": str(f_sum_poly(j))}))
    return r


def c04_recurrence_vs_integration(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("moment recurrences vs direct integration")
    bad = []
    count = 0
    for j in range(7):
        for k in range(13):
            if moment_A_even(j, k) != moment(hermite_function(2 * k), 2 * j):
                bad.append(f"even({j},{k})")
            if moment_A_odd(j, k) != moment(hermite_function(2 * k + 1), 2 * j + 1):
                bad.append(f"odd({j},{k})")
            count += 2
    r.add(CheckRecord("all identities exact", not bad, {"mismatches": ",".join(bad)}, {"identities": count}))
    return r


def _moment_certificate(spec: BasicVectorSpec, phi: PolyGauss) -> list[CheckRecord]:
    out = []
    residuals = {f"l={ell}": moment(phi, ell) for ell in range(spec.order + 1)}
    out.append(CheckRecord(
        f"{spec}/moments",
        all(v.is_zero() for v in residuals.values()),
        {k: str(v) for k, v in residuals.items()},
    ))
    same = 0 if spec.parity == "even" else 1
    dup = {f"l={ell}": row_duplication_determinant(spec, ell) for ell in range(same, spec.order + 1, 2)}
    out.append(CheckRecord(f"{spec}/row_duplication", all(v.is_zero() for v in dup.values()),
                           {k: str(v) for k, v in dup.items()}))
    cross = {f"l={ell}": moment(phi, ell) for ell in range(1 - same, 2 * spec.order + 2, 2)}
    out.append(CheckRecord(f"{spec}/parity", all(v.is_zero() for v in cross.values())))
    out.append(CheckRecord(f"{spec}/nonzero", not phi.is_zero()))
    out.append(CheckRecord(f"{spec}/determinant_route", basic_vector_determinant(spec) == phi))
    return out


def c05_moment_certificates(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("basic-vector moment certificates", seed=cfg.seed)
    for spec in sample_specs(cfg):
        for c in _moment_certificate(spec, basic_vector(spec)):
            r.add(c)
    return r


def c06_domain_certificates(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("basic-vector domain certificates", seed=cfg.seed)
    for spec in sample_specs(cfg):
        phi = basic_vector(spec)
        for idx in operators_of_order(spec.order):
            sub = domain_membership(idx, phi)
            r.add(CheckRecord(f"{spec}/{idx}", sub.passed, {}, {}, ";".join(sub.failures())))
    return r


def c07_moment_exponents(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("asymptotic exponents of the moment coefficients")
    for parity, sign in (("even", -1), ("odd", 1)):
        for j in range(5):
            slope = asymptotic_exponent(lambda k: moment_A_float(parity, j, k), cfg.k_window)
            r.add_fit(FitRecord(f"A_{parity}[{j}]", slope, j + sign * 0.25, 0.02, cfg.k_window))
    return r


def c08_order1_growth(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("order-1 coefficient growth laws")
    for parity, expected in (("even", -0.25), ("odd", 0.25)):
        slope = asymptotic_exponent(lambda m: coefficient_ratio_n1_float(parity, 0, m), cfg.k_window)
        r.add_fit(FitRecord(f"ratio_{parity}", slope, expected, 0.02, cfg.k_window))
    marks = [100, 200, 500, 1000, 2000, 5000, 10_000]
    sums = l2_partial_sums("even", 0, marks)
    monotone = all(sums[a] < sums[b] for a, b in zip(marks, marks[1:]))
    ratio = sums[10_000] / sums[100]
    r.add(CheckRecord("even l2 partial sums grow 10x from M=100 to M=10^4", monotone and ratio > 10,
                      {}, {"ratio": ratio, **{f"S({M})": v for M, v in sums.items()}}))
    return r


def c09_phi_tilde(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("Phi~ determinant diagnostics", seed=cfg.seed)
    rng = random.Random(cfg.seed)
    lo, hi = cfg.exact_k0_window
    for N in (2, 3, 4):
        for parity in ("even", "odd"):
            sign = -1 if parity == "even" else 1
            for t in range(cfg.instances_per_case):
                inst = random_instance(parity, N, rng, cfg.max_index)
                tag = f"{parity}/N={N}/{list(inst.indices)}/{[str(c) for c in inst.coefficients]}"
                P = k0_root_polynomial(inst)
                r.add(CheckRecord(f"{tag}/degree", P.degree == N - 1, {"polynomial": P.to_string("k0")},
                                  {"degree": P.degree}))
                roots = integer_roots(P, (lo, hi), exclude=inst.indices)
                r.add(CheckRecord(f"{tag}/integer_roots", len(roots) <= N - 1, {"roots": str(roots)}))
                factor_ok = all(
                    phi_k0_determinant(inst, k0) == column_constant(parity, k0) * P(k0)
                    for k0 in range(0, 21) if k0 not in inst.indices
                )
                r.add(CheckRecord(f"{tag}/determinant_equals_column_constant_times_polynomial", factor_ok))
                slope = determinant_growth_exponent(inst, cfg.k_window)
                r.add_fit(FitRecord(f"{tag}/growth", slope, (N - 1) + sign * 0.25, 0.05, cfg.k_window))
                verdict = annihilator_kernel_test(parity, inst.indices)
                r.add(CheckRecord(f"{tag}/annihilator_nonsingular", verdict.nonsingular,
                                  {"det": str(verdict.determinant)}))
    return r


def c10_domain_nesting(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("domain nesting of order-5 basic vectors", seed=cfg.seed)
    for spec in (s for s in sample_specs(cfg) if s.order == 5):
        phi = basic_vector(spec)
        for N_low in range(0, 5):
            sub = domain_nesting_check(5, N_low, phi)
            r.add(CheckRecord(f"{spec}/N_low={N_low}", sub.passed, {}, {}, ";".join(sub.failures())))
    return r


def c11_ho_partial_sums(cfg: RunConfig) -> VerificationReport:
    r = VerificationReport("harmonic-oscillator partial sums")
    for mu, omega in ((Fraction(1), Fraction(1)), (Fraction(3, 2), Fraction(2, 3))):
        v1 = basic_vector(BasicVectorSpec("even", 1, (0, 1)))
        s0 = HOSeriesSpec(0, mu, omega, cfg.series_cap)
        img0 = ho_partial_sum_apply(s0, v1)
        ref = apply_operator(OperatorIndex(1, 1), v1) * (-mu)
        tag = f"mu={mu},omega={omega}"
        r.add(CheckRecord(f"{tag}/K=0 equals -mu T[-1,1]", img0 == ref))
        r.add(CheckRecord(f"{tag}/K=0 image l2", is_square_integrable(img0).passed))
        for K in range(1, cfg.series_k + 1):
            order = 4 * K + 1
            for parity in ("even", "odd"):
                v = basic_vector(BasicVectorSpec(parity, order, tuple(range(order + 1))))
                img = ho_partial_sum_apply(HOSeriesSpec(K, mu, omega, cfg.series_cap), v)
                r.add(CheckRecord(f"{tag}/K={K} {parity} order-{order} image l2", is_square_integrable(img).passed))
    return r


@dataclass(frozen=True)
class Criterion:
    number: int
    title: str
    group: str
    run: Callable[[RunConfig], VerificationReport]
    budget_s: float | None


CRITERIA = [
    Criterion(1, "worked example image is (1+4q^2)exp(-q^2)", "operator", c01_worked_example, 1.0),
    Criterion(2, "exp(-q^2) image grows like sqrt(pi) q", "operator", c02_gaussian_witness, 1.0),
    Criterion(3, "f and f-sum tables", "moments", c03_f_tables, 1.0),
    Criterion(4, "recurrence == integration (182 identities)", "moments", c04_recurrence_vs_integration, 30.0),
    Criterion(5, "basic-vector moment certificates", "basis", c05_moment_certificates, 120.0),
    Criterion(6, "basic-vector domain certificates", "operator", c06_domain_certificates, 300.0),
    Criterion(7, "moment coefficient exponents j -+ 1/4", "moments", c07_moment_exponents, None),
    Criterion(8, "order-1 growth laws and l2 divergence", "completeness", c08_order1_growth, None),
    Criterion(9, "Phi~ determinant diagnostics", "completeness", c09_phi_tilde, None),
    Criterion(10, "domain nesting of order-5 vectors", "series", c10_domain_nesting, 120.0),
    Criterion(11, "harmonic-oscillator partial sums", "series", c11_ho_partial_sums, None),
]

SUITES = ("all", "moments", "basis", "operator", "completeness", "series")


def run_criterion(c: Criterion, cfg: RunConfig) -> tuple[VerificationReport, float]:
    t0 = time.perf_counter()
    rep = c.run(cfg)
    elapsed = time.perf_counter() - t0
    if c.budget_s is not None:
        rep.add(CheckRecord("runtime", elapsed < c.budget_s, {}, {"budget_s": c.budget_s}))
    return rep, elapsed


def run_suite(name: str, cfg: RunConfig, on_result: Callable | None = None) -> VerificationReport:
    if name not in SUITES:
        raise ValueError(f"unknown suite {name!r}; choose from {SUITES}")
    started = datetime.now(timezone.utc).isoformat()
    total = VerificationReport(f"suite {name}", seed=cfg.seed, info={"config": cfg.to_dict()})
    elapsed = {}
    for c in CRITERIA:
        if name != "all" and c.group != name:
            continue
        rep, dt = run_criterion(c, cfg)
        elapsed[c.number] = round(dt, 3)
        total.absorb(rep, f"criterion{c.number:02d}")
        total.info.setdefault("criteria", []).append(
            {"number": c.number, "title": c.title, "passed": rep.passed, "failures": rep.failures()}
        )
        if on_result:
            on_result(c, rep, dt)
    total.timestamp = {"started": started, "elapsed_s": elapsed}
    return total
