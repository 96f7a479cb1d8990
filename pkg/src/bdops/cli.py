"""Command-line front end: ``bdops basis``, ``bdops apply`` and ``bdops suite``.

Every command writes one JSON report and, where a function is produced,
a CSV of samples on the ``--grid``. The exit code is 0 iff the report passes.
"""

from __future__ import annotations

import argparse
import csv
import sys
from pathlib import Path

import numpy as np

from . import __version__
from .basicvec import BasicVectorSpec, basic_vector, verify_moment_conditions
from .config import RunConfig
from .hermite import hermite_function
from .operator import OperatorIndex, apply_operator, domain_membership, kernel_constant
from .polygauss import ExtFunc, Poly, PolyGauss, is_square_integrable, l2_inner
from .report import CheckRecord, VerificationReport
from .suites import GAUSSIAN, WORKED_EXAMPLE, SUITES, run_suite

WORKED_EXAMPLE_IMAGE = PolyGauss({1: Poly([1, 0, 4])})


class CLIError(Exception):
    pass


def resolve_function(name: str) -> tuple[PolyGauss, str]:
    """Built-in names: ``gaussian``, ``paper-example``, ``hermite:n``, ``basis:parity:N:indices``."""
    if name == "gaussian":
        return GAUSSIAN, name
    if name == "paper-example":
        return WORKED_EXAMPLE, name
    if name.startswith("hermite:"):
        try:
            n = int(name.split(":", 1)[1])
        except ValueError:
            raise CLIError(f"bad hermite index in {name!r}") from None
        if n < 0:
            raise CLIError("hermite index must be nonnegative")
        return hermite_function(n), name
    if name.startswith("basis:"):
        spec = _parse_spec(name.split(":", 1)[1])
        return basic_vector(spec), str(spec)
    raise CLIError(f"unknown function {name!r}; try gaussian, paper-example, hermite:n or basis:parity:N:indices")


def _parse_spec(text: str) -> BasicVectorSpec:
    try:
        return BasicVectorSpec.parse(text)
    except ValueError as exc:
        msg = str(exc)
        if "duplicate" in msg:
            raise CLIError(f"duplicate indices: {text}") from None
        raise CLIError(msg) from None


def _grid(cfg: RunConfig) -> np.ndarray:
    lo, hi, num = cfg.grid
    return np.linspace(lo, hi, num)


def write_samples(path: Path, f, cfg: RunConfig) -> None:
    with path.open("w", newline="") as fh:
        w = csv.writer(fh)
        if isinstance(f, ExtFunc):
            w.writerow(["q", "value", "gauss_part", "erf_part", "free_part"])
            for q in _grid(cfg):
                g, e, u = f.evaluate_parts(q, cfg.digits)
                w.writerow([repr(float(q)), repr(float(g + e + u)), repr(float(g)), repr(float(e)), repr(float(u))])
        else:
            w.writerow(["q", "value"])
            for q in _grid(cfg):
                w.writerow([repr(float(q)), repr(float(f.evaluate(q, cfg.digits)))])


def _emit(report: VerificationReport, cfg: RunConfig, stem: str, samples=None) -> Path:
    out = Path(cfg.output_dir)
    out.mkdir(parents=True, exist_ok=True)
    path = out / f"{stem}.json"
    path.write_text(report.to_json() + "\n")
    if samples is not None:
        write_samples(out / f"{stem}.csv", samples, cfg)
    return path


def _config(args) -> RunConfig:
    overrides = {
        "seed": args.seed,
        "output_dir": args.output,
        "include_constants": True if args.with_constants else None,
        "grid": tuple(args.grid) if args.grid else None,
        "series_k": getattr(args, "max_k", None),
    }
    if args.config:
        return RunConfig.from_file(args.config, **overrides)
    return RunConfig(**{k: v for k, v in overrides.items() if v is not None})


def _summary(report: VerificationReport, path: Path) -> None:
    status = "PASS" if report.passed else "FAIL"
    print(f"{status} {report.subject} -> {path}")
    for name in report.failures()[:20]:
        print(f"  failed: {name}")


def cmd_basis(args, cfg: RunConfig) -> VerificationReport:
    spec = _parse_spec(f"{args.parity}:{args.order}:{args.indices}")
    phi = basic_vector(spec)
    report = verify_moment_conditions(phi, spec.order, f"basic vector {spec}")
    coeffs = {}
    for h in spec.hermite_indices:
        coeffs[str(h)] = str(l2_inner(phi, hermite_function(h)))
    nonzero = sum(1 for c in coeffs.values() if c != "0")
    report.add(CheckRecord("nonzero_hermite_coefficients", nonzero == len(coeffs), coeffs, {"count": nonzero}))
    report.info.update({"spec": str(spec), "function": str(phi), "config": cfg.to_dict()})
    path = _emit(report, cfg, f"basis_{spec.parity}_{spec.order}", phi)
    _summary(report, path)
    return report


def cmd_apply(args, cfg: RunConfig) -> VerificationReport:
    idx = OperatorIndex(args.m, args.n)
    if args.basis:
        phi, label = basic_vector(_parse_spec(args.basis)), args.basis
    else:
        phi, label = resolve_function(args.func)
    report = domain_membership(idx, phi, f"{idx} applied to {label}")
    image = apply_operator(idx, phi)
    plus, minus = image.asymptotic_polynomials()
    report.info.update({
        "input": str(phi),
        "image": str(image),
        "asymptotic_plus_inf": str(plus),
        "asymptotic_minus_inf": str(minus),
        "config": cfg.to_dict(),
    })
    if not is_square_integrable(image).passed:
        report.info["growth_degree"] = plus.degree
        report.info["growth_leading_coefficient"] = str(plus.leading)
    if label == "paper-example" and idx == OperatorIndex(1, 1):
        report.add(CheckRecord("exact_match (1+4q^2)exp(-q^2)", image == ExtFunc.from_polygauss(WORKED_EXAMPLE_IMAGE)))
    if cfg.include_constants:
        c = kernel_constant(idx)
        report.info["constant"] = {"real": c.real, "imag": c.imag}
    path = _emit(report, cfg, f"apply_m{idx.m_inv}_n{idx.n}", image)
    _summary(report, path)
    if "growth_leading_coefficient" in report.info:
        print(f"  image grows like ({report.info['growth_leading_coefficient']}) q^{report.info['growth_degree']}")
    return report


def cmd_suite(args, cfg: RunConfig) -> VerificationReport:
    def progress(c, rep, dt):
        print(f"[{'PASS' if rep.passed else 'FAIL'}] criterion {c.number:2d}: {c.title} ({dt:.2f}s)")

    report = run_suite(args.name, cfg, progress)
    path = _emit(report, cfg, f"suite_{args.name}")
    _summary(report, path)
    return report


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--seed", type=int, default=None)
    common.add_argument("--config", help="JSON file with RunConfig keys")
    common.add_argument("--output", help="output directory (default $BDOPS_OUTPUT_DIR or .)")
    common.add_argument("--with-constants", action="store_true", help="report the operator's complex prefactor")
    common.add_argument("--grid", nargs=3, type=float, metavar=("LO", "HI", "NUM"))

    p = argparse.ArgumentParser(prog="bdops", description=__doc__.splitlines()[0])
    p.add_argument("--version", action="version", version=f"%(prog)s {__version__}")
    sub = p.add_subparsers(dest="command", required=True)

    b = sub.add_parser("basis", parents=[common], help="build a basic vector and certify its moments")
    b.add_argument("--parity", choices=("even", "odd"), required=True)
    b.add_argument("--order", type=int, required=True)
    b.add_argument("--indices", required=True, help="comma separated, e.g. 0,1,2")
    b.set_defaults(handler=cmd_basis)

    a = sub.add_parser("apply", parents=[common], help="apply T[-m,n] and certify the image")
    a.add_argument("--m", type=int, required=True, help="power of the inverse momentum")
    a.add_argument("--n", type=int, required=True)
    src = a.add_mutually_exclusive_group(required=True)
    src.add_argument("--func", help="gaussian | paper-example | hermite:n | basis:parity:N:indices")
    src.add_argument("--basis", help="parity:N:indices")
    a.set_defaults(handler=cmd_apply)

    s = sub.add_parser("suite", parents=[common], help="run acceptance suites")
    s.add_argument("name", choices=SUITES)
    s.add_argument("--max-k", type=int, default=None, help="largest partial-sum index for the series suite")
    s.set_defaults(handler=cmd_suite)
    return p


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    try:
        cfg = _config(args)
        report = args.handler(args, cfg)
    except (CLIError, ValueError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    return 0 if report.passed else 1


if __name__ == "__main__":
    sys.exit(main())
