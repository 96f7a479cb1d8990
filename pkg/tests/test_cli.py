import csv
import json

import pytest

from bdops.cli import main


@pytest.fixture
def out(tmp_path, monkeypatch):
    monkeypatch.setenv("BDOPS_OUTPUT_DIR", str(tmp_path))
    return tmp_path


def _load(path):
    return json.loads(path.read_text())


def test_basis_even(out):
    assert main(["basis", "--parity", "even", "--order", "2", "--indices", "0,1,2"]) == 0
    rep = _load(out / "basis_even_2.json")
    assert rep["passed"]
    coeffs = next(c for c in rep["checks"] if c["name"] == "nonzero_hermite_coefficients")
    assert coeffs["values"]["count"] == 3
    rows = list(csv.reader((out / "basis_even_2.csv").open()))
    assert rows[0] == ["q", "value"] and len(rows) == 122


def test_basis_duplicate(out, capsys):
    assert main(["basis", "--parity", "even", "--order", "1", "--indices", "0,0"]) != 0
    assert "duplicate indices" in capsys.readouterr().err


def test_basis_odd_moments_exact_zero(out):
    assert main(["basis", "--parity", "odd", "--order", "1", "--indices", "0,1"]) == 0
    checks = {c["name"]: c for c in _load(out / "basis_odd_1.json")["checks"]}
    assert checks["moment[0]"]["exact"]["residual"] == "0"
    assert checks["moment[1]"]["exact"]["residual"] == "0"


def test_apply_worked_example(out):
    assert main(["apply", "--m", "1", "--n", "1", "--func", "paper-example"]) == 0
    rep = _load(out / "apply_m1_n1.json")
    assert any(c["name"].startswith("exact_match") and c["passed"] for c in rep["checks"])
    header = next(csv.reader((out / "apply_m1_n1.csv").open()))
    assert header == ["q", "value", "gauss_part", "erf_part", "free_part"]


def test_apply_gaussian_fails(out):
    assert main(["apply", "--m", "1", "--n", "1", "--func", "gaussian"]) == 1
    rep = _load(out / "apply_m1_n1.json")
    assert rep["info"]["growth_leading_coefficient"] == "pi^(1/2)"
    assert rep["info"]["growth_degree"] == 1


def test_apply_basis(out):
    assert main(["apply", "--m", "2", "--n", "1", "--basis", "even:2:0,1,2"]) == 0


def test_apply_hermite_and_constants(out):
    main(["apply", "--m", "1", "--n", "0", "--func", "hermite:1", "--with-constants"])
    assert "constant" in _load(out / "apply_m1_n0.json")["info"]


def test_unknown_function(out, capsys):
    assert main(["apply", "--m", "1", "--n", "1", "--func", "lorentzian"]) == 2
    assert "unknown function" in capsys.readouterr().err


def test_suite_deterministic(out, tmp_path_factory):
    other = tmp_path_factory.mktemp("again")
    assert main(["suite", "moments", "--seed", "42"]) == 0
    assert main(["suite", "moments", "--seed", "42", "--output", str(other)]) == 0
    a, b = _load(out / "suite_moments.json"), _load(other / "suite_moments.json")
    a.pop("timestamp"), b.pop("timestamp")
    assert a == b


def test_suite_series_max_k(out):
    assert main(["suite", "series", "--max-k", "1"]) == 0
    assert main(["suite", "series", "--max-k", "9"]) == 2
