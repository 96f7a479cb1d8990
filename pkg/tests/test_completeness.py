import random
from fractions import Fraction
from math import prod

import pytest
from hypothesis import given, settings, strategies as st

from bdops.completeness import (
    OrthogonalityInstance,
    annihilator_kernel_test,
    coefficient_ratio_n1,
    coefficient_ratio_n1_float,
    fixed_cofactors,
    integer_roots,
    k0_root_polynomial,
    l2_partial_sums,
    phi_k0_determinant,
    phi_k0_determinant_float,
    random_instance,
)
from bdops.linalg import det
from bdops.moments import column_constant, moment_A
from bdops.polygauss import Poly
from bdops.scalar import ONE, ZERO


def test_ratio_exact_and_float_agree():
    for parity in ("even", "odd"):
        for m in (0, 3, 17):
            assert coefficient_ratio_n1_float(parity, 2, m) == pytest.approx(float(coefficient_ratio_n1(parity, 2, m)), rel=1e-12)


def test_partial_sums_skip_the_free_slot():
    sums = l2_partial_sums("even", 0, [0, 1, 5])
    assert sums[0] == 0.0
    assert sums[1] == pytest.approx(float(coefficient_ratio_n1("even", 0, 1)) ** 2)
    assert sums[1] < sums[5]


def test_instance_validation():
    with pytest.raises(ValueError):
        OrthogonalityInstance("even", (1, 1), (1, 2))
    with pytest.raises(ValueError):
        OrthogonalityInstance("even", (1, 2), (1,))
    assert OrthogonalityInstance("odd", (1, 2), (0, 0)).is_degenerate()
    inst = OrthogonalityInstance("odd", (1, 2), (1, 1))
    with pytest.raises(ValueError):
        phi_k0_determinant(inst, 2)


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(["even", "odd"]), st.integers(2, 3), st.integers(0, 10**6))
def test_determinant_factorizes(parity, N, seed):
    inst = random_instance(parity, N, random.Random(seed), max_index=10)
    P = k0_root_polynomial(inst)
    assert P.degree <= N - 1
    for k0 in range(0, 15):
        if k0 not in inst.indices:
            assert phi_k0_determinant(inst, k0) == column_constant(parity, k0) * P(k0)


def test_float_determinant_matches_exact():
    inst = OrthogonalityInstance("even", (1, 3, 6), (2, -1, 5))
    for k0 in (0, 4, 20):
        assert phi_k0_determinant_float(inst, k0) == pytest.approx(float(phi_k0_determinant(inst, k0)), rel=1e-9)


def test_superposition_in_coefficients():
    idx = (2, 5)
    a = OrthogonalityInstance("odd", idx, (1, 0))
    b = OrthogonalityInstance("odd", idx, (0, 1))
    ab = OrthogonalityInstance("odd", idx, (3, -7))
    for k0 in (0, 1, 9):
        assert phi_k0_determinant(ab, k0) == phi_k0_determinant(a, k0) * 3 - phi_k0_determinant(b, k0) * 7


def test_cofactors_linear_in_coefficients():
    a = fixed_cofactors(OrthogonalityInstance("even", (0, 4), (1, 0)))
    b = fixed_cofactors(OrthogonalityInstance("even", (0, 4), (0, 1)))
    c = fixed_cofactors(OrthogonalityInstance("even", (0, 4), (Fraction(1, 2), 2)))
    assert all(z == x * Fraction(1, 2) + y * 2 for x, y, z in zip(a, b, c))


def test_integer_roots():
    p = Poly([-6, 1, 1])  # (k-2)(k+3)
    assert integer_roots(p, (0, 40)) == [2]
    assert integer_roots(p, (0, 40), exclude=(2,)) == []


@pytest.mark.parametrize("parity", ["even", "odd"])
@pytest.mark.parametrize("idx", [(1, 4), (0, 3, 7), (2, 5, 6, 11), (0, 1, 3, 8, 12)])
def test_annihilator_determinant_identity(parity, idx):
    # the cofactor map is the adjugate of the fixed moment block B, so
    # det L = (-1)^(N(N-1)/2) det(B)^(N-1), and det B is a scaled Vandermonde
    N = len(idx)
    B = [[moment_A(parity, j, k) for k in idx] for j in range(N)]
    dB = det(B, zero=ZERO)
    lead = 4 ** (N * (N - 1) // 2) * (2**N if parity == "odd" else 1)
    vander = prod(b - a for i, a in enumerate(idx) for b in idx[i + 1:])
    assert dB == prod((column_constant(parity, k) for k in idx), start=ONE) * (lead * vander)
    verdict = annihilator_kernel_test(parity, idx)
    assert verdict.determinant == dB ** (N - 1) * (-1) ** (N * (N - 1) // 2)
    assert verdict.nonsingular


def test_random_instance_is_seeded():
    a = random_instance("even", 3, random.Random(5))
    b = random_instance("even", 3, random.Random(5))
    assert a == b
    assert not any(c.is_zero() for c in a.coefficients)
