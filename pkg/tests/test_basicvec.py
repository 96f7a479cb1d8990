import random
from fractions import Fraction

import pytest
from hypothesis import given, settings, strategies as st

from bdops.basicvec import (
    BasicVectorSpec,
    DegenerateSpecError,
    basic_vector,
    basic_vector_determinant,
    basic_vector_order1,
    normalized_coefficients,
    rational_reduction,
    row_duplication_determinant,
    verify_moment_conditions,
)
from bdops.polygauss import Poly, PolyGauss, moment


@st.composite
def specs(draw, max_order=4):
    parity = draw(st.sampled_from(["even", "odd"]))
    N = draw(st.integers(1, max_order))
    idx = draw(st.lists(st.integers(0, 12), min_size=N + 1, max_size=N + 1, unique=True))
    return BasicVectorSpec(parity, N, tuple(idx))


def test_order1_even_example():
    assert basic_vector_order1("even", 0, 1) == PolyGauss({Fraction(1, 2): Poly([2, 0, -2])})


def test_parse_and_str_roundtrip():
    s = BasicVectorSpec.parse("odd:2:5,1,3")
    assert s.indices == (1, 3, 5)
    assert str(s) == "odd:2:1,3,5"
    assert s.hermite_indices == (3, 7, 11)


@pytest.mark.parametrize("bad", ["even:1:0,0", "odd:2:1,1,2"])
def test_duplicates_rejected(bad):
    with pytest.raises(DegenerateSpecError):
        BasicVectorSpec.parse(bad)


@pytest.mark.parametrize("bad", ["even:2:0,1", "sideways:1:0,1", "even:0:0"])
def test_malformed_rejected(bad):
    with pytest.raises(ValueError):
        BasicVectorSpec.parse(bad)


@settings(max_examples=25, deadline=None)
@given(specs())
def test_moment_conditions(spec):
    phi = basic_vector(spec)
    assert verify_moment_conditions(phi, spec.order).passed
    assert phi.parity() == spec.parity
    # the next moment of matching parity is generically nonzero, so the order is sharp
    assert not phi.is_zero()


@settings(max_examples=15, deadline=None)
@given(specs(max_order=3))
def test_reduction_equals_determinant_route(spec):
    assert basic_vector(spec) == basic_vector_determinant(spec)


@settings(max_examples=15, deadline=None)
@given(specs(max_order=3))
def test_row_duplication_vanishes(spec):
    for ell in range(spec.order + 1):
        assert row_duplication_determinant(spec, ell).is_zero()


def test_minors_all_nonzero():
    rng = random.Random(0)
    for _ in range(20):
        N = rng.randint(1, 4)
        spec = BasicVectorSpec(rng.choice(["even", "odd"]), N, tuple(rng.sample(range(13), N + 1)))
        assert all(rational_reduction(spec).minors)


def test_normalized_has_unit_norm():
    c = normalized_coefficients(BasicVectorSpec("even", 2, (0, 1, 2)))
    assert sum(x * x for x in c) == pytest.approx(1.0)


def test_linearity_of_moment():
    a = basic_vector(BasicVectorSpec("odd", 1, (0, 1)))
    b = basic_vector(BasicVectorSpec("odd", 1, (2, 4)))
    for ell in range(4):
        assert moment(a * 3 - b * 2, ell) == moment(a, ell) * 3 - moment(b, ell) * 2
