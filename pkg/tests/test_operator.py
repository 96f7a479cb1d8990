from fractions import Fraction

import mpmath
import pytest
import sympy
from hypothesis import given, settings, strategies as st

from bdops.basicvec import BasicVectorSpec, basic_vector
from bdops.hermite import hermite_function
from bdops.operator import (
    OperatorIndex,
    apply_operator,
    domain_membership,
    kernel_coefficients,
    kernel_constant,
    operators_of_order,
)
from bdops.polygauss import ExtFunc, Poly, PolyGauss, is_square_integrable

indices = st.builds(OperatorIndex, st.integers(1, 5), st.integers(0, 5))


@settings(max_examples=40)
@given(indices)
def test_kernel_expansion_matches_direct_product(idx):
    q, t = sympy.symbols("q t")
    expr = sympy.Poly(sympy.expand((q + t) ** idx.n * (q - t) ** (idx.m_inv - 1)), q, t)
    d = kernel_coefficients(idx).coefficients
    for ell, c in enumerate(d):
        assert expr.coeff_monomial(q ** (idx.order - ell) * t**ell) == c


def test_order_and_enumeration():
    assert OperatorIndex(2, 1).order == 2
    assert [str(i) for i in operators_of_order(1)] == ["T[-1,1]", "T[-2,0]"]
    with pytest.raises(ValueError):
        OperatorIndex(0, 1)


def test_worked_example():
    phi = PolyGauss({1: Poly([1, 0, -2])})
    assert apply_operator(OperatorIndex(1, 1), phi) == ExtFunc.from_polygauss(PolyGauss({1: Poly([1, 0, 4])}))


def test_gaussian_is_not_in_domain():
    rep = domain_membership(OperatorIndex(1, 1), PolyGauss({1: Poly([1])}))
    assert not rep.passed
    assert "image_l2" in rep.failures()


def _direct(idx, phi, x):
    # (T phi)(x) = int (x+t)^n (x-t)^(m-1) sgn(x-t) phi(t) dt
    def k(t):
        return (x + t) ** idx.n * (x - t) ** (idx.m_inv - 1) * phi.evaluate(t)

    with mpmath.workdps(30):
        return mpmath.quad(k, [-mpmath.inf, x]) - mpmath.quad(k, [x, mpmath.inf])


@pytest.mark.parametrize("idx", [OperatorIndex(1, 1), OperatorIndex(2, 1), OperatorIndex(3, 0), OperatorIndex(1, 3)])
@pytest.mark.parametrize("x", [-3, -1, 0, 1, 3])
def test_image_matches_quadrature(idx, x):
    phi = hermite_function(2) + hermite_function(5) * Fraction(1, 3)
    exact = apply_operator(idx, phi).evaluate(x, 30)
    direct = _direct(idx, phi, mpmath.mpf(x))
    assert float(abs(exact - direct)) <= 1e-8 * max(1.0, float(abs(direct)))


@settings(max_examples=15, deadline=None)
@given(indices, st.integers(-4, 4), st.integers(-4, 4))
def test_linearity(idx, a, b):
    f, g = hermite_function(1), hermite_function(4)
    assert apply_operator(idx, f * a + g * b) == apply_operator(idx, f) * a + apply_operator(idx, g) * b


@pytest.mark.parametrize("spec", ["even:2:0,1,2", "odd:2:1,4,6", "even:3:0,2,5,9"])
def test_basic_vectors_in_domain_of_their_order(spec):
    s = BasicVectorSpec.parse(spec)
    phi = basic_vector(s)
    for idx in operators_of_order(s.order):
        rep = domain_membership(idx, phi)
        assert rep.passed, rep.failures()
        assert is_square_integrable(apply_operator(idx, phi)).passed


def test_image_never_has_free_part():
    for idx in operators_of_order(3):
        assert apply_operator(idx, hermite_function(3)).free.is_zero()


def test_kernel_constant_is_nonzero():
    for idx in operators_of_order(3):
        assert abs(kernel_constant(idx)) > 0
    assert kernel_constant(OperatorIndex(1, 0)) == pytest.approx(0.5j)
