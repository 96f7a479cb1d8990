from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings, strategies as st
from scipy.integrate import quad

from bdops.polygauss import (
    ExtFunc,
    Poly,
    PolyGauss,
    antiderivative_from_minus_inf,
    gaussian_moment,
    is_square_integrable,
    moment,
    tail_upper_bound,
)
from bdops.scalar import Scalar

alphas = st.sampled_from([Fraction(1, 2), Fraction(1), Fraction(3, 2), Fraction(2)])


@st.composite
def polygauss(draw, max_deg=5):
    terms = {}
    for _ in range(draw(st.integers(1, 2))):
        a = draw(alphas)
        coeffs = draw(st.lists(st.integers(-5, 5), min_size=1, max_size=max_deg + 1))
        terms[a] = terms.get(a, Poly()) + Poly(coeffs)
    return PolyGauss(terms)


def test_gaussian_moment_values():
    assert gaussian_moment(0, 1) == Scalar.pi_power(2)
    assert gaussian_moment(2, 1) == Scalar.pi_power(2) * Fraction(1, 2)
    assert gaussian_moment(1, 1).is_zero()


@settings(max_examples=40, deadline=None)
@given(polygauss())
def test_antiderivative_differentiates_back(f):
    F = antiderivative_from_minus_inf(f)
    assert F.derivative() == ExtFunc.from_polygauss(f)


@settings(max_examples=40, deadline=None)
@given(polygauss())
def test_antiderivative_limits(f):
    F = antiderivative_from_minus_inf(f)
    plus, minus = F.asymptotic_polynomials()
    assert minus.is_zero()
    assert plus == Poly([moment(f, 0)])


@settings(max_examples=25, deadline=None)
@given(polygauss(), st.integers(0, 4))
def test_moment_vs_quadrature(f, ell):
    exact = float(moment(f, ell))
    num, _ = quad(lambda t: t**ell * float(f.evaluate(t)), -float("inf"), float("inf"), epsabs=1e-13, epsrel=1e-12)
    assert num == pytest.approx(exact, rel=1e-10, abs=1e-10)


@settings(max_examples=25, deadline=None)
@given(polygauss())
def test_parity_of_moments(f):
    if f.parity() == "even":
        assert moment(f, 1).is_zero()
    if f.parity() == "odd":
        assert moment(f, 0).is_zero()


def test_l2_certificate_matches_numeric_stabilization():
    # zero-mean input: antiderivative is square integrable
    good = antiderivative_from_minus_inf(PolyGauss({1: Poly([0, 1])}))
    bad = antiderivative_from_minus_inf(PolyGauss({1: Poly([1])}))

    def mass(F, R):
        return mpmath.quad(lambda x: F.evaluate(x) ** 2, [-R, 0, R])

    assert is_square_integrable(good).passed
    assert abs(mass(good, 20) - mass(good, 10)) < 1e-20
    assert not is_square_integrable(bad).passed
    assert mass(bad, 20) - mass(bad, 10) > 1


def test_reflect_and_shift():
    f = PolyGauss({1: Poly([1, 2, 3])})
    assert f.reflect() == PolyGauss({1: Poly([1, -2, 3])})
    assert f.shift(2) == PolyGauss({1: Poly([0, 0, 1, 2, 3])})


@pytest.mark.parametrize("ell", [0, 1, 3])
def test_tail_envelope_bounds_numeric_tail(ell):
    # the envelope is the leading term, so tail/envelope climbs toward 1 like 1 - O(1/q)
    f = PolyGauss({Fraction(1, 2): Poly([1, 0, -3, 1])})
    env = tail_upper_bound(f, ell)
    ratios = []
    for q in (4, 6, 8):
        with mpmath.workdps(30):
            tail = abs(mpmath.quad(lambda t: t**ell * f.evaluate(t), [q, mpmath.inf]))
            bound = float(env.coefficient) * q**env.power * mpmath.exp(-float(env.alpha) * q * q)
        ratios.append(float(tail / bound))
    assert all(0 < r <= 1 for r in ratios)
    assert ratios[0] < ratios[1] < ratios[2]
