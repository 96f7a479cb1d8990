import math
from fractions import Fraction

import mpmath
from hypothesis import given, strategies as st

from bdops.scalar import ONE, ZERO, Scalar, split_square

small = st.integers(min_value=-50, max_value=50)
rad = st.integers(min_value=1, max_value=200)


@st.composite
def scalars(draw):
    out = ZERO
    for _ in range(draw(st.integers(0, 3))):
        c = Fraction(draw(small), draw(st.integers(1, 9)))
        out = out + Scalar.sqrt(draw(rad)) * Scalar.pi_power(draw(st.integers(-2, 2))) * c
    return out


def test_split_square():
    assert split_square(72) == (6, 2)
    assert split_square(1) == (1, 1)
    assert split_square(2**7 * 3**3 * 5) == (24, 30)


def test_sqrt_canonical():
    assert Scalar.sqrt(8) == Scalar.sqrt(2) * 2
    assert Scalar.sqrt(2) * Scalar.sqrt(2) == 2
    assert Scalar.sqrt(6) == Scalar.sqrt(2) * Scalar.sqrt(3)
    assert Scalar.sqrt(Fraction(1, 2)) * 2 == Scalar.sqrt(2)


def test_pi_powers_combine():
    assert Scalar.pi_power(1) * Scalar.pi_power(3) == Scalar.pi_power(4)
    assert float(Scalar.pi_power(4)) == math.pi


def test_str():
    assert str(ZERO) == "0"
    assert str(ONE) == "1"
    assert "sqrt(2)" in str(Scalar.sqrt(2))


def test_inverse_monomial_only():
    x = Scalar.sqrt(3) * Scalar.pi_power(1) * Fraction(2, 5)
    assert x * x.inverse() == ONE
    try:
        (Scalar.sqrt(2) + 1).inverse()
    except (ValueError, ZeroDivisionError, ArithmeticError):
        pass
    else:
        raise AssertionError("inverse of a sum should be refused")


@given(scalars(), scalars(), scalars())
def test_ring_axioms(a, b, c):
    assert a + b == b + a
    assert a * b == b * a
    assert (a + b) * c == a * c + b * c
    assert a - a == ZERO


@given(scalars(), scalars())
def test_float_homomorphism(a, b):
    with mpmath.workdps(40):
        lhs = (a * b).to_mpf(40)
        rhs = a.to_mpf(40) * b.to_mpf(40)
        assert abs(lhs - rhs) <= mpmath.mpf(10) ** -25 * (1 + abs(rhs))


@given(scalars())
def test_zero_test_is_exact(a):
    # canonical form: equality to zero iff the float value vanishes
    assert a.is_zero() == (abs(a.to_mpf(50)) < mpmath.mpf(10) ** -40)
