from fractions import Fraction

import pytest
from hypothesis import given

from quiveralg import ScalarQ, as_scalar
from strategies import scalars


def test_basic_arithmetic():
    a = ScalarQ(Fraction(1), Fraction(2))
    b = ScalarQ(Fraction(3), Fraction(-1))
    assert a * b == ScalarQ(Fraction(5), Fraction(5))
    assert a + b == ScalarQ(Fraction(4), Fraction(1))
    assert -a == ScalarQ(Fraction(-1), Fraction(-2))
    assert a - a == ScalarQ()
    assert a.conjugate() == ScalarQ(Fraction(1), Fraction(-2))
    assert a.abs_sq() == Fraction(5)


def test_division_exact():
    a = ScalarQ(Fraction(1), Fraction(2))
    b = ScalarQ(Fraction(3, 7), Fraction(-5, 11))
    assert (a / b) * b == a
    with pytest.raises(ZeroDivisionError):
        a / ScalarQ()


def test_coercion_and_equality():
    assert as_scalar(3) == ScalarQ(Fraction(3))
    assert as_scalar(Fraction(1, 2)) == ScalarQ(Fraction(1, 2))
    assert ScalarQ(Fraction(2)) == 2
    assert 2 * ScalarQ(Fraction(0), Fraction(1)) == ScalarQ(Fraction(0), Fraction(2))
    with pytest.raises(TypeError):
        as_scalar(0.5)


def test_serialize_format():
    assert ScalarQ(Fraction(1, 2), Fraction(-3)).serialize() == "1/2-3/1·i"
    assert ScalarQ().serialize() == "0/1+0/1·i"


def test_bool_and_str():
    assert not ScalarQ()
    assert ScalarQ(Fraction(0), Fraction(1))
    assert str(ScalarQ(Fraction(0), Fraction(1))) == "i"
    assert str(ScalarQ(Fraction(3, 2))) == "3/2"


@given(scalars, scalars, scalars)
def test_field_identities(a, b, c):
    assert a * (b + c) == a * b + a * c
    assert (a * b) * c == a * (b * c)
    assert a * b == b * a
    assert (a * b).conjugate() == a.conjugate() * b.conjugate()
    assert a.conjugate().conjugate() == a
    assert (a * a.conjugate()).im == 0


@given(scalars, scalars)
def test_division_inverts(a, b):
    if b:
        assert (a / b) * b == a
