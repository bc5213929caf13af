from fractions import Fraction

import pytest
from hypothesis import given, strategies as st

from spinaf.qsqrt2 import QSqrt2

rationals = st.fractions(
    min_value=-20, max_value=20, max_denominator=12
)
elements = st.builds(QSqrt2, rationals, rationals)


def test_basic_arithmetic():
    r2 = QSqrt2.sqrt2()
    assert r2 * r2 == QSqrt2(2)
    x = QSqrt2(1, 1)  # 1 + sqrt2
    assert x * x == QSqrt2(3, 2)
    assert x - x == QSqrt2(0)
    assert (x / x) == QSqrt2(1)


def test_inverse_and_conjugate():
    x = QSqrt2(Fraction(3, 2), Fraction(-1, 4))
    assert x * x.inverse() == QSqrt2(1)
    # norm form: x * conj(x) is rational
    n = x * x.conjugate()
    assert n.is_rational()


def test_sign():
    assert QSqrt2(0).sign() == 0
    assert QSqrt2(1, -1).sign() == -1  # 1 - sqrt2 < 0
    assert QSqrt2(-1, 1).sign() == 1   # sqrt2 - 1 > 0
    assert QSqrt2(3, -2).sign() == 1   # 3 - 2 sqrt2 > 0
    assert QSqrt2(-3, 2).sign() == -1


def test_sqrt_exact_cases():
    assert QSqrt2(2).sqrt() == QSqrt2.sqrt2()
    assert QSqrt2(Fraction(9, 4)).sqrt() == QSqrt2(Fraction(3, 2))
    # (1 + sqrt2)^2 = 3 + 2 sqrt2
    assert QSqrt2(3, 2).sqrt() == QSqrt2(1, 1)
    # 1/2 = (1/2 sqrt2)^2
    assert QSqrt2(Fraction(1, 2)).sqrt() == QSqrt2(0, Fraction(1, 2))
    assert QSqrt2(3).sqrt() is None
    assert QSqrt2(-1).sqrt() is None


@given(elements)
def test_sqrt_of_square_roundtrip(x):
    s = (x * x).sqrt()
    assert s is not None
    assert s * s == x * x
    assert s.sign() >= 0


@given(elements, elements, elements)
def test_field_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    if not x.is_zero():
        assert x * x.inverse() == QSqrt2(1)


@given(elements, elements)
def test_conjugation_is_multiplicative(x, y):
    assert (x * y).conjugate() == x.conjugate() * y.conjugate()


def test_str_round_forms():
    assert str(QSqrt2(0)) == "0"
    assert "√2" in str(QSqrt2.sqrt2()) or "sqrt2" in str(QSqrt2.sqrt2())


def test_division_by_zero():
    with pytest.raises(ZeroDivisionError):
        QSqrt2(1) / QSqrt2(0)
