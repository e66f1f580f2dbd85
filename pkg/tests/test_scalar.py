from fractions import Fraction

import mpmath
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cctp.scalar import (
    SQRT2,
    SQRT3,
    SQRT6,
    DivisionByZero,
    FieldElement,
    approx,
    get_precision,
    is_zero,
    precision,
    sign,
    sign_exact,
)

small = st.fractions(min_value=-50, max_value=50, max_denominator=30)
elements = st.builds(FieldElement, small, small, small, small)
nonzero = elements.filter(lambda x: not x.is_zero())


def test_generators():
    assert SQRT2 * SQRT2 == 2
    assert SQRT3 * SQRT3 == 3
    assert SQRT2 * SQRT3 == SQRT6
    assert SQRT6 * SQRT6 == 6


@given(elements, elements, elements)
def test_ring_axioms(x, y, z):
    assert (x + y) * z == x * z + y * z
    assert x * y == y * x
    assert (x * y) * z == x * (y * z)
    assert x - x == 0


@given(nonzero)
def test_inverse(x):
    assert x * x.inverse() == 1
    assert (1 / x) * x == 1


def test_division_by_zero():
    with pytest.raises(DivisionByZero):
        FieldElement(0).inverse()
    with pytest.raises(ZeroDivisionError):
        SQRT2 / FieldElement(0)


@given(elements)
@settings(max_examples=200)
def test_sign_matches_high_precision(x):
    with mpmath.workprec(400):
        v = x.a + x.b * mpmath.sqrt(2) + x.c * mpmath.sqrt(3) + x.d * mpmath.sqrt(6)
        expected = 0 if x.is_zero() else (1 if v > 0 else -1)
    assert sign_exact(x) == expected


def test_sign_near_cancellation():
    # 99 - 70√2 ≈ 0.00505, 99√2 - 140 ≈ 0.0071
    assert sign(FieldElement(99, -70)) == 1
    assert sign(FieldElement(-140, 99)) == 1
    assert sign(FieldElement(-99, 70)) == -1
    # 5 - 2√6 and √3 - √2 differ by a square
    assert FieldElement(0, -1, 1) ** 2 == FieldElement(5, 0, 0, -2)
    assert sign(FieldElement(5, 0, 0, -2)) == 1


@given(elements, elements)
def test_ordering(x, y):
    assert (x < y) == (sign(y - x) > 0)
    assert (x == y) == (sign(x - y) == 0)


@given(elements)
def test_json_roundtrip(x):
    assert FieldElement.from_json(x.to_json()) == x
    assert hash(FieldElement.from_json(x.to_json())) == hash(x)


def test_rational_helpers():
    q = FieldElement(Fraction(3, 7))
    assert q.is_rational() and q.in_sqrt2_field()
    assert not SQRT3.in_sqrt2_field()
    assert (1 + SQRT2).in_sqrt2_field()
    assert FieldElement(1, 1) == 1 + SQRT2
    assert q == Fraction(3, 7)


def test_conjugates_and_norm():
    x = FieldElement(1, 2, 3, 4)
    prod = x * x.conjugate(-1, 1) * x.conjugate(1, -1) * x.conjugate(-1, -1)
    assert prod.is_rational()
    assert prod == x.norm()


def test_format():
    assert FieldElement(1, 2, 3, 4).format() == "1+2√2+3√3+4√6"
    assert str(FieldElement(0)) == "0"


def test_approx_and_precision():
    assert get_precision() == 256
    with precision(100):
        assert get_precision() == 100
    assert get_precision() == 256
    v = approx(SQRT2 - 1, 200)
    with mpmath.workprec(200):
        assert abs(v - (mpmath.sqrt(2) - 1)) < mpmath.mpf(2) ** -190


def test_float_backend_sign():
    with precision(128):
        assert sign(mpmath.mpf(1) / 3) == 1
        assert is_zero(mpmath.mpf(10) ** -60, mpmath.mpf(10) ** -40)
        assert not is_zero(mpmath.mpf(10) ** -30, mpmath.mpf(10) ** -40)
