"""Exact arithmetic in Q(√2, √3) plus a configurable-precision float backend.

Every element is stored as four integer coefficients over one positive
common denominator::

    x = (a + b·√2 + c·√3 + d·√6) / den

with ``gcd(a, b, c, d, den) = 1``, so the representation is canonical and
equality is a tuple comparison.  Rationals are ``fractions.Fraction``.
"""

from __future__ import annotations

import math
from contextlib import contextmanager
from fractions import Fraction
from functools import lru_cache
from typing import Iterator, Union

import mpmath

__all__ = [
    "FieldElement",
    "Rational",
    "BigFloat",
    "DivisionByZero",
    "field_arith",
    "sign_exact",
    "approx",
    "sign",
    "is_zero",
    "as_scalar",
    "get_precision",
    "set_precision",
    "precision",
    "SQRT2",
    "SQRT3",
    "SQRT6",
    "ZERO",
    "ONE",
    "HALF",
]

Rational = Fraction
BigFloat = mpmath.mpf

_DEFAULT_PRECISION = 256
_precision = _DEFAULT_PRECISION


class DivisionByZero(ZeroDivisionError):
    pass


def _to_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    if isinstance(x, str):
        return Fraction(x.strip())
    raise TypeError(f"cannot read {type(x).__name__} as a rational")


class FieldElement:
    """An element of the biquadratic field Q(√2, √3)."""

    __slots__ = ("_a", "_b", "_c", "_d", "_den", "_hash")

    def __init__(self, a=0, b=0, c=0, d=0):
        fa, fb, fc, fd = (_to_fraction(v) for v in (a, b, c, d))
        den = math.lcm(fa.denominator, fb.denominator, fc.denominator, fd.denominator)
        self._set(
            fa.numerator * (den // fa.denominator),
            fb.numerator * (den // fb.denominator),
            fc.numerator * (den // fc.denominator),
            fd.numerator * (den // fd.denominator),
            den,
        )

    def _set(self, a: int, b: int, c: int, d: int, den: int) -> None:
        if den != 1:
            g = math.gcd(a, b, c, d, den)
            if g != 1:
                a //= g
                b //= g
                c //= g
                d //= g
                den //= g
        self._a, self._b, self._c, self._d, self._den = a, b, c, d, den
        self._hash = None

    @classmethod
    def _raw(cls, a: int, b: int, c: int, d: int, den: int) -> "FieldElement":
        # den must be positive
        obj = object.__new__(cls)
        obj._set(a, b, c, d, den)
        return obj

    @classmethod
    def from_int(cls, n: int) -> "FieldElement":
        return cls._raw(n, 0, 0, 0, 1)

    @classmethod
    def from_fraction(cls, q) -> "FieldElement":
        q = _to_fraction(q)
        return cls._raw(q.numerator, 0, 0, 0, q.denominator)

    # coefficient access

    @property
    def a(self) -> Fraction:
        return Fraction(self._a, self._den)

    @property
    def b(self) -> Fraction:
        return Fraction(self._b, self._den)

    @property
    def c(self) -> Fraction:
        return Fraction(self._c, self._den)

    @property
    def d(self) -> Fraction:
        return Fraction(self._d, self._den)

    def coefficients(self) -> tuple[Fraction, Fraction, Fraction, Fraction]:
        return (self.a, self.b, self.c, self.d)

    def integer_form(self) -> tuple[int, int, int, int, int]:
        """``(a, b, c, d, den)`` with the canonical common denominator."""
        return (self._a, self._b, self._c, self._d, self._den)

    def is_zero(self) -> bool:
        return not (self._a or self._b or self._c or self._d)

    def is_rational(self) -> bool:
        return not (self._b or self._c or self._d)

    def in_sqrt2_field(self) -> bool:
        return not (self._c or self._d)

    # arithmetic

    def __add__(self, other):
        if not isinstance(other, FieldElement):
            other = as_scalar(other)
            if not isinstance(other, FieldElement):
                return NotImplemented
        d1, d2 = self._den, other._den
        if d1 == d2:
            return FieldElement._raw(
                self._a + other._a, self._b + other._b, self._c + other._c, self._d + other._d, d1
            )
        return FieldElement._raw(
            self._a * d2 + other._a * d1,
            self._b * d2 + other._b * d1,
            self._c * d2 + other._c * d1,
            self._d * d2 + other._d * d1,
            d1 * d2,
        )

    __radd__ = __add__

    def __neg__(self):
        return FieldElement._raw(-self._a, -self._b, -self._c, -self._d, self._den)

    def __pos__(self):
        return self

    def __sub__(self, other):
        if not isinstance(other, FieldElement):
            other = as_scalar(other)
            if not isinstance(other, FieldElement):
                return NotImplemented
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                return FieldElement._raw(
                    self._a * other, self._b * other, self._c * other, self._d * other, self._den
                )
            other = as_scalar(other)
            if not isinstance(other, FieldElement):
                return NotImplemented
        a1, b1, c1, d1 = self._a, self._b, self._c, self._d
        a2, b2, c2, d2 = other._a, other._b, other._c, other._d
        if not (b2 or c2 or d2):
            return FieldElement._raw(a1 * a2, b1 * a2, c1 * a2, d1 * a2, self._den * other._den)
        if not (b1 or c1 or d1):
            return FieldElement._raw(a1 * a2, a1 * b2, a1 * c2, a1 * d2, self._den * other._den)
        return FieldElement._raw(
            a1 * a2 + 2 * b1 * b2 + 3 * c1 * c2 + 6 * d1 * d2,
            a1 * b2 + b1 * a2 + 3 * (c1 * d2 + d1 * c2),
            a1 * c2 + c1 * a2 + 2 * (b1 * d2 + d1 * b2),
            a1 * d2 + d1 * a2 + b1 * c2 + c1 * b2,
            self._den * other._den,
        )

    __rmul__ = __mul__

    def conjugate(self, s2: int = 1, s3: int = 1) -> "FieldElement":
        """Image under √2 ↦ s2·√2, √3 ↦ s3·√3."""
        return FieldElement._raw(self._a, s2 * self._b, s3 * self._c, s2 * s3 * self._d, self._den)

    def norm(self) -> Fraction:
        """Product of the four conjugates (a rational number)."""
        p = self * self.conjugate(-1, 1)
        q = p * p.conjugate(1, -1)
        return q.a

    def inverse(self) -> "FieldElement":
        if self.is_zero():
            raise DivisionByZero("inverse of zero")
        a, b, c, d, den = self._a, self._b, self._c, self._d, self._den
        if not (b or c or d):
            if a < 0:
                return FieldElement._raw(-den, 0, 0, 0, -a)
            return FieldElement._raw(den, 0, 0, 0, a)
        # x = p + q√3 with p = a + b√2, q = c + d√2; 1/x = (p - q√3)/(p² - 3q²)
        n0 = a * a + 2 * b * b - 3 * c * c - 6 * d * d
        n1 = 2 * a * b - 6 * c * d
        # invert n0 + n1√2 via its conjugate
        m = n0 * n0 - 2 * n1 * n1
        # (a + b√2 - c√3 - d√6)(n0 - n1√2) · den / m
        ra = a * n0 - 2 * b * n1
        rb = b * n0 - a * n1
        rc = -(c * n0) + 2 * d * n1
        rd = -(d * n0) + c * n1
        if m < 0:
            m = -m
            ra, rb, rc, rd = -ra, -rb, -rc, -rd
        return FieldElement._raw(ra * den, rb * den, rc * den, rd * den, m)

    def __truediv__(self, other):
        if not isinstance(other, FieldElement):
            if isinstance(other, int):
                if other == 0:
                    raise DivisionByZero("division by zero")
                if other < 0:
                    return FieldElement._raw(
                        -self._a, -self._b, -self._c, -self._d, -other * self._den
                    )
                return FieldElement._raw(self._a, self._b, self._c, self._d, other * self._den)
            other = as_scalar(other)
            if not isinstance(other, FieldElement):
                return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return as_scalar(other) * self.inverse()

    def __pow__(self, n: int):
        if not isinstance(n, int):
            return NotImplemented
        if n < 0:
            return self.inverse() ** (-n)
        result = ONE
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    # comparison

    def __eq__(self, other):
        if isinstance(other, FieldElement):
            return (
                self._den == other._den
                and self._a == other._a
                and self._b == other._b
                and self._c == other._c
                and self._d == other._d
            )
        if isinstance(other, (int, Fraction)):
            return self == FieldElement.from_fraction(other)
        return NotImplemented

    def __hash__(self):
        if self._hash is None:
            if self.is_rational():
                self._hash = hash(Fraction(self._a, self._den))
            else:
                self._hash = hash((self._a, self._b, self._c, self._d, self._den))
        return self._hash

    def sign(self) -> int:
        return sign_exact(self)

    def __lt__(self, other):
        return sign_exact(self - other) < 0

    def __le__(self, other):
        return sign_exact(self - other) <= 0

    def __gt__(self, other):
        return sign_exact(self - other) > 0

    def __ge__(self, other):
        return sign_exact(self - other) >= 0

    def __bool__(self):
        return not self.is_zero()

    def __abs__(self):
        return -self if sign_exact(self) < 0 else self

    def __float__(self):
        return float(approx(self, 64))

    # display / serialization

    def __repr__(self):
        return f"FieldElement({self.a!s}, {self.b!s}, {self.c!s}, {self.d!s})"

    def __str__(self):
        return self.format()

    def format(self) -> str:
        """Compact display such as ``(5033675-2955751√2)/16549127``."""
        parts = []
        for coeff, unit in ((self._a, ""), (self._b, "√2"), (self._c, "√3"), (self._d, "√6")):
            if not coeff:
                continue
            mag = abs(coeff)
            body = unit if (mag == 1 and unit) else f"{mag}{unit}"
            parts.append(("-" if coeff < 0 else "+", body))
        if not parts:
            return "0"
        text = "".join(s + b for s, b in parts)
        if text[0] == "+":
            text = text[1:]
        if self._den == 1:
            return text
        if len(parts) == 1:
            return f"{text}/{self._den}"
        return f"({text})/{self._den}"

    def to_json(self) -> dict:
        return {k: str(v) for k, v in zip("abcd", self.coefficients())}

    @classmethod
    def from_json(cls, obj) -> "FieldElement":
        if isinstance(obj, (int, str)):
            return cls(obj)
        if not isinstance(obj, dict) or set(obj) - set("abcd"):
            raise ValueError(f"not a field element: {obj!r}")
        return cls(*(obj.get(k, "0") for k in "abcd"))


ZERO = FieldElement._raw(0, 0, 0, 0, 1)
ONE = FieldElement._raw(1, 0, 0, 0, 1)
HALF = FieldElement._raw(1, 0, 0, 0, 2)
SQRT2 = FieldElement._raw(0, 1, 0, 0, 1)
SQRT3 = FieldElement._raw(0, 0, 1, 0, 1)
SQRT6 = FieldElement._raw(0, 0, 0, 1, 1)


def as_scalar(x):
    """Coerce ints, Fractions and numeric strings to FieldElement; pass others through."""
    if isinstance(x, FieldElement):
        return x
    if isinstance(x, bool):
        raise TypeError("bool is not a scalar")
    if isinstance(x, int):
        return FieldElement._raw(x, 0, 0, 0, 1)
    if isinstance(x, Fraction):
        return FieldElement._raw(x.numerator, 0, 0, 0, x.denominator)
    if isinstance(x, str):
        return FieldElement(x)
    return x


def field_arith(x: FieldElement, y: FieldElement, op: str) -> FieldElement:
    if op == "add":
        return x + y
    if op == "sub":
        return x - y
    if op == "mul":
        return x * y
    if op == "div":
        if y.is_zero():
            raise DivisionByZero("division by zero")
        return x / y
    raise ValueError(f"unknown op {op!r}")


# sign determination


@lru_cache(maxsize=64)
def _root_floors(p: int) -> tuple[int, int, int]:
    one = 1 << (2 * p)
    return (math.isqrt(2 * one), math.isqrt(3 * one), math.isqrt(6 * one))


_F2, _F3, _F6 = math.sqrt(2), math.sqrt(3), math.sqrt(6)


def _interval_sign(a: int, b: int, c: int, d: int) -> int:
    p = 64
    while True:
        s2, s3, s6 = _root_floors(p)
        lo = a << p
        hi = lo
        for coeff, r in ((b, s2), (c, s3), (d, s6)):
            # r <= root·2^p < r + 1
            if coeff >= 0:
                lo += coeff * r
                hi += coeff * (r + 1)
            else:
                lo += coeff * (r + 1)
                hi += coeff * r
        if lo > 0:
            return 1
        if hi < 0:
            return -1
        p *= 2


def sign_exact(x: FieldElement) -> int:
    """Exact sign of the real embedding (√2, √3 > 0)."""
    a, b, c, d = x._a, x._b, x._c, x._d
    if not (b or c or d):
        return (a > 0) - (a < 0)
    # float filter; exact refinement only when the filter is inconclusive
    if max(a.bit_length(), b.bit_length(), c.bit_length(), d.bit_length()) < 1000:
        fa, fb, fc, fd = float(a), float(b) * _F2, float(c) * _F3, float(d) * _F6
        v = fa + fb + fc + fd
        err = (abs(fa) + abs(fb) + abs(fc) + abs(fd)) * 1e-14
        if v > err:
            return 1
        if v < -err:
            return -1
    return _interval_sign(a, b, c, d)


# float backend


def get_precision() -> int:
    return _precision


def set_precision(bits: int) -> None:
    global _precision
    if bits < 16:
        raise ValueError("precision must be at least 16 bits")
    _precision = int(bits)
    mpmath.mp.prec = _precision


@contextmanager
def precision(bits: int) -> Iterator[int]:
    """Temporarily set both the run precision and mpmath's working precision."""
    old, old_mp = _precision, mpmath.mp.prec
    set_precision(bits)
    try:
        yield bits
    finally:
        set_precision(old)
        mpmath.mp.prec = old_mp


def _eval_mpf(x: FieldElement, wp: int):
    with mpmath.workprec(wp):
        v = mpmath.mpf(x._a)
        if x._b:
            v += x._b * mpmath.sqrt(2)
        if x._c:
            v += x._c * mpmath.sqrt(3)
        if x._d:
            v += x._d * mpmath.sqrt(6)
        return v / x._den


def approx(x, precision: int | None = None):
    """Value of ``x`` as an mpmath float with ``precision`` bits."""
    bits = _precision if precision is None else precision
    if bits < 16:
        raise ValueError("precision must be at least 16 bits")
    if isinstance(x, (int, Fraction)):
        x = as_scalar(x)
    if not isinstance(x, FieldElement):
        with mpmath.workprec(bits):
            return +mpmath.mpf(x)
    if x.is_zero():
        return mpmath.mpf(0)
    wp = bits + 32
    prev = _eval_mpf(x, wp)
    while True:
        wp *= 2
        cur = _eval_mpf(x, wp)
        with mpmath.workprec(bits + 8):
            close = prev != 0 and abs(cur - prev) <= abs(cur) * mpmath.ldexp(1, -bits - 4)
        if close:
            break
        prev = cur
    with mpmath.workprec(bits):
        return +cur


def sign(x) -> int:
    """Sign for either backend; floats are compared against zero directly."""
    if isinstance(x, FieldElement):
        return sign_exact(x)
    if isinstance(x, (int, Fraction)):
        return (x > 0) - (x < 0)
    return (x > 0) - (x < 0)


def is_zero(x, tol=None) -> bool:
    if isinstance(x, FieldElement):
        return x.is_zero()
    if tol is None:
        return x == 0
    return abs(x) <= tol


ScalarLike = Union[FieldElement, int, Fraction]
