#!/usr/bin/python
# -*- coding: utf8
"""
Exact scalars.

Two fields are supported: the rationals, represented by
:class:`fractions.Fraction`, and the Eisenstein rationals Q(w) with
w*w = -w - 1, represented by :class:`EisensteinRational`. Nothing in this
package ever orders an Eisenstein element, only zero tests are used.
"""
import re
from fractions import Fraction
from numbers import Rational

from ordlines.exceptions import MalformedRational, UsageError

RATIONAL = "Q"
EISENSTEIN = "Qw"
FIELDS = (RATIONAL, EISENSTEIN)

_RATIONAL_RE = re.compile(r"^[+-]?\d+(/\d+)?$")
_EISENSTEIN_RE = re.compile(r"^([+-]?\d+(?:/\d+)?)\+([+-]?\d+(?:/\d+)?)\*w$")


class EisensteinRational:
    """Element a + b*w of Q(w), w a primitive cube root of unity."""

    __slots__ = ("a", "b")

    def __init__(self, a=0, b=0):
        self.a = Fraction(a)
        self.b = Fraction(b)

    @classmethod
    def coerce(cls, value):
        if isinstance(value, EisensteinRational):
            return value
        if isinstance(value, (int, Rational)):
            return cls(value, 0)
        raise UsageError(f"cannot use {value!r} as an element of Q(w)")

    def is_zero(self):
        return self.a == 0 and self.b == 0

    def __bool__(self):
        return not self.is_zero()

    def __eq__(self, other):
        if isinstance(other, EisensteinRational):
            return self.a == other.a and self.b == other.b
        if isinstance(other, (int, Rational)):
            return self.b == 0 and self.a == other
        return NotImplemented

    def __hash__(self):
        if self.b == 0:
            return hash(self.a)
        return hash((self.a, self.b))

    def __repr__(self):
        return f"EisensteinRational({str(self.a)!r}, {str(self.b)!r})"

    def __str__(self):
        return f"{self.a}+{self.b}*w"

    def __neg__(self):
        return EisensteinRational(-self.a, -self.b)

    def __add__(self, other):
        try:
            other = EisensteinRational.coerce(other)
        except UsageError:
            return NotImplemented
        return EisensteinRational(self.a + other.a, self.b + other.b)

    __radd__ = __add__

    def __sub__(self, other):
        try:
            other = EisensteinRational.coerce(other)
        except UsageError:
            return NotImplemented
        return EisensteinRational(self.a - other.a, self.b - other.b)

    def __rsub__(self, other):
        return EisensteinRational.coerce(other) - self

    def __mul__(self, other):
        try:
            other = EisensteinRational.coerce(other)
        except UsageError:
            return NotImplemented
        a, b, c, d = self.a, self.b, other.a, other.b
        # w*w = -w - 1
        return EisensteinRational(a * c - b * d, a * d + b * c - b * d)

    __rmul__ = __mul__

    def conjugate(self):
        # conj(w) = w*w = -1 - w
        return EisensteinRational(self.a - self.b, -self.b)

    def norm(self):
        return self.a * self.a - self.a * self.b + self.b * self.b

    def inverse(self):
        n = self.norm()
        if n == 0:
            raise ZeroDivisionError("zero has no inverse in Q(w)")
        c = self.conjugate()
        return EisensteinRational(c.a / n, c.b / n)

    def __truediv__(self, other):
        try:
            other = EisensteinRational.coerce(other)
        except UsageError:
            return NotImplemented
        return self * other.inverse()

    def __rtruediv__(self, other):
        return EisensteinRational.coerce(other) * self.inverse()

    def __pow__(self, exponent):
        if not isinstance(exponent, int):
            return NotImplemented
        base = self if exponent >= 0 else self.inverse()
        result = EisensteinRational(1)
        for _ in range(abs(exponent)):
            result = result * base
        return result


OMEGA = EisensteinRational(0, 1)


def field_of(value):
    if isinstance(value, EisensteinRational):
        return EISENSTEIN
    if isinstance(value, (int, Rational)):
        return RATIONAL
    raise UsageError(f"unsupported scalar {value!r}")


def to_field(value, field):
    if field == RATIONAL:
        if isinstance(value, EisensteinRational):
            if value.b != 0:
                raise UsageError(f"{value} is not rational")
            return value.a
        if isinstance(value, str):
            return parse_rational(value)
        if isinstance(value, float):
            raise UsageError("floating point coordinates are not accepted")
        return Fraction(value)
    if field == EISENSTEIN:
        if isinstance(value, str):
            return parse_eisenstein(value)
        if isinstance(value, float):
            raise UsageError("floating point coordinates are not accepted")
        return EisensteinRational.coerce(value)
    raise UsageError(f"unknown field {field!r}")


def parse_rational(text, lineno=None):
    text = text.strip()
    if not _RATIONAL_RE.match(text):
        raise MalformedRational(f"malformed rational {text!r}", lineno)
    if "/" in text:
        num, den = text.split("/")
        if int(den) == 0:
            raise MalformedRational(f"zero denominator in {text!r}", lineno)
        return Fraction(int(num), int(den))
    return Fraction(int(text))


def parse_eisenstein(text, lineno=None):
    text = text.strip()
    match = _EISENSTEIN_RE.match(text)
    if match:
        return EisensteinRational(
            parse_rational(match.group(1), lineno), parse_rational(match.group(2), lineno)
        )
    # a plain rational is also an element of Q(w)
    return EisensteinRational(parse_rational(text, lineno))


def format_scalar(value):
    if isinstance(value, EisensteinRational):
        return str(value)
    return str(Fraction(value))


def scalar_key(value):
    """Total order used only for deterministic sorting, never for geometry."""
    if isinstance(value, EisensteinRational):
        return (value.a, value.b)
    return (Fraction(value), Fraction(0))
