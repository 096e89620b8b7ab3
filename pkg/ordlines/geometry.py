#!/usr/bin/python
# -*- coding: utf8
"""
Points, exact incidence predicates and canonical keys for spanned objects.

Every point carries a homogeneous coordinate vector (``Point.hom``): for
rational points a vector of plain integers, for Eisenstein points a vector of
:class:`~ordlines.field.EisensteinRational`. Predicates and canonical forms
are all computed on these vectors, so they work unchanged over both fields.
"""
import enum
import logging
import math
from dataclasses import dataclass, field as dc_field
from fractions import Fraction

from ordlines.exceptions import DegenerateInputError, UsageError
from ordlines.field import EISENSTEIN, FIELDS, RATIONAL, EisensteinRational, field_of, scalar_key, to_field

logger = logging.getLogger(__name__)

# index pairs of the Pluecker coordinates (p01, p02, p03, p12, p13, p23)
PLUECKER_PAIRS = ((0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3))
_PLUECKER_INDEX = {pair: i for i, pair in enumerate(PLUECKER_PAIRS)}


class Kind(enum.Enum):
    AFFINE2 = "affine2"
    AFFINE3 = "affine3"
    PROJECTIVE2 = "projective2"

    @property
    def ncoords(self):
        return 2 if self is Kind.AFFINE2 else 3

    @property
    def is_planar(self):
        return self is not Kind.AFFINE3


@dataclass(frozen=True)
class Point:
    coords: tuple
    kind: Kind
    field: str = dc_field(default=None)
    hom: tuple = dc_field(default=None, init=False, compare=False, repr=False)

    def __post_init__(self):
        coords = tuple(self.coords)
        if len(coords) != self.kind.ncoords:
            raise UsageError(
                f"{self.kind.value} point needs {self.kind.ncoords} coordinates, got {len(coords)}"
            )
        fld = self.field
        if fld is None:
            fld = EISENSTEIN if any(isinstance(c, EisensteinRational) for c in coords) else RATIONAL
        if fld not in FIELDS:
            raise UsageError(f"unknown field {fld!r}")
        if fld == EISENSTEIN and self.kind is Kind.AFFINE3:
            raise UsageError("points in space are only supported over the rationals")
        coords = tuple(to_field(c, fld) for c in coords)

        if self.kind is Kind.PROJECTIVE2:
            lead = next((c for c in coords if c != 0), None)
            if lead is None:
                raise DegenerateInputError("projective point with all coordinates zero")
            # 首个非零坐标归一
            coords = tuple(c / lead for c in coords)

        object.__setattr__(self, "coords", coords)
        object.__setattr__(self, "field", fld)
        object.__setattr__(self, "hom", _homogeneous(coords, self.kind, fld))

    @classmethod
    def affine(cls, *coords, field=None):
        kind = {2: Kind.AFFINE2, 3: Kind.AFFINE3}.get(len(coords))
        if kind is None:
            raise UsageError(f"affine points have 2 or 3 coordinates, got {len(coords)}")
        return cls(tuple(coords), kind, field)

    @classmethod
    def projective(cls, *coords, field=None):
        return cls(tuple(coords), Kind.PROJECTIVE2, field)

    def sort_key(self):
        return tuple(scalar_key(c) for c in self.coords)

    def __str__(self):
        inner = ", ".join(str(c) for c in self.coords)
        if self.kind is Kind.PROJECTIVE2:
            return f"({inner.replace(', ', ' : ')})"
        return f"({inner})"


def _homogeneous(coords, kind, fld):
    if fld == EISENSTEIN:
        vec = tuple(coords)
        if kind is not Kind.PROJECTIVE2:
            vec = vec + (EisensteinRational(1),)
        return vec
    if kind is not Kind.PROJECTIVE2:
        coords = coords + (Fraction(1),)
    den = math.lcm(*(c.denominator for c in coords))
    return tuple(c.numerator * (den // c.denominator) for c in coords)


def _det3(a, b, c):
    return (
        a[0] * (b[1] * c[2] - b[2] * c[1])
        - a[1] * (b[0] * c[2] - b[2] * c[0])
        + a[2] * (b[0] * c[1] - b[1] * c[0])
    )


def _cross(a, b):
    return (
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    )


def _dot(a, b):
    total = 0
    for x, y in zip(a, b):
        total = total + x * y
    return total


def _wedge(a, b):
    return tuple(a[i] * b[j] - a[j] * b[i] for i, j in PLUECKER_PAIRS)


def _join3(a, b, c):
    """Plane through three homogeneous points of space, zero iff collinear."""

    def minor(cols):
        return _det3(*[[row[k] for k in cols] for row in (a, b, c)])

    return (
        minor((1, 2, 3)),
        -minor((0, 2, 3)),
        minor((0, 1, 3)),
        -minor((0, 1, 2)),
    )


def _primitive(vec):
    """Canonical representative of a homogeneous vector, None for the zero vector.

    Integer vectors are divided by their content and signed so the first
    nonzero entry is positive; Eisenstein vectors are scaled so the first
    nonzero entry is 1.
    """
    if isinstance(vec[0], int):
        g = 0
        lead = 0
        for x in vec:
            g = math.gcd(g, x)
            if not lead:
                lead = x
        if g == 0:
            return None
        if lead < 0:
            g = -g
        return tuple(x // g for x in vec)
    lead = next((x for x in vec if x != 0), None)
    if lead is None:
        return None
    inv = lead.inverse()
    return tuple(x * inv for x in vec)


def _vector_key(vec):
    return tuple(scalar_key(x) for x in vec)


@dataclass(frozen=True)
class CanonLine2:
    """Line of the (affine or projective) plane, as a normalized 3-vector."""

    coeffs: tuple
    kind: Kind

    @property
    def field(self):
        return field_of(self.coeffs[0])

    def sort_key(self):
        return _vector_key(self.coeffs)

    def contains(self, point):
        return _dot(self.coeffs, point.hom) == 0

    def __str__(self):
        return "[" + " ".join(str(c) for c in self.coeffs) + "]"


@dataclass(frozen=True)
class CanonLine3:
    """Line of space in primitive Pluecker coordinates (p01, p02, p03, p12, p13, p23)."""

    plucker: tuple

    field = RATIONAL

    def sort_key(self):
        return self.plucker

    def quadric(self):
        p = self.plucker
        return p[0] * p[5] - p[1] * p[4] + p[2] * p[3]

    def contains(self, point):
        x = point.hom
        p = self.plucker
        for i, j, k in ((0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)):
            value = (
                p[_PLUECKER_INDEX[(i, j)]] * x[k]
                - p[_PLUECKER_INDEX[(i, k)]] * x[j]
                + p[_PLUECKER_INDEX[(j, k)]] * x[i]
            )
            if value != 0:
                return False
        return True

    def reciprocal(self, other):
        """Zero iff the two lines are coplanar (meet or are parallel)."""
        p, q = self.plucker, other.plucker
        return (
            p[0] * q[5] - p[1] * q[4] + p[2] * q[3]
            + p[3] * q[2] - p[4] * q[1] + p[5] * q[0]
        )

    def __str__(self):
        return "<" + " ".join(str(c) for c in self.plucker) + ">"


@dataclass(frozen=True)
class CanonPlane:
    """Plane ax + by + cz + d = 0 as a primitive integer 4-vector."""

    coeffs: tuple

    field = RATIONAL

    def sort_key(self):
        return self.coeffs

    def contains(self, point):
        return _dot(self.coeffs, point.hom) == 0

    def __str__(self):
        return "[" + " ".join(str(c) for c in self.coeffs) + "]"


def check_compatible(*points):
    first = points[0]
    for p in points[1:]:
        if p.kind is not first.kind:
            raise UsageError(f"mixed point kinds: {first.kind.value} and {p.kind.value}")
        if p.field != first.field:
            raise UsageError(f"mixed fields: {first.field} and {p.field}")


def collinear(p, q, r):
    check_compatible(p, q, r)
    if p.kind.is_planar:
        return _det3(p.hom, q.hom, r.hom) == 0
    return all(x == 0 for x in _join3(p.hom, q.hom, r.hom))


def coplanar(p, q, r, s):
    check_compatible(p, q, r, s)
    if p.kind is not Kind.AFFINE3:
        raise UsageError("coplanarity is defined for points in space only")
    return _dot(_join3(p.hom, q.hom, r.hom), s.hom) == 0


def line_key(p, q):
    """Canonical line through two points without argument checks, None if p == q."""
    if p.kind is Kind.AFFINE3:
        vec = _primitive(_wedge(p.hom, q.hom))
        return None if vec is None else CanonLine3(vec)
    vec = _primitive(_cross(p.hom, q.hom))
    return None if vec is None else CanonLine2(vec, p.kind)


def plane_key(p, q, r):
    vec = _primitive(_join3(p.hom, q.hom, r.hom))
    return None if vec is None else CanonPlane(vec)


def canon_line(p, q):
    check_compatible(p, q)
    key = line_key(p, q)
    if key is None:
        raise DegenerateInputError(f"no unique line through {p} and {q}")
    return key


def canon_plane(p, q, r):
    check_compatible(p, q, r)
    if p.kind is not Kind.AFFINE3:
        raise UsageError("planes are spanned by points in space only")
    key = plane_key(p, q, r)
    if key is None:
        raise DegenerateInputError(f"{p}, {q}, {r} are collinear")
    return key


def incident(obj, p):
    if isinstance(obj, CanonLine2):
        if p.kind is not obj.kind:
            raise UsageError(f"planar line of kind {obj.kind.value} against {p.kind.value} point")
    elif isinstance(obj, (CanonLine3, CanonPlane)):
        if p.kind is not Kind.AFFINE3:
            raise UsageError(f"spatial object against {p.kind.value} point")
    else:
        raise UsageError(f"not a spanned object: {obj!r}")
    if obj.field != p.field:
        raise UsageError(f"mixed fields: {obj.field} and {p.field}")
    return obj.contains(p)


def lines_skew(line1, line2):
    return line1.reciprocal(line2) != 0
