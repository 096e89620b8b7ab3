#!/usr/bin/python
# -*- coding: utf8
"""
Plain-text point-set files.

::

    dim=3 kind=affine field=Q
    # label: two-skew(m=2)
    1 0 0
    0 1/2 3

Rationals are written ``a`` or ``a/b``, elements of Q(w) as ``a+b*w``. Lines
starting with ``#`` are comments; a ``# label:`` comment names the set.
"""
import logging
import re

from ordlines.exceptions import (
    DuplicatePoint,
    InvalidHeader,
    OrdLinesException,
    PointSetFormatError,
    UnknownField,
    WrongCoordinateCount,
)
from ordlines.field import EISENSTEIN, FIELDS, RATIONAL, format_scalar, parse_eisenstein, parse_rational
from ordlines.geometry import Kind, Point
from ordlines.incidence import PointSet

logger = logging.getLogger(__name__)

_HEADER_RE = re.compile(r"^dim=(\S+)\s+kind=(\S+)\s+field=(\S+)$")
_KINDS = {
    ("2", "affine"): Kind.AFFINE2,
    ("3", "affine"): Kind.AFFINE3,
    ("2", "projective"): Kind.PROJECTIVE2,
}
_HEADERS = {kind: f"dim={dim} kind={name}" for (dim, name), kind in _KINDS.items()}


def _parse_header(line, lineno):
    match = _HEADER_RE.match(line)
    if not match:
        raise InvalidHeader(f"expected 'dim=<2|3> kind=<affine|projective> field=<Q|Qw>', got {line!r}", lineno)
    dim, kind_name, fld = match.groups()
    kind = _KINDS.get((dim, kind_name))
    if kind is None:
        raise InvalidHeader(f"unsupported combination dim={dim} kind={kind_name}", lineno)
    if fld not in FIELDS:
        raise UnknownField(f"unknown field tag {fld!r}, expected one of {', '.join(FIELDS)}", lineno)
    if fld == EISENSTEIN and kind is Kind.AFFINE3:
        raise InvalidHeader("point sets in space are only supported over Q", lineno)
    return kind, fld


def parse_pointset(text, label=""):
    kind = fld = None
    points = list()
    seen = dict()
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            comment = line[1:].strip()
            if comment.startswith("label:") and not label:
                label = comment[len("label:"):].strip()
            continue
        if kind is None:
            kind, fld = _parse_header(line, lineno)
            continue

        tokens = line.split()
        if len(tokens) != kind.ncoords:
            raise WrongCoordinateCount(
                f"expected {kind.ncoords} coordinates for {kind.value}, got {len(tokens)}", lineno
            )
        parse = parse_rational if fld == RATIONAL else parse_eisenstein
        coords = [parse(token, lineno) for token in tokens]
        try:
            point = Point(tuple(coords), kind, fld)
        except OrdLinesException as e:
            raise PointSetFormatError(str(e), lineno)
        if point in seen:
            raise DuplicatePoint(f"point {point} repeats line {seen[point]}", lineno)
        seen[point] = lineno
        points.append(point)

    if kind is None:
        raise InvalidHeader("missing header line")
    if not points:
        raise WrongCoordinateCount("the file holds no points")
    logger.debug(f"parsed {len(points)} {kind.value} points over {fld}")
    return PointSet(points, label=label)


def read(file_path):
    with open(file_path, encoding="utf-8") as f:
        return parse_pointset(f.read())


def write_pointset(point_set):
    lines = [f"{_HEADERS[point_set.kind]} field={point_set.field}"]
    if point_set.label:
        lines.append(f"# label: {point_set.label}")
    for point in point_set:
        lines.append(" ".join(format_scalar(c) for c in point.coords))
    return "\n".join(lines) + "\n"


def write(point_set, file_path):
    with open(file_path, "w", encoding="utf-8") as f:
        f.write(write_pointset(point_set))
