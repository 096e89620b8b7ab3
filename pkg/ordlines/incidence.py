#!/usr/bin/python
# -*- coding: utf8
"""
Spanned lines and planes of finite point sets.

Lines are found by grouping all pairs of points under their canonical key,
planes by combining every spanned line with every point off it. All results
are returned in canonical order so that repeated runs are identical.
"""
import logging
from collections import Counter
from dataclasses import dataclass

from ordlines.exceptions import DegenerateInputError, InvariantViolation, UsageError
from ordlines.field import RATIONAL
from ordlines.geometry import Kind, Point, check_compatible, line_key, plane_key

logger = logging.getLogger(__name__)


class PointSet:
    def __init__(self, points, label=""):
        points = tuple(points)
        if not points:
            raise UsageError("a point set needs at least one point")
        check_compatible(*points)
        seen = set()
        for p in points:
            if p in seen:
                raise UsageError(f"duplicate point {p} in point set {label!r}")
            seen.add(p)
        self.points = points
        self.label = label

    @property
    def n(self):
        return len(self.points)

    @property
    def kind(self):
        return self.points[0].kind

    @property
    def field(self):
        return self.points[0].field

    def __len__(self):
        return len(self.points)

    def __iter__(self):
        return iter(self.points)

    def __getitem__(self, index):
        return self.points[index]

    def __eq__(self, other):
        if type(self) == type(other):
            return self.points == other.points
        return False

    def __hash__(self):
        return hash(self.points)

    def __repr__(self):
        return f"PointSet(n={self.n}, kind={self.kind.value}, field={self.field}, label={self.label!r})"

    def subset(self, indices, label=None):
        return PointSet([self.points[i] for i in indices], label=label or self.label)

    def replace(self, index, point, label=None):
        points = list(self.points)
        points[index] = point
        return PointSet(points, label=self.label if label is None else label)


@dataclass(frozen=True)
class SpanSummary:
    n: int
    t: dict
    num_lines: int
    ordinary: int
    max_collinear: int

    def pair_identity_holds(self):
        return sum(k * (k - 1) // 2 * count for k, count in self.t.items()) == self.n * (self.n - 1) // 2


@dataclass(frozen=True)
class PlaneSummary:
    plane_members: dict
    max_coplanar: int

    @property
    def plane_counts(self):
        return {plane: len(members) for plane, members in self.plane_members.items()}

    def heaviest(self):
        for plane, members in self.plane_members.items():
            if len(members) == self.max_coplanar:
                return plane, members


@dataclass(frozen=True)
class PlaneProfile:
    plane: object
    points: int
    ordinary: int


@dataclass(frozen=True)
class ProjectionImage:
    center: int
    groups: tuple
    source: PointSet

    @property
    def sizes(self):
        return [len(indices) for _, indices in self.groups]


@dataclass(frozen=True)
class SigmaPlane:
    image_line: object
    concurrent_lines: int
    points: int
    ordinary_avoiding_center: int


@dataclass(frozen=True)
class KellyTraceReport:
    center: int
    q1_size: int
    q2_size: int
    l1_size: int
    found_ordinary: tuple
    planes: tuple


def _require_pairs(point_set):
    if point_set.n < 2:
        raise UsageError(f"need at least two points, {point_set.label or 'point set'} has {point_set.n}")


def spanned_lines(point_set):
    """Map every spanned line to the sorted indices of the points on it."""
    _require_pairs(point_set)
    pts = point_set.points
    n = len(pts)
    groups = dict()
    for i in range(n):
        p = pts[i]
        for j in range(i + 1, n):
            key = line_key(p, pts[j])
            members = groups.get(key)
            if members is None:
                groups[key] = {i, j}
            else:
                members.add(i)
                members.add(j)
    logger.debug(f"{n} points span {len(groups)} lines")
    return {key: tuple(sorted(groups[key])) for key in sorted(groups, key=lambda k: k.sort_key())}


def _summarize(n, lines):
    t = Counter(len(members) for members in lines.values())
    t = {k: t[k] for k in sorted(t)}
    return SpanSummary(
        n=n,
        t=t,
        num_lines=len(lines),
        ordinary=t.get(2, 0),
        max_collinear=max(t),
    )


def span_summary(point_set):
    return _summarize(point_set.n, spanned_lines(point_set))


def ordinary_lines(point_set):
    return [key for key, members in spanned_lines(point_set).items() if len(members) == 2]


def max_collinear(point_set):
    return span_summary(point_set).max_collinear


def point_degrees(point_set):
    degrees = [0] * point_set.n
    for members in spanned_lines(point_set).values():
        for i in members:
            degrees[i] += 1
    return degrees


def ordinary_degrees(point_set):
    degrees = [0] * point_set.n
    for members in spanned_lines(point_set).values():
        if len(members) == 2:
            for i in members:
                degrees[i] += 1
    return degrees


def degree_split(point_set, threshold):
    """Split indices into points on at least ``threshold`` spanned lines and the rest."""
    rich, poor = list(), list()
    for i, degree in enumerate(point_degrees(point_set)):
        (rich if degree >= threshold else poor).append(i)
    return rich, poor


def plane_summary(point_set):
    if point_set.kind is not Kind.AFFINE3:
        raise UsageError("spanned planes are defined for point sets in space")
    if point_set.n < 3:
        raise UsageError(f"need at least three points, got {point_set.n}")
    lines = spanned_lines(point_set)
    if len(lines) == 1:
        raise DegenerateInputError("all points are collinear, every plane through their line contains them")

    pts = point_set.points
    planes = dict()
    for members in lines.values():
        a, b = pts[members[0]], pts[members[1]]
        on_line = set(members)
        for c in range(len(pts)):
            if c in on_line:
                continue
            key = plane_key(a, b, pts[c])
            found = planes.get(key)
            if found is None:
                planes[key] = on_line | {c}
            else:
                found.update(on_line)
                found.add(c)
    logger.debug(f"{len(pts)} points span {len(planes)} planes")
    ordered = {key: tuple(sorted(planes[key])) for key in sorted(planes, key=lambda k: k.sort_key())}
    return PlaneSummary(plane_members=ordered, max_coplanar=max(len(m) for m in ordered.values()))


def plane_ordinary_profile(point_set):
    """Point count and number of ordinary lines of the whole set inside each spanned plane."""
    planes = plane_summary(point_set).plane_members
    ordinary_pairs = [members for members in spanned_lines(point_set).values() if len(members) == 2]
    profile = list()
    for plane, members in planes.items():
        on_plane = set(members)
        count = sum(1 for i, j in ordinary_pairs if i in on_plane and j in on_plane)
        profile.append(PlaneProfile(plane=plane, points=len(members), ordinary=count))
    return profile


def project_from(point_set, center):
    """Radial projection of the set from one of its points.

    Every other point is mapped to the direction of the line joining it to
    the center, a point of the projective plane; points collinear with the
    center share an image. Groups appear in order of their first member.
    """
    if point_set.kind is not Kind.AFFINE3:
        raise UsageError("projection is defined for point sets in space")
    _require_pairs(point_set)
    if not isinstance(center, int) or not 0 <= center < point_set.n:
        raise UsageError(f"center index {center!r} out of range 0..{point_set.n - 1}")

    origin = point_set[center].coords
    groups = dict()
    for i, p in enumerate(point_set):
        if i == center:
            continue
        direction = Point.projective(*(x - y for x, y in zip(p.coords, origin)))
        groups.setdefault(direction, list()).append(i)
    logger.debug(f"projection from point {center}: {len(groups)} images of {point_set.n - 1} points")
    return ProjectionImage(
        center=center,
        groups=tuple((image, tuple(indices)) for image, indices in groups.items()),
        source=point_set,
    )


def image_point_set(image):
    """The image set Q1 and, per image point, whether it has a unique preimage."""
    points = [point for point, _ in image.groups]
    flags = tuple(len(indices) == 1 for _, indices in image.groups)
    label = f"image of {image.source.label or 'point set'} from {image.center}"
    return PointSet(points, label=label), flags


def kelly_trace(point_set, center):
    """Run the projection argument from one center and collect its ordinary lines.

    For every image line with two or more image points and no image point of
    multiplicity one, the plane through the center and that line must hold an
    ordinary line of the set avoiding the center. One such line is recorded
    per plane; failing to find one raises :class:`InvariantViolation`.
    """
    if point_set.field != RATIONAL:
        raise UsageError("the projection argument is run over the rationals only")
    image = project_from(point_set, center)
    q1, unique = image_point_set(image)

    found = list()
    planes = list()
    if q1.n >= 2:
        for line, members in spanned_lines(q1).items():
            if any(unique[g] for g in members):
                continue
            indices = [center] + sorted(i for g in members for i in image.groups[g][1])
            sigma = point_set.subset(indices)
            # position 0 of sigma is the center
            avoiding = [key for key, on in spanned_lines(sigma).items() if len(on) == 2 and 0 not in on]
            if not avoiding:
                raise InvariantViolation(
                    f"no ordinary line avoiding the center in the plane over image line {line}"
                )
            found.append(avoiding[0])
            planes.append(
                SigmaPlane(
                    image_line=line,
                    concurrent_lines=len(members),
                    points=len(indices),
                    ordinary_avoiding_center=len(avoiding),
                )
            )

    report = KellyTraceReport(
        center=center,
        q1_size=q1.n,
        q2_size=sum(unique),
        l1_size=len(planes),
        found_ordinary=tuple(found),
        planes=tuple(planes),
    )
    _check_trace(point_set, report)
    logger.debug(
        f"trace from {center}: |Q1|={report.q1_size} |Q2|={report.q2_size} |L1|={report.l1_size}"
    )
    return report


def _check_trace(point_set, report):
    if len(set(report.found_ordinary)) != len(report.found_ordinary):
        raise InvariantViolation("trace returned the same ordinary line twice")
    if len(report.found_ordinary) < report.l1_size:
        raise InvariantViolation("trace found fewer ordinary lines than image lines")
    center = point_set[report.center]
    for line in report.found_ordinary:
        if line.contains(center):
            raise InvariantViolation(f"ordinary line {line} passes through the center")
        on_line = sum(1 for p in point_set if line.contains(p))
        if on_line != 2:
            raise InvariantViolation(f"line {line} holds {on_line} points, expected 2")
