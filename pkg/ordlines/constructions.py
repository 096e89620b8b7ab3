#!/usr/bin/python
# -*- coding: utf8
"""
Generators for the named configurations.

All generators are deterministic: the seeded ones draw every coordinate from
a :class:`random.Random` seeded with the given seed, so the same parameters
and seed always reproduce the same point set.
"""
import logging
import random
from collections import Counter
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations

from ordlines.exceptions import GenerationError, InvariantViolation, UsageError
from ordlines.field import OMEGA
from ordlines.geometry import Point
from ordlines.incidence import PointSet, plane_summary, spanned_lines

logger = logging.getLogger(__name__)

MAX_RETRIES = 100


@dataclass(frozen=True)
class BoroczkyModelSummary:
    m: int
    n: int
    ordinary: int
    t: dict
    num_lines: int

    def pair_identity_holds(self):
        return sum(k * (k - 1) // 2 * c for k, c in self.t.items()) == self.n * (self.n - 1) // 2


def _check_bound(bound):
    if bound < 1:
        raise UsageError(f"bound must be positive, got {bound!r}")


def random_rational(rng, bound):
    return Fraction(rng.randint(-bound, bound), rng.randint(1, bound))


def _random_points(rng, count, bound, make, exclude=()):
    """Draw ``count`` distinct points from ``make(rng)``, skipping anything in ``exclude``."""
    seen = set(exclude)
    points = list()
    attempts = 0
    while len(points) < count:
        attempts += 1
        if attempts > 100 * count + 1000:
            raise GenerationError(f"could not draw {count} distinct points with bound {bound}")
        p = make(rng)
        if p in seen:
            continue
        seen.add(p)
        points.append(p)
    return points


def gen_two_skew(m):
    if not isinstance(m, int) or m < 2:
        raise UsageError(f"two skew lines need m >= 2 points each, got {m!r}")
    points = [Point.affine(t, 0, 0) for t in range(1, m + 1)]
    points += [Point.affine(0, t, 1) for t in range(1, m + 1)]
    return PointSet(points, label=f"two-skew(m={m})")


def near_coplanar_count(n, k, ord_planar):
    """Exact ordinary count of ``gen_near_coplanar`` given its planar part's count.

    For k = 1 the z-axis holds only the origin and one more point and is
    itself ordinary.
    """
    return k * (n - k) + ord_planar - k + (1 if k == 1 else 0)


def _off_plane_lines_clean(point_set, first_off):
    """Every spanned line through an off-plane point is the z-axis or has two points."""
    for members in spanned_lines(point_set).values():
        if members[-1] < first_off or len(members) == 2:
            continue
        on_axis = all(point_set[i].coords[0] == 0 and point_set[i].coords[1] == 0 for i in members)
        if not on_axis:
            return False
    return True


def gen_near_coplanar(n, k, seed=0, bound=10):
    if k < 1 or n - k < 4:
        raise UsageError(f"near-coplanar sets need k >= 1 and n - k >= 4, got n={n} k={k}")
    _check_bound(bound)
    rng = random.Random(seed)
    origin = Point.affine(0, 0, 0)
    axis = [Point.affine(0, 0, t) for t in range(1, k + 1)]

    def planar(r):
        while True:
            x, y = random_rational(r, bound), random_rational(r, bound)
            if x != 0 or y != 0:
                return Point.affine(x, y, 0)

    for attempt in range(1, MAX_RETRIES + 1):
        plane = [origin] + _random_points(rng, n - k - 1, bound, planar, exclude=(origin,))
        point_set = PointSet(plane + axis, label=f"near-coplanar(n={n},k={k},seed={seed})")
        if len(spanned_lines(point_set.subset(range(n - k)))) == 1:
            continue
        if plane_summary(point_set).max_coplanar != n - k:
            continue
        if not _off_plane_lines_clean(point_set, n - k):
            continue
        logger.debug(f"near-coplanar set accepted after {attempt} attempt(s)")
        return point_set
    raise GenerationError(f"no admissible near-coplanar set for n={n} k={k} after {MAX_RETRIES} attempts")


def gen_coplanar_heavy(n, alpha_num, alpha_den, seed=0, bound=10):
    if alpha_den <= 0:
        raise UsageError("alpha denominator must be positive")
    heavy = n * alpha_num // alpha_den
    if not 3 <= heavy <= n:
        raise UsageError(f"floor(alpha n) = {heavy} must lie in 3..{n}")
    _check_bound(bound)
    rng = random.Random(seed)

    def planar(r):
        return Point.affine(random_rational(r, bound), random_rational(r, bound), 0)

    def spatial(r):
        while True:
            z = random_rational(r, bound)
            if z != 0:
                return Point.affine(random_rational(r, bound), random_rational(r, bound), z)

    label = f"coplanar-heavy(n={n},alpha={alpha_num}/{alpha_den},seed={seed})"
    for attempt in range(1, MAX_RETRIES + 1):
        points = _random_points(rng, heavy, bound, planar) + _random_points(rng, n - heavy, bound, spatial)
        point_set = PointSet(points, label=label)
        if len(spanned_lines(point_set)) == 1:
            continue
        if plane_summary(point_set).max_coplanar == heavy:
            logger.debug(f"coplanar-heavy set accepted after {attempt} attempt(s)")
            return point_set
    raise GenerationError(f"no set with exactly {heavy} coplanar points after {MAX_RETRIES} attempts")


def gen_random(n, dim, bound=10, seed=0):
    if n < 1 or dim not in (2, 3):
        raise UsageError(f"random sets need n >= 1 and dim in (2, 3), got n={n} dim={dim}")
    _check_bound(bound)
    rng = random.Random(seed)

    def make(r):
        return Point.affine(*(random_rational(r, bound) for _ in range(dim)))

    points = _random_points(rng, n, bound, make)
    return PointSet(points, label=f"random(n={n},dim={dim},bound={bound},seed={seed})")


def gen_hesse():
    """The nine flexes of x^3 + y^3 + z^3 over Q(w): twelve 3-point lines, no ordinary line."""
    roots = (1, OMEGA, OMEGA * OMEGA)
    points = list()
    for r in roots:
        points.append(Point.projective(0, 1, -r, field="Qw"))
    for r in roots:
        points.append(Point.projective(1, 0, -r, field="Qw"))
    for r in roots:
        points.append(Point.projective(1, -r, 0, field="Qw"))
    return PointSet(points, label="hesse")


def boroczky_lines(m):
    """Lines of the conic-plus-line incidence model on 2m points.

    Conic points C_j have index j, line points D_i index m + i.
    """
    if not isinstance(m, int) or m < 4 or m % 2:
        raise UsageError(f"the model needs an even m >= 4, got {m!r}")
    half = m // 2
    lines = [tuple(range(m, 2 * m))]
    for j, k in combinations(range(m), 2):
        lines.append((j, k, m + (j + k + half) % m))
    for j in range(m):
        lines.append((j, m + (2 * j + half) % m))
    return lines


def boroczky_model(m):
    lines = boroczky_lines(m)
    n = 2 * m
    cover = Counter()
    for line in lines:
        for pair in combinations(sorted(line), 2):
            cover[pair] += 1
    for pair in combinations(range(n), 2):
        if cover[pair] != 1:
            raise InvariantViolation(f"model points {pair} lie on {cover[pair]} lines")
    t = Counter(len(line) for line in lines)
    t = {k: t[k] for k in sorted(t)}
    return BoroczkyModelSummary(m=m, n=n, ordinary=t.get(2, 0), t=t, num_lines=len(lines))


def gen_grid2d(a, b):
    if a < 2 or b < 2:
        raise UsageError(f"grid sides must be at least 2, got {a}x{b}")
    points = [Point.affine(x, y) for x in range(1, a + 1) for y in range(1, b + 1)]
    return PointSet(points, label=f"grid({a}x{b})")


def gen_axes(k):
    if k < 1:
        raise UsageError(f"need at least one point per axis, got {k}")
    points = [Point.affine(0, 0, 0)]
    for axis in range(3):
        for t in range(1, k + 1):
            coords = [0, 0, 0]
            coords[axis] = t
            points.append(Point.affine(*coords))
    return PointSet(points, label=f"axes(k={k})")


def gen_concurrent(lines, per_line, seed=0, bound=10, include_apex=False):
    """Planar points on ``lines`` distinct lines through the origin, ``per_line`` on each."""
    if lines < 2 or per_line < 1:
        raise UsageError(f"need at least 2 lines and 1 point per line, got {lines} and {per_line}")
    _check_bound(bound)
    rng = random.Random(seed)
    origin = Point.affine(0, 0)

    def direction(r):
        while True:
            dx, dy = r.randint(-bound, bound), r.randint(-bound, bound)
            if dx or dy:
                return Point.projective(dx, dy, 0)

    label = f"concurrent(lines={lines},per_line={per_line},seed={seed})"
    for attempt in range(1, MAX_RETRIES + 1):
        points = [origin] if include_apex else list()
        for d in _random_points(rng, lines, bound, direction):
            dx, dy = d.coords[0], d.coords[1]

            def on_line(r):
                while True:
                    s = random_rational(r, bound)
                    if s != 0:
                        return Point.affine(s * dx, s * dy)

            points += _random_points(rng, per_line, bound, on_line)
        point_set = PointSet(points, label=label)
        if len(spanned_lines(point_set)) > 1:
            return point_set
    raise GenerationError(f"only collinear concurrent sets after {MAX_RETRIES} attempts")
