# -*- coding: utf8
from collections import Counter
from fractions import Fraction
from itertools import combinations

import pytest
from hypothesis import strategies as st

from ordlines.geometry import Point, canon_plane, collinear, coplanar
from ordlines.incidence import PointSet

rationals = st.builds(Fraction, st.integers(-6, 6), st.integers(1, 4))


def point_sets(dim, min_size=3, max_size=8):
    coords = st.tuples(*([rationals] * dim))
    return st.lists(coords, min_size=min_size, max_size=max_size, unique=True).map(
        lambda rows: PointSet([Point.affine(*row) for row in rows])
    )


planar_sets = point_sets(2)
spatial_sets = point_sets(3)


def naive_line_histogram(point_set):
    """t[k] from the size of the line through every pair, by direct predicate checks."""
    pts = list(point_set)
    sizes = Counter()
    for i, j in combinations(range(len(pts)), 2):
        on_line = 2 + sum(
            1 for k in range(len(pts)) if k not in (i, j) and collinear(pts[i], pts[j], pts[k])
        )
        sizes[on_line] += 1
    return {k: sizes[k] // (k * (k - 1) // 2) for k in sorted(sizes)}


def naive_plane_counts(point_set):
    """{canon_plane: points on it} from every non-collinear triple, by direct predicate checks."""
    pts = list(point_set)
    counts = dict()
    for i, j, k in combinations(range(len(pts)), 3):
        if collinear(pts[i], pts[j], pts[k]):
            continue
        plane = canon_plane(pts[i], pts[j], pts[k])
        if plane not in counts:
            counts[plane] = sum(1 for p in pts if coplanar(pts[i], pts[j], pts[k], p))
    return counts


def det3(m):
    return (
        m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1])
        - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
        + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
    )


def invertible_affine_maps():
    """Rational 3x3 matrices with nonzero determinant plus a rational translation."""
    matrices = st.tuples(*([st.tuples(rationals, rationals, rationals)] * 3)).filter(lambda m: det3(m) != 0)
    return st.tuples(matrices, st.tuples(rationals, rationals, rationals))


def random_affine_map(rng):
    """Seeded counterpart of :func:`invertible_affine_maps` for fixed test sets."""

    def rational():
        return Fraction(rng.randint(-6, 6), rng.randint(1, 4))

    while True:
        matrix = tuple(tuple(rational() for _ in range(3)) for _ in range(3))
        if det3(matrix) != 0:
            return matrix, tuple(rational() for _ in range(3))


def apply_affine(affine, point_set):
    matrix, shift = affine
    moved = list()
    for p in point_set:
        moved.append(
            Point.affine(*(sum(row[c] * p.coords[c] for c in range(3)) + shift[r] for r, row in enumerate(matrix)))
        )
    return PointSet(moved, label=point_set.label)


@pytest.fixture
def triangle():
    return PointSet([Point.affine(0, 0), Point.affine(1, 0), Point.affine(0, 1)], label="triangle")


@pytest.fixture
def simplex():
    return PointSet(
        [Point.affine(0, 0, 0), Point.affine(1, 0, 0), Point.affine(0, 1, 0), Point.affine(0, 0, 1)],
        label="simplex",
    )


@pytest.fixture
def write_points(tmp_path):
    def write(text, name="points.txt"):
        path = tmp_path / name
        path.write_text(text, encoding="utf-8")
        return str(path)

    return write
