# -*- coding: utf8
from itertools import combinations

import pytest
from hypothesis import given, settings

from ordlines.constructions import gen_axes, gen_grid2d, gen_hesse, gen_near_coplanar, gen_random, gen_two_skew
from ordlines.exceptions import DegenerateInputError, UsageError
from ordlines.geometry import Point, collinear, coplanar, incident
from ordlines.incidence import (
    PointSet,
    degree_split,
    image_point_set,
    kelly_trace,
    max_collinear,
    ordinary_degrees,
    ordinary_lines,
    plane_ordinary_profile,
    plane_summary,
    point_degrees,
    project_from,
    span_summary,
    spanned_lines,
)

from .conftest import (
    apply_affine,
    invertible_affine_maps,
    naive_line_histogram,
    naive_plane_counts,
    planar_sets,
    spatial_sets,
)

P = Point.affine


def collinear_points(count, dim=2):
    return PointSet([P(*([t] * dim)) for t in range(count)], label=f"{count} collinear")


class TestPointSet:
    def test_rejects_duplicates_and_mixing(self):
        with pytest.raises(UsageError):
            PointSet([P(1, 2), P(1, 2)])
        with pytest.raises(UsageError):
            PointSet([P(1, 2), P(1, 2, 3)])
        with pytest.raises(UsageError):
            PointSet([])

    def test_replace_and_subset(self, triangle):
        moved = triangle.replace(2, P(5, 5))
        assert moved[2] == P(5, 5)
        assert triangle[2] == P(0, 1)
        assert triangle.subset([0, 2]).points == (P(0, 0), P(0, 1))


class TestSpanSummary:
    def test_triangle(self, triangle):
        summary = span_summary(triangle)
        assert summary.t == {2: 3}
        assert (summary.ordinary, summary.num_lines, summary.max_collinear) == (3, 3, 2)

    def test_collinear(self):
        summary = span_summary(collinear_points(4))
        assert summary.t == {4: 1}
        assert summary.ordinary == 0
        assert summary.max_collinear == 4

    def test_two_skew_three(self):
        summary = span_summary(gen_two_skew(3))
        assert summary.ordinary == 9
        assert summary.t[3] == 2
        assert summary.num_lines == 11
        assert summary.pair_identity_holds()

    def test_needs_two_points(self):
        with pytest.raises(UsageError):
            span_summary(PointSet([P(0, 0)]))

    def test_grid(self):
        summary = span_summary(gen_grid2d(3, 3))
        assert summary.t == {2: 12, 3: 8}
        assert summary.num_lines == 20

    def test_hesse(self):
        summary = span_summary(gen_hesse())
        assert summary.t == {3: 12}
        assert summary.ordinary == 0
        assert summary.pair_identity_holds()
        assert point_degrees(gen_hesse()) == [4] * 9

    @given(planar_sets)
    @settings(max_examples=60, deadline=None)
    def test_matches_pairwise_oracle_in_the_plane(self, points):
        summary = span_summary(points)
        assert summary.t == naive_line_histogram(points)
        assert summary.pair_identity_holds()

    @given(spatial_sets)
    @settings(max_examples=60, deadline=None)
    def test_matches_pairwise_oracle_in_space(self, points):
        summary = span_summary(points)
        assert summary.t == naive_line_histogram(points)
        assert summary.pair_identity_holds()

    @given(spatial_sets, invertible_affine_maps())
    @settings(max_examples=40, deadline=None)
    def test_affine_invariance(self, points, affine):
        moved = apply_affine(affine, points)
        assert span_summary(moved).t == span_summary(points).t
        if len(spanned_lines(points)) > 1:
            before = sorted(plane_summary(points).plane_counts.values())
            assert sorted(plane_summary(moved).plane_counts.values()) == before

    def test_permutation_invariance(self):
        points = gen_two_skew(4)
        reversed_points = PointSet(reversed(points.points))
        assert span_summary(reversed_points) == span_summary(points)
        assert list(spanned_lines(reversed_points)) == list(spanned_lines(points))


class TestLines:
    def test_ordinary_lines(self):
        assert ordinary_lines(collinear_points(3)) == []
        assert ordinary_lines(gen_hesse()) == []
        skew = gen_two_skew(10)
        lines = ordinary_lines(skew)
        assert len(lines) == 100
        for line in lines:
            on = [i for i, p in enumerate(skew) if incident(line, p)]
            assert len(on) == 2
            assert on[0] < 10 <= on[1]

    def test_max_collinear(self, triangle):
        assert max_collinear(triangle) == 2
        assert max_collinear(collinear_points(5)) == 5
        assert max_collinear(gen_two_skew(4)) == 4

    def test_point_degrees(self, triangle):
        assert point_degrees(triangle) == [2, 2, 2]
        assert point_degrees(collinear_points(4)) == [1, 1, 1, 1]
        general = PointSet([P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1)])
        assert point_degrees(general) == [4] * 5

    def test_ordinary_degrees_and_split(self):
        skew = gen_two_skew(3)
        assert ordinary_degrees(skew) == [3] * 6
        assert point_degrees(skew) == [4] * 6
        # corners lie on 5 lines, edge midpoints on 6, the center on 4
        rich, poor = degree_split(gen_grid2d(3, 3), 6)
        assert rich == [1, 3, 5, 7]
        assert poor == [0, 2, 4, 6, 8]


class TestPlanes:
    def test_simplex(self, simplex):
        planes = plane_summary(simplex)
        assert len(planes.plane_members) == 4
        assert planes.max_coplanar == 3
        assert set(planes.plane_counts.values()) == {3}

    def test_two_skew(self):
        assert plane_summary(gen_two_skew(3)).max_coplanar == 4

    def test_near_coplanar(self):
        assert plane_summary(gen_near_coplanar(10, 2)).max_coplanar == 8

    def test_errors(self, triangle):
        with pytest.raises(UsageError):
            plane_summary(triangle)
        with pytest.raises(DegenerateInputError):
            plane_summary(collinear_points(4, dim=3))
        with pytest.raises(UsageError):
            plane_summary(PointSet([P(0, 0, 0), P(1, 0, 0)]))

    @given(spatial_sets)
    @settings(max_examples=50, deadline=None)
    def test_matches_triple_oracle(self, points):
        if len(spanned_lines(points)) == 1:
            return
        planes = plane_summary(points)
        naive = naive_plane_counts(points)
        assert planes.plane_counts == naive
        assert planes.max_coplanar == max(naive.values())

    def test_plane_ordinary_profile(self):
        profile = plane_ordinary_profile(gen_two_skew(3))
        assert len(profile) == 6
        for entry in profile:
            assert entry.points == 4
            # the three lines from the extra point to the full line
            assert entry.ordinary == 3


class TestProjection:
    def test_two_skew(self):
        image = project_from(gen_two_skew(4), 0)
        assert sorted(image.sizes) == [1, 1, 1, 1, 3]
        q1, unique = image_point_set(image)
        assert q1.n == 5
        assert sum(unique) == 4

    def test_collinear_from_middle(self):
        image = project_from(collinear_points(3, dim=3), 1)
        assert image.sizes == [2]
        q1, unique = image_point_set(image)
        assert q1.n == 1
        assert unique == (False,)

    def test_simplex(self, simplex):
        image = project_from(simplex, 0)
        assert image.sizes == [1, 1, 1]
        q1, unique = image_point_set(image)
        assert (q1.n, sum(unique)) == (3, 3)
        assert span_summary(q1).num_lines == 3

    def test_bad_center(self, simplex, triangle):
        with pytest.raises(UsageError):
            project_from(simplex, 4)
        with pytest.raises(UsageError):
            project_from(triangle, 0)


class TestKellyTrace:
    def test_axes(self):
        report = kelly_trace(gen_axes(2), 0)
        assert (report.q1_size, report.q2_size, report.l1_size) == (3, 0, 3)
        assert len(set(report.found_ordinary)) >= 3
        for plane in report.planes:
            assert plane.points == 5
            assert plane.ordinary_avoiding_center == 4

    def test_simplex(self, simplex):
        report = kelly_trace(simplex, 1)
        assert report.l1_size == 0
        assert report.found_ordinary == ()

    def test_two_skew(self):
        points = gen_two_skew(4)
        report = kelly_trace(points, 0)
        assert (report.q1_size, report.q2_size, report.l1_size) == (5, 4, 0)

    def test_two_skew_from_every_center(self):
        points = gen_two_skew(5)
        ordinary = set(ordinary_lines(points))
        for center in range(points.n):
            report = kelly_trace(points, center)
            assert set(report.found_ordinary) <= ordinary

    def test_rejects_extension_field(self):
        with pytest.raises(UsageError):
            kelly_trace(gen_hesse(), 0)

    def test_many_centers_on_random_sets(self):
        points = gen_random(9, 3, bound=2, seed=3)
        ordinary = set(ordinary_lines(points))
        for center in range(points.n):
            report = kelly_trace(points, center)
            assert report.l1_size <= len(report.found_ordinary)
            assert set(report.found_ordinary) <= ordinary
            center_point = points[center]
            assert not any(line.contains(center_point) for line in report.found_ordinary)


@given(spatial_sets)
@settings(max_examples=50, deadline=None)
def test_projection_matches_coplanarity_with_center(points):
    center = points[0]
    image = project_from(points, 0)
    assert sum(image.sizes) == points.n - 1
    for _, indices in image.groups:
        for i, j in combinations(indices, 2):
            assert collinear(center, points[i], points[j])
    groups = image.groups
    for a, b, c in combinations(range(len(groups)), 3):
        i, j, k = groups[a][1][0], groups[b][1][0], groups[c][1][0]
        images_collinear = collinear(groups[a][0], groups[b][0], groups[c][0])
        assert images_collinear == coplanar(center, points[i], points[j], points[k])
