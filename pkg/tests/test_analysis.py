# -*- coding: utf8
import random
from fractions import Fraction
from math import comb

import pytest

from ordlines import analysis
from ordlines.constructions import (
    gen_axes,
    gen_concurrent,
    gen_grid2d,
    gen_hesse,
    gen_near_coplanar,
    gen_random,
    gen_two_skew,
)
from ordlines.exceptions import DomainError, UsageError
from ordlines.geometry import Point, canon_line
from ordlines.incidence import PointSet, degree_split, span_summary

P = Point.affine
F = Fraction


class TestConstants:
    def test_alpha0_and_its_constant(self):
        c = analysis.bound_constants(F(2, 27), F(2, 3), F(1, 9))
        assert c.alpha0 == F(2, 27)
        assert c.c_alpha0 == F(1, 118098)
        assert F(1, 9) ** 5 / 2 == F(1, 118098)

    def test_half(self):
        c = analysis.bound_constants(F(1, 2))
        assert c.mu == F(71, 144)
        assert c.nu == F(37, 72)
        assert c.half_plane_bound is None
        assert c.d_alpha == min(c.d_case1, c.d_case2a, c.d_case2b)
        assert c.d_alpha > 0

    def test_half_plane_bound(self):
        assert analysis.bound_constants(F(3, 4)).half_plane_bound == F(1, 8)

    def test_d_alpha_positive_on_grid(self):
        for alpha in analysis.alpha_grid():
            c = analysis.bound_constants(alpha)
            assert c.d_alpha > 0
            assert 0 < c.mu < alpha < c.nu
            assert 0 < c.gamma_prime_case1 <= c.gamma

    def test_gamma_prime(self):
        assert analysis.gamma_prime(F(1, 2), F(2, 3), F(1, 9)) == F(1, 36)
        with pytest.raises(DomainError):
            analysis.gamma_prime(1, F(2, 3), F(1, 9))
        with pytest.raises(DomainError):
            analysis.gamma_prime(0, F(2, 3), F(1, 9))

    def test_parameters_must_lie_in_the_unit_interval(self):
        with pytest.raises(UsageError):
            analysis.bound_constants(0)
        with pytest.raises(UsageError):
            analysis.bound_constants(F(1, 2), beta=1)

    def test_main_constant_on_grid(self):
        grid = analysis.main_constant_on_grid(F(1, 2))
        assert grid.points == 43
        assert grid.c_alpha1 == min(grid.c_alpha0, grid.grid_min_d)
        assert 0 < grid.c_alpha1 <= F(1, 118098)
        below = analysis.main_constant_on_grid(F(1, 20))
        assert below.points == 0
        assert below.c_alpha1 == F(1, 118098)


class TestSylvesterGallai:
    def test_random_rational_sets(self):
        checked = 0
        for seed in range(200):
            points = gen_random(3 + seed % 8, 2, bound=3, seed=seed)
            result = analysis.verify_sylvester_gallai(points)
            assert result.holds
            if not result.collinear:
                assert result.witness is not None
                checked += 1
        assert checked > 150

    def test_grid(self):
        result = analysis.verify_sylvester_gallai(gen_grid2d(3, 3))
        assert result.holds
        assert result.witness is not None

    def test_collinear(self):
        result = analysis.verify_sylvester_gallai(PointSet([P(t, 2 * t) for t in range(5)]))
        assert result.holds and result.collinear
        assert result.witness is None

    def test_hesse_fails(self):
        result = analysis.verify_sylvester_gallai(gen_hesse())
        assert not result.holds
        assert result.field == "Qw"

    def test_needs_planar_input(self):
        with pytest.raises(UsageError):
            analysis.verify_sylvester_gallai(gen_two_skew(3))


class TestSkewBound:
    def test_two_skew(self):
        points = gen_two_skew(5)
        result = analysis.verify_skew_bound(points, canon_line(points[0], points[1]), canon_line(points[5], points[6]))
        assert (result.lhs, result.rhs, result.on_line1, result.on_line2) == (25, 15, 5, 5)
        assert result.holds

    def test_extra_point(self):
        points = PointSet(list(gen_two_skew(5)) + [P(7, 11, 13)])
        line1 = canon_line(points[0], points[1])
        line2 = canon_line(points[5], points[6])
        result = analysis.verify_skew_bound(points, line1, line2)
        assert result.rhs == 14
        assert result.lhs == span_summary(points).ordinary
        assert result.holds

    def test_two_points_per_line(self):
        points = gen_two_skew(2)
        result = analysis.verify_skew_bound(points, canon_line(points[0], points[1]), canon_line(points[2], points[3]))
        assert result.rhs <= 0
        assert result.holds

    def test_randomized_supersets(self):
        rng = random.Random(0)
        for trial in range(100):
            m = rng.randint(3, 8)
            base = list(gen_two_skew(m))
            extra = [p for p in gen_random(rng.randint(1, 5), 3, bound=4, seed=trial) if p not in base]
            points = PointSet(base + extra)
            line1 = canon_line(points[0], points[1])
            line2 = canon_line(points[m], points[m + 1])
            assert analysis.verify_skew_bound(points, line1, line2).holds

    def test_rejects_coplanar_lines(self):
        points = gen_two_skew(3)
        with pytest.raises(UsageError):
            analysis.verify_skew_bound(points, canon_line(points[0], points[1]), canon_line(points[0], points[3]))


class TestAlmostCoplanar:
    def test_near_coplanar(self):
        result = analysis.verify_almost_coplanar(gen_near_coplanar(30, 3, seed=2), 3)
        assert result.bound == F(183, 2)
        assert result.max_coplanar == 27
        assert result.holds
        assert result.caveat

    def test_formulas(self):
        assert analysis.almost_coplanar_bound(30, 1) == F(87, 2)
        assert analysis.almost_coplanar_construction(30, 1) == F(3 * 30, 2) - F(3, 2)
        assert analysis.almost_coplanar_construction(20, 3) == 3 * 17 + F(17, 2) - 3
        assert analysis.almost_coplanar_bound(12, 0) == 6
        assert analysis.almost_coplanar_profile(30, 3) == 3 * 27 - 3 + F(27, 2)

    def test_k_zero(self):
        result = analysis.verify_almost_coplanar(gen_two_skew(4), 0)
        assert result.bound == 4
        assert result.max_coplanar is None

    def test_precondition(self):
        with pytest.raises(UsageError, match="plane"):
            analysis.verify_almost_coplanar(gen_two_skew(5), 5)


class TestPlanarReports:
    def test_small_line_counts(self):
        assert analysis.small_line_counts(gen_grid2d(3, 3)).lines_le3 == 20
        assert analysis.small_line_counts(gen_hesse()).lines_le3 == 12
        triangle = PointSet([P(0, 0), P(1, 0), P(0, 1)])
        counts = analysis.small_line_counts(triangle)
        assert (counts.lines_le3, counts.lines_le4, counts.n_squared) == (3, 3, 9)

    def test_concurrent_probe(self):
        result = analysis.concurrent_lines_probe(gen_concurrent(3, 2, seed=11), P(0, 0))
        assert result.contained_in == 3
        assert result.guaranteed
        assert result.ordinary_avoiding_apex >= 1
        assert result.holds

    def test_concurrent_probe_on_axes_plane(self):
        planar = PointSet([P(p.coords[0], p.coords[1]) for p in gen_axes(2) if p.coords[2] == 0])
        result = analysis.concurrent_lines_probe(planar, P(0, 0))
        assert result.contained_in == 2
        assert result.apex_in_set
        assert result.ordinary_avoiding_apex == 4
        assert not result.guaranteed

    def test_concurrent_probe_rejects_one_line(self):
        with pytest.raises(UsageError):
            analysis.concurrent_lines_probe(PointSet([P(t, 0) for t in range(1, 4)]), P(0, 0))

    def test_beck_report(self):
        assert analysis.beck_report(gen_grid2d(3, 3)).ratio_lines == F(20, 81)
        assert analysis.beck_report(PointSet([P(t, 0) for t in range(5)])).ratio_collinear == 1
        general = PointSet([P(0, 0, 0), P(1, 0, 0), P(0, 1, 0), P(0, 0, 1), P(1, 1, 1)])
        report = analysis.beck_report(general)
        assert report.ratio_lines == F(comb(5, 2), 25)
        assert report.hypothesis and report.conclusion


class TestPipeline:
    def test_two_skew(self):
        report = analysis.few_coplanar_pipeline(gen_two_skew(5))
        assert report.n == 10
        assert report.enough_lines
        assert report.rich == tuple(range(10))
        assert report.rich_enough and report.all_rich_ordinary
        assert report.center == 0
        assert report.center_ordinary == 5
        assert report.trace.center == 0

    def test_rich_points_follow_degree_split(self):
        points = gen_axes(2)
        report = analysis.few_coplanar_pipeline(points, gamma=F(4, 7))
        rich, poor = degree_split(points, 4)
        assert report.rich == tuple(rich)
        # the origin sees only the three axes
        assert [points[i] for i in poor] == [P(0, 0, 0)]

    def test_rejects_planar_sets(self):
        with pytest.raises(UsageError):
            analysis.few_coplanar_pipeline(gen_grid2d(3, 3))
