#!/usr/bin/python
# -*- coding: utf8
"""
Constant formulas of the quadratic ordinary-line bound and verifiers of the
statements it builds on.

Every constant is an exact :class:`~fractions.Fraction`. Statements that only
hold for sufficiently large n (with an unquantified threshold) are reported,
never asserted.
"""
import logging
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from ordlines.constructions import near_coplanar_count
from ordlines.exceptions import DomainError, UsageError
from ordlines.field import RATIONAL
from ordlines.geometry import Kind, check_compatible, line_key, lines_skew
from ordlines.incidence import (
    degree_split,
    kelly_trace,
    ordinary_degrees,
    ordinary_lines,
    plane_summary,
    span_summary,
    spanned_lines,
)

logger = logging.getLogger(__name__)

BETA = Fraction(2, 3)
GAMMA = Fraction(1, 9)

N_K_CAVEAT = (
    "the lower bound is only claimed for n >= n_k, and n_k is not quantified; "
    "a failing comparison at this size is a report, not a counterexample"
)


@dataclass(frozen=True)
class BoundConstants:
    alpha: Fraction
    beta: Fraction
    gamma: Fraction
    alpha0: Fraction
    c_alpha0: Fraction
    mu: Fraction
    nu: Fraction
    gamma_prime_case1: Fraction
    gamma_prime_case2b: Fraction
    d_case1: Fraction
    d_case2a: Fraction
    d_case2b: Fraction
    d_alpha: Fraction
    half_plane_bound: object = None

    def gamma_prime(self, beta_prime):
        return gamma_prime(beta_prime, self.beta, self.gamma)


@dataclass(frozen=True)
class GridConstant:
    alpha1: Fraction
    c_alpha0: Fraction
    grid_min_d: Fraction
    grid_argmin: Fraction
    c_alpha1: Fraction
    points: int


@dataclass(frozen=True)
class SylvesterGallaiResult:
    holds: bool
    collinear: bool
    witness: object
    field: str


@dataclass(frozen=True)
class SkewBoundResult:
    lhs: int
    rhs: int
    on_line1: int
    on_line2: int
    holds: bool


@dataclass(frozen=True)
class AlmostCoplanarResult:
    n: int
    k: int
    count: int
    bound: Fraction
    construction_count: Fraction
    max_coplanar: object
    holds: bool
    caveat: str


@dataclass(frozen=True)
class SmallLineCounts:
    n: int
    n_squared: int
    lines_le3: int
    lines_le4: int


@dataclass(frozen=True)
class ConcurrentProbe:
    contained_in: int
    ordinary_avoiding_apex: int
    apex_in_set: bool
    guaranteed: bool
    holds: bool


@dataclass(frozen=True)
class BeckReport:
    n: int
    num_lines: int
    max_collinear: int
    ratio_lines: Fraction
    ratio_collinear: Fraction
    beta: Fraction
    gamma: Fraction
    hypothesis: bool
    conclusion: bool


@dataclass(frozen=True)
class FewCoplanarReport:
    n: int
    beta: Fraction
    gamma: Fraction
    num_lines: int
    enough_lines: bool
    rich: tuple
    rich_enough: bool
    all_rich_ordinary: bool
    center: object
    center_ordinary: object
    trace: object


def _check_unit(name, value):
    value = Fraction(value)
    if not 0 < value < 1:
        raise UsageError(f"{name} must lie strictly between 0 and 1, got {value}")
    return value


def gamma_prime(beta_prime, beta, gamma):
    """Spanned-line constant for sets with at most beta' n collinear points.

    The argument splits into branches with different constants; the minimum
    is the value that holds whichever branch applies.
    """
    beta_prime = Fraction(beta_prime)
    if not 0 < beta_prime < 1:
        raise DomainError(f"beta' = {beta_prime} is outside (0, 1)")
    return min(gamma, gamma * (1 - beta_prime) ** 2, beta ** 2 * (1 - beta_prime) / 2)


def bound_constants(alpha, beta=BETA, gamma=GAMMA):
    alpha = _check_unit("alpha", alpha)
    beta = _check_unit("beta", beta)
    gamma = _check_unit("gamma", gamma)

    mu = alpha - min(alpha, beta, gamma) * (1 - alpha) ** 2 / 4
    nu = 2 * mu - alpha + gamma * (1 - alpha) ** 2
    if nu <= 0:
        raise DomainError(f"nu = {nu} is not positive")

    gp1 = gamma_prime(mu / alpha, beta, gamma)
    gp2b = gamma_prime(alpha / nu, beta, gamma)

    d_case1 = min(gp1 * alpha ** 2 * (1 - alpha) / 4, gp1 * alpha ** 2 / 2)
    d_case2a = mu * beta * (1 - alpha) / 2
    d_case2b = min(alpha * gp2b / 4, gp2b / 2)

    return BoundConstants(
        alpha=alpha,
        beta=beta,
        gamma=gamma,
        alpha0=beta * gamma,
        c_alpha0=gamma ** 5 / 2,
        mu=mu,
        nu=nu,
        gamma_prime_case1=gp1,
        gamma_prime_case2b=gp2b,
        d_case1=d_case1,
        d_case2a=d_case2a,
        d_case2b=d_case2b,
        d_alpha=min(d_case1, d_case2a, d_case2b),
        half_plane_bound=(1 - alpha) * (2 * alpha - 1) if alpha > Fraction(1, 2) else None,
    )


def alpha_grid(steps=100):
    return [Fraction(i, steps) for i in range(1, steps)]


def main_constant_on_grid(alpha1, beta=BETA, gamma=GAMMA, steps=100):
    """min(c_alpha0, min d_alpha) over the grid points alpha0 <= alpha <= alpha1."""
    alpha1 = _check_unit("alpha1", alpha1)
    alpha0 = Fraction(beta) * Fraction(gamma)
    grid = [a for a in alpha_grid(steps) if alpha0 <= a <= alpha1]
    if alpha1 >= alpha0 and alpha1 not in grid:
        grid.append(alpha1)
    c_alpha0 = Fraction(gamma) ** 5 / 2
    if not grid:
        return GridConstant(alpha1, c_alpha0, None, None, c_alpha0, 0)
    values = [(bound_constants(a, beta, gamma).d_alpha, a) for a in grid]
    best, argmin = min(values)
    return GridConstant(
        alpha1=alpha1,
        c_alpha0=c_alpha0,
        grid_min_d=best,
        grid_argmin=argmin,
        c_alpha1=min(c_alpha0, best),
        points=len(grid),
    )


def _require_planar(point_set):
    if not point_set.kind.is_planar:
        raise UsageError("this check applies to planar point sets")


def verify_sylvester_gallai(point_set):
    _require_planar(point_set)
    if point_set.n < 3:
        raise UsageError(f"need at least three points, got {point_set.n}")
    lines = ordinary_lines(point_set)
    is_collinear = len(spanned_lines(point_set)) == 1
    return SylvesterGallaiResult(
        holds=is_collinear or bool(lines),
        collinear=is_collinear,
        witness=lines[0] if lines else None,
        field=point_set.field,
    )


def verify_skew_bound(point_set, line1, line2):
    if point_set.kind is not Kind.AFFINE3:
        raise UsageError("the skew-lines bound is about point sets in space")
    if not lines_skew(line1, line2):
        raise UsageError(f"lines {line1} and {line2} are coplanar, not skew")
    on1 = sum(1 for p in point_set if line1.contains(p))
    on2 = sum(1 for p in point_set if line2.contains(p))
    lhs = span_summary(point_set).ordinary
    rhs = on1 * on2 - point_set.n
    return SkewBoundResult(lhs=lhs, rhs=rhs, on_line1=on1, on_line2=on2, holds=lhs >= rhs)


def almost_coplanar_bound(n, k):
    return (k + Fraction(1, 2)) * (n - k) - comb(k, 2)


def almost_coplanar_construction(n, k):
    """Ordinary lines of n - k points with (n - k)/2 ordinary lines in a plane plus k on a line through one of them."""
    return near_coplanar_count(n, k, Fraction(n - k, 2))


def almost_coplanar_profile(n, l):
    """Lower estimate when exactly n - l points are coplanar, for large n."""
    return l * (n - l) - comb(l, 2) + Fraction(n - l, 2)


def verify_almost_coplanar(point_set, k):
    if point_set.kind is not Kind.AFFINE3:
        raise UsageError("the almost-coplanar bound is about point sets in space")
    if k < 0:
        raise UsageError(f"k must be nonnegative, got {k}")
    n = point_set.n
    max_coplanar = None
    if k > 0:
        planes = plane_summary(point_set)
        max_coplanar = planes.max_coplanar
        if max_coplanar > n - k:
            plane, members = planes.heaviest()
            raise UsageError(f"plane {plane} holds {len(members)} > n - k = {n - k} points")
    count = span_summary(point_set).ordinary
    bound = almost_coplanar_bound(n, k)
    return AlmostCoplanarResult(
        n=n,
        k=k,
        count=count,
        bound=bound,
        construction_count=almost_coplanar_construction(n, k),
        max_coplanar=max_coplanar,
        holds=count >= bound,
        caveat=N_K_CAVEAT,
    )


def small_line_counts(point_set):
    _require_planar(point_set)
    t = span_summary(point_set).t
    le3 = t.get(2, 0) + t.get(3, 0)
    return SmallLineCounts(
        n=point_set.n,
        n_squared=point_set.n ** 2,
        lines_le3=le3,
        lines_le4=le3 + t.get(4, 0),
    )


def concurrent_lines_probe(point_set, apex):
    """Ordinary lines avoiding the common point of the lines through ``apex`` covering the set.

    Over the rationals a set on three or four concurrent lines must have such
    a line; over Q(w) the outcome is reported as found.
    """
    _require_planar(point_set)
    check_compatible(point_set[0], apex)
    if len(spanned_lines(point_set)) == 1:
        raise UsageError("the point set is contained in one line")

    pencil = set()
    apex_in_set = False
    for p in point_set:
        if p == apex:
            apex_in_set = True
            continue
        pencil.add(line_key(apex, p))

    avoiding = [line for line in ordinary_lines(point_set) if not line.contains(apex)]
    guaranteed = point_set.field == RATIONAL and len(pencil) in (3, 4)
    return ConcurrentProbe(
        contained_in=len(pencil),
        ordinary_avoiding_apex=len(avoiding),
        apex_in_set=apex_in_set,
        guaranteed=guaranteed,
        holds=bool(avoiding) or not guaranteed,
    )


def beck_report(point_set, beta=BETA, gamma=GAMMA):
    summary = span_summary(point_set)
    n = point_set.n
    return BeckReport(
        n=n,
        num_lines=summary.num_lines,
        max_collinear=summary.max_collinear,
        ratio_lines=Fraction(summary.num_lines, n * n),
        ratio_collinear=Fraction(summary.max_collinear, n),
        beta=Fraction(beta),
        gamma=Fraction(gamma),
        hypothesis=summary.max_collinear <= beta * n,
        conclusion=summary.num_lines >= gamma * n * n,
    )


def few_coplanar_pipeline(point_set, beta=BETA, gamma=GAMMA):
    """The few-coplanar argument as a trace on one concrete set.

    Splits the points by the number of spanned lines through them at gamma*n,
    picks the rich point on the fewest ordinary lines and projects from it.
    Inequalities of the argument are reported as booleans.
    """
    if point_set.kind is not Kind.AFFINE3 or point_set.field != RATIONAL:
        raise UsageError("the pipeline runs on rational point sets in space")
    beta, gamma = Fraction(beta), Fraction(gamma)
    n = point_set.n
    summary = span_summary(point_set)
    rich, _ = degree_split(point_set, gamma * n)
    rich = tuple(rich)
    ordinary = ordinary_degrees(point_set)

    center = None
    trace = None
    if rich:
        center = min(rich, key=lambda i: (ordinary[i], i))
        trace = kelly_trace(point_set, center)
        logger.info(f"projecting from point {center} with {ordinary[center]} ordinary lines")

    return FewCoplanarReport(
        n=n,
        beta=beta,
        gamma=gamma,
        num_lines=summary.num_lines,
        enough_lines=summary.num_lines >= gamma * n * n,
        rich=rich,
        rich_enough=len(rich) >= gamma * n,
        all_rich_ordinary=bool(rich) and all(ordinary[i] >= gamma ** 4 * n for i in rich),
        center=center,
        center_ordinary=None if center is None else ordinary[center],
        trace=trace,
    )

