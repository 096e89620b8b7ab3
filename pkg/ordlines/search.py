#!/usr/bin/python
# -*- coding: utf8
"""
Simulated annealing over rational point sets in space.

The objective is the number of ordinary lines, the constraint a cap of
floor(alpha n) points on any plane. The engine never touches floating
point: temperatures are fractions and the acceptance probability comes from
a piecewise-linear table of exp(-x).
"""
import logging
import random
from dataclasses import dataclass, field
from fractions import Fraction

from ordlines.constructions import gen_random, random_rational
from ordlines.exceptions import GenerationError, InvariantViolation, UsageError
from ordlines.field import RATIONAL
from ordlines.geometry import Kind, Point, collinear, plane_key
from ordlines.incidence import plane_ordinary_profile, plane_summary, span_summary, spanned_lines

logger = logging.getLogger(__name__)

# exp(-x) at x = 0, 1/2, 1, ..., 8, scaled by 10**8
_EXP_TABLE = (
    100000000, 60653066, 36787944, 22313016, 13533528, 8208500, 4978707, 3019738, 1831564,
    1110900, 673795, 408677, 247875, 150344, 91188, 55308, 33546,
)
_EXP_STEP = Fraction(1, 2)
_EXP_SCALE = 10 ** 8
_UNIFORM_SCALE = 10 ** 9
_MIN_TEMPERATURE = Fraction(1, 10 ** 9)

MOVES = ("perturb", "snap_to_line", "snap_to_plane", "restart_point")


@dataclass(frozen=True)
class MoveWeights:
    perturb: int = 4
    snap_to_line: int = 2
    snap_to_plane: int = 2
    restart_point: int = 1

    def __post_init__(self):
        weights = self.as_tuple()
        if any(not isinstance(w, int) or w < 0 for w in weights):
            raise UsageError(f"move weights must be nonnegative integers, got {weights}")
        if not any(weights):
            raise UsageError("at least one move weight must be positive")

    def as_tuple(self):
        return (self.perturb, self.snap_to_line, self.snap_to_plane, self.restart_point)


@dataclass(frozen=True)
class SearchConfig:
    n: int
    alpha: Fraction
    iterations: int
    seed: int = 0
    coordinate_bound: int = 10
    initial: object = None
    move_weights: MoveWeights = field(default_factory=MoveWeights)
    initial_temperature: Fraction = Fraction(2)
    cooling: Fraction = Fraction(999, 1000)
    height_limit: int = 10 ** 6

    def __post_init__(self):
        object.__setattr__(self, "alpha", Fraction(self.alpha))
        object.__setattr__(self, "initial_temperature", Fraction(self.initial_temperature))
        object.__setattr__(self, "cooling", Fraction(self.cooling))
        if self.iterations < 0:
            raise UsageError(f"iterations must be nonnegative, got {self.iterations}")
        if not 0 < self.alpha <= 1:
            raise UsageError(f"alpha must lie in (0, 1], got {self.alpha}")
        if self.cap < 3:
            raise UsageError(f"floor(alpha n) = {self.cap} leaves no feasible configuration")
        if self.coordinate_bound < 1:
            raise UsageError("coordinate bound must be positive")
        if self.initial_temperature < 0 or not 0 < self.cooling <= 1:
            raise UsageError("temperature must be nonnegative and cooling in (0, 1]")
        if self.initial is not None:
            if self.initial.n != self.n:
                raise UsageError(f"initial set has {self.initial.n} points, expected {self.n}")
            if self.initial.kind is not Kind.AFFINE3 or self.initial.field != RATIONAL:
                raise UsageError("the initial set must be a rational point set in space")

    @property
    def cap(self):
        return self.n * self.alpha.numerator // self.alpha.denominator


@dataclass(frozen=True)
class SearchResult:
    best: object
    best_count: int
    ratio: Fraction
    accepted_moves: int
    trace: tuple
    plane_profile: tuple


def acceptance_probability(delta, temperature):
    """exp(-delta / temperature), interpolated on a fixed table, as a fraction."""
    if delta <= 0:
        return Fraction(1)
    if temperature <= 0:
        return Fraction(0)
    x = Fraction(delta) / temperature
    slot = x / _EXP_STEP
    index = slot.numerator // slot.denominator
    if index >= len(_EXP_TABLE) - 1:
        return Fraction(0)
    low, high = _EXP_TABLE[index], _EXP_TABLE[index + 1]
    frac = slot - index
    return (low + (high - low) * frac) / _EXP_SCALE


def max_coplanar(points):
    """Maximum number of points on a plane, n when they are all collinear."""
    lines = spanned_lines(points)
    if len(lines) == 1:
        return points.n
    return plane_summary(points).max_coplanar


def _max_coplanar_through(points, index):
    """Maximum number of points on a plane through ``points[index]``."""
    x = points[index]
    others = [i for i in range(points.n) if i != index]
    planes = dict()
    for a in range(len(others)):
        p = points[others[a]]
        for b in range(a + 1, len(others)):
            q = points[others[b]]
            key = plane_key(x, p, q)
            if key is None:
                continue
            planes.setdefault(key, set()).update((others[a], others[b]))
    if not planes:
        return points.n
    return max(len(members) for members in planes.values()) + 1


class Annealer:
    def __init__(self, config):
        self.config = config
        self.rng = random.Random(config.seed)
        self.bound = config.coordinate_bound

    def random_point(self):
        return Point.affine(*(random_rational(self.rng, self.bound) for _ in range(3)))

    def initial_set(self):
        cfg = self.config
        if cfg.initial is not None:
            if max_coplanar(cfg.initial) > cfg.cap:
                raise UsageError(f"initial set has more than {cfg.cap} coplanar points")
            return cfg.initial
        # 随机起点，直到满足共面上限
        for attempt in range(100):
            start = gen_random(cfg.n, 3, self.bound, seed=self.rng.getrandbits(64))
            if max_coplanar(start) <= cfg.cap:
                return start
        raise GenerationError(f"no random start with at most {cfg.cap} coplanar points after 100 attempts")

    def pick_move(self):
        weights = self.config.move_weights.as_tuple()
        r = self.rng.randrange(sum(weights))
        for move, w in zip(MOVES, weights):
            if r < w:
                return move
            r -= w

    def propose(self, points, move):
        """Return (index, new point) or None when the move does not apply."""
        n = points.n
        i = self.rng.randrange(n)
        others = [j for j in range(n) if j != i]
        if move == "perturb":
            coords = list(points[i].coords)
            coords[self.rng.randrange(3)] = random_rational(self.rng, self.bound)
            return i, Point.affine(*coords)
        if move == "restart_point":
            return i, self.random_point()
        if move == "snap_to_line":
            if len(others) < 2:
                return None
            a, b = self.rng.sample(others, 2)
            t = random_rational(self.rng, self.bound)
            pa, pb = points[a].coords, points[b].coords
            return i, Point.affine(*(u + t * (v - u) for u, v in zip(pa, pb)))
        if move == "snap_to_plane":
            if len(others) < 3:
                return None
            a, b, c = self.rng.sample(others, 3)
            if collinear(points[a], points[b], points[c]):
                return None
            s = random_rational(self.rng, self.bound)
            t = random_rational(self.rng, self.bound)
            pa, pb, pc = points[a].coords, points[b].coords, points[c].coords
            return i, Point.affine(*(u + s * (v - u) + t * (w - u) for u, v, w in zip(pa, pb, pc)))
        raise UsageError(f"unknown move {move!r}")

    def too_tall(self, point):
        limit = self.config.height_limit
        return any(abs(c.numerator) > limit or c.denominator > limit for c in point.coords)

    def run(self, progress=None):
        cfg = self.config
        current = self.initial_set()
        current_count = span_summary(current).ordinary
        best, best_count = current, current_count
        trace = [(0, current_count)]
        accepted = 0
        temperature = cfg.initial_temperature
        logger.debug(f"search start: n={cfg.n} cap={cfg.cap} count={current_count}")

        for iteration in range(1, cfg.iterations + 1):
            if progress is not None:
                progress(1)
            move = self.pick_move()
            proposal = self.propose(current, move)
            temperature = (temperature * cfg.cooling).limit_denominator(10 ** 12)
            if temperature < _MIN_TEMPERATURE:
                temperature = Fraction(0)
            if proposal is None:
                continue
            index, point = proposal
            if self.too_tall(point) or point in current.points:
                continue
            candidate = current.replace(index, point)
            count = span_summary(candidate).ordinary

            threshold = acceptance_probability(count - current_count, temperature)
            draw = Fraction(self.rng.randrange(_UNIFORM_SCALE), _UNIFORM_SCALE)
            if draw >= threshold:
                continue
            if _max_coplanar_through(candidate, index) > cfg.cap:
                continue

            current, current_count = candidate, count
            accepted += 1
            if count < best_count:
                best, best_count = candidate, count
                trace.append((iteration, count))
                logger.debug(f"iteration {iteration}: {move} improves to {count}")

        self._verify(best, best_count)
        logger.info(f"search done: best {best_count} ordinary lines, {accepted} moves accepted")
        return SearchResult(
            best=best,
            best_count=best_count,
            ratio=Fraction(best_count, cfg.n ** 2),
            accepted_moves=accepted,
            trace=tuple(trace),
            plane_profile=tuple(plane_ordinary_profile(best)) if len(spanned_lines(best)) > 1 else (),
        )

    def _verify(self, best, best_count):
        recount = span_summary(best)
        if recount.ordinary != best_count or not recount.pair_identity_holds():
            raise InvariantViolation(f"best count {best_count} disagrees with recount {recount.ordinary}")
        if max_coplanar(best) > self.config.cap:
            raise InvariantViolation(f"best set breaks the cap of {self.config.cap} coplanar points")


def minimize_ordinary(config, progress=None):
    return Annealer(config).run(progress=progress)
