"""
Exact concave piecewise-affine functions on [0, 1].

Bayes risk curves of Pauli channel pairs are piecewise affine in the prior, so
they are held as knot lists of exact fractions. Knots are normalized (collinear
interior knots removed), which makes equality of two functions a plain
comparison of their knot tuples.
"""

import bisect
import logging
from dataclasses import dataclass
from fractions import Fraction
from itertools import combinations
from typing import Iterable, List, Optional, Sequence, Tuple

from src.core.errors import NotConcaveError
from src.core.exactnum import HALF, ONE, ZERO, rat_parse, rat_render

logger = logging.getLogger(__name__)

Knot = Tuple[Fraction, Fraction]


def _normalize(knots: Sequence[Knot]) -> Tuple[Knot, ...]:
    result: List[Knot] = []
    for knot in knots:
        while len(result) >= 2:
            (x0, y0), (x1, y1) = result[-2], result[-1]
            x2, y2 = knot
            if (y1 - y0) * (x2 - x1) == (y2 - y1) * (x1 - x0):
                result.pop()
            else:
                break
        result.append(knot)
    return tuple(result)


@dataclass(frozen=True)
class PwaFunction:
    """
    Piecewise-affine function given by its knots (p, value), p ascending.

    The first knot sits at p = 0 and the last at p = 1; between knots the
    function is the linear interpolation.
    """

    knots: Tuple[Knot, ...]

    def __post_init__(self):
        knots = tuple((Fraction(p), Fraction(v)) for p, v in self.knots)
        if len(knots) < 2 or knots[0][0] != ZERO or knots[-1][0] != ONE:
            raise ValueError("Knots must start at p = 0 and end at p = 1")
        for (x0, _), (x1, _) in zip(knots, knots[1:]):
            if x1 <= x0:
                raise ValueError("Knot abscissae must be strictly increasing")
        object.__setattr__(self, "knots", _normalize(knots))

    @classmethod
    def constant(cls, value: Fraction) -> "PwaFunction":
        return cls(((ZERO, Fraction(value)), (ONE, Fraction(value))))

    @property
    def abscissae(self) -> Tuple[Fraction, ...]:
        return tuple(p for p, _ in self.knots)

    @property
    def slopes(self) -> Tuple[Fraction, ...]:
        """Slope of every segment, left to right."""
        return tuple(
            (y1 - y0) / (x1 - x0)
            for (x0, y0), (x1, y1) in zip(self.knots, self.knots[1:])
        )

    @property
    def is_concave(self) -> bool:
        """Exact chord test: segment slopes never increase left to right."""
        slopes = self.slopes
        return all(s1 <= s0 for s0, s1 in zip(slopes, slopes[1:]))

    def __call__(self, p: Fraction) -> Fraction:
        p = Fraction(p)
        if not ZERO <= p <= ONE:
            raise ValueError(f"Prior {rat_render(p)} outside [0, 1]")
        xs = self.abscissae
        index = bisect.bisect_left(xs, p)
        if index < len(xs) and xs[index] == p:
            return self.knots[index][1]
        (x0, y0), (x1, y1) = self.knots[index - 1], self.knots[index]
        return y0 + (y1 - y0) * (p - x0) / (x1 - x0)

    def one_sided_slopes(
        self, p: Fraction
    ) -> Tuple[Optional[Fraction], Optional[Fraction]]:
        """
        Left and right derivatives at p (None outside [0, 1]).

        Args:
            p: Point in [0, 1]

        Returns:
            (left slope, right slope); the left slope at 0 and the right slope
            at 1 are None
        """
        p = Fraction(p)
        if not ZERO <= p <= ONE:
            return None, None
        xs = self.abscissae
        slopes = self.slopes
        index = bisect.bisect_left(xs, p)
        if index < len(xs) and xs[index] == p:
            left = slopes[index - 1] if index > 0 else None
            right = slopes[index] if index < len(slopes) else None
            return left, right
        return slopes[index - 1], slopes[index - 1]

    def sample(self, ps: Iterable[float]) -> List[float]:
        """Float evaluation at arbitrary float priors (for sweeps and plots)."""
        xs = [float(p) for p in self.abscissae]
        ys = [float(v) for _, v in self.knots]
        values = []
        for p in ps:
            index = min(max(bisect.bisect_right(xs, p), 1), len(xs) - 1)
            x0, x1 = xs[index - 1], xs[index]
            y0, y1 = ys[index - 1], ys[index]
            values.append(y0 + (y1 - y0) * (p - x0) / (x1 - x0))
        return values

    def to_json(self) -> List[List[str]]:
        return [[rat_render(p), rat_render(v)] for p, v in self.knots]

    @classmethod
    def from_json(cls, data: Sequence[Sequence[str]]) -> "PwaFunction":
        return cls(tuple((rat_parse(p), rat_parse(v)) for p, v in data))


@dataclass(frozen=True)
class MaxPoint:
    """Location and value of the maximum of a concave PwaFunction."""

    p_star: Fraction
    value: Fraction
    plateau: Optional[Tuple[Fraction, Fraction]] = None


def pwa_from_abs_terms(
    terms: Sequence[Tuple[Fraction, Fraction]], constant: Fraction
) -> PwaFunction:
    """
    Build p -> constant - 1/2 * sum_i t_i |p - p0_i| as explicit knots.

    Args:
        terms: Pairs (t_i, p0_i) with t_i >= 0 and p0_i in [0, 1]
        constant: Additive constant

    Returns:
        Concave PwaFunction with knots at 0, every p0_i and 1
    """
    active = []
    for t, p0 in terms:
        t, p0 = Fraction(t), Fraction(p0)
        if t < 0:
            raise ValueError(f"Negative slope {rat_render(t)} in absolute-value term")
        if not ZERO <= p0 <= ONE:
            raise ValueError(f"Kink {rat_render(p0)} outside [0, 1]")
        if t != 0:
            active.append((t, p0))

    xs = sorted({ZERO, ONE} | {p0 for _, p0 in active})
    constant = Fraction(constant)
    knots = [
        (x, constant - HALF * sum((t * abs(x - p0) for t, p0 in active), ZERO))
        for x in xs
    ]
    return PwaFunction(tuple(knots))


def _crossings(fs: Sequence[PwaFunction], a: Fraction, b: Fraction) -> List[Fraction]:
    points = []
    ends = [(f(a), f(b)) for f in fs]
    for (fa, fb), (ga, gb) in combinations(ends, 2):
        da, db = fa - ga, fb - gb
        if (da < 0 < db) or (db < 0 < da):
            points.append(a + (b - a) * da / (da - db))
    return points


def pwa_min(fs: Sequence[PwaFunction]) -> PwaFunction:
    """
    Pointwise minimum with exact crossing points inserted as knots.

    Args:
        fs: Functions on [0, 1]; the minimum of concave inputs is concave

    Returns:
        Normalized PwaFunction equal to min_i fs_i everywhere
    """
    if not fs:
        raise ValueError("pwa_min needs at least one function")
    xs = sorted({x for f in fs for x in f.abscissae})
    points = set(xs)
    for a, b in zip(xs, xs[1:]):
        points.update(_crossings(fs, a, b))
    knots = [(x, min(f(x) for f in fs)) for x in sorted(points)]
    return PwaFunction(tuple(knots))


def pwa_max_point(f: PwaFunction) -> MaxPoint:
    """
    Exact maximum of a concave function over [0, 1].

    When the maximum is attained on a flat segment the whole interval is
    reported and p_star is its left endpoint.

    Raises:
        NotConcaveError: the chord-slope test fails
    """
    if not f.is_concave:
        raise NotConcaveError(f"Function with knots {f.to_json()} is not concave")
    best = max(value for _, value in f.knots)
    at_max = [p for p, value in f.knots if value == best]
    plateau = (at_max[0], at_max[-1]) if len(at_max) > 1 else None
    return MaxPoint(p_star=at_max[0], value=best, plateau=plateau)
