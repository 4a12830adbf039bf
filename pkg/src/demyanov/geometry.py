"""Exact planar geometry over rational coordinates.

Every scalar is an arbitrary-precision rational and every predicate is
exact, so directions that sit right on a face boundary are classified
correctly instead of being lost to rounding. Polytopes are stored in a
canonical vertex order, which makes value equality coincide with
point-set equality and lets collections be deduplicated by hashing.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable

from .errors import EmptyInputError

# The only scalar type used in geometry. Fraction already guarantees a
# reduced numerator over a positive denominator.
Rational = Fraction


def _as_rational(value) -> Fraction:
    if isinstance(value, float):
        raise TypeError("float coordinates are not supported; pass int, str or Fraction")
    return Fraction(value)


@dataclass(frozen=True)
class Point:
    """A point of the plane with exact rational coordinates."""

    x: Rational
    y: Rational

    def __post_init__(self) -> None:
        object.__setattr__(self, "x", _as_rational(self.x))
        object.__setattr__(self, "y", _as_rational(self.y))


@dataclass(frozen=True)
class Direction:
    """A nonzero integer vector stored with coprime coordinates.

    A Direction stands for the whole ray of its positive multiples:
    construction divides out the gcd and keeps the signs, so any two
    positively proportional inputs collapse to the same value.
    """

    a: int
    b: int

    def __post_init__(self) -> None:
        if not isinstance(self.a, int) or not isinstance(self.b, int):
            raise TypeError("direction components must be integers")
        if self.a == 0 and self.b == 0:
            raise ValueError("direction must be nonzero")
        g = gcd(abs(self.a), abs(self.b))
        if g > 1:
            object.__setattr__(self, "a", self.a // g)
            object.__setattr__(self, "b", self.b // g)

    def rotated_ccw(self) -> Direction:
        """The ray a quarter turn counterclockwise from this one."""
        return Direction(-self.b, self.a)

    def opposite(self) -> Direction:
        return Direction(-self.a, -self.b)


def orient(p: Point, q: Point, r: Point) -> int:
    """Sign of the cross product (q - p) x (r - p).

    +1 for a counterclockwise turn, -1 for clockwise, 0 for collinear.
    """
    cross = (q.x - p.x) * (r.y - p.y) - (q.y - p.y) * (r.x - p.x)
    if cross > 0:
        return 1
    if cross < 0:
        return -1
    return 0


def _hull_vertices(points: Iterable[Point]) -> tuple[Point, ...]:
    """Extreme points in canonical order (monotone chain, exact arithmetic).

    Canonical order is counterclockwise starting at the lexicographically
    smallest vertex; collinear interior points and duplicates are dropped.
    """
    pts = sorted(set(points), key=lambda p: (p.x, p.y))
    if not pts:
        raise EmptyInputError("convex hull of an empty point set")
    if len(pts) == 1:
        return (pts[0],)
    lower: list[Point] = []
    for p in pts:
        while len(lower) > 1 and orient(lower[-2], lower[-1], p) <= 0:
            lower.pop()
        lower.append(p)
    upper: list[Point] = []
    for p in reversed(pts):
        while len(upper) > 1 and orient(upper[-2], upper[-1], p) <= 0:
            upper.pop()
        upper.append(p)
    return tuple(lower[:-1] + upper[:-1])


@dataclass(frozen=True)
class Polytope:
    """Canonical V-representation of a convex polytope in the plane.

    The vertex tuple holds exactly the extreme points: a single point, a
    segment with its endpoints in lexicographic order, or a polygon in
    counterclockwise order starting at the lexicographically smallest
    vertex. Construction rejects anything else, so two polytopes are equal
    iff they are equal as point sets.
    """

    vertices: tuple[Point, ...]

    def __post_init__(self) -> None:
        verts = tuple(self.vertices)
        object.__setattr__(self, "vertices", verts)
        if verts != _hull_vertices(verts):
            raise ValueError("vertices are not in canonical convex position")

    @property
    def dim(self) -> int:
        """0 for a point, 1 for a segment, 2 for a polygon."""
        if len(self.vertices) == 1:
            return 0
        if len(self.vertices) == 2:
            return 1
        return 2


def convex_hull(points: Iterable[Point]) -> Polytope:
    """The canonical polytope spanned by the given points.

    Idempotent and independent of input order; duplicate and collinear
    interior points collapse away.
    """
    return Polytope(_hull_vertices(points))


def support_value(polytope: Polytope, g: Direction) -> Rational:
    """Largest inner product <v, g> over the polytope."""
    return max(v.x * g.a + v.y * g.b for v in polytope.vertices)


def exposed_face(polytope: Polytope, g: Direction) -> Polytope:
    """The face of the polytope on which <., g> attains its maximum.

    A vertex or an edge for polygons; a segment orthogonal to g exposes
    itself whole.
    """
    best = support_value(polytope, g)
    return convex_hull(v for v in polytope.vertices if v.x * g.a + v.y * g.b == best)


def reflect_y(polytope: Polytope) -> Polytope:
    """Mirror image through the vertical axis, re-canonicalised."""
    return convex_hull(Point(-v.x, v.y) for v in polytope.vertices)
