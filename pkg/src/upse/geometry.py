"""Exact rational plane geometry: predicates, classification, seeded generators.

All coordinates are ``fractions.Fraction``; every predicate is decided by
exact integer arithmetic on cross products, never by floating point.
"""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Sequence

from .errors import DuplicateY, NotConvex, NotGeneral

CLOCKWISE = -1
COLLINEAR = 0
COUNTERCLOCKWISE = 1


def _coerce(value) -> Fraction:
    if isinstance(value, bool):
        raise TypeError("bool is not a coordinate")
    if isinstance(value, (int, Fraction)):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value)
    raise TypeError(
        f"exact coordinate expected (int, Fraction or 'p/q' string), got {type(value).__name__}"
    )


@dataclass(frozen=True)
class Point:
    """A plane point with exact rational coordinates."""

    x: Fraction
    y: Fraction

    def __post_init__(self):
        object.__setattr__(self, "x", _coerce(self.x))
        object.__setattr__(self, "y", _coerce(self.y))

    def __iter__(self):
        yield self.x
        yield self.y

    def __repr__(self):
        return f"Point({self.x}, {self.y})"


class PointSet(Sequence):
    """Immutable ordered collection of pairwise-distinct points."""

    __slots__ = ("points",)

    def __init__(self, points: Iterable):
        pts = tuple(p if isinstance(p, Point) else Point(p[0], p[1]) for p in points)
        if not pts:
            raise ValueError("point set must be nonempty")
        if len(set(pts)) != len(pts):
            raise ValueError("points must be pairwise distinct")
        object.__setattr__(self, "points", pts)

    def __len__(self) -> int:
        return len(self.points)

    def __getitem__(self, index) -> Point:
        return self.points[index]

    def __iter__(self) -> Iterator[Point]:
        return iter(self.points)

    def __eq__(self, other) -> bool:
        return isinstance(other, PointSet) and self.points == other.points

    def __hash__(self) -> int:
        return hash(self.points)

    def __repr__(self):
        return f"PointSet({list(self.points)!r})"

    @property
    def lowest_index(self) -> int:
        """Index of the unique lowest point."""
        return self._extreme(lambda a, b: a < b)

    @property
    def highest_index(self) -> int:
        """Index of the unique highest point."""
        return self._extreme(lambda a, b: a > b)

    def _extreme(self, better) -> int:
        ys = [p.y for p in self.points]
        if len(set(ys)) != len(ys):
            raise DuplicateY("two points share a y-coordinate")
        best = 0
        for i in range(1, len(ys)):
            if better(ys[i], ys[best]):
                best = i
        return best


def cross(o: Point, a: Point, b: Point) -> Fraction:
    """Twice the signed area of the triangle (o, a, b)."""
    return (a.x - o.x) * (b.y - o.y) - (a.y - o.y) * (b.x - o.x)


def orientation(p: Point, q: Point, r: Point) -> int:
    """COUNTERCLOCKWISE, CLOCKWISE or COLLINEAR for the ordered triple."""
    c = cross(p, q, r)
    if c > 0:
        return COUNTERCLOCKWISE
    if c < 0:
        return CLOCKWISE
    return COLLINEAR


# Raw-coordinate twins of the predicates.  They accept (x, y) pairs of any
# exact numeric type (int or Fraction) so callers can work on pre-scaled
# integer coordinates in hot loops.

def orient_xy(a, b, c) -> int:
    v = (b[0] - a[0]) * (c[1] - a[1]) - (b[1] - a[1]) * (c[0] - a[0])
    if v > 0:
        return 1
    if v < 0:
        return -1
    return 0


def _in_box(a, b, p) -> bool:
    return (
        min(a[0], b[0]) <= p[0] <= max(a[0], b[0])
        and min(a[1], b[1]) <= p[1] <= max(a[1], b[1])
    )


def segments_cross_xy(a1, a2, b1, b2) -> bool:
    o1 = orient_xy(a1, a2, b1)
    o2 = orient_xy(a1, a2, b2)
    o3 = orient_xy(b1, b2, a1)
    o4 = orient_xy(b1, b2, a2)
    if o1 * o2 < 0 and o3 * o4 < 0:
        return True
    if o1 == 0 and o2 == 0:
        # collinear supporting lines: positive-length overlap crosses, a
        # single shared point is necessarily a common endpoint
        axis = 0 if a1[0] != a2[0] else 1
        lo = max(min(a1[axis], a2[axis]), min(b1[axis], b2[axis]))
        hi = min(max(a1[axis], a2[axis]), max(b1[axis], b2[axis]))
        return lo < hi
    for p, seg_a, seg_b, own in (
        (b1, a1, a2, (b1 == a1 or b1 == a2)),
        (b2, a1, a2, (b2 == a1 or b2 == a2)),
        (a1, b1, b2, (a1 == b1 or a1 == b2)),
        (a2, b1, b2, (a2 == b1 or a2 == b2)),
    ):
        if own:
            continue
        if orient_xy(seg_a, seg_b, p) == 0 and _in_box(seg_a, seg_b, p):
            return True
    return False


def point_in_segment_interior_xy(p, a, b) -> bool:
    if p == a or p == b:
        return False
    return orient_xy(a, b, p) == 0 and _in_box(a, b, p)


def segments_cross(a1: Point, a2: Point, b1: Point, b2: Point) -> bool:
    """True iff the closed segments share a point that is not a shared endpoint.

    Segments meeting only at a common endpoint do not cross; collinear
    segments with a positive-length overlap do.
    """
    if a1 == a2 or b1 == b2:
        raise ValueError("degenerate segment")
    return segments_cross_xy(tuple(a1), tuple(a2), tuple(b1), tuple(b2))


def point_in_segment_interior(p: Point, a: Point, b: Point) -> bool:
    """True iff p lies on segment ab strictly between the endpoints."""
    return point_in_segment_interior_xy(tuple(p), tuple(a), tuple(b))


def sort_by_y(point_set: PointSet) -> list[int]:
    """Point indices in strictly increasing y order."""
    ys = [p.y for p in point_set]
    if len(set(ys)) != len(ys):
        raise DuplicateY("two points share a y-coordinate")
    return sorted(range(len(point_set)), key=lambda i: ys[i])


def _canonical_direction(dx: Fraction, dy: Fraction) -> tuple[int, int]:
    # integer direction up to positive scaling, with opposite directions merged
    a = dx.numerator * dy.denominator
    b = dy.numerator * dx.denominator
    g = gcd(abs(a), abs(b))
    a //= g
    b //= g
    if a < 0 or (a == 0 and b < 0):
        a, b = -a, -b
    return a, b


def is_general_position(point_set: PointSet) -> bool:
    """No three points collinear and all y-coordinates distinct."""
    ys = set()
    for p in point_set:
        if p.y in ys:
            return False
        ys.add(p.y)
    pts = point_set.points
    for i in range(len(pts)):
        seen: set[tuple[int, int]] = set()
        for j in range(i + 1, len(pts)):
            d = _canonical_direction(pts[j].x - pts[i].x, pts[j].y - pts[i].y)
            if d in seen:
                return False
            seen.add(d)
    return True


def convex_hull_indices(point_set: PointSet) -> list[int]:
    """Hull vertices in counter-clockwise order (Andrew's monotone chain)."""
    idx = sorted(range(len(point_set)), key=lambda i: (point_set[i].x, point_set[i].y))
    if len(idx) <= 2:
        return idx

    def half(indices):
        chain: list[int] = []
        for i in indices:
            while len(chain) > 1 and cross(
                point_set[chain[-2]], point_set[chain[-1]], point_set[i]
            ) <= 0:
                chain.pop()
            chain.append(i)
        return chain

    lower = half(idx)
    upper = half(reversed(idx))
    return lower[:-1] + upper[:-1]


def is_convex_position(point_set: PointSet) -> bool:
    """True iff every point is a vertex of the convex hull."""
    if len(point_set) < 3 or not is_general_position(point_set):
        raise NotGeneral("convex-position test needs >= 3 points in general position")
    return len(convex_hull_indices(point_set)) == len(point_set)


def is_one_sided(point_set: PointSet) -> bool:
    """True iff the lowest and highest points are hull neighbours."""
    try:
        convex = is_convex_position(point_set)
    except NotGeneral as exc:
        raise NotConvex(str(exc)) from exc
    if not convex:
        raise NotConvex("point set is not in convex position")
    hull = convex_hull_indices(point_set)
    pos_b = hull.index(point_set.lowest_index)
    pos_t = hull.index(point_set.highest_index)
    return abs(pos_b - pos_t) in (1, len(hull) - 1)


# ----------------------------------------------------------------- generators

def _derive_seed(kind: str, n: int, seed: int) -> int:
    digest = hashlib.sha256(f"{kind}:{n}:{seed}".encode()).digest()
    return int.from_bytes(digest[:8], "big")


def _generate_general(rng: random.Random, n: int) -> PointSet:
    span = max(16, 4 * n * n)
    pts: list[tuple[int, int]] = []
    ys: set[int] = set()
    while len(pts) < n:
        x = rng.randrange(span)
        y = rng.randrange(span)
        if y in ys:
            continue
        bad = False
        for i in range(len(pts)):
            for j in range(i + 1, len(pts)):
                ax, ay = pts[i]
                bx, by = pts[j]
                if (bx - ax) * (y - ay) - (by - ay) * (x - ax) == 0:
                    bad = True
                    break
            if bad:
                break
        if bad:
            continue
        pts.append((x, y))
        ys.add(y)
    return PointSet(Point(x, y) for x, y in pts)


def _circle_point(t: Fraction) -> Point:
    d = 1 + t * t
    return Point((1 - t * t) / d, 2 * t / d)


def _generate_one_sided(rng: random.Random, n: int) -> PointSet:
    # rational points on the right half of the unit circle; y is strictly
    # increasing in the parameter, so b(S) and t(S) close the hull on the left
    denom = 8 * max(n, 2)
    numerators = rng.sample(range(-denom + 1, denom), n)
    return PointSet(_circle_point(Fraction(k, denom)) for k in numerators)


def _generate_convex(rng: random.Random, n: int) -> PointSet:
    denom = 8 * max(n, 2)
    chosen: list[Fraction] = []
    ys: set[Fraction] = set()
    while len(chosen) < n:
        k = rng.randrange(-3 * denom, 3 * denom + 1)
        t = Fraction(k, denom)
        if t in chosen:
            continue
        y = 2 * t / (1 + t * t)
        if y in ys:
            continue
        chosen.append(t)
        ys.add(y)
    return PointSet(_circle_point(t) for t in chosen)


def generate_point_set(kind: str, n: int, seed: int = 0) -> PointSet:
    """Deterministic seeded point sets of the requested classification.

    ``kind`` is one of ``general``, ``one_sided_convex``, ``convex``.  The
    output is a pure function of ``(kind, n, seed)``.
    """
    if n < 1:
        raise ValueError("n must be at least 1")
    rng = random.Random(_derive_seed(kind, n, seed))
    if kind == "general":
        return _generate_general(rng, n)
    if kind == "one_sided_convex":
        return _generate_one_sided(rng, n)
    if kind == "convex":
        return _generate_convex(rng, n)
    raise ValueError(f"unknown point-set kind: {kind!r}")
