"""3-Partition reduction instances for fixed-vertex tree embedding.

From a 3-Partition input this module builds a subdivided-star tree and a
matching point set: the branch roots' target arcs sit on two nested ellipses
inside a narrow cone of rays from the pinned bottom point, subdivided so that
small branches can only fill whole arcs in groups summing to the partition
target.  Every geometric property the construction promises is recomputed
from scratch by :func:`certificate`, and a known partition converts into an
explicit embedding witness via :func:`consistent_embedding`.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Optional, Sequence

from .digraph import Digraph
from .errors import ConstructionFailed, InvalidInstance, InvalidPartition
from .geometry import (
    CLOCKWISE,
    COUNTERCLOCKWISE,
    Point,
    PointSet,
    is_general_position,
    orientation,
)
from .verify import Embedding

SMALL_SCALE = Fraction(1)
LARGE_SCALE = Fraction(3, 2)
ANCHOR = Point(-3, 3)


@dataclass(frozen=True)
class ThreePartitionInstance:
    """A multiset of 3m positive integers, each divisible by 3."""

    values: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "values", tuple(int(v) for v in self.values))
        if not self.values or len(self.values) % 3:
            raise InvalidInstance("need 3m values")
        if any(v <= 0 for v in self.values):
            raise InvalidInstance("values must be positive")
        if any(v % 3 for v in self.values):
            raise InvalidInstance("values must be divisible by 3")
        if sum(self.values) % self.m:
            raise InvalidInstance("value sum must be divisible by m")

    @classmethod
    def from_values(cls, values: Sequence[int], normalize: bool = False) -> "ThreePartitionInstance":
        vals = [int(v) for v in values]
        if normalize and any(v % 3 for v in vals):
            vals = [3 * v for v in vals]
        return cls(tuple(vals))

    @property
    def m(self) -> int:
        return len(self.values) // 3

    @property
    def b(self) -> int:
        return sum(self.values) // self.m


@dataclass(frozen=True)
class BranchInfo:
    """One branch of the subdivided star, listed from the centre outwards."""

    kind: str  # "small" | "large"
    root: int
    vertices: tuple[int, ...]


@dataclass(frozen=True)
class ReductionLayout:
    """Point-index bookkeeping: which points form each arc, and the q markers."""

    small_sets: tuple[tuple[int, ...], ...]  # per k=1..m, top-down
    large_sets: tuple[tuple[int, ...], ...]  # per k=0..m: (q', q, tail top-down)
    q_points: tuple[int, ...]
    q_prime_points: tuple[int, ...]
    ray_slopes: tuple[Fraction, ...]  # cone boundaries included, 2m+2 in total


@dataclass(frozen=True)
class ReductionInstance:
    instance: ThreePartitionInstance
    tree: Digraph
    points: PointSet
    center: int
    fixed_point: int
    branches: tuple[BranchInfo, ...]
    layout: ReductionLayout
    large_length: int
    large_count: int

    @property
    def m(self) -> int:
        return self.instance.m

    @property
    def b(self) -> int:
        return self.instance.b


@dataclass(frozen=True)
class CertificateCheck:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class Certificate:
    """Named order-type predicates the constructed instance must satisfy."""

    checks: tuple[CertificateCheck, ...]

    @property
    def passed(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CertificateCheck:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)

    def failed(self) -> list[str]:
        return [c.name for c in self.checks if not c.passed]


# ------------------------------------------------------------------- the tree

def _build_tree(values, large_len, large_count):
    edges: list[tuple[int, int]] = []
    branches: list[BranchInfo] = []
    nxt = 1
    for a in values:
        verts = tuple(range(nxt, nxt + a))
        nxt += a
        edges.append((0, verts[0]))
        for j in range(a - 1):
            edges.append((verts[j + 1], verts[j]))
        branches.append(BranchInfo("small", verts[0], verts))
    for _ in range(large_count):
        verts = tuple(range(nxt, nxt + large_len))
        nxt += large_len
        edges.append((0, verts[0]))
        edges.append((verts[0], verts[1]))
        for j in range(1, large_len - 1):
            edges.append((verts[j + 1], verts[j]))
        branches.append(BranchInfo("large", verts[1], verts))
    return Digraph(nxt, tuple(edges)), tuple(branches)


# ----------------------------------------------------------------- the points

def _ray_side(slope: Fraction, p: Point) -> Fraction:
    """Positive iff p lies counter-clockwise of the upward ray with this slope."""
    return slope * p.x - p.y


def _curve_point(scale: Fraction, t: Fraction) -> Point:
    d = t * t + 1
    return Point(5 * scale * (t * t - 1) / d, 6 * scale * t / d)


def _ellipse_form(p: Point) -> Fraction:
    return p.x * p.x / 25 + p.y * p.y / 9


def _ts_in_sector(lo: Fraction, hi: Fraction, denom: int) -> list[Fraction]:
    """Grid parameters whose curve point falls strictly inside the sector."""
    out = []
    for num in range(denom // 2 + 1, (4 * denom) // 5):
        t = Fraction(num, denom)
        p = _curve_point(Fraction(1), t)
        if _ray_side(lo, p) > 0 and _ray_side(hi, p) < 0:
            out.append(t)
    return out


def _spread(candidates: list[Fraction], count: int) -> Optional[list[Fraction]]:
    if len(candidates) < count:
        return None
    total = len(candidates)
    return [candidates[(2 * i + 1) * total // (2 * count)] for i in range(count)]


def _point_below_line(q: Point, a: Point, b: Point) -> bool:
    assert a.x != b.x
    lo, hi = (a, b) if a.x < b.x else (b, a)
    return orientation(lo, hi, q) == CLOCKWISE


def _place_q_prime(qk: Point, w: Optional[Point], lo: Fraction, hi: Fraction,
                   taken_ys: set) -> Optional[Point]:
    # offset direction: flat enough to stay clockwise of the ray to q_k and,
    # when a small-arc top w exists, to keep q_k below the line through w
    origin = Point(0, 0)
    ray_mag = qk.y / (-qk.x)
    if w is None:
        rho = ray_mag / 2
    else:
        dx, dy = w.x - qk.x, w.y - qk.y
        if dx <= 0 or dy >= 0:
            return None
        rho = min(-dy / dx, ray_mag) / 2
    u = Fraction(1, 64)
    for _ in range(200):
        cand = Point(qk.x + u, qk.y - rho * u)
        ok = (
            _ray_side(lo, cand) > 0
            and _ray_side(hi, cand) < 0
            and cand.y not in taken_ys
            and cand.y > 3
            and _ellipse_form(cand) > 1
            and orientation(origin, qk, cand) == CLOCKWISE
        )
        if ok and w is not None:
            ok = _point_below_line(qk, cand, w)
        if ok:
            return cand
        u /= 2
    return None


def _build_points(m, b, large_len, slopes, denom):
    sector_ts = [_ts_in_sector(slopes[j], slopes[j + 1], denom) for j in range(2 * m + 1)]

    pts: list[Point] = [Point(0, 0)]
    taken_ys = {Fraction(0)}

    def add(p: Point) -> int:
        pts.append(p)
        taken_ys.add(p.y)
        return len(pts) - 1

    small_sets = []
    for k in range(1, m + 1):
        ts = _spread(sector_ts[2 * k - 1], b)
        if ts is None:
            return None
        # descending parameter = descending y = counter-clockwise angular order
        small_sets.append(tuple(add(_curve_point(SMALL_SCALE, t)) for t in reversed(ts)))

    large_sets = []
    q_points = []
    q_prime_points = []
    for k in range(m + 1):
        ts = _spread(sector_ts[2 * k], large_len - 1)
        if ts is None:
            return None
        on_curve = [_curve_point(LARGE_SCALE, t) for t in reversed(ts)]
        qk = on_curve[0]
        w = pts[small_sets[k - 1][0]] if k >= 1 else None
        q_prime = _place_q_prime(qk, w, slopes[2 * k], slopes[2 * k + 1], taken_ys | {qk.y})
        if q_prime is None:
            return None
        qp_idx = add(q_prime)
        q_idx = add(qk)
        tail = tuple(add(p) for p in on_curve[1:])
        large_sets.append((qp_idx, q_idx) + tail)
        q_points.append(q_idx)
        q_prime_points.append(qp_idx)

    layout = ReductionLayout(
        small_sets=tuple(small_sets),
        large_sets=tuple(large_sets),
        q_points=tuple(q_points),
        q_prime_points=tuple(q_prime_points),
        ray_slopes=tuple(slopes),
    )
    return PointSet(pts), layout


def reduce_3partition(instance: ThreePartitionInstance) -> ReductionInstance:
    """Build the tree, point set, pin, and layout for a 3-Partition input.

    The result always passes :func:`certificate`; if no grid refinement
    manages that, ``ConstructionFailed`` is raised (a generator bug, not a
    property of the input).
    """
    m, b = instance.m, instance.b
    large_len = max(m * b + 1, b + 4)
    large_count = m + 1
    tree, branches = _build_tree(instance.values, large_len, large_count)
    slopes = tuple(Fraction(-2) + Fraction(j, 2 * m + 1) for j in range(2 * m + 2))

    denom = 64
    while denom < 40 * (2 * m + 1) * max(b, large_len - 1):
        denom *= 2
    for attempt in range(8):
        built = _build_points(m, b, large_len, slopes, denom << attempt)
        if built is None:
            continue
        points, layout = built
        candidate = ReductionInstance(
            instance=instance,
            tree=tree,
            points=points,
            center=0,
            fixed_point=0,
            branches=branches,
            layout=layout,
            large_length=large_len,
            large_count=large_count,
        )
        if certificate(candidate).passed:
            return candidate
    raise ConstructionFailed("no grid refinement satisfied the certificate")


# -------------------------------------------------------------- the certificate

def certificate(instance: ReductionInstance) -> Certificate:
    """Recompute every promised order-type property of the instance."""
    pts = instance.points
    lay = instance.layout
    m = instance.m
    slopes = lay.ray_slopes
    checks: list[CertificateCheck] = []

    def record(name: str, passed: bool, detail: str = ""):
        checks.append(CertificateCheck(name, bool(passed), detail))

    record(
        "cone_containment",
        all(p.x + p.y > 0 and 2 * p.x + p.y < 0 for i, p in enumerate(pts) if i != instance.fixed_point),
        "every point except the pinned one sits strictly between the boundary rays",
    )
    interior = slopes[1:-1]
    record(
        "ray_slopes_ordered",
        all(a < b for a, b in zip(slopes, slopes[1:]))
        and slopes[0] == -2
        and slopes[-1] == -1
        and all(-2 < s < -1 for s in interior),
        "subdividing rays have strictly increasing slopes inside (-2, -1)",
    )

    def in_sector(j: int, p: Point) -> bool:
        return _ray_side(slopes[j], p) > 0 and _ray_side(slopes[j + 1], p) < 0

    for k, small in enumerate(lay.small_sets, start=1):
        arc = [pts[i] for i in small]
        record(
            f"small_in_sector:{k}",
            all(in_sector(2 * k - 1, p) for p in arc),
        )
        record(
            f"small_on_ellipse:{k}",
            all(_ellipse_form(p) == 1 for p in arc),
        )
        record(
            f"small_convex:{k}",
            all(
                orientation(arc[i], arc[i + 1], arc[i + 2]) == COUNTERCLOCKWISE
                for i in range(len(arc) - 2)
            ),
        )

    small_points = [pts[i] for s in lay.small_sets for i in s]
    large_points = [pts[i] for s in lay.large_sets for i in s]
    record(
        "small_below_large",
        max(p.y for p in small_points) < min(p.y for p in large_points),
        "every small-arc point lies strictly below every large-chain point",
    )

    for k, large in enumerate(lay.large_sets):
        record(
            f"large_in_sector:{k}",
            all(in_sector(2 * k, pts[i]) for i in large),
        )
    record("large_outside_ellipse", all(_ellipse_form(p) > 1 for p in large_points))
    record(
        "large_above_anchor",
        all(p.y > ANCHOR.y for p in large_points),
        "the large chain clears the reference height",
    )

    chain = [pts[i] for large in lay.large_sets for i in large[1:]]
    record(
        "large_chain_convex",
        all(a.x > b.x and a.y > b.y for a, b in zip(chain, chain[1:]))
        and all(
            orientation(chain[i], chain[i + 1], chain[i + 2]) == COUNTERCLOCKWISE
            for i in range(len(chain) - 2)
        ),
        "on-curve large points form one x- and y-monotone convex chain",
    )

    for k in range(m + 1):
        q = pts[lay.q_points[k]]
        qp = pts[lay.q_prime_points[k]]
        record(f"q_order:{k}", qp.y < q.y and qp.x > q.x)
        if k >= 1:
            top_small = pts[lay.small_sets[k - 1][0]]
            record(
                f"q_below_line:{k}",
                qp.x != top_small.x and _point_below_line(q, qp, top_small),
            )

    record("general_position", is_general_position(pts))
    return Certificate(tuple(checks))


# ------------------------------------------------------------------ witnesses

def solve_3partition(instance: ThreePartitionInstance) -> Optional[list[tuple[int, int, int]]]:
    """Exhaustively search for a partition into triples summing to b.

    Returns index triples into ``instance.values``, or None.  Meant for the
    micro instances used in testing.
    """
    values = instance.values
    target = instance.b

    def rec(remaining: list[int]) -> Optional[list[tuple[int, int, int]]]:
        if not remaining:
            return []
        first, rest = remaining[0], remaining[1:]
        for i in range(len(rest)):
            for j in range(i + 1, len(rest)):
                if values[first] + values[rest[i]] + values[rest[j]] != target:
                    continue
                nxt = [v for k, v in enumerate(rest) if k not in (i, j)]
                tail = rec(nxt)
                if tail is not None:
                    return [(first, rest[i], rest[j])] + tail
        return None

    return rec(list(range(len(values))))


def consistent_embedding(
    instance: ReductionInstance, partition: Sequence[Sequence[int]]
) -> Embedding:
    """Turn a valid partition into the canonical embedding witness.

    The centre goes to the pinned point, the k-th triple's branches fill the
    k-th small arc top-down (each root topmost in its run), and each large
    branch descends one large chain with its first two vertices on q' and q.
    """
    values = instance.instance.values
    m, b = instance.m, instance.b
    triples = [tuple(int(i) for i in t) for t in partition]
    flat = sorted(i for t in triples for i in t)
    if len(triples) != m or any(len(t) != 3 for t in triples) or flat != list(range(3 * m)):
        raise InvalidPartition("partition must use each small-branch index exactly once")
    for t in triples:
        if sum(values[i] for i in t) != b:
            raise InvalidPartition(f"triple {t} does not sum to {b}")

    small = [br for br in instance.branches if br.kind == "small"]
    large = [br for br in instance.branches if br.kind == "large"]
    mapping = [-1] * instance.tree.n
    mapping[instance.center] = instance.fixed_point
    for k, triple in enumerate(triples):
        run = instance.layout.small_sets[k]
        pos = 0
        for idx in triple:
            branch = small[idx]
            for vert, pt in zip(branch.vertices, run[pos : pos + len(branch.vertices)]):
                mapping[vert] = pt
            pos += len(branch.vertices)
        assert pos == len(run)
    for branch, chain in zip(large, instance.layout.large_sets):
        for vert, pt in zip(branch.vertices, chain):
            mapping[vert] = pt
    return Embedding(instance.tree, instance.points, tuple(mapping))
