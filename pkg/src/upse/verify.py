"""Ground-truth checking of vertex-to-point assignments."""

from __future__ import annotations

from bisect import bisect_left
from dataclasses import dataclass

from .digraph import Digraph
from .geometry import PointSet, point_in_segment_interior_xy, segments_cross_xy


@dataclass(frozen=True)
class Embedding:
    """An injective assignment of graph vertices to points of a set."""

    graph: Digraph
    points: PointSet
    mapping: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "mapping", tuple(int(i) for i in self.mapping))
        if len(self.mapping) != self.graph.n:
            raise ValueError("mapping must assign every vertex")
        if any(not 0 <= i < len(self.points) for i in self.mapping):
            raise ValueError("mapping refers to a point outside the set")
        if len(set(self.mapping)) != len(self.mapping):
            raise ValueError("mapping must be injective")

    def point_of(self, vertex: int):
        return self.points[self.mapping[vertex]]


def is_upward(embedding: Embedding) -> bool:
    """Every directed edge u -> v has its source strictly below its target."""
    pts = embedding.points
    m = embedding.mapping
    return all(pts[m[u]].y < pts[m[v]].y for u, v in embedding.graph.edges)


def is_planar_drawing(embedding: Embedding) -> bool:
    """No two edge segments cross and no vertex sits inside a foreign edge."""
    pts = embedding.points
    m = embedding.mapping
    edges = embedding.graph.edges
    coords = [(pts[i].x, pts[i].y) for i in m]

    segs = []
    for u, v in edges:
        a, b = coords[u], coords[v]
        lo, hi = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
        segs.append((lo, hi, a, b))
    segs.sort(key=lambda s: s[0])

    # segment pairs, pruned by y-interval overlap
    for i, (lo_i, hi_i, a_i, b_i) in enumerate(segs):
        for j in range(i + 1, len(segs)):
            lo_j, hi_j, a_j, b_j = segs[j]
            if lo_j > hi_i:
                break
            if segments_cross_xy(a_i, b_i, a_j, b_j):
                return False

    # vertices in the interior of non-incident edges
    by_y = sorted(range(len(coords)), key=lambda v: coords[v][1])
    keys = [coords[v][1] for v in by_y]
    for u, v in edges:
        a, b = coords[u], coords[v]
        lo, hi = (a[1], b[1]) if a[1] <= b[1] else (b[1], a[1])
        for k in range(bisect_left(keys, lo), len(by_y)):
            w = by_y[k]
            if coords[w][1] > hi:
                break
            if w in (u, v):
                continue
            if point_in_segment_interior_xy(coords[w], a, b):
                return False
    return True


def is_upse(embedding: Embedding) -> bool:
    """Upward and crossing-free: an upward planar straight-line embedding."""
    return is_upward(embedding) and is_planar_drawing(embedding)
