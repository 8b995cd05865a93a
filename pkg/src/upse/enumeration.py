"""Exhaustive UPSE search by pruned backtracking.

This is the oracle every constructive algorithm is checked against: it
enumerates exactly the set of upward planar straight-line embeddings of a
tree on a point set, optionally pinning chosen vertices to chosen points.
Intended for small instances (roughly n <= 12 on equal-size sets).
"""

from __future__ import annotations

from math import lcm
from typing import Iterable, Iterator, Optional, Sequence

from .digraph import Digraph, is_tree
from .errors import NotATree
from .geometry import PointSet, point_in_segment_interior_xy, segments_cross_xy
from .verify import Embedding

Pin = tuple[int, int]


def _int_coords(points: PointSet) -> list[tuple[int, int]]:
    denom = 1
    for p in points:
        denom = lcm(denom, p.x.denominator, p.y.denominator)
    return [(int(p.x * denom), int(p.y * denom)) for p in points]


def _bfs_order(graph: Digraph, root: int) -> tuple[list[int], list[int]]:
    adj = graph.undirected_adjacency()
    order = [root]
    parent = [-1] * graph.n
    seen = [False] * graph.n
    seen[root] = True
    head = 0
    while head < len(order):
        u = order[head]
        head += 1
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                parent[w] = u
                order.append(w)
    return order, parent


def _solutions(
    graph: Digraph, points: PointSet, pins: Optional[Iterable[Pin]]
) -> Iterator[tuple[int, ...]]:
    n = graph.n
    if not is_tree(graph):
        raise NotATree("embedding search requires a tree")
    if n > len(points):
        raise ValueError("more vertices than points")
    pin_map: dict[int, int] = {}
    for v, p in pins or ():
        v, p = int(v), int(p)
        if not (0 <= v < n and 0 <= p < len(points)):
            raise ValueError("pin out of range")
        if v in pin_map and pin_map[v] != p:
            raise ValueError("conflicting pins for one vertex")
        pin_map[v] = p
    if len(set(pin_map.values())) != len(pin_map):
        raise ValueError("pins must be injective")

    coords = _int_coords(points)
    edge_set = graph.edge_set()
    root = next(iter(pin_map)) if pin_map else 0
    order, parent = _bfs_order(graph, root)
    points_up = [False] * n  # vertex lies above its BFS parent
    for w in order[1:]:
        points_up[w] = (parent[w], w) in edge_set

    mapping = [-1] * n
    used = [False] * len(points)
    placed_edges: list[tuple[int, int]] = []  # point-index pairs
    placed_points: list[int] = []

    def candidates(w: int) -> Sequence[int]:
        if w in pin_map:
            return (pin_map[w],)
        return range(len(points))

    def feasible(w: int, q: int) -> bool:
        u = parent[w]
        pu = mapping[u]
        cu, cq = coords[pu], coords[q]
        if points_up[w]:
            if cq[1] <= cu[1]:
                return False
        elif cq[1] >= cu[1]:
            return False
        for ra, rb in placed_edges:
            if segments_cross_xy(cu, cq, coords[ra], coords[rb]):
                return False
            if q not in (ra, rb) and point_in_segment_interior_xy(
                cq, coords[ra], coords[rb]
            ):
                return False
        for pp in placed_points:
            if pp not in (pu, q) and point_in_segment_interior_xy(coords[pp], cu, cq):
                return False
        return True

    def place(k: int) -> Iterator[tuple[int, ...]]:
        if k == n:
            yield tuple(mapping)
            return
        w = order[k]
        for q in candidates(w):
            if used[q]:
                continue
            if k > 0 and not feasible(w, q):
                continue
            mapping[w] = q
            used[q] = True
            placed_points.append(q)
            if k > 0:
                placed_edges.append((mapping[parent[w]], q))
            yield from place(k + 1)
            if k > 0:
                placed_edges.pop()
            placed_points.pop()
            used[q] = False
            mapping[w] = -1

    yield from place(0)


def enumerate_upse(
    graph: Digraph, points: PointSet, pins: Optional[Iterable[Pin]] = None
) -> list[Embedding]:
    """All UPSEs of the tree on the point set, honouring the pins.

    Results come in lexicographic order of the mapping arrays.
    """
    mappings = sorted(set(_solutions(graph, points, pins)))
    return [Embedding(graph, points, m) for m in mappings]


def count_upse(graph: Digraph, points: PointSet) -> int:
    """Number of UPSEs, computed without materialising the embeddings."""
    return sum(1 for _ in _solutions(graph, points, None))


def decide_fixed_vertex(graph: Digraph, points: PointSet, vertex: int, point_index: int) -> bool:
    """Does some UPSE map ``vertex`` to ``point_index``?  Stops at the first witness."""
    if graph.n != len(points):
        raise ValueError("fixed-vertex decision requires equal sizes")
    return next(_solutions(graph, points, ((vertex, point_index),)), None) is not None
