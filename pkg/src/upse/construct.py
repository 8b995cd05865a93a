"""Constructive embedding algorithms for oriented paths and caterpillars."""

from __future__ import annotations

from functools import cmp_to_key

from .digraph import Caterpillar, OrientedPath, sections
from .errors import (
    BadShape,
    NotConvex,
    NotGeneral,
    NotMonotoneBackbone,
    NotOneSided,
    SizeMismatch,
    TooFewPoints,
)
from .geometry import (
    Point,
    PointSet,
    cross,
    is_general_position,
    is_one_sided,
    orientation,
    sort_by_y,
)
from .verify import Embedding


# ------------------------------------------------------- one-sided convex sets

def embed_path_one_sided(path: OrientedPath, points: PointSet) -> list[Embedding]:
    """All UPSEs of an oriented path on a one-sided convex set of equal size.

    A path with k sections has exactly k of them.  The list is built by the
    inductive extension procedure: embed the prefix up to the last switch on
    the extreme consecutive run of points, then either open a gap for the
    last section next to the switch's point, or append the last section on
    the remaining extreme points.
    """
    n = path.n
    if n != len(points):
        raise SizeMismatch(f"path has {n} vertices but the set has {len(points)} points")
    if n < 2:
        raise SizeMismatch("path embedding needs at least two vertices")
    if n >= 3:
        try:
            one_sided = is_one_sided(points)
        except (NotConvex, NotGeneral) as exc:
            raise NotOneSided(str(exc)) from exc
        if not one_sided:
            raise NotOneSided("lowest and highest points are not hull neighbours")
    ysort = sort_by_y(points)
    out = []
    for ranks in sorted(_one_sided_rank_maps(path.signs)):
        mapping = [-1] * n
        for pos, rank in enumerate(ranks):
            mapping[path.order[pos]] = ysort[rank]
        out.append(Embedding(path.digraph, points, tuple(mapping)))
    return out


def _one_sided_rank_maps(signs: tuple[bool, ...]) -> list[tuple[int, ...]]:
    """UPSE placements of the path onto y-ranks 0..n-1 of a one-sided convex set.

    On such a set every orientation predicate is a function of the y-order
    alone, so embeddings compose by rank arithmetic.  Returns one placement
    per section; the placement whose last vertex sits on the extreme rank
    (top for a forward last section, bottom for a backward one) is always
    among them, which is what the induction extends.
    """
    n = len(signs) + 1
    if n == 1:
        return [(0,)]
    changes = [i for i in range(1, len(signs)) if signs[i] != signs[i - 1]]
    if not changes:
        return [tuple(range(n))] if signs[0] else [tuple(reversed(range(n)))]
    m = changes[-1]  # path position of the switch starting the last section
    t = n - 1 - m  # vertices of the last section beyond the switch
    sub = _one_sided_rank_maps(signs[:m])
    result: list[tuple[int, ...]] = []
    if signs[-1]:  # last section ascends: prefix occupies the bottom ranks
        for ranks in sub:
            i = ranks[m]
            shifted = tuple(r + t if r > i else r for r in ranks)
            result.append(shifted + tuple(range(i + 1, i + t + 1)))
        anchor = [r for r in sub if r[m] == 0]
        assert anchor, "prefix must reach the bottom rank"
        result.append(anchor[0] + tuple(range(m + 1, n)))
    else:  # last section descends: prefix occupies the top ranks
        subs_abs = [tuple(r + t for r in ranks) for ranks in sub]
        for ranks in subs_abs:
            i = ranks[m]
            shifted = tuple(r - t if r < i else r for r in ranks)
            result.append(shifted + tuple(range(i - 1, i - t - 1, -1)))
        anchor = [r for r in subs_abs if r[m] == n - 1]
        assert anchor, "prefix must reach the top rank"
        result.append(anchor[0] + tuple(range(t - 1, -1, -1)))
    return result


# ------------------------------------------------------- three-section paths

def embed_three_section(path: OrientedPath, points: PointSet) -> Embedding:
    """Embed a three-section path whose middle section is longest.

    Works on any general-position set of matching size.  The set is cut by
    the line through its lowest and highest points; angular sweeps around
    those two extremes carve off monotone runs for the outer sections and the
    middle section descends through the convex pocket left in between.
    """
    decomp = sections(path)
    if decomp.count != 3:
        raise BadShape(f"path must have exactly 3 sections, found {decomp.count}")
    a, b, c = (s.length for s in decomp.sections)
    if not (b >= a and b >= c):
        raise BadShape("middle section must be at least as long as the outer ones")
    if len(points) != path.n:
        raise SizeMismatch(f"path has {path.n} vertices but the set has {len(points)} points")
    if not is_general_position(points):
        raise NotGeneral("three-section embedding requires general position")
    work = path if decomp.sections[0].forward else path.reverse()
    return Embedding(path.digraph, points, _three_forward(work, points))


def _angular_order(points: PointSet, pivot: int, candidates, ascending: bool) -> list[int]:
    """Candidates sorted by angle around the pivot within an open halfplane."""
    pv = points[pivot]

    def compare(i: int, j: int) -> int:
        c = cross(pv, points[i], points[j])
        assert c != 0, "angular tie around a pivot (set not in general position)"
        return -1 if (c > 0) == ascending else 1

    return sorted(candidates, key=cmp_to_key(compare))


def _three_forward(path: OrientedPath, points: PointSet) -> tuple[int, ...]:
    decomp = sections(path)
    a, b, c = (s.length for s in decomp.sections)
    assert decomp.sections[0].forward
    b_idx = points.lowest_index
    t_idx = points.highest_index
    pb, pt = points[b_idx], points[t_idx]
    left: list[int] = []
    right: list[int] = []
    for i, p in enumerate(points):
        if i in (b_idx, t_idx):
            continue
        o = orientation(pb, pt, p)
        assert o != 0, "a third point lies on the extremes' line"
        (left if o > 0 else right).append(i)

    if len(left) + 2 >= a + c:
        s1, s3 = _outer_runs_one_side(points, b_idx, t_idx, left, a, c)
    elif len(right) + 2 >= a + c:
        mirrored = PointSet(Point(-p.x, p.y) for p in points)
        return _three_forward(path, mirrored)
    else:
        # both outer sections fit strictly between the extremes' line sides
        s1 = [t_idx] + _angular_order(points, t_idx, left, ascending=True)[: a - 1]
        s3 = [b_idx] + _angular_order(points, b_idx, right, ascending=True)[: c - 1]

    assert len(s1) == a and len(s3) == c and not set(s1) & set(s3)
    s2 = [i for i in range(len(points)) if i not in set(s1) | set(s3)]
    s2 += [b_idx, t_idx]
    assert len(s2) == b

    def by_y(indices, reverse=False):
        return sorted(indices, key=lambda i: points[i].y, reverse=reverse)

    n = path.n
    mapping = [-1] * n
    order = path.order
    for offset, point_index in enumerate(by_y(s1)):
        mapping[order[offset]] = point_index
    for offset, point_index in enumerate(by_y(s2, reverse=True)):
        pos = a - 1 + offset
        assert mapping[order[pos]] in (-1, point_index)
        mapping[order[pos]] = point_index
    for offset, point_index in enumerate(by_y(s3)):
        pos = a + b - 2 + offset
        assert mapping[order[pos]] in (-1, point_index)
        mapping[order[pos]] = point_index
    return tuple(mapping)


def _outer_runs_one_side(points, b_idx, t_idx, left, a, c):
    # both outer sections fit on the left of the extremes' line: sweep a
    # westward ray at the top downwards for the first section, then one at
    # the bottom upwards for the last, skipping points already claimed
    s1_rest = _angular_order(points, t_idx, left, ascending=True)[: a - 1]
    assert len(s1_rest) == a - 1
    s1 = [t_idx] + s1_rest
    remaining = [i for i in left if i not in set(s1_rest)]
    s3_rest = _angular_order(points, b_idx, remaining, ascending=False)[: c - 1]
    assert len(s3_rest) == c - 1
    s3 = [b_idx] + s3_rest
    return s1, s3


# ------------------------------------------------------------- caterpillars

def _cat_items(cat: Caterpillar) -> list[tuple[int, tuple[int, ...], tuple[int, ...]]]:
    return [
        (v, cat.in_leaves[i], cat.out_leaves[i]) for i, v in enumerate(cat.backbone)
    ]


def _assign_monotone_ranks(items, forward: bool) -> dict[int, int]:
    """Bottom-up y-ranks for a monotone-backbone caterpillar.

    Backbone vertex i lands above its incoming leaves and below its outgoing
    ones; blocks follow the backbone order (reversed when it descends).
    """
    ranks: dict[int, int] = {}
    cursor = 0
    for v, ins, outs in (items if forward else list(reversed(items))):
        for leaf in ins:
            ranks[leaf] = cursor
            cursor += 1
        ranks[v] = cursor
        cursor += 1
        for leaf in outs:
            ranks[leaf] = cursor
            cursor += 1
    return ranks


def embed_caterpillar_monotone(cat: Caterpillar, points: PointSet) -> Embedding:
    """Embed a caterpillar whose backbone is one monotone section.

    Works on every general-position set of exactly matching size: blocks of
    consecutive y-ranks host each backbone vertex between its incoming leaves
    (below) and outgoing leaves (above).
    """
    n = cat.digraph.n
    if n != len(points):
        raise SizeMismatch(f"caterpillar has {n} vertices but the set has {len(points)} points")
    sg = cat.backbone_signs
    if sg and len(set(sg)) > 1:
        raise NotMonotoneBackbone("backbone has more than one section")
    if not is_general_position(points):
        raise NotGeneral("monotone caterpillar embedding requires general position")
    ranks = _assign_monotone_ranks(_cat_items(cat), sg[0] if sg else True)
    ysort = sort_by_y(points)
    return Embedding(cat.digraph, points, tuple(ysort[ranks[v]] for v in range(n)))


def embed_caterpillar(cat: Caterpillar, points: PointSet) -> Embedding:
    """Embed a caterpillar with k backbone switches on >= n * 2^(k-2) points.

    Recursive: the first backbone section's sub-caterpillar is placed on the
    extreme block of points; the line through the last placed backbone point
    and a rank-chosen pivot splits the rest, and the larger side (plus the
    pivot's flanking points) hosts the remaining switches.
    """
    n = cat.digraph.n
    k = cat.switch_count
    needed = n * 2 ** (k - 2)
    if len(points) < needed:
        raise TooFewPoints(f"{len(points)} points but {needed} required for {k} switches")
    if not is_general_position(points):
        raise NotGeneral("caterpillar embedding requires general position")
    mapping: dict[int, int] = {}
    _embed_cat(_cat_items(cat), cat.backbone_signs, list(range(len(points))), points, mapping, 1, k)
    return Embedding(cat.digraph, points, tuple(mapping[v] for v in range(n)))


def _embed_cat(items, signs, available, points, out, depth, total_switches):
    size = sum(1 + len(ins) + len(outs) for _, ins, outs in items)
    by_y = sorted(available, key=lambda i: points[i].y)
    if not signs or len(set(signs)) == 1:
        assert depth == total_switches - 1
        forward = signs[0] if signs else True
        chosen = by_y[:size] if forward else by_y[-size:]
        for v, rank in _assign_monotone_ranks(items, forward).items():
            out[v] = chosen[rank]
        return

    first = signs[0]
    cut = next(i for i, s in enumerate(signs) if s != first)
    head, tail = items[:cut], items[cut:]
    head_size = sum(1 + len(ins) + len(outs) for _, ins, outs in head)

    if first:
        head_chosen = by_y[:head_size]
        rest = by_y[head_size:]
        hinge_leaves = len(tail[0][2])  # outgoing leaves of the joint switch
        pivot = rest[-(hinge_leaves + 1)]
        flank = rest[len(rest) - hinge_leaves :] if hinge_leaves else []
    else:
        head_chosen = by_y[-head_size:]
        rest = by_y[:-head_size]
        hinge_leaves = len(tail[0][1])  # incoming leaves of the joint switch
        pivot = rest[hinge_leaves]
        flank = rest[:hinge_leaves]

    for v, rank in _assign_monotone_ranks(head, first).items():
        out[v] = head_chosen[rank]
    joint = out[head[-1][0]]

    pj, pv = points[joint], points[pivot]
    side_left: list[int] = []
    side_right: list[int] = []
    for q in rest:
        if q == pivot:
            continue
        o = orientation(pj, pv, points[q])
        assert o != 0, "a point lies on the splitting line"
        (side_left if o > 0 else side_right).append(q)
    side = side_left if len(side_left) >= len(side_right) else side_right
    sub_available = list(dict.fromkeys(side + [pivot] + list(flank)))
    tail_size = size - head_size
    assert len(sub_available) >= tail_size * 2 ** (total_switches - depth - 2)
    _embed_cat(tail, signs[cut:], sub_available, points, out, depth + 1, total_switches)
    assert out[tail[0][0]] == pivot
