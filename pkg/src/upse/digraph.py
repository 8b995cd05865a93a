"""Oriented paths, directed trees, and caterpillars with their structural splits."""

from __future__ import annotations

import hashlib
import random
from dataclasses import dataclass
from typing import Iterator, Sequence

from .errors import NotACaterpillar, NotATree

FORWARD_CHARS = "+"
BACKWARD_CHARS = "-−"  # ASCII minus and the unicode minus sign


@dataclass(frozen=True)
class Digraph:
    """A digraph on vertices 0..n-1 given by directed edge pairs (u, v)."""

    n: int
    edges: tuple[tuple[int, int], ...]

    def __post_init__(self):
        object.__setattr__(self, "edges", tuple((int(u), int(v)) for u, v in self.edges))
        if self.n < 1:
            raise ValueError("graph must have at least one vertex")
        seen: set[frozenset[int]] = set()
        for u, v in self.edges:
            if not (0 <= u < self.n and 0 <= v < self.n):
                raise ValueError(f"edge ({u},{v}) out of range")
            if u == v:
                raise ValueError("self-loops are not allowed")
            key = frozenset((u, v))
            if key in seen:
                raise ValueError(f"parallel edge between {u} and {v}")
            seen.add(key)

    def undirected_adjacency(self) -> list[list[int]]:
        adj: list[list[int]] = [[] for _ in range(self.n)]
        for u, v in self.edges:
            adj[u].append(v)
            adj[v].append(u)
        return adj

    def edge_set(self) -> frozenset[tuple[int, int]]:
        return frozenset(self.edges)

    def in_degrees(self) -> list[int]:
        deg = [0] * self.n
        for _, v in self.edges:
            deg[v] += 1
        return deg

    def out_degrees(self) -> list[int]:
        deg = [0] * self.n
        for u, _ in self.edges:
            deg[u] += 1
        return deg


def is_tree(graph: Digraph) -> bool:
    """True iff the underlying undirected graph is connected and acyclic."""
    if len(graph.edges) != graph.n - 1:
        return False
    adj = graph.undirected_adjacency()
    seen = [False] * graph.n
    stack = [0]
    seen[0] = True
    count = 1
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if not seen[w]:
                seen[w] = True
                count += 1
                stack.append(w)
    return count == graph.n


def _parse_signs(signs) -> tuple[bool, ...]:
    if isinstance(signs, str):
        out = []
        for ch in signs:
            if ch in FORWARD_CHARS:
                out.append(True)
            elif ch in BACKWARD_CHARS:
                out.append(False)
            else:
                raise ValueError(f"bad sign character {ch!r}")
        return tuple(out)
    return tuple(bool(s) for s in signs)


@dataclass(frozen=True)
class OrientedPath:
    """A digraph whose underlying graph is a simple path, with a fixed end order."""

    digraph: Digraph
    order: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "order", tuple(int(v) for v in self.order))
        g = self.digraph
        if sorted(self.order) != list(range(g.n)):
            raise ValueError("order must be a permutation of the vertices")
        if len(g.edges) != g.n - 1:
            raise ValueError("a path on n vertices has n-1 edges")
        edge_set = g.edge_set()
        for a, b in zip(self.order, self.order[1:]):
            if (a, b) not in edge_set and (b, a) not in edge_set:
                raise ValueError("order does not follow the path's edges")

    @classmethod
    def from_signs(cls, signs) -> "OrientedPath":
        """Path on vertices 0..n-1 in order; sign i orients the edge at position i."""
        sg = _parse_signs(signs)
        n = len(sg) + 1
        edges = tuple((i, i + 1) if s else (i + 1, i) for i, s in enumerate(sg))
        return cls(Digraph(n, edges), tuple(range(n)))

    @classmethod
    def from_digraph(cls, graph: Digraph) -> "OrientedPath":
        """Recover the path order of a digraph whose underlying graph is a path."""
        if graph.n == 1:
            return cls(graph, (0,))
        adj = graph.undirected_adjacency()
        degrees = [len(a) for a in adj]
        ends = [v for v in range(graph.n) if degrees[v] == 1]
        if len(ends) != 2 or any(d > 2 for d in degrees) or not is_tree(graph):
            raise ValueError("digraph is not a simple path")
        order = [min(ends)]
        prev = -1
        while len(order) < graph.n:
            nxt = [w for w in adj[order[-1]] if w != prev]
            prev = order[-1]
            order.append(nxt[0])
        return cls(graph, tuple(order))

    @property
    def n(self) -> int:
        return self.digraph.n

    @property
    def signs(self) -> tuple[bool, ...]:
        edge_set = self.digraph.edge_set()
        return tuple((a, b) in edge_set for a, b in zip(self.order, self.order[1:]))

    def sign_string(self) -> str:
        return "".join("+" if s else "-" for s in self.signs)

    def reverse(self) -> "OrientedPath":
        return OrientedPath(self.digraph, self.order[::-1])


@dataclass(frozen=True)
class Section:
    """A maximal monotone run of the path, as positions [start, end] in path order."""

    start: int
    end: int
    forward: bool

    @property
    def length(self) -> int:
        return self.end - self.start + 1


@dataclass(frozen=True)
class SectionDecomposition:
    sections: tuple[Section, ...]
    switches: tuple[int, ...]

    @property
    def count(self) -> int:
        return len(self.sections)


def sections(path: OrientedPath) -> SectionDecomposition:
    """Split the path into maximal monotone sections and list its switches.

    Positions refer to the path order, so section boundaries and switches are
    indices into ``path.order``.  Every endpoint of the path is a switch.
    """
    sg = path.signs
    if not sg:
        return SectionDecomposition((), (0,))
    secs: list[Section] = []
    start = 0
    for i in range(1, len(sg)):
        if sg[i] != sg[i - 1]:
            secs.append(Section(start, i, sg[start]))
            start = i
    secs.append(Section(start, len(sg), sg[start]))
    switches = (0,) + tuple(s.start for s in secs[1:]) + (path.n - 1,)
    return SectionDecomposition(tuple(secs), switches)


def enumerate_paths(n: int) -> Iterator[OrientedPath]:
    """All 2^(n-1) oriented paths on n vertices, in edge-sign order."""
    if n < 2:
        raise ValueError("need at least two vertices")
    for mask in range(1 << (n - 1)):
        yield OrientedPath.from_signs(tuple(bool((mask >> i) & 1) for i in range(n - 1)))


@dataclass(frozen=True)
class Caterpillar:
    """A directed tree whose non-leaf structure is carried by a backbone path.

    ``in_leaves[i]`` lists the degree-one vertices with an edge INTO backbone
    vertex i (they must be drawn below it); ``out_leaves[i]`` lists those
    reached by an edge FROM it (drawn above).
    """

    digraph: Digraph
    backbone: tuple[int, ...]
    in_leaves: tuple[tuple[int, ...], ...]
    out_leaves: tuple[tuple[int, ...], ...]

    def __post_init__(self):
        r = len(self.backbone)
        if r == 0 or len(self.in_leaves) != r or len(self.out_leaves) != r:
            raise ValueError("leaf lists must match the backbone length")
        total = sum(1 + len(a) + len(b) for a, b in zip(self.in_leaves, self.out_leaves))
        if total != self.digraph.n:
            raise ValueError("backbone and leaves must cover every vertex exactly once")
        edge_set = self.digraph.edge_set()
        for i, v in enumerate(self.backbone):
            for leaf in self.in_leaves[i]:
                if (leaf, v) not in edge_set:
                    raise ValueError(f"missing incoming leaf edge ({leaf},{v})")
            for leaf in self.out_leaves[i]:
                if (v, leaf) not in edge_set:
                    raise ValueError(f"missing outgoing leaf edge ({v},{leaf})")

    @classmethod
    def build(cls, signs, in_counts: Sequence[int], out_counts: Sequence[int]) -> "Caterpillar":
        """Assemble a caterpillar from backbone edge signs and leaf counts."""
        sg = _parse_signs(signs)
        r = len(sg) + 1
        if len(in_counts) != r or len(out_counts) != r:
            raise ValueError("leaf counts must match the backbone length")
        edges: list[tuple[int, int]] = []
        for i, s in enumerate(sg):
            edges.append((i, i + 1) if s else (i + 1, i))
        nxt = r
        in_leaves: list[tuple[int, ...]] = []
        out_leaves: list[tuple[int, ...]] = []
        for i in range(r):
            ins = tuple(range(nxt, nxt + in_counts[i]))
            nxt += in_counts[i]
            outs = tuple(range(nxt, nxt + out_counts[i]))
            nxt += out_counts[i]
            edges.extend((leaf, i) for leaf in ins)
            edges.extend((i, leaf) for leaf in outs)
            in_leaves.append(ins)
            out_leaves.append(outs)
        return cls(Digraph(nxt, tuple(edges)), tuple(range(r)), tuple(in_leaves), tuple(out_leaves))

    @property
    def backbone_signs(self) -> tuple[bool, ...]:
        edge_set = self.digraph.edge_set()
        return tuple(
            (a, b) in edge_set for a, b in zip(self.backbone, self.backbone[1:])
        )

    @property
    def switch_count(self) -> int:
        """Switches of the backbone read as a standalone oriented path."""
        sg = self.backbone_signs
        if not sg:
            return 2
        return 2 + sum(1 for a, b in zip(sg, sg[1:]) if a != b)


def caterpillar_decompose(graph: Digraph) -> Caterpillar:
    """Recover the backbone and leaf sets of a caterpillar digraph.

    Oriented paths decompose with the whole path as backbone.  For any other
    tree the backbone is what remains after stripping the degree-one
    vertices; if that is not a path the input is rejected.
    """
    if not is_tree(graph):
        raise NotATree("caterpillar decomposition requires a tree")
    adj = graph.undirected_adjacency()
    degrees = [len(a) for a in adj]
    if all(d <= 2 for d in degrees):
        if graph.n == 1:
            backbone = (0,)
        else:
            backbone = OrientedPath.from_digraph(graph).order
        empty = tuple(() for _ in backbone)
        return Caterpillar(graph, backbone, empty, empty)

    core = [v for v in range(graph.n) if degrees[v] >= 2]
    core_set = set(core)
    core_deg = {v: sum(1 for w in adj[v] if w in core_set) for v in core}
    if any(d > 2 for d in core_deg.values()):
        raise NotACaterpillar("stripping the leaves does not leave a path")
    ends = [v for v in core if core_deg[v] <= 1]
    if len(core) == 1:
        backbone = [core[0]]
    else:
        if len(ends) != 2:
            raise NotACaterpillar("stripped core is not a single path")
        backbone = [min(ends)]
        prev = -1
        while True:
            nxt = [w for w in adj[backbone[-1]] if w in core_set and w != prev]
            if not nxt:
                break
            prev = backbone[-1]
            backbone.append(nxt[0])
        if len(backbone) != len(core):
            raise NotACaterpillar("stripped core is not connected as a path")

    edge_set = graph.edge_set()
    in_leaves = []
    out_leaves = []
    for v in backbone:
        ins = []
        outs = []
        for w in adj[v]:
            if w in core_set:
                continue
            if (w, v) in edge_set:
                ins.append(w)
            else:
                outs.append(w)
        in_leaves.append(tuple(sorted(ins)))
        out_leaves.append(tuple(sorted(outs)))
    return Caterpillar(graph, tuple(backbone), tuple(in_leaves), tuple(out_leaves))


# ----------------------------------------------------------------- generators

def _derive_seed(label: str, *parts: int) -> int:
    digest = hashlib.sha256(":".join([label, *map(str, parts)]).encode()).digest()
    return int.from_bytes(digest[:8], "big")


def random_path(n: int, seed: int = 0) -> OrientedPath:
    """Seeded oriented path with uniformly random edge signs."""
    if n < 2:
        raise ValueError("need at least two vertices")
    rng = random.Random(_derive_seed("path", n, seed))
    return OrientedPath.from_signs(tuple(rng.random() < 0.5 for _ in range(n - 1)))


def random_caterpillar(n: int, switches: int, seed: int = 0) -> Caterpillar:
    """Seeded caterpillar with the requested number of backbone switches."""
    if switches < 2:
        raise ValueError("a backbone has at least two switches")
    if n < switches:
        raise ValueError("too few vertices for that many switches")
    rng = random.Random(_derive_seed("caterpillar", n, switches, seed))
    section_count = switches - 1
    r = rng.randint(switches, n)
    # split r-1 backbone edges into section_count nonempty runs
    cuts = sorted(rng.sample(range(1, r - 1), section_count - 1)) if section_count > 1 else []
    runs = [b - a for a, b in zip([0, *cuts], [*cuts, r - 1])]
    direction = rng.random() < 0.5
    signs: list[bool] = []
    for run in runs:
        signs.extend([direction] * run)
        direction = not direction
    in_counts = [0] * r
    out_counts = [0] * r
    for _ in range(n - r):
        i = rng.randrange(r)
        if rng.random() < 0.5:
            in_counts[i] += 1
        else:
            out_counts[i] += 1
    return Caterpillar.build(tuple(signs), in_counts, out_counts)


def random_tree(n: int, seed: int = 0) -> Digraph:
    """Seeded directed tree: random attachment order, random edge directions."""
    if n < 1:
        raise ValueError("need at least one vertex")
    rng = random.Random(_derive_seed("tree", n, seed))
    edges = []
    for v in range(1, n):
        u = rng.randrange(v)
        edges.append((u, v) if rng.random() < 0.5 else (v, u))
    return Digraph(n, tuple(edges))
