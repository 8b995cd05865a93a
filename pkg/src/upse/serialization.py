"""JSON interchange for point sets, graphs, embeddings, and reduction bundles.

Rationals travel as ``"num/den"`` strings in lowest terms (plain integers are
accepted as shorthand); floats are rejected to keep every pipeline exact.
"""

from __future__ import annotations

import json
from fractions import Fraction
from typing import Any

from .digraph import Digraph, OrientedPath
from .geometry import Point, PointSet
from .reduction import Certificate, ReductionInstance
from .verify import Embedding


def fraction_to_json(value: Fraction) -> int | str:
    if value.denominator == 1:
        return int(value)
    return f"{value.numerator}/{value.denominator}"


def fraction_from_json(value: Any) -> Fraction:
    if isinstance(value, bool) or isinstance(value, float):
        raise ValueError(f"exact coordinate expected, got {value!r}")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.replace("−", "-"))
    raise ValueError(f"cannot parse rational from {value!r}")


def point_set_to_json(points: PointSet) -> list[list[int | str]]:
    return [[fraction_to_json(p.x), fraction_to_json(p.y)] for p in points]


def point_set_from_json(data: Any) -> PointSet:
    if not isinstance(data, list):
        raise ValueError("point set JSON must be an array of [x, y] pairs")
    pts = []
    for item in data:
        if not isinstance(item, (list, tuple)) or len(item) != 2:
            raise ValueError(f"bad point entry: {item!r}")
        pts.append(Point(fraction_from_json(item[0]), fraction_from_json(item[1])))
    return PointSet(pts)


def digraph_to_json(graph: Digraph) -> dict:
    return {"n": graph.n, "edges": [[u, v] for u, v in graph.edges]}


def digraph_from_json(data: Any) -> Digraph:
    if not isinstance(data, dict) or "n" not in data or "edges" not in data:
        raise ValueError('graph JSON must be {"n": ..., "edges": [[u, v], ...]}')
    edges = tuple((int(u), int(v)) for u, v in data["edges"])
    return Digraph(int(data["n"]), edges)


def path_to_json(path: OrientedPath) -> dict:
    out = digraph_to_json(path.digraph)
    out["signs"] = path.sign_string()
    return out


def path_from_json(data: Any) -> OrientedPath:
    """Accepts full graph JSON, a {"signs": "+-"} object, or a bare sign string."""
    if isinstance(data, str):
        return OrientedPath.from_signs(data)
    if isinstance(data, dict) and "signs" in data and "edges" not in data:
        return OrientedPath.from_signs(data["signs"])
    return OrientedPath.from_digraph(digraph_from_json(data))


def embedding_to_json(embedding: Embedding) -> dict:
    return {"mapping": list(embedding.mapping)}


def embedding_from_json(data: Any, graph: Digraph, points: PointSet) -> Embedding:
    if not isinstance(data, dict) or "mapping" not in data:
        raise ValueError('embedding JSON must be {"mapping": [...]}')
    return Embedding(graph, points, tuple(int(i) for i in data["mapping"]))


def certificate_to_json(cert: Certificate) -> dict:
    return {
        "passed": cert.passed,
        "checks": {c.name: c.passed for c in cert.checks},
    }


def reduction_to_json(instance: ReductionInstance, cert: Certificate | None = None) -> dict:
    lay = instance.layout
    out = {
        "instance": {"values": list(instance.instance.values)},
        "params": {
            "m": instance.m,
            "b": instance.b,
            "large_length": instance.large_length,
            "large_count": instance.large_count,
        },
        "tree": digraph_to_json(instance.tree),
        "points": point_set_to_json(instance.points),
        "pin": {"vertex": instance.center, "point": instance.fixed_point},
        "branches": [
            {"kind": br.kind, "root": br.root, "vertices": list(br.vertices)}
            for br in instance.branches
        ],
        "layout": {
            "small_sets": [list(s) for s in lay.small_sets],
            "large_sets": [list(s) for s in lay.large_sets],
            "q_points": list(lay.q_points),
            "q_prime_points": list(lay.q_prime_points),
            "ray_slopes": [fraction_to_json(s) for s in lay.ray_slopes],
        },
    }
    if cert is not None:
        out["certificate"] = certificate_to_json(cert)
    return out


def load_json(path: str) -> Any:
    with open(path, "r", encoding="utf-8") as handle:
        return json.load(handle)


def dump_json(data: Any, path: str | None) -> str:
    text = json.dumps(data, indent=2, sort_keys=False)
    if path is not None:
        with open(path, "w", encoding="utf-8") as handle:
            handle.write(text + "\n")
    return text
