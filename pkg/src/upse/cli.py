"""Command-line front end.

Exit codes: 0 success / decision true, 1 decision false, 2 usage or input
error (including violated algorithm preconditions), 3 internal invariant
failure.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import Optional, Sequence

from . import construct, enumeration, geometry, reduction, serialization, svg
from .digraph import caterpillar_decompose, random_caterpillar, random_path
from .errors import ConstructionFailed, UpseError
from .verify import is_upse


def _read_points(path: str):
    return serialization.point_set_from_json(serialization.load_json(path))


def _read_graph(path: str):
    return serialization.digraph_from_json(serialization.load_json(path))


def _read_path_graph(path: str):
    return serialization.path_from_json(serialization.load_json(path))


def _parse_pin(text: str) -> tuple[int, int]:
    vertex, _, point = text.partition(":")
    return int(vertex), int(point)


def _emit(data, out: Optional[str]) -> None:
    text = serialization.dump_json(data, out)
    if out is None:
        print(text)


def _cmd_classify(args) -> int:
    points = _read_points(args.points)
    general = geometry.is_general_position(points)
    convex = one_sided = None
    if general and len(points) >= 3:
        convex = geometry.is_convex_position(points)
        if convex:
            one_sided = geometry.is_one_sided(points)
        else:
            one_sided = False
    _emit({"general": general, "convex": convex, "one_sided": one_sided}, args.out)
    return 0


def _cmd_verify(args) -> int:
    graph = _read_graph(args.graph)
    points = _read_points(args.points)
    emb = serialization.embedding_from_json(
        serialization.load_json(args.embedding), graph, points
    )
    return 0 if is_upse(emb) else 1


def _cmd_count(args) -> int:
    graph = _read_graph(args.graph)
    points = _read_points(args.points)
    print(enumeration.count_upse(graph, points))
    return 0


def _cmd_enumerate(args) -> int:
    graph = _read_graph(args.graph)
    points = _read_points(args.points)
    pins = [_parse_pin(p) for p in args.pin or []]
    found = enumeration.enumerate_upse(graph, points, pins or None)
    _emit([list(e.mapping) for e in found], args.out)
    return 0


def _cmd_decide(args) -> int:
    graph = _read_graph(args.graph)
    points = _read_points(args.points)
    vertex, point = _parse_pin(args.pin)
    return 0 if enumeration.decide_fixed_vertex(graph, points, vertex, point) else 1


def _cmd_embed_convex_path(args) -> int:
    path = _read_path_graph(args.graph)
    points = _read_points(args.points)
    embeddings = construct.embed_path_one_sided(path, points)
    _emit([serialization.embedding_to_json(e) for e in embeddings], args.out)
    return 0


def _cmd_embed_three_section(args) -> int:
    path = _read_path_graph(args.graph)
    points = _read_points(args.points)
    emb = construct.embed_three_section(path, points)
    _emit(serialization.embedding_to_json(emb), args.out)
    return 0


def _cmd_embed_caterpillar(args) -> int:
    graph = _read_graph(args.graph)
    points = _read_points(args.points)
    cat = caterpillar_decompose(graph)
    if cat.switch_count == 2 and len(points) == graph.n:
        emb = construct.embed_caterpillar_monotone(cat, points)
    else:
        emb = construct.embed_caterpillar(cat, points)
    _emit(serialization.embedding_to_json(emb), args.out)
    return 0


def _cmd_reduce(args) -> int:
    data = serialization.load_json(args.instance)
    inst = reduction.ThreePartitionInstance.from_values(
        data["values"], normalize=args.normalize
    )
    built = reduction.reduce_3partition(inst)
    cert = reduction.certificate(built)
    _emit(serialization.reduction_to_json(built, cert), args.out)
    return 0


def _rebuild_reduction(bundle_path: str):
    data = serialization.load_json(bundle_path)
    inst = reduction.ThreePartitionInstance(tuple(data["instance"]["values"]))
    built = reduction.reduce_3partition(inst)
    # the bundle must describe the same deterministic construction
    if serialization.point_set_to_json(built.points) != data["points"]:
        raise ValueError("bundle does not match the deterministic construction")
    return built


def _cmd_consistent_embed(args) -> int:
    built = _rebuild_reduction(args.bundle)
    if args.partition:
        partition = json.loads(args.partition)
    else:
        partition = reduction.solve_3partition(built.instance)
        if partition is None:
            print("instance has no 3-partition", file=sys.stderr)
            return 1
    emb = reduction.consistent_embedding(built, partition)
    _emit(serialization.embedding_to_json(emb), args.out)
    return 0


def _cmd_render_svg(args) -> int:
    if args.bundle:
        built = _rebuild_reduction(args.bundle)
        points = built.points
        embedding = None
        if args.embedding:
            embedding = serialization.embedding_from_json(
                serialization.load_json(args.embedding), built.tree, points
            )
        document = svg.render_svg(points, embedding, built)
    else:
        points = _read_points(args.points)
        embedding = None
        if args.embedding:
            graph = _read_graph(args.graph)
            embedding = serialization.embedding_from_json(
                serialization.load_json(args.embedding), graph, points
            )
        document = svg.render_svg(points, embedding)
    if args.out:
        with open(args.out, "w", encoding="utf-8") as handle:
            handle.write(document)
    else:
        print(document, end="")
    return 0


def _cmd_gen_points(args) -> int:
    points = geometry.generate_point_set(args.kind, args.n, args.seed)
    _emit(serialization.point_set_to_json(points), args.out)
    return 0


def _cmd_gen_path(args) -> int:
    if args.signs:
        path = serialization.path_from_json(args.signs)
    else:
        path = random_path(args.n, args.seed)
    _emit(serialization.path_to_json(path), args.out)
    return 0


def _cmd_gen_caterpillar(args) -> int:
    cat = random_caterpillar(args.n, args.switches, args.seed)
    _emit(serialization.digraph_to_json(cat.digraph), args.out)
    return 0


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="upse",
        description="Upward planar straight-line embeddings on point sets",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def add(name, handler, **kwargs):
        p = sub.add_parser(name, **kwargs)
        p.set_defaults(handler=handler)
        p.add_argument("--out", help="write JSON/SVG here instead of stdout")
        return p

    p = add("classify", _cmd_classify, help="classify a point set")
    p.add_argument("--points", required=True)

    p = add("verify", _cmd_verify, help="check an embedding (exit 0 iff UPSE)")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--embedding", required=True)

    p = add("count", _cmd_count, help="count all UPSEs by exhaustive search")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)

    p = add("enumerate", _cmd_enumerate, help="list all UPSE mappings")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--pin", action="append", help="vertex:point, repeatable")

    p = add("decide", _cmd_decide, help="fixed-vertex decision (exit 0 iff embeddable)")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)
    p.add_argument("--pin", required=True, help="vertex:point")

    p = add("embed-convex-path", _cmd_embed_convex_path,
            help="all embeddings of a path on a one-sided convex set")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)

    p = add("embed-three-section", _cmd_embed_three_section,
            help="embed a three-section path on a general set")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)

    p = add("embed-caterpillar", _cmd_embed_caterpillar,
            help="embed a caterpillar on a large enough general set")
    p.add_argument("--graph", required=True)
    p.add_argument("--points", required=True)

    p = add("reduce-3partition", _cmd_reduce,
            help="build a fixed-vertex instance from 3-Partition values")
    p.add_argument("--instance", required=True, help='JSON file {"values": [...]}')
    p.add_argument("--normalize", action="store_true",
                   help="multiply values by 3 if any is not divisible by 3")

    p = add("consistent-embed", _cmd_consistent_embed,
            help="embedding witness for a yes-instance bundle")
    p.add_argument("--bundle", required=True)
    p.add_argument("--partition", help="JSON list of index triples; solved if omitted")

    p = add("render-svg", _cmd_render_svg, help="draw points/embedding as SVG")
    p.add_argument("--points")
    p.add_argument("--graph")
    p.add_argument("--embedding")
    p.add_argument("--bundle", help="reduction bundle (adds sector/curve guides)")

    p = add("gen-points", _cmd_gen_points, help="seeded point-set generator")
    p.add_argument("--kind", required=True,
                   choices=["general", "one_sided_convex", "convex"])
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    p = add("gen-path", _cmd_gen_path, help="seeded oriented-path generator")
    p.add_argument("--n", type=int, default=0)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--signs", help="explicit sign string, e.g. '++-'")

    p = add("gen-caterpillar", _cmd_gen_caterpillar, help="seeded caterpillar generator")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--switches", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)

    return parser


def run(argv: Optional[Sequence[str]] = None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.handler(args)
    except (ConstructionFailed, AssertionError) as exc:
        print(f"internal invariant failure: {exc}", file=sys.stderr)
        return 3
    except (UpseError, ValueError, KeyError, OSError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2


def main() -> None:
    sys.exit(run())
