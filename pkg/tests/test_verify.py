import random
from fractions import Fraction

import pytest

from upse.digraph import Digraph, random_tree
from upse.geometry import Point, PointSet, generate_point_set
from upse.verify import Embedding, is_planar_drawing, is_upse, is_upward

from naive_oracles import is_upse_naive


def test_embedding_validation():
    g = Digraph(2, ((0, 1),))
    ps = PointSet([(0, 0), (1, 1), (2, 5)])
    Embedding(g, ps, (0, 2))
    with pytest.raises(ValueError):
        Embedding(g, ps, (0, 0))  # not injective
    with pytest.raises(ValueError):
        Embedding(g, ps, (0,))  # missing vertex
    with pytest.raises(ValueError):
        Embedding(g, ps, (0, 3))  # out of range


def test_is_upward():
    g = Digraph(2, ((0, 1),))
    ps = PointSet([(0, 0), (1, 1)])
    assert is_upward(Embedding(g, ps, (0, 1)))
    assert not is_upward(Embedding(g, ps, (1, 0)))
    chain = Digraph(4, ((0, 1), (1, 2), (2, 3)))
    pts = generate_point_set("general", 4, 0)
    order = sorted(range(4), key=lambda i: pts[i].y)
    assert is_upward(Embedding(chain, pts, tuple(order)))


def test_planar_examples():
    two_edges = Digraph(3, ((0, 1), (1, 2)))
    ps = PointSet([(0, 0), (2, 1), (1, 3)])
    for mapping in ((0, 1, 2), (2, 0, 1), (1, 2, 0)):
        assert is_planar_drawing(Embedding(two_edges, ps, mapping))

    # 4-path placed so the two outer segments form an X
    path4 = Digraph(4, ((0, 1), (1, 2), (2, 3)))
    pts = PointSet([(0, 0), (2, 2), (0, 2), (2, 0)])
    crossing = Embedding(path4, pts, (0, 1, 2, 3))
    from naive_oracles import segments_cross_naive

    assert segments_cross_naive(tuple(pts[0]), tuple(pts[1]), tuple(pts[2]), tuple(pts[3]))
    assert not is_planar_drawing(crossing)

    star = Digraph(4, ((0, 1), (0, 2), (0, 3)))
    spread = PointSet([(0, 0), (-2, 3), (0, 4), (2, 3)])
    assert is_upse(Embedding(star, spread, (0, 1, 2, 3)))


def test_vertex_inside_foreign_edge_is_rejected():
    g = Digraph(3, ((0, 1), (0, 2)))
    ps = PointSet([(0, 0), (2, 2), (1, 1)])
    emb = Embedding(g, ps, (0, 1, 2))
    assert not is_planar_drawing(emb)  # vertex 2 sits inside edge 0->1


def _random_embedding(seed):
    rng = random.Random(seed)
    n = rng.randint(2, 7)
    g = random_tree(n, seed)
    ps = generate_point_set("general", n, seed + 500)
    mapping = tuple(rng.sample(range(n), n))
    return g, ps, Embedding(g, ps, mapping)


@pytest.mark.parametrize("seed", range(40))
def test_matches_naive_checker(seed):
    g, ps, emb = _random_embedding(seed)
    coords = [(p.x, p.y) for p in ps]
    assert is_upse(emb) == is_upse_naive(g.edges, coords, emb.mapping)


@pytest.mark.parametrize("seed", range(10))
def test_upse_invariance(seed):
    g, ps, emb = _random_embedding(seed)
    base = is_upse(emb)

    shifted = PointSet([Point(p.x + 7, p.y + Fraction(3, 2)) for p in ps])
    assert is_upse(Embedding(g, shifted, emb.mapping)) == base

    scaled = PointSet([Point(p.x * 3, p.y * Fraction(5, 2)) for p in ps])
    assert is_upse(Embedding(g, scaled, emb.mapping)) == base

    mirrored = PointSet([Point(-p.x, p.y) for p in ps])
    assert is_upse(Embedding(g, mirrored, emb.mapping)) == base
