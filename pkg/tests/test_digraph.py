import math
import random

import pytest

from upse.digraph import (
    Caterpillar,
    Digraph,
    OrientedPath,
    caterpillar_decompose,
    enumerate_paths,
    is_tree,
    random_caterpillar,
    random_path,
    random_tree,
    sections,
)
from upse.errors import NotACaterpillar, NotATree

from naive_oracles import is_tree_union_find, section_count_scan


def test_digraph_validation():
    with pytest.raises(ValueError):
        Digraph(3, ((0, 0),))
    with pytest.raises(ValueError):
        Digraph(3, ((0, 1), (1, 0)))
    with pytest.raises(ValueError):
        Digraph(2, ((0, 3),))


def test_is_tree():
    assert is_tree(Digraph(3, ((0, 1), (2, 1))))
    assert not is_tree(Digraph(3, ((0, 1), (1, 2), (2, 0))))
    assert not is_tree(Digraph(4, ((0, 1), (2, 3))))


def test_is_tree_matches_union_find():
    rng = random.Random(5)
    for trial in range(30):
        n = rng.randint(2, 8)
        edges = tuple(
            (u, v)
            for u in range(n)
            for v in range(u + 1, n)
            if rng.random() < 0.35
        )
        try:
            g = Digraph(n, edges)
        except ValueError:
            continue
        assert is_tree(g) == is_tree_union_find(n, edges)
    assert is_tree(random_tree(6, 1)) and is_tree_union_find(6, random_tree(6, 1).edges)


def test_sections_monotone():
    d = sections(OrientedPath.from_signs("++"))
    assert d.count == 1
    assert d.sections[0].forward
    assert d.switches == (0, 2)


def test_sections_switchback():
    d = sections(OrientedPath.from_signs("+-"))
    assert [s.forward for s in d.sections] == [True, False]
    assert d.switches == (0, 1, 2)


@pytest.mark.parametrize("n", range(2, 9))
def test_sections_match_scan_oracle(n):
    for path in enumerate_paths(n):
        d = sections(path)
        assert 1 <= d.count <= n - 1
        assert d.count == section_count_scan(path.signs)
        assert len(d.switches) == d.count + 1


def test_sections_of_reverse_flips():
    for signs in ("+", "+-", "++--+", "-+-"):
        path = OrientedPath.from_signs(signs)
        fwd = sections(path)
        rev = sections(path.reverse())
        assert rev.count == fwd.count
        assert [s.forward for s in rev.sections] == [not s.forward for s in reversed(fwd.sections)]


def test_enumerate_paths_counts():
    assert sum(1 for _ in enumerate_paths(2)) == 2
    assert sum(1 for _ in enumerate_paths(8)) == 128
    n = 4
    two_section = [p for p in enumerate_paths(n) if sections(p).count == 2]
    assert len(two_section) == 4  # 2 * C(2, 1)


@pytest.mark.parametrize("n", range(2, 11))
def test_rho_identities(n):
    counts: dict[int, int] = {}
    for path in enumerate_paths(n):
        k = sections(path).count
        counts[k] = counts.get(k, 0) + 1
    assert sum(counts.values()) == 2 ** (n - 1)
    for k, rho in counts.items():
        assert rho == 2 * math.comb(n - 2, k - 1)


def test_path_from_digraph_roundtrip():
    path = OrientedPath.from_signs("+-+")
    recovered = OrientedPath.from_digraph(path.digraph)
    assert recovered.signs in (path.signs, path.reverse().signs)
    with pytest.raises(ValueError):
        OrientedPath.from_digraph(Digraph(4, ((0, 1), (0, 2), (0, 3))))


def test_decompose_rejects_spider():
    # star subdivision: three legs of length two meeting in a degree-3 vertex
    g = Digraph(7, ((0, 1), (1, 2), (0, 3), (3, 4), (0, 5), (5, 6)))
    with pytest.raises(NotACaterpillar):
        caterpillar_decompose(g)
    with pytest.raises(NotATree):
        caterpillar_decompose(Digraph(3, ((0, 1), (1, 2), (2, 0))))


def test_decompose_monotone_path_is_whole_path():
    path = OrientedPath.from_signs("+++")
    cat = caterpillar_decompose(path.digraph)
    assert cat.backbone == (0, 1, 2, 3)
    assert all(not leaves for leaves in cat.in_leaves)
    assert all(not leaves for leaves in cat.out_leaves)


def test_decompose_star():
    g = Digraph(4, ((0, 1), (2, 0), (0, 3)))
    cat = caterpillar_decompose(g)
    assert cat.backbone == (0,)
    assert cat.in_leaves == ((2,),)
    assert cat.out_leaves == ((1, 3),)
    assert cat.switch_count == 2


def test_build_then_decompose_roundtrip():
    for seed in range(25):
        built = random_caterpillar(11, 2 + seed % 3, seed)
        # keep the backbone recoverable: anchor a leaf on both backbone ends
        degrees = [len(a) for a in built.digraph.undirected_adjacency()]
        if any(degrees[v] < 2 for v in (built.backbone[0], built.backbone[-1])):
            continue
        again = caterpillar_decompose(built.digraph)
        assert again.backbone in (built.backbone, built.backbone[::-1])
        assert again.digraph.edge_set() == built.digraph.edge_set()


def test_caterpillar_counts_and_switches():
    cat = Caterpillar.build("++-", in_counts=[1, 0, 2, 0], out_counts=[0, 1, 0, 0])
    assert cat.digraph.n == 8
    assert cat.backbone_signs == (True, True, False)
    assert cat.switch_count == 3
    assert sections(OrientedPath.from_signs(cat.backbone_signs)).count == 2


def test_random_generators_are_seeded():
    assert random_path(7, 3).signs == random_path(7, 3).signs
    a = random_caterpillar(10, 3, 4)
    b = random_caterpillar(10, 3, 4)
    assert a.digraph.edges == b.digraph.edges
    assert a.switch_count == 3
