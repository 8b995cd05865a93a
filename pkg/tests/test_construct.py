import random

import pytest

from upse.construct import (
    embed_caterpillar,
    embed_caterpillar_monotone,
    embed_path_one_sided,
    embed_three_section,
)
from upse.digraph import (
    Caterpillar,
    OrientedPath,
    caterpillar_decompose,
    enumerate_paths,
    random_caterpillar,
    sections,
)
from upse.enumeration import enumerate_upse
from upse.errors import (
    BadShape,
    NotGeneral,
    NotMonotoneBackbone,
    NotOneSided,
    SizeMismatch,
    TooFewPoints,
)
from upse.geometry import PointSet, generate_point_set, sort_by_y
from upse.verify import is_upse


# ------------------------------------------------------------- one-sided sets

def test_one_sided_monotone_path():
    path = OrientedPath.from_signs("+++")
    pts = generate_point_set("one_sided_convex", 4, 1)
    found = embed_path_one_sided(path, pts)
    assert len(found) == 1
    assert found[0].mapping == tuple(sort_by_y(pts))


def test_one_sided_preconditions():
    path = OrientedPath.from_signs("+-")
    with pytest.raises(SizeMismatch):
        embed_path_one_sided(path, generate_point_set("one_sided_convex", 4, 0))
    with pytest.raises(NotOneSided):
        embed_path_one_sided(path, PointSet([(0, 0), (1, 1), (2, 2)]))
    two_sided = PointSet([(0, 0), (3, 1), (-3, 2), (0, 3)])
    path3 = OrientedPath.from_signs("++-")
    with pytest.raises(NotOneSided):
        embed_path_one_sided(path3, two_sided)


@pytest.mark.parametrize("n", range(2, 8))
def test_one_sided_counts_and_oracle(n):
    pts = generate_point_set("one_sided_convex", n, 7)
    for path in enumerate_paths(n):
        found = embed_path_one_sided(path, pts)
        assert len(found) == sections(path).count
        assert all(is_upse(e) for e in found)
        oracle = {e.mapping for e in enumerate_upse(path.digraph, pts)}
        assert {e.mapping for e in found} == oracle


def test_one_sided_distinct_start_images():
    pts = generate_point_set("one_sided_convex", 7, 3)
    for path in enumerate_paths(7):
        found = embed_path_one_sided(path, pts)
        starts = {e.mapping[path.order[0]] for e in found}
        assert len(starts) == len(found)


# ----------------------------------------------------------- three sections

def _three_section_path(a, b, c, first_forward=True):
    signs = [first_forward] * (a - 1) + [not first_forward] * (b - 1) + [first_forward] * (c - 1)
    return OrientedPath.from_signs(signs)


def test_three_section_shape_checks():
    with pytest.raises(BadShape):
        embed_three_section(OrientedPath.from_signs("++"), generate_point_set("general", 3, 0))
    lopsided = _three_section_path(4, 2, 2)  # middle shorter than first
    with pytest.raises(BadShape):
        embed_three_section(lopsided, generate_point_set("general", 6, 0))
    good = _three_section_path(2, 3, 2)
    with pytest.raises(SizeMismatch):
        embed_three_section(good, generate_point_set("general", 4, 0))
    with pytest.raises(NotGeneral):
        embed_three_section(good, PointSet([(0, 0), (1, 1), (2, 2), (3, 3), (4, 5)]))


def test_three_section_basic():
    path = _three_section_path(2, 3, 2)
    for seed in range(10):
        pts = generate_point_set("general", 5, seed)
        emb = embed_three_section(path, pts)
        assert is_upse(emb)


def test_three_section_matches_enumeration_on_convex_quad():
    path = _three_section_path(2, 2, 2)
    pts = generate_point_set("one_sided_convex", 4, 5)
    emb = embed_three_section(path, pts)
    assert emb.mapping in {e.mapping for e in enumerate_upse(path.digraph, pts)}


def test_three_section_backward_start_uses_reversal():
    path = _three_section_path(3, 4, 2, first_forward=False)
    for seed in range(6):
        pts = generate_point_set("general", path.n, seed + 50)
        emb = embed_three_section(path, pts)
        assert emb.graph is path.digraph
        assert is_upse(emb)


@pytest.mark.parametrize("seed", range(30))
def test_three_section_random_profiles(seed):
    rng = random.Random(seed)
    a, c = rng.randint(2, 6), rng.randint(2, 6)
    b = rng.randint(max(a, c), 9)
    path = _three_section_path(a, b, c, rng.random() < 0.5)
    pts = generate_point_set("general", path.n, seed + 900)
    emb = embed_three_section(path, pts)
    assert is_upse(emb)
    if path.n <= 6:
        oracle = {e.mapping for e in enumerate_upse(path.digraph, pts)}
        assert emb.mapping in oracle


# ------------------------------------------------------------- caterpillars

def _matches_monotone_formula(cat, pts, mapping):
    """Backbone vertex i on rank i+b_i+sum(b_j+a_j); leaf blocks flank it.

    Leaves within one block are interchangeable, so blocks compare as sets.
    """
    ysort = sort_by_y(pts)
    signs = cat.backbone_signs
    forward = signs[0] if signs else True
    ins = [len(s) for s in cat.in_leaves]
    outs = [len(s) for s in cat.out_leaves]
    ladder = ysort if forward else list(reversed(ysort))
    below_sets = cat.in_leaves if forward else cat.out_leaves
    above_sets = cat.out_leaves if forward else cat.in_leaves
    below_counts = ins if forward else outs
    for i, v in enumerate(cat.backbone, start=1):
        x = i + below_counts[i - 1] + sum(ins[j] + outs[j] for j in range(i - 1))
        if mapping[v] != ladder[x - 1]:
            return False
        if {mapping[w] for w in below_sets[i - 1]} != {
            ladder[x - 1 - d] for d in range(1, len(below_sets[i - 1]) + 1)
        }:
            return False
        if {mapping[w] for w in above_sets[i - 1]} != {
            ladder[x - 1 + d] for d in range(1, len(above_sets[i - 1]) + 1)
        }:
            return False
    return True


def test_monotone_formula_example():
    cat = Caterpillar.build("+", in_counts=[1, 0], out_counts=[0, 1])
    pts = generate_point_set("general", 4, 2)
    emb = embed_caterpillar_monotone(cat, pts)
    ysort = sort_by_y(pts)
    assert emb.mapping[0] == ysort[1]  # first backbone vertex on the 2nd lowest
    assert emb.mapping[1] == ysort[2]  # second on the 3rd lowest
    assert _matches_monotone_formula(cat, pts, emb.mapping)
    assert is_upse(emb)


def test_monotone_leafless_path_is_sorted():
    cat = caterpillar_decompose(OrientedPath.from_signs("+++").digraph)
    pts = generate_point_set("general", 4, 4)
    emb = embed_caterpillar_monotone(cat, pts)
    assert emb.mapping == tuple(sort_by_y(pts))


def test_monotone_backward_formula():
    cat = Caterpillar.build("--", in_counts=[0, 1, 0], out_counts=[2, 0, 1])
    pts = generate_point_set("general", cat.digraph.n, 6)
    emb = embed_caterpillar_monotone(cat, pts)
    assert _matches_monotone_formula(cat, pts, emb.mapping)
    assert is_upse(emb)


def test_monotone_rejections():
    zigzag = Caterpillar.build("+-", in_counts=[0, 0, 0], out_counts=[0, 0, 0])
    pts = generate_point_set("general", 3, 0)
    with pytest.raises(NotMonotoneBackbone):
        embed_caterpillar_monotone(zigzag, pts)
    mono = Caterpillar.build("+", in_counts=[0, 0], out_counts=[0, 0])
    with pytest.raises(SizeMismatch):
        embed_caterpillar_monotone(mono, pts)


@pytest.mark.parametrize("seed", range(15))
def test_monotone_in_enumeration(seed):
    rng = random.Random(seed)
    n = rng.randint(3, 7)
    cat = random_caterpillar(n, 2, seed)
    pts = generate_point_set("general", cat.digraph.n, seed + 300)
    emb = embed_caterpillar_monotone(cat, pts)
    assert is_upse(emb)
    oracle = {e.mapping for e in enumerate_upse(cat.digraph, pts)}
    assert emb.mapping in oracle


def test_caterpillar_point_bound():
    cat = random_caterpillar(8, 3, 1)
    with pytest.raises(TooFewPoints):
        embed_caterpillar(cat, generate_point_set("general", 15, 0))


def test_caterpillar_base_case_uses_extreme_points():
    # forward monotone backbone takes the n lowest, backward the n highest
    fwd = Caterpillar.build("++", in_counts=[1, 0, 0], out_counts=[0, 1, 1])
    pts = generate_point_set("general", 10, 9)
    emb = embed_caterpillar(fwd, pts)
    assert is_upse(emb)
    assert set(emb.mapping) == set(sort_by_y(pts)[:6])

    bwd = Caterpillar.build("--", in_counts=[1, 0, 0], out_counts=[0, 1, 1])
    emb = embed_caterpillar(bwd, pts)
    assert is_upse(emb)
    assert set(emb.mapping) == set(sort_by_y(pts)[-6:])


@pytest.mark.parametrize("seed", range(20))
@pytest.mark.parametrize("k", [2, 3, 4])
def test_caterpillar_random(seed, k):
    n = 5 + (seed % 8)
    if n < k:
        pytest.skip("not enough vertices")
    cat = random_caterpillar(n, k, seed)
    pts = generate_point_set("general", cat.digraph.n * 2 ** (k - 2), seed + 4000)
    emb = embed_caterpillar(cat, pts)
    assert is_upse(emb)
    assert len(set(emb.mapping)) == cat.digraph.n


def test_caterpillar_path_special_case():
    path = OrientedPath.from_signs("+++--")
    cat = caterpillar_decompose(path.digraph)
    assert cat.switch_count == 3
    pts = generate_point_set("general", 12, 13)
    emb = embed_caterpillar(cat, pts)
    assert is_upse(emb)
    assert len(set(emb.mapping)) == 6
