import itertools
import math
import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from cutpoly import (
    Cut,
    bounds_for,
    brm,
    brm_coloring,
    brm_star,
    brm_star_coloring,
    build_skeleton,
    clique_number,
    cut_set,
    diameter,
    hamming_ball_clique,
    is_adjacent,
    symmetric_cut_clique,
    verify_clique,
    verify_coloring,
)
from cutpoly.errors import PartTooSmall, SizeMismatch, WrongClass
from cutpoly.workbench import GeneratorSpec, generate

from helpers import complete, cycle, fig4, fig5, graph, multipartite, path


def gf2_color(g, cut, rows):
    """v(S) * M over GF(2), computed row by row from the cut vector."""
    vec = cut_set(g, cut)
    width = len(rows[0])
    return tuple(sum(vec[e] * rows[e][j] for e in range(g.m)) % 2 for j in range(width))


# ---------------------------------------------------------------- matrices


def test_brm_examples():
    assert brm(5).rows[2] == (0, 1, 1)
    assert brm(4).rows == ((0, 0, 1), (0, 1, 0), (0, 1, 1), (1, 0, 0))
    assert brm(1).rows == ((1,),)
    assert brm(5).m == 3 and brm(5).k == 5


def test_brm_star_printed_matrix():
    assert brm_star(5).rows == (
        (0, 0, 0, 1),
        (0, 0, 1, 0),
        (0, 1, 0, 0),
        (0, 1, 1, 1),
        (1, 0, 0, 0),
    )
    assert brm_star(1).rows == ((1,),)


@given(st.integers(1, 300))
def test_brm_rows_distinct_nonzero(k):
    vals = brm(k).row_values
    assert len(set(vals)) == k and 0 not in vals
    assert brm(k).m == math.ceil(math.log2(k + 1))


@given(st.integers(1, 300))
def test_brm_star_rows_odd(k):
    mat = brm_star(k)
    assert all(sum(r) % 2 == 1 for r in mat.rows)
    assert len(set(mat.row_values)) == k


def test_brm_star_small_row_sums_nonzero():
    for k in range(1, 33):
        vals = brm_star(k).row_values
        for r in (1, 2, 3):
            for combo in itertools.combinations(vals, r):
                acc = 0
                for v in combo:
                    acc ^= v
                assert acc != 0


# ---------------------------------------------------------------- colorings


def test_brm_coloring_c4():
    g = cycle(4)
    s = build_skeleton(g)
    col = brm_coloring(g, s)
    assert col.width == 3 and col.distinct <= 8
    assert col.colors[0] == 0
    assert verify_coloring(s, col) == (True, None)


def test_coloring_is_the_matrix_product():
    g = fig4()
    s = build_skeleton(g)
    col = brm_coloring(g, s)
    rows = brm(g.m).rows
    rng = random.Random(0)
    for i in rng.sample(range(s.size), 200):
        assert col.bitstring(i) == "".join(map(str, gf2_color(g, Cut.from_index(g.n, i), rows)))


def test_brm_coloring_fig4_cactus():
    g = fig4()
    s = build_skeleton(g)
    col = brm_coloring(g, s)
    assert verify_coloring(s, col)[0]
    assert col.distinct <= 16


@pytest.mark.parametrize("seed", range(5))
def test_brm_coloring_random_cactus(seed):
    g = generate(GeneratorSpec("cactus", 9, seed=seed))
    s = build_skeleton(g)
    col = brm_coloring(g, s)
    assert verify_coloring(s, col)[0]
    assert clique_number(s).size <= col.distinct


def test_brm_star_coloring_c5():
    g = cycle(5)
    s = build_skeleton(g)
    col = brm_star_coloring(g, s)
    assert verify_coloring(s, col)[0]
    assert col.distinct <= 16
    assert col.colors[0] == 0


def test_brm_star_coloring_fig5():
    g = fig5()
    s = build_skeleton(g)
    col = brm_star_coloring(g, s)
    rows = brm_star(g.m).rows
    for i in random.Random(1).sample(range(s.size), 100):
        assert col.bitstring(i) == "".join(map(str, gf2_color(g, Cut.from_index(g.n, i), rows)))
    assert verify_coloring(s, col)[0]
    assert col.distinct <= 1 << (((g.m - 1).bit_length()) + 1)


def test_brm_coloring_fails_outside_cactus_class():
    # BRM on K4 would not be proper; the class guard rejects it up front
    g = complete(4)
    with pytest.raises(WrongClass):
        brm_coloring(g, build_skeleton(g))
    with pytest.raises(WrongClass):
        brm_star_coloring(complete(5), build_skeleton(complete(5)))


def test_coloring_size_mismatch():
    with pytest.raises(SizeMismatch):
        brm_coloring(cycle(4), build_skeleton(cycle(5)))


# ---------------------------------------------------------------- cliques


def test_hamming_ball_c4():
    g = cycle(4)
    fam = hamming_ball_clique(g)
    assert len(fam.cuts) == 4
    vecs = [cut_set(g, c) for c in fam.cuts]
    for a, b in itertools.combinations(vecs, 2):
        assert sum(x != y for x, y in zip(a, b)) == 2
    assert verify_clique(build_skeleton(g), fam.indices)[0]


def test_hamming_ball_c3_inside_k3():
    g = cycle(3)
    fam = hamming_ball_clique(g)
    assert len(fam.cuts) == 3
    assert verify_clique(build_skeleton(g), fam.indices)[0]


@pytest.mark.parametrize("n", range(3, 13))
def test_hamming_ball_valid_up_to_12(n):
    assert verify_clique(build_skeleton(cycle(n)), hamming_ball_clique(cycle(n)).indices) == (True, None)


def test_hamming_ball_c6():
    g = cycle(6)
    s = build_skeleton(g)
    fam = hamming_ball_clique(g)
    assert len(set(fam.indices)) == 6
    assert verify_clique(s, fam.indices)[0]
    assert clique_number(s).size >= 6


def test_hamming_ball_relabeled_cycle():
    g = graph(5, [(0, 3), (3, 1), (1, 4), (4, 2), (2, 0)])
    assert verify_clique(build_skeleton(g), hamming_ball_clique(g).indices)[0]
    with pytest.raises(WrongClass):
        hamming_ball_clique(path(4))


def test_fig6_symmetric_cuts():
    g = multipartite(4, 4)
    fam = symmetric_cut_clique(g)
    assert len(fam.cuts) == 8
    x, y = Cut.of(8, [3, 7]), Cut.of(8, [1, 2, 3, 5, 6, 7])
    assert x in fam.cuts and y in fam.cuts
    assert is_adjacent(g, x, y)
    assert verify_clique(build_skeleton(g), fam.indices)[0]


def test_k22_symmetric_cuts():
    g = multipartite(2, 2)
    fam = symmetric_cut_clique(g)
    assert len(fam.cuts) == 2
    assert is_adjacent(g, *fam.cuts)


def test_k233_symmetric_cuts():
    g = multipartite(2, 3, 3)
    fam = symmetric_cut_clique(g)
    assert len(fam.cuts) == 4
    assert verify_clique(build_skeleton(g), fam.indices)[0]


def test_symmetric_cut_errors():
    with pytest.raises(PartTooSmall):
        symmetric_cut_clique(multipartite(1, 3))
    with pytest.raises(WrongClass):
        symmetric_cut_clique(path(4))


# ---------------------------------------------------------------- bounds


def test_bounds_tree():
    b = bounds_for(path(6))
    assert b.cls == "Tree"
    assert (b.diameter_lower.value, b.diameter_upper.value) == (5, 5)
    assert (b.clique_lower.value, b.clique_upper.value) == (2, 2)
    assert b.clique_upper.source == "tree-hypercube"


def test_bounds_complete_bipartite():
    b = bounds_for(multipartite(3, 5))
    assert (b.diameter_lower.value, b.diameter_upper.value) == (2, 2)
    assert b.clique_lower.value == 4 and b.clique_lower.source == "bipartite-symmetric-cuts"


def test_bounds_complete():
    b = bounds_for(complete(5))
    assert (b.diameter_lower.value, b.diameter_upper.value) == (1, 1)
    assert (b.clique_lower.value, b.clique_upper.value) == (16, 16)


def test_bounds_cactus_and_almost_tree():
    b = bounds_for(fig4())
    assert b.diameter_lower.value == 6 and b.diameter_upper.value == 12
    assert b.clique_upper.value == 16 and b.clique_upper.source == "brm-coloring"
    b = bounds_for(fig5())
    assert b.diameter_lower.value == 4
    assert b.clique_upper.value == 64 and b.clique_upper.source == "brm-star-coloring"


def test_bounds_cycle():
    b = bounds_for(cycle(7))
    assert (b.diameter_lower.value, b.diameter_upper.value) == (3, 3)
    assert b.clique_lower.value == 7 and b.clique_upper.value == 8


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(["tree", "cactus", "almost-tree"]), st.integers(2, 10), st.integers(0, 1000))
def test_bounds_hold_on_generated_graphs(kind, n, seed):
    g = generate(GeneratorSpec(kind, n, seed=seed))
    b = bounds_for(g)
    s = build_skeleton(g)
    assert b.diameter_ok(diameter(s))
    w = clique_number(s)
    assert w.exact and b.clique_lower.value <= w.size <= b.clique_upper.value
