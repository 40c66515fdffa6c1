import random

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockdet.checks import random_matrix_graph, random_signature
from blockdet.families import CompleteK, gen
from blockdet.graph import SignedDigraph, build_graph, from_matrix
from blockdet.oracles import (SizeBoundError, det_exact, det_matrix, det_via_cycle_covers,
                              enumerate_cycle_covers, per_exact, per_matrix,
                              per_via_cycle_covers)

from conftest import brute_per, cycle_graph, leibniz_det

matrices = st.integers(0, 6).flatmap(
    lambda n: st.lists(st.lists(st.integers(-3, 3), min_size=n, max_size=n),
                       min_size=n, max_size=n))


@given(matrices)
@settings(max_examples=300, deadline=None)
def test_bareiss_matches_leibniz(a):
    assert det_matrix(a) == leibniz_det(a)


@given(matrices)
@settings(max_examples=300, deadline=None)
def test_ryser_matches_permutation_expansion(a):
    assert per_matrix(a) == brute_per(a)


def test_null_matrix_conventions():
    assert det_exact(SignedDigraph(0)) == 1
    assert per_exact(SignedDigraph(0)) == 1


def test_det_k4():
    assert det_exact(gen(CompleteK(4))) == -3


def test_det_empty():
    assert det_exact(SignedDigraph(3)) == 0


def test_det_unbalanced_c4():
    g = cycle_graph(4, [1, 1, 1, -1])
    assert det_exact(g) == leibniz_det(g.matrix()) == 4


def test_det_needs_row_swap():
    assert det_matrix([[0, 1], [1, 0]]) == -1
    assert det_matrix([[0, 0, 1], [0, 1, 0], [1, 0, 0]]) == -1


def test_det_large_exact():
    # 30x30 all-ones minus identity: (-1)^29 * 29
    a = [[0 if i == j else 1 for j in range(30)] for i in range(30)]
    assert det_matrix(a) == -29


@pytest.mark.parametrize("g, want", [
    (gen(CompleteK(2)), 1),
    (gen(CompleteK(4)), 9),
    (from_matrix([[1] * 3] * 3), 6),
])
def test_per_examples(g, want):
    assert per_exact(g) == want


def test_per_bound():
    with pytest.raises(SizeBoundError):
        per_exact(gen(CompleteK(21)))
    assert per_exact(gen(CompleteK(5)), max_n=5) == 44


class TestCycleCovers:
    def test_directed_triangle(self):
        g = build_graph(3, [(0, 1, 1), (1, 2, 1), (2, 0, 1)])
        covers = list(enumerate_cycle_covers(g))
        assert len(covers) == 1
        assert covers[0].cycles == ((0, 1, 2),) and covers[0].weight == 1

    def test_c4(self):
        covers = list(enumerate_cycle_covers(cycle_graph(4)))
        counts = sorted(c.cycle_count for c in covers)
        assert counts == [1, 1, 2, 2]
        assert len({c.cycles for c in covers}) == 4

    def test_isolated_vertex(self):
        g = build_graph(3, [(0, 1, 1), (1, 0, 1)])
        assert list(enumerate_cycle_covers(g)) == []

    def test_loops_are_one_cycles(self):
        g = from_matrix([[2, 0], [0, 3]])
        (cover,) = enumerate_cycle_covers(g)
        assert cover.cycles == ((0,), (1,)) and cover.weight == 6

    def test_deterministic_and_disjoint(self):
        g = gen(CompleteK(5))
        first = list(enumerate_cycle_covers(g))
        assert first == list(enumerate_cycle_covers(g))
        assert len(first) == 44
        for c in first:
            verts = [v for cyc in c.cycles for v in cyc]
            assert sorted(verts) == list(range(5))
            for cyc in c.cycles:
                for i in range(len(cyc)):
                    assert g.has_arc(cyc[i], cyc[(i + 1) % len(cyc)])

    def test_bound(self):
        with pytest.raises(SizeBoundError):
            list(enumerate_cycle_covers(gen(CompleteK(11))))

    @pytest.mark.parametrize("g, det, per", [
        (gen(CompleteK(3)), 2, 2),
        (cycle_graph(5), 2, 2),
        (cycle_graph(6, [1, 1, 1, 1, 1, -1]), 0, 0),
    ])
    def test_cover_formulas(self, g, det, per):
        assert det_via_cycle_covers(g) == det_exact(g) == det
        assert per_via_cycle_covers(g) == per_exact(g) == per


@given(st.integers(0, 2**32))
@settings(max_examples=60, deadline=None)
def test_transpose_and_switching_invariance(seed):
    rng = random.Random(seed)
    g = random_matrix_graph(rng, rng.randint(1, 7))
    t = g.transpose()
    assert det_exact(t) == det_exact(g)
    assert per_exact(t) == per_exact(g)
    s = random_signature(rng, g.n).apply(g)
    assert det_exact(s) == det_exact(g)
    assert per_exact(s) == per_exact(g)


def test_cover_equivalence_random():
    rng = random.Random(7)
    for _ in range(300):
        g = random_matrix_graph(rng, rng.randint(0, 8))
        assert det_via_cycle_covers(g) == det_exact(g)
        assert per_via_cycle_covers(g) == per_exact(g)
