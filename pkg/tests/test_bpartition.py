import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockdet.bpartition import (alpha_tuples_by_constraints, count_bpartitions,
                                 det_via_bpartitions, enumerate_alpha_tuples,
                                 enumerate_bpartitions, per_via_bpartitions,
                                 split_at_cut_vertex_det, split_at_cut_vertex_per)
from blockdet.families import CompleteK, MixedStar, gen, gen_random_block_graph
from blockdet.graph import (GraphError, SignedDigraph, block_decompose, components,
                            induced_subgraph)
from blockdet.oracles import det_exact, per_exact

from conftest import path_graph


def test_bowtie_partitions(bowtie):
    parts = [bp.parts for bp in enumerate_bpartitions(bowtie)]
    assert parts == [(frozenset({0, 1, 2}), frozenset({3, 4})),
                     (frozenset({1, 2}), frozenset({0, 3, 4}))]


def test_single_block():
    g = gen(CompleteK(4))
    (bp,) = enumerate_bpartitions(g)
    assert bp.parts == (frozenset(range(4)),)


def test_p3():
    assert len(list(enumerate_bpartitions(path_graph(3)))) == 2


def test_bowtie_values(bowtie):
    assert det_via_bpartitions(bowtie) == -4
    assert per_via_bpartitions(bowtie) == 4


def test_k2():
    assert det_via_bpartitions(gen(CompleteK(2))) == -1
    assert per_via_bpartitions(gen(CompleteK(2))) == 1


def test_p4_per():
    assert per_via_bpartitions(path_graph(4)) == per_exact(path_graph(4)) == 1


def test_mixed_star_54():
    g = gen(MixedStar((5, 4)))
    assert g.n == 8
    assert det_via_bpartitions(g) == det_exact(g) == 3


def test_loop_on_cut_vertex_rejected(bowtie):
    arcs = dict(bowtie.arcs)
    arcs[(0, 0)] = 1
    g = SignedDigraph(5, arcs, loops=True)
    with pytest.raises(GraphError):
        det_via_bpartitions(g)
    with pytest.raises(GraphError):
        list(enumerate_bpartitions(g))


def test_loops_off_cut_vertices_allowed(bowtie):
    arcs = dict(bowtie.arcs)
    arcs[(1, 1)] = -2
    arcs[(4, 4)] = 3
    g = SignedDigraph(5, arcs, loops=True)
    assert det_via_bpartitions(g) == det_exact(g)
    assert per_via_bpartitions(g) == per_exact(g)


class TestSplit:
    def test_paw(self, paw):
        assert split_at_cut_vertex_det(paw, {0, 3}, 0) == det_exact(paw) == 1

    def test_bowtie(self, bowtie):
        assert split_at_cut_vertex_det(bowtie, {0, 1, 2}, 0) == -4
        assert split_at_cut_vertex_per(bowtie, {0, 1, 2}, 0) == 4

    @pytest.mark.parametrize("h, v", [
        ({0, 1}, 0),        # splits the triangle {1, 2} component
        ({1, 2}, 0),        # v missing
        ({0, 1, 2, 3, 4}, 0),  # G \ H empty
        ({0}, 0),           # H \ v empty
    ])
    def test_misuse(self, bowtie, h, v):
        with pytest.raises(GraphError):
            split_at_cut_vertex_det(bowtie, h, v)

    @given(st.integers(0, 2**32))
    @settings(max_examples=60, deadline=None)
    def test_independent_of_choice(self, seed):
        g = gen_random_block_graph(seed, 10, weights=(-1, 1), directed=seed % 2 == 0)
        d = block_decompose(g)
        want_det, want_per = det_exact(g), per_exact(g)
        for v in d.cut_vertices:
            rest, relabel = induced_subgraph(g, set(range(g.n)) - {v})
            back = {new: old for old, new in relabel.items()}
            comps = [{back[x] for x in c} for c in components(rest)]
            for r in range(1, len(comps)):
                for chosen in itertools.combinations(comps, r):
                    h = set().union(*chosen) | {v}
                    assert split_at_cut_vertex_det(g, h, v) == want_det
                    assert split_at_cut_vertex_per(g, h, v) == want_per


class TestAlphaTuples:
    def test_bowtie(self, bowtie):
        d = block_decompose(bowtie)
        assert set(enumerate_alpha_tuples(d)) == {(3, 2), (2, 3)}

    def test_p3(self):
        assert set(enumerate_alpha_tuples(block_decompose(path_graph(3)))) == {(2, 1), (1, 2)}

    def test_k4(self):
        assert list(enumerate_alpha_tuples(block_decompose(gen(CompleteK(4))))) == [(4,)]

    def test_matches_partition_sizes(self, bowtie):
        d = block_decompose(bowtie)
        assert list(enumerate_alpha_tuples(d)) == [bp.sizes for bp in enumerate_bpartitions(bowtie, d)]

    @given(st.integers(0, 2**32))
    @settings(max_examples=100, deadline=None)
    def test_bijection(self, seed):
        g = gen_random_block_graph(seed, 10, max_block=4)
        d = block_decompose(g)
        tuples = list(enumerate_alpha_tuples(d))
        assert len(tuples) == count_bpartitions(d) == len(set(tuples))
        assert set(tuples) == alpha_tuples_by_constraints(d)
        for bp in enumerate_bpartitions(g, d):
            assert set().union(*bp.parts) == set(range(g.n))
            assert sum(len(p) for p in bp.parts) == g.n
            assert all(p <= set(b) for p, b in zip(bp.parts, d.blocks))


@given(st.integers(0, 2**32))
@settings(max_examples=150, deadline=None)
def test_oracle_equivalence(seed):
    g = gen_random_block_graph(seed, 12, weights=(-1, 1), directed=seed % 3 == 0)
    d = block_decompose(g)
    assert det_via_bpartitions(g, d) == det_exact(g)
    assert per_via_bpartitions(g, d) == per_exact(g)


def test_weighted_digraph_equivalence():
    for seed in range(40):
        g = gen_random_block_graph(seed, 11, weights=(-3, -1, 2, 5), directed=True)
        assert det_via_bpartitions(g) == det_exact(g)
        assert per_via_bpartitions(g) == per_exact(g)
