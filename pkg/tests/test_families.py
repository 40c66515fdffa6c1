import networkx as nx
import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from blockdet.families import (BlockGraphK, CompleteK, MixedComplete, MixedStar,
                               NegCliqueBlockGraph, NegCliqueK, NegMixedComplete, NegMixedStar,
                               SignedCycle, SignedPath, SignedTree, UnicyclicMulti,
                               UnicyclicSingle, UnicyclicTwo, block_layout, clique_tree_shapes,
                               gen, gen_random_block_graph, gen_random_signed_tree)
from blockdet.graph import GraphError, block_decompose, is_balanced, is_connected

P2 = SignedTree((-1, 0))


def to_nx(g):
    h = nx.Graph()
    h.add_nodes_from(range(g.n))
    h.add_edges_from((u, v) for (u, v) in g.arcs if u != v)
    return h


class TestRandomGenerators:
    def test_deterministic(self):
        for seed in (0, 1, 2, 2**64 - 1):
            assert gen_random_block_graph(seed, 12) == gen_random_block_graph(seed, 12)
            assert gen_random_signed_tree(seed, 7) == gen_random_signed_tree(seed, 7)

    def test_seeds_differ(self):
        assert gen_random_block_graph(1, 12) != gen_random_block_graph(2, 12)

    def test_seed_range(self):
        with pytest.raises(ValueError):
            gen_random_block_graph(-1, 8)
        with pytest.raises(ValueError):
            gen_random_block_graph(2**64, 8)

    @given(st.integers(0, 2**64 - 1), st.integers(2, 14), st.booleans())
    @settings(max_examples=150, deadline=None)
    def test_block_graph_shape(self, seed, n_max, directed):
        g = gen_random_block_graph(seed, n_max, weights=(-1, 1, 2), directed=directed)
        assert 2 <= g.n <= n_max
        assert is_connected(g) and not g.loop_vertices()
        assert all(w in (-1, 1, 2) for w in g.arcs.values())
        if not directed:
            assert g.is_symmetric()
        d = block_decompose(g)
        h = to_nx(g)
        assert set(d.cut_vertices) == set(nx.articulation_points(h))
        assert sorted(map(sorted, d.blocks)) == sorted(map(sorted, nx.biconnected_components(h)))

    @given(st.integers(0, 2**32), st.integers(1, 15))
    @settings(max_examples=100, deadline=None)
    def test_random_tree(self, seed, m):
        t = gen_random_signed_tree(seed, m)
        h = to_nx(gen(t))
        assert t.m == m and nx.is_tree(h)


class TestFixedFamilies:
    def test_complete(self):
        g = gen(CompleteK(5))
        assert len(g.arcs) == 20 and all(w == 1 for w in g.arcs.values())

    def test_neg_clique_edges(self):
        g = gen(NegCliqueK(5, 2, 2))
        neg = {frozenset(e) for e, w in g.arcs.items() if w == -1}
        assert neg == {frozenset((0, 1)), frozenset((2, 3))}
        assert g.is_symmetric() and len(g.arcs) == 20

    def test_cycle_signs(self):
        c = SignedCycle(6, -1)
        g = gen(c)
        prod = 1
        for s in c.edge_signs():
            prod *= s
        assert prod == -1 and nx.cycle_graph(6).edges == to_nx(g).edges

    def test_mixed_complete_transpose(self):
        n = 6
        a = gen(MixedComplete(n)).matrix()
        q = [[1 if j == (i + 1) % n else 0 for j in range(n)] for i in range(n)]
        target = [[1 - (i == j) - q[i][j] for j in range(n)] for i in range(n)]
        assert a == [list(col) for col in zip(*target)]

    def test_neg_mixed_complete(self):
        n = 7
        a = gen(NegMixedComplete(n)).matrix()
        for i in range(n):
            for j in range(n):
                if i == j:
                    want = 0
                elif j == (i + 1) % n:
                    want = -1
                elif i == (j + 1) % n:
                    want = 0
                else:
                    want = 1
                assert a[i][j] == want

    @pytest.mark.parametrize("cls", [MixedStar, NegMixedStar])
    def test_stars(self, cls):
        g = gen(cls((4, 5, 6)))
        assert g.n == 13
        d = block_decompose(g)
        assert d.k == 3 and d.cut_vertices == frozenset({0})

    @pytest.mark.parametrize("spec", [
        UnicyclicSingle(5, -1, P2),
        UnicyclicMulti(4, 1, (P2, SignedTree((-1, 0, 0)), P2, P2)),
        UnicyclicTwo(6, 1, P2, SignedTree((-1,)), 3),
    ])
    def test_unicyclic_edge_count(self, spec):
        h = to_nx(gen(spec))
        assert h.number_of_edges() == h.number_of_nodes()
        assert nx.is_connected(h) and len(nx.cycle_basis(h)) == 1

    def test_unicyclic_two_distance(self):
        g = gen(UnicyclicTwo(6, 1, P2, P2, 2))
        h = to_nx(g)
        # trees hang from cycle vertices 0 and l
        assert h.degree(0) == 3 and h.degree(2) == 3

    def test_block_layout(self):
        layout = block_layout((3, 4, 2), ((0, 1), (1, 3)))
        assert layout[0] == [0, 1, 2]
        assert layout[1][-1] == 1 and len(set(layout[1])) == 4
        assert layout[2][-1] == layout[1][3]

    def test_neg_clique_block_graph_balanced_when_m_zero(self):
        g = gen(NegCliqueBlockGraph(((4, 0, 2), (3, 0, 2)), ((0, 0),)))
        assert is_balanced(g)

    @pytest.mark.parametrize("bad", [
        lambda: CompleteK(0),
        lambda: NegCliqueK(5, 3, 2),
        lambda: NegCliqueK(5, 1, 1),
        lambda: SignedCycle(2),
        lambda: SignedCycle(4, 1, (1, 1, 1, -1)),
        lambda: SignedPath(3, (1,)),
        lambda: SignedTree((0,)),
        lambda: SignedTree((-1, 2, 1)),
        lambda: BlockGraphK((3, 1), ((0, 0),)),
        lambda: BlockGraphK((3, 3), ((1, 0),)),
        lambda: BlockGraphK((3, 3), ((0, 3),)),
        lambda: MixedComplete(3),
        lambda: NegMixedStar((5, 3)),
        lambda: UnicyclicTwo(5, 1, P2, P2, 0),
    ])
    def test_invalid(self, bad):
        with pytest.raises(GraphError):
            bad()


class TestShapes:
    def test_small_counts(self):
        shapes = clique_tree_shapes(4, 1)
        assert sorted(s.sizes for s in shapes) == [(2,), (3,), (4,)]

    def test_distinct_and_complete(self):
        shapes = clique_tree_shapes(7, 3)
        graphs = [to_nx(gen(s)) for s in shapes]
        for i in range(len(graphs)):
            for j in range(i):
                assert not nx.is_isomorphic(graphs[i], graphs[j])
        # brute force: every clique tree on at most 7 vertices and 3 blocks is covered
        import itertools
        seen = []
        for k in (1, 2, 3):
            for sizes in itertools.product(range(2, 8), repeat=k):
                if sum(sizes) - (k - 1) > 7:
                    continue
                parents = itertools.product(*(range(i) for i in range(1, k)))
                for par in parents:
                    slots = itertools.product(*(range(sizes[p]) for p in par))
                    for sl in slots:
                        seen.append(to_nx(gen(BlockGraphK(sizes, tuple(zip(par, sl))))))
        for h in seen:
            assert any(nx.is_isomorphic(h, g) for g in graphs if g.number_of_nodes() == h.number_of_nodes())

    def test_bowtie_present(self):
        assert any(s.sizes == (3, 3) for s in clique_tree_shapes(12, 4))
