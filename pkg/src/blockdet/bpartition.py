"""Determinant and permanent as sums over B-partitions.

A B-partition hands every vertex to one block containing it: non-cut vertices
have no choice, and each cut vertex picks one of its incident blocks. The
determinant (permanent) of a graph without loops on its cut vertices is the
sum, over all such assignments, of the product of the determinants
(permanents) of the induced block pieces, with an empty piece counting as 1.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Callable, Iterator

from .graph import (BlockDecomposition, GraphError, SignedDigraph, block_decompose,
                    components, induced_subgraph)
from .oracles import det_exact, per_exact


@dataclass(frozen=True)
class BPartition:
    """One B-partition: ``parts[i]`` is the vertex set kept by block ``i``."""

    parts: tuple[frozenset[int], ...]

    @property
    def sizes(self) -> tuple[int, ...]:
        return tuple(len(p) for p in self.parts)


def _require_loop_free_cuts(g: SignedDigraph, d: BlockDecomposition) -> None:
    bad = sorted(g.loop_vertices() & d.cut_vertices)
    if bad:
        raise GraphError(f"loops on cut vertices {bad}; B-partition expansion does not apply")


def enumerate_bpartitions(g: SignedDigraph,
                          d: BlockDecomposition | None = None) -> Iterator[BPartition]:
    """Yield each B-partition of ``g`` once.

    The count is the product, over cut vertices, of the number of blocks
    containing that vertex.
    """
    if d is None:
        d = block_decompose(g)
    _require_loop_free_cuts(g, d)
    cuts = sorted(d.cut_vertices)
    base = [set(b) - d.cut_vertices for b in d.blocks]
    for choice in itertools.product(*(d.incidence[c] for c in cuts)):
        parts = [set(p) for p in base]
        for c, i in zip(cuts, choice):
            parts[i].add(c)
        yield BPartition(tuple(frozenset(p) for p in parts))


def _sum_over_bpartitions(g, d, block_value: Callable[[SignedDigraph], int]) -> int:
    if d is None:
        d = block_decompose(g)
    _require_loop_free_cuts(g, d)
    memo: dict[tuple[int, frozenset[int]], int] = {}

    def piece(i, part):
        key = (i, part)
        if key not in memo:
            memo[key] = block_value(induced_subgraph(g, part)[0]) if part else 1
        return memo[key]

    total = 0
    for bp in enumerate_bpartitions(g, d):
        term = 1
        for i, part in enumerate(bp.parts):
            term *= piece(i, part)
            if term == 0:
                break
        total += term
    return total


def det_via_bpartitions(g: SignedDigraph, d: BlockDecomposition | None = None) -> int:
    """Sum of det-summands over all B-partitions of a connected graph."""
    return _sum_over_bpartitions(g, d, det_exact)


def per_via_bpartitions(g: SignedDigraph, d: BlockDecomposition | None = None) -> int:
    """Sum of per-summands over all B-partitions of a connected graph."""
    return _sum_over_bpartitions(g, d, per_exact)


def count_bpartitions(d: BlockDecomposition) -> int:
    count = 1
    for blocks in d.incidence.values():
        count *= len(blocks)
    return count


# --- cut-vertex recursion ----------------------------------------------------

def _split_terms(g: SignedDigraph, h: set[int] | frozenset[int], v: int,
                 value: Callable[[SignedDigraph], int]) -> int:
    h = set(h)
    everything = set(range(g.n))
    if not h <= everything:
        raise GraphError("H contains vertices outside the graph")
    if v not in h:
        raise GraphError(f"H must contain the cut vertex {v}")
    if v in g.loop_vertices():
        raise GraphError(f"loop on cut vertex {v}")
    rest = everything - h
    h_minus_v = h - {v}
    if not h_minus_v or not rest:
        raise GraphError("H \\ v and G \\ H must both be nonempty")
    # H \ v must be a union of components of G - v
    g_minus_v, relabel = induced_subgraph(g, everything - {v})
    back = {new: old for old, new in relabel.items()}
    for comp in components(g_minus_v):
        comp_old = {back[x] for x in comp}
        if comp_old & h_minus_v and not comp_old <= h_minus_v:
            raise GraphError(f"H \\ {v} is not a union of components of G - {v}")

    def val(s):
        return value(induced_subgraph(g, s)[0]) if s else 1

    return val(h) * val(rest) + val(h_minus_v) * val(everything - h_minus_v)


def split_at_cut_vertex_det(g: SignedDigraph, h, v: int) -> int:
    """``det(H)det(G-H) + det(H-v)det(G-(H-v))`` for ``H`` separable at ``v``.

    ``h`` is a vertex set containing ``v`` such that ``h - {v}`` is a nonempty
    union of components of ``G - v`` and ``G - h`` is nonempty.
    """
    return _split_terms(g, h, v, det_exact)


def split_at_cut_vertex_per(g: SignedDigraph, h, v: int) -> int:
    """Permanent counterpart of :func:`split_at_cut_vertex_det`."""
    return _split_terms(g, h, v, per_exact)


# --- alpha tuples ------------------------------------------------------------

def enumerate_alpha_tuples(d: BlockDecomposition) -> Iterator[tuple[int, ...]]:
    """Part-size tuples of all B-partitions, in B-partition enumeration order.

    Only the block structure matters, so this works from the decomposition
    alone.
    """
    cuts = sorted(d.cut_vertices)
    base = [len(b) - sum(1 for v in b if v in d.cut_vertices) for b in d.blocks]
    for choice in itertools.product(*(d.incidence[c] for c in cuts)):
        sizes = list(base)
        for i in choice:
            sizes[i] += 1
        yield tuple(sizes)


def alpha_tuples_by_constraints(d: BlockDecomposition) -> set[tuple[int, ...]]:
    """All tuples with ``sum = n`` and ``sum_{i in S} a_i <= |V(G_S)|`` for every S.

    Brute force over every tuple and every subset of blocks; exponential in the
    number of blocks and meant as a cross-check only.
    """
    k = d.k
    blocks = [frozenset(b) for b in d.blocks]
    n = len(frozenset().union(*blocks)) if blocks else 0
    union_size = {}
    for mask in range(1, 1 << k):
        verts = set()
        for i in range(k):
            if mask >> i & 1:
                verts |= blocks[i]
        union_size[mask] = len(verts)
    found = set()
    for alphas in itertools.product(*(range(len(b) + 1) for b in blocks)):
        if sum(alphas) != n:
            continue
        ok = True
        for mask, cap in union_size.items():
            if sum(alphas[i] for i in range(k) if mask >> i & 1) > cap:
                ok = False
                break
        if ok:
            found.add(alphas)
    return found
