"""Closed-form determinants and permanents of structured graph families.

All exact values are Python ints. The only floating-point code is the
trigonometric eigenvalue product for the negative mixed complete graph and the
roots-of-unity product check, both reported next to an exact value.
"""

from __future__ import annotations

import cmath
import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Sequence

from .bpartition import enumerate_alpha_tuples
from .families import (BlockGraphK, NegCliqueBlockGraph, NegMixedComplete, SignedTree,
                       block_layout, gen)
from .graph import GraphError, block_decompose
from .oracles import det_exact


def _check_delta(delta):
    if delta not in (-1, 1):
        raise GraphError(f"delta must be +1 or -1, got {delta!r}")


def _check_mixed(n):
    if n <= 3:
        raise GraphError(f"mixed complete families need n > 3, got {n}")


# --- complete graphs, cycles, paths, trees ----------------------------------

def det_complete(n: int) -> int:
    """``(-1)^(n-1) (n-1)``; the null graph gives 1."""
    if n < 0:
        raise GraphError("n must be >= 0")
    if n == 0:
        return 1
    return (-1) ** (n - 1) * (n - 1)


def derangements(n: int) -> int:
    """``D_n`` via ``D_n = (n-1)(D_{n-1} + D_{n-2})``."""
    if n < 0:
        raise GraphError("n must be >= 0")
    prev, cur = 1, 0  # D_0, D_1
    if n == 0:
        return 1
    for k in range(2, n + 1):
        prev, cur = cur, (k - 1) * (cur + prev)
    return cur


def per_complete(n: int) -> int:
    """Permanent of K_n, the derangement number."""
    return derangements(n)


def det_signed_cycle(n: int, delta: int) -> int:
    _check_delta(delta)
    if n < 3:
        raise GraphError("cycles need n >= 3")
    if n % 2:
        return 2 * delta
    return 2 - 2 * delta if n % 4 == 0 else -2 - 2 * delta


def per_signed_cycle(n: int, delta: int) -> int:
    """Permanent of a signed cycle.

    Even cycles have two Hamiltonian covers of weight ``delta`` and two
    perfect-matching covers of weight +1, hence ``2 + 2*delta``.
    """
    _check_delta(delta)
    if n < 3:
        raise GraphError("cycles need n >= 3")
    if n % 2:
        return 2 * delta
    return 2 + 2 * delta


def det_signed_path(n: int) -> int:
    if n < 0:
        raise GraphError("n must be >= 0")
    return 0 if n % 2 else (-1) ** (n // 2)


def per_signed_path(n: int) -> int:
    if n < 0:
        raise GraphError("n must be >= 0")
    return 0 if n % 2 else 1


def tree_has_perfect_matching(tree: SignedTree) -> bool:
    """Greedy leaf matching: a leaf must be matched to its parent."""
    m = tree.m
    if m % 2:
        return False
    children = [[] for _ in range(m)]
    for v in range(1, m):
        children[tree.parents[v]].append(v)
    order = [0]
    for v in order:
        order.extend(children[v])
    matched = [False] * m
    for v in reversed(order):
        if matched[v]:
            continue
        p = tree.parents[v]
        if p == -1 or matched[p]:
            return False
        matched[v] = matched[p] = True
    return True


def det_signed_tree(tree: SignedTree) -> int:
    """``(-1)^(m/2)`` if the tree has a perfect matching, else 0."""
    return (-1) ** (tree.m // 2) if tree_has_perfect_matching(tree) else 0


def per_signed_tree(tree: SignedTree) -> int:
    return 1 if tree_has_perfect_matching(tree) else 0


# --- block graphs ------------------------------------------------------------

def _alpha_tuples_with_labels(sizes, attach):
    """Alpha tuples re-indexed to the family's block order."""
    layout = block_layout(sizes, attach)
    g = gen(BlockGraphK(tuple(sizes), tuple(attach)))
    d = block_decompose(g)
    index = {frozenset(b): i for i, b in enumerate(layout)}
    to_family = [index[frozenset(b)] for b in d.blocks]
    for alphas in enumerate_alpha_tuples(d):
        out = [0] * len(sizes)
        for i, a in enumerate(alphas):
            out[to_family[i]] = a
        yield tuple(out)


def det_block_graph(spec: BlockGraphK) -> int:
    """``(-1)^(n-k) sum prod (alpha_i - 1)`` over the alpha tuples of the shape."""
    k = len(spec.sizes)
    n = sum(spec.sizes) - (k - 1)
    total = 0
    for alphas in _alpha_tuples_with_labels(spec.sizes, spec.attach):
        term = 1
        for a in alphas:
            term *= a - 1
        total += term
    return (-1) ** (n - k) * total


def per_block_graph(spec: BlockGraphK) -> int:
    """``sum prod D_{alpha_i}`` over the alpha tuples of the shape."""
    total = 0
    for alphas in _alpha_tuples_with_labels(spec.sizes, spec.attach):
        term = 1
        for a in alphas:
            term *= derangements(a)
        total += term
    return total


def _neg_clique_factor(alpha: int, m: int, r: int) -> int:
    """``det K_alpha^{m,r}`` with the sign ``(-1)^(alpha-1)`` removed.

    Valid for any ``alpha >= m*r``; ``m = 0`` falls back to the plain clique.
    """
    if m == 0:
        return alpha - 1
    return (1 - 2 * r) ** (m - 1) * (-1) ** (m * r) * (
        alpha * (1 - 2 * r) + 2 * r * (1 + m * (r - 1)) - 1)


def det_neg_clique_complete(n: int, m: int, r: int) -> int:
    """Determinant of K_n with ``m`` disjoint negative ``r``-cliques."""
    if m < 1 or r < 2 or m * r > n - 1:
        raise GraphError(f"need m >= 1, r >= 2, m*r <= n-1; got n={n}, m={m}, r={r}")
    return (-1) ** (n - 1) * _neg_clique_factor(n, m, r)


def det_neg_clique_block_graph(spec: NegCliqueBlockGraph) -> int:
    """Sum over alpha tuples of per-block negative-clique factors.

    The family constructor already rejects cut vertices inside negative
    cliques, which is what keeps each block piece a ``K_alpha^{m,r}``.
    """
    sizes = [b[0] for b in spec.blocks]
    k = len(sizes)
    n = sum(sizes) - (k - 1)
    total = 0
    for alphas in _alpha_tuples_with_labels(sizes, spec.attach):
        term = 1
        for a, (_, m, r) in zip(alphas, spec.blocks):
            term *= _neg_clique_factor(a, m, r)
        total += term
    return (-1) ** (n - k) * total


# --- unicyclic graphs --------------------------------------------------------

def _check_cycle(n, delta):
    _check_delta(delta)
    if n < 3:
        raise GraphError("the cycle needs n >= 3")


def det_unicyclic_single(n: int, delta: int, tree: SignedTree) -> int:
    """Cycle ``C_n`` (sign ``delta``) with one tree hung from a cycle vertex.

    Two-term cut-vertex split:
    ``det(C_n) det(T) + det(P_{n-1}) det({T, v})``.
    """
    _check_cycle(n, delta)
    return (det_signed_cycle(n, delta) * det_signed_tree(tree)
            + det_signed_path(n - 1) * det_signed_tree(tree.with_link_vertex()))


def per_unicyclic_single(n: int, delta: int, tree: SignedTree) -> int:
    _check_cycle(n, delta)
    return (per_signed_cycle(n, delta) * per_signed_tree(tree)
            + per_signed_path(n - 1) * per_signed_tree(tree.with_link_vertex()))


def unicyclic_single_case(n: int, tree: SignedTree) -> str:
    """Which row of the four-case table applies: ``"I"`` .. ``"IV"``, or ``"zero"``.

    ``"zero"`` is an odd cycle where neither ``T`` nor ``{T, v}`` has a
    perfect matching; the table leaves it out but the value is 0.
    """
    if n % 2 == 0:
        return "II" if tree_has_perfect_matching(tree) else "I"
    if tree_has_perfect_matching(tree.with_link_vertex()):
        return "III"
    if tree_has_perfect_matching(tree):
        return "IV"
    return "zero"


def det_unicyclic_single_cases(n: int, delta: int, tree: SignedTree) -> int:
    """The four-case table for a single attached tree, evaluated directly."""
    _check_cycle(n, delta)
    m = tree.m
    case = unicyclic_single_case(n, tree)
    if case == "II":
        return (-1) ** (m // 2) * (-2 * delta + 2 * (-1) ** (n // 2))
    if case == "III":
        return (-1) ** ((m + n) // 2)
    if case == "IV":
        return 2 * delta * (-1) ** (m // 2)
    return 0


def per_unicyclic_single_cases(n: int, delta: int, tree: SignedTree) -> int:
    # case II uses per(C_n) = 2 + 2*delta for even n, see per_signed_cycle
    _check_cycle(n, delta)
    case = unicyclic_single_case(n, tree)
    return {"II": 2 + 2 * delta, "III": 1, "IV": 2 * delta}.get(case, 0)


def _multi(n, delta, trees, cyc, path, tree_val):
    if not trees:
        raise GraphError("need at least one tree")
    vals = [tree_val(t) for t in trees]
    linked = [tree_val(t.with_link_vertex()) for t in trees]
    prod_all = 1
    for v in vals:
        prod_all *= v
    spread = 0
    for i in range(len(trees)):
        term = linked[i]
        for j, v in enumerate(vals):
            if j != i:
                term *= v
        spread += term
    return cyc(n, delta) * prod_all + path(n - 1) * spread


def det_unicyclic_multi(n: int, delta: int, trees: Sequence[SignedTree]) -> int:
    """Several trees hung from the same cycle vertex."""
    _check_cycle(n, delta)
    return _multi(n, delta, trees, det_signed_cycle, det_signed_path, det_signed_tree)


def per_unicyclic_multi(n: int, delta: int, trees: Sequence[SignedTree]) -> int:
    _check_cycle(n, delta)
    return _multi(n, delta, trees, per_signed_cycle, per_signed_path, per_signed_tree)


def _two(n, delta, t1, t2, l, single, path, tree_val):
    _check_cycle(n, delta)
    if not 1 <= l <= n // 2:
        raise GraphError(f"distance l must satisfy 1 <= l <= n/2, got l={l}")
    t1v = tree_val(t1.with_link_vertex())
    return (single(n, delta, t2) * tree_val(t1)
            + t1v * tree_val(t2.with_link_vertex()) * path(l - 1) * path(n - l - 1)
            + t1v * tree_val(t2) * path(n - 1))


def det_unicyclic_two(n: int, delta: int, t1: SignedTree, t2: SignedTree, l: int) -> int:
    """Trees hung from two cycle vertices at distance ``l``."""
    return _two(n, delta, t1, t2, l, det_unicyclic_single, det_signed_path, det_signed_tree)


def per_unicyclic_two(n: int, delta: int, t1: SignedTree, t2: SignedTree, l: int) -> int:
    return _two(n, delta, t1, t2, l, per_unicyclic_single, per_signed_path, per_signed_tree)


# --- mixed complete graphs ---------------------------------------------------

def roots_of_unity_product(n: int) -> complex:
    """``prod_{i=1}^{n-1} (-1 - w^i)`` for a primitive n-th root ``w``, in floats."""
    w = cmath.exp(2j * math.pi / n)
    p = complex(1)
    for i in range(1, n):
        p *= -1 - w ** i
    return p


def det_mixed_complete(n: int) -> int:
    """0 for even ``n``, ``n - 2`` for odd ``n``."""
    _check_mixed(n)
    return 0 if n % 2 == 0 else n - 2


def det_mixed_complete_minus_v(n: int) -> int:
    """``(-1)^n floor((n-2)/2)``, whichever vertex is deleted."""
    _check_mixed(n)
    return (-1) ** n * ((n - 2) // 2)


def det_mixed_star(sizes: Sequence[int]) -> int:
    """Sum over odd blocks of ``det(mK_{n_i}) * prod_{j != i} det(mK_{n_j} - v)``."""
    if not sizes:
        raise GraphError("need at least one block")
    for s in sizes:
        _check_mixed(s)
    total = 0
    for i, ni in enumerate(sizes):
        if ni % 2 == 0:
            continue
        term = det_mixed_complete(ni)
        for j, nj in enumerate(sizes):
            if j != i:
                term *= det_mixed_complete_minus_v(nj)
        total += term
    return total


def _pairwise_product(values: list[float]) -> float:
    if not values:
        return 1.0
    while len(values) > 1:
        nxt = [values[i] * values[i + 1] for i in range(0, len(values) - 1, 2)]
        if len(values) % 2:
            nxt.append(values[-1])
        values = nxt
    return values[0]


def neg_mixed_complete_float(n: int) -> float:
    """Trigonometric eigenvalue product for the negative mixed complete graph."""
    _check_mixed(n)
    if n % 2 == 0:
        lead, top = 2 * (n - 4), (n - 2) // 2
    else:
        lead, top = n - 4, (n - 1) // 2
    factors = []
    for i in range(1, top + 1):
        c = math.cos(2 * math.pi * i / n)
        factors.append(2 + 8 * c * c + 6 * c)
    return lead * _pairwise_product(factors)


def det_neg_mixed_complete(n: int) -> tuple[float, int]:
    """Float eigenvalue product and exact determinant of ``J - I - 2Q - Q^(n-1)``."""
    _check_mixed(n)
    return neg_mixed_complete_float(n), det_exact(gen(NegMixedComplete(n)))


@dataclass(frozen=True)
class TridiagState:
    """Integer recurrences for the order-``m`` tridiagonal matrix ``T``.

    ``T`` has -1 on the diagonal and subdiagonal and -2 on the superdiagonal.
    ``f[i]`` (i = 0..m) are its leading principal minors; ``g`` runs the same
    recurrence from ``g_0 = 1, g_1 = -1``; ``h[i]`` (i = 1..m+1, stored with a
    dummy at index 0) are trailing minors from ``h_{m+1} = 1, h_m = -1``.
    """

    m: int
    f: tuple[int, ...]
    g: tuple[int, ...]
    h: tuple[int, ...]

    @classmethod
    def of_order(cls, m: int) -> "TridiagState":
        if m < 1:
            raise GraphError("order must be >= 1")
        f = [1, -1]  # f_{-1} = 0 gives f_1 = -f_0
        for _ in range(2, m + 1):
            f.append(-f[-1] - 2 * f[-2])
        g = [1, -1]
        for _ in range(2, m + 1):
            g.append(-g[-1] - 2 * g[-2])
        h = [0] * (m + 2)
        h[m + 1], h[m] = 1, -1
        for i in range(m - 1, 0, -1):
            h[i] = -h[i + 1] - 2 * h[i + 2]
        return cls(m, tuple(f[:m + 1]), tuple(g[:m + 1]), tuple(h))

    def inverse_entry_numerators(self) -> list[list[int]]:
        """``g_m * (T^-1)_{ij}`` for 1-based ``i, j``, returned 0-based."""
        m, g, h = self.m, self.g, self.h
        return [[(2 ** (j - i) * g[i - 1] * h[j + 1]) if i <= j else g[j - 1] * h[i + 1]
                 for j in range(1, m + 1)] for i in range(1, m + 1)]

    def bracket(self) -> int:
        """``g_m * u^T T^-1 u``, the sum of all inverse numerators."""
        return sum(sum(row) for row in self.inverse_entry_numerators())


def det_neg_mixed_complete_minus_v(n: int) -> int:
    """Determinant of the negative mixed complete graph with one vertex deleted.

    Writes the ``(n-1)``-order adjacency as ``T + u u^T`` and evaluates
    ``(1 + u^T T^-1 u) det(T)`` exactly with rationals.

    Raises
    ------
    ArithmeticError
        If the rational value is not an integer (cannot happen for a valid
        derivation; guards the recurrences).
    """
    _check_mixed(n)
    state = TridiagState.of_order(n - 1)
    gm = state.g[-1]
    if gm == 0 or state.f[-1] != gm:
        raise ArithmeticError(f"degenerate tridiagonal recurrence at n={n}")
    value = (1 + Fraction(state.bracket(), gm)) * gm
    if value.denominator != 1:
        raise ArithmeticError(f"non-integral determinant {value} at n={n}")
    return int(value)


def det_neg_mixed_star(sizes: Sequence[int]) -> int:
    """``sum_i det(mbar K_{n_i}) prod_{j != i} det(mbar K_{n_j} - v)``."""
    if not sizes:
        raise GraphError("need at least one block")
    for s in sizes:
        _check_mixed(s)
    full = {s: det_neg_mixed_complete(s)[1] for s in set(sizes)}
    minus = {s: det_neg_mixed_complete_minus_v(s) for s in set(sizes)}
    total = 0
    for i, ni in enumerate(sizes):
        term = full[ni]
        for j, nj in enumerate(sizes):
            if j != i:
                term *= minus[nj]
        total += term
    return total
