"""Graph families and seeded random generators.

Each family is a small frozen dataclass; :func:`gen` turns one into a
:class:`~blockdet.graph.SignedDigraph` with fixed vertex numbering:

* cycles and unicyclic graphs: cycle vertices ``0..n-1`` first (cycle edges
  ``(i, i+1 mod n)``), then tree vertices in attachment order;
* block graphs: block 0 takes fresh vertices for all of its slots; every later
  block takes fresh vertices for slots ``0..n_i-2`` and shares its last slot
  with the parent block's chosen slot;
* negative cliques sit on the lowest slots of their block;
* mixed stars share global vertex 0, which is cycle vertex 0 of every block.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from typing import Iterable, Sequence, Union

from .graph import GraphError, SignedDigraph, build_graph

SEED_LIMIT = 1 << 64


def _sign(x):
    if x not in (-1, 1):
        raise GraphError(f"sign must be +1 or -1, got {x!r}")
    return x


@dataclass(frozen=True)
class CompleteK:
    n: int

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("CompleteK needs n >= 1")


@dataclass(frozen=True)
class NegCliqueK:
    """K_n with ``m`` vertex-disjoint all-negative ``r``-cliques."""

    n: int
    m: int
    r: int

    def __post_init__(self):
        if self.m < 1 or self.r < 2 or self.m * self.r > self.n - 1:
            raise GraphError(f"NegCliqueK needs m >= 1, r >= 2, m*r <= n-1; got {self}")


@dataclass(frozen=True)
class SignedCycle:
    """Cycle ``C_n`` with sign product ``delta``.

    ``signs[i]`` is the weight of edge ``(i, i+1 mod n)``. By default only the
    closing edge ``(n-1, 0)`` carries ``delta``.
    """

    n: int
    delta: int = 1
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 3:
            raise GraphError("SignedCycle needs n >= 3")
        _sign(self.delta)
        if self.signs is not None:
            if len(self.signs) != self.n or any(s not in (-1, 1) for s in self.signs):
                raise GraphError("cycle signs must be n values in {-1, 1}")
            prod = 1
            for s in self.signs:
                prod *= s
            if prod != self.delta:
                raise GraphError("cycle signs multiply to the wrong delta")

    def edge_signs(self) -> tuple[int, ...]:
        if self.signs is not None:
            return self.signs
        return (1,) * (self.n - 1) + (self.delta,)


@dataclass(frozen=True)
class SignedPath:
    n: int
    signs: tuple[int, ...] | None = None

    def __post_init__(self):
        if self.n < 1:
            raise GraphError("SignedPath needs n >= 1")
        if self.signs is not None and len(self.signs) != self.n - 1:
            raise GraphError("path signs must have n-1 entries")


@dataclass(frozen=True)
class SignedTree:
    """Rooted signed tree on ``m = len(parents)`` vertices, root 0.

    ``parents[0] == -1`` and ``parents[i]`` is the parent of ``i``.
    ``signs[i]`` (``i >= 1``) is the weight of edge ``(i, parents[i])``;
    ``signs[0]`` is the weight of the link from the root to whatever the tree
    gets attached to.
    """

    parents: tuple[int, ...]
    signs: tuple[int, ...] = None  # type: ignore[assignment]

    def __post_init__(self):
        m = len(self.parents)
        if m < 1 or self.parents[0] != -1:
            raise GraphError("tree needs at least the root, with parents[0] == -1")
        for i in range(1, m):
            if not 0 <= self.parents[i] < m or self.parents[i] == i:
                raise GraphError(f"bad parent for vertex {i}")
        if self.signs is None:
            object.__setattr__(self, "signs", (1,) * m)
        if len(self.signs) != m or any(s not in (-1, 1) for s in self.signs):
            raise GraphError("tree signs must be m values in {-1, 1}")
        # reject parent cycles
        for i in range(m):
            seen, v = set(), i
            while v != -1:
                if v in seen:
                    raise GraphError("parents do not form a tree")
                seen.add(v)
                v = self.parents[v]

    @property
    def m(self) -> int:
        return len(self.parents)

    def edges(self, offset: int = 0) -> list[tuple[int, int, int]]:
        return [(i + offset, self.parents[i] + offset, self.signs[i]) for i in range(1, self.m)]

    def with_link_vertex(self) -> "SignedTree":
        """The tree with its attachment vertex added as a new root (``{T, v}``)."""
        parents = (-1, 0) + tuple(p + 1 for p in self.parents[1:])
        return SignedTree(parents, (1,) + self.signs)


@dataclass(frozen=True)
class BlockGraphK:
    """All-positive block graph of cliques.

    ``attach[i-1] = (parent_block, slot)`` places block ``i`` on the vertex in
    ``slot`` of an earlier block.
    """

    sizes: tuple[int, ...]
    attach: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        _check_layout(self.sizes, self.attach)


@dataclass(frozen=True)
class NegCliqueBlockGraph:
    """Block graph whose block ``i`` is ``K_{n_i}^{m_i, r_i}``.

    ``blocks`` holds ``(n_i, m_i, r_i)``; ``m_i = 0`` means an all-positive
    clique. Cut vertices must lie outside every negative clique.
    """

    blocks: tuple[tuple[int, int, int], ...]
    attach: tuple[tuple[int, int], ...] = ()

    def __post_init__(self):
        sizes = tuple(b[0] for b in self.blocks)
        _check_layout(sizes, self.attach)
        for n, m, r in self.blocks:
            if m < 0 or (m and r < 2) or m * r > n - 1:
                raise GraphError(f"block ({n},{m},{r}) needs r >= 2 and 0 <= m*r <= n-1")
        for parent, slot in self.attach:
            n, m, r = self.blocks[parent]
            if slot < m * r:
                raise GraphError(f"cut vertex at slot {slot} of block {parent} lies inside a negative clique")


@dataclass(frozen=True)
class UnicyclicSingle:
    n: int
    delta: int
    tree: SignedTree
    cycle_signs: tuple[int, ...] | None = None


@dataclass(frozen=True)
class UnicyclicMulti:
    n: int
    delta: int
    trees: tuple[SignedTree, ...]
    cycle_signs: tuple[int, ...] | None = None


@dataclass(frozen=True)
class UnicyclicTwo:
    """Trees attached at cycle vertices 0 and ``l``."""

    n: int
    delta: int
    tree1: SignedTree
    tree2: SignedTree
    l: int
    cycle_signs: tuple[int, ...] | None = None

    def __post_init__(self):
        if not 1 <= self.l <= self.n // 2:
            raise GraphError(f"distance l must satisfy 1 <= l <= n/2, got l={self.l}")


@dataclass(frozen=True)
class MixedComplete:
    n: int

    def __post_init__(self):
        if self.n <= 3:
            raise GraphError("mixed complete graphs need n > 3")


@dataclass(frozen=True)
class NegMixedComplete:
    n: int

    def __post_init__(self):
        if self.n <= 3:
            raise GraphError("negative mixed complete graphs need n > 3")


@dataclass(frozen=True)
class MixedStar:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(s <= 3 for s in self.sizes):
            raise GraphError("mixed star blocks need n_i > 3")


@dataclass(frozen=True)
class NegMixedStar:
    sizes: tuple[int, ...]

    def __post_init__(self):
        if not self.sizes or any(s <= 3 for s in self.sizes):
            raise GraphError("negative mixed star blocks need n_i > 3")


FamilySpec = Union[CompleteK, NegCliqueK, SignedCycle, SignedPath, SignedTree, BlockGraphK,
                   NegCliqueBlockGraph, UnicyclicSingle, UnicyclicMulti, UnicyclicTwo,
                   MixedComplete, NegMixedComplete, MixedStar, NegMixedStar]


def _check_layout(sizes, attach):
    if not sizes or any(s < 2 for s in sizes):
        raise GraphError("every block needs at least 2 vertices")
    if len(attach) != len(sizes) - 1:
        raise GraphError("need one attachment per block after the first")
    for i, (parent, slot) in enumerate(attach, 1):
        if not 0 <= parent < i:
            raise GraphError(f"block {i} must attach to an earlier block")
        if not 0 <= slot < sizes[parent]:
            raise GraphError(f"slot {slot} out of range for block {parent}")


def block_layout(sizes: Sequence[int], attach: Sequence[tuple[int, int]]) -> list[list[int]]:
    """Global vertex ids of each block, indexed by slot."""
    _check_layout(tuple(sizes), tuple(attach))
    layout = [list(range(sizes[0]))]
    nxt = sizes[0]
    for i in range(1, len(sizes)):
        parent, slot = attach[i - 1]
        fresh = list(range(nxt, nxt + sizes[i] - 1))
        nxt += sizes[i] - 1
        layout.append(fresh + [layout[parent][slot]])
    return layout


def _clique_edges(verts, weight=lambda a, b: 1):
    return [(verts[a], verts[b], weight(a, b))
            for a in range(len(verts)) for b in range(a + 1, len(verts))]


def _neg_clique_weight(m, r):
    def weight(a, b):
        return -1 if a < m * r and b < m * r and a // r == b // r else 1
    return weight


def _undirected(n, edges):
    triples = []
    for u, v, w in edges:
        triples.append((u, v, w))
        triples.append((v, u, w))
    return build_graph(n, triples)


def _cycle_edges(n, signs):
    return [(i, (i + 1) % n, signs[i]) for i in range(n)]


def _unicyclic(n, delta, cycle_signs, placements):
    cyc = SignedCycle(n, delta, cycle_signs)
    edges = _cycle_edges(n, cyc.edge_signs())
    nxt = n
    for at, tree in placements:
        edges.append((at, nxt, tree.signs[0]))
        edges.extend(tree.edges(nxt))
        nxt += tree.m
    return _undirected(nxt, edges)


def _mixed_arcs(n, offset_of, cycle_w, reverse_w, chord_w):
    arcs = []
    for i in range(n):
        for j in range(n):
            if i == j:
                continue
            if j == (i + 1) % n:
                w = cycle_w
            elif i == (j + 1) % n:
                w = reverse_w
            else:
                w = chord_w
            if w:
                arcs.append((offset_of(i), offset_of(j), w))
    return arcs


def gen(family: FamilySpec) -> SignedDigraph:
    """Build the graph of a family instance."""
    if isinstance(family, CompleteK):
        return _undirected(family.n, _clique_edges(list(range(family.n))))
    if isinstance(family, NegCliqueK):
        verts = list(range(family.n))
        return _undirected(family.n, _clique_edges(verts, _neg_clique_weight(family.m, family.r)))
    if isinstance(family, SignedCycle):
        return _undirected(family.n, _cycle_edges(family.n, family.edge_signs()))
    if isinstance(family, SignedPath):
        signs = family.signs or (1,) * (family.n - 1)
        return _undirected(family.n, [(i, i + 1, signs[i]) for i in range(family.n - 1)])
    if isinstance(family, SignedTree):
        return _undirected(family.m, family.edges())
    if isinstance(family, BlockGraphK):
        layout = block_layout(family.sizes, family.attach)
        n = 1 + max(max(b) for b in layout)
        return _undirected(n, [e for b in layout for e in _clique_edges(b)])
    if isinstance(family, NegCliqueBlockGraph):
        layout = block_layout([b[0] for b in family.blocks], family.attach)
        n = 1 + max(max(b) for b in layout)
        edges = []
        for verts, (_, m, r) in zip(layout, family.blocks):
            edges.extend(_clique_edges(verts, _neg_clique_weight(m, r)))
        return _undirected(n, edges)
    if isinstance(family, UnicyclicSingle):
        return _unicyclic(family.n, family.delta, family.cycle_signs, [(0, family.tree)])
    if isinstance(family, UnicyclicMulti):
        return _unicyclic(family.n, family.delta, family.cycle_signs,
                          [(0, t) for t in family.trees])
    if isinstance(family, UnicyclicTwo):
        return _unicyclic(family.n, family.delta, family.cycle_signs,
                          [(0, family.tree1), (family.l, family.tree2)])
    if isinstance(family, MixedComplete):
        n = family.n
        return build_graph(n, _mixed_arcs(n, lambda i: i, 1, 0, 1))
    if isinstance(family, NegMixedComplete):
        n = family.n
        return build_graph(n, _mixed_arcs(n, lambda i: i, -1, 0, 1))
    if isinstance(family, (MixedStar, NegMixedStar)):
        cycle_w = 1 if isinstance(family, MixedStar) else -1
        arcs = []
        nxt = 1
        for size in family.sizes:
            base = nxt
            arcs.extend(_mixed_arcs(size, lambda i, base=base: 0 if i == 0 else base + i - 1,
                                    cycle_w, 0, 1))
            nxt += size - 1
        return build_graph(nxt, arcs)
    raise TypeError(f"unknown family {family!r}")


# --- random generators -------------------------------------------------------

def _rng(seed: int) -> random.Random:
    if not 0 <= seed < SEED_LIMIT:
        raise ValueError("seed must be a 64-bit unsigned integer")
    return random.Random(seed)


def gen_random_block_graph(seed: int, n_max: int, weights: Iterable[int] = (1,),
                           kinds: Sequence[str] = ("clique", "cycle", "edge"),
                           max_block: int = 5, directed: bool = False) -> SignedDigraph:
    """Random tree of blocks glued at cut vertices, no loops.

    The vertex count is drawn from ``2..n_max``. Blocks are cliques, cycles
    or single edges of at most ``max_block`` vertices. Undirected weights are
    drawn per edge; with ``directed=True`` each support edge instead becomes
    one arc, the reverse arc, or both, with independent weights.
    """
    if n_max < 2:
        raise ValueError("n_max must be >= 2")
    rng = _rng(seed)
    weights = tuple(weights)
    target = rng.randint(2, n_max)
    support: list[tuple[int, int]] = []
    n = 0
    while n < target:
        room = target - n + (1 if n else 0)
        kind = rng.choice(kinds)
        if kind == "edge" or room < 3:
            size = 2
        else:
            lo = 3
            size = rng.randint(lo, max(lo, min(max_block, room)))
        if kind == "cycle" and size < 3:
            kind = "edge"
        if n == 0:
            verts = list(range(size))
            n = size
        else:
            anchor = rng.randrange(n)
            verts = [anchor] + list(range(n, n + size - 1))
            n += size - 1
        if kind == "clique" or size == 2:
            support.extend((verts[a], verts[b]) for a in range(size) for b in range(a + 1, size))
        else:
            support.extend((verts[i], verts[(i + 1) % size]) for i in range(size))
    triples = []
    for u, v in support:
        if not directed:
            w = rng.choice(weights)
            triples += [(u, v, w), (v, u, w)]
            continue
        mode = rng.randrange(3)
        if mode != 1:
            triples.append((u, v, rng.choice(weights)))
        if mode != 0:
            triples.append((v, u, rng.choice(weights)))
    return build_graph(n, triples)


def gen_random_signed_tree(seed: int, m: int) -> SignedTree:
    """Random rooted tree by random parent attachment, random signs."""
    if m < 1:
        raise ValueError("m must be >= 1")
    rng = _rng(seed)
    parents = (-1,) + tuple(rng.randrange(i) for i in range(1, m))
    signs = tuple(rng.choice((-1, 1)) for _ in range(m))
    return SignedTree(parents, signs)


def _shape_key(sizes, attach) -> str:
    """Canonical string of the block-cut tree with block sizes as labels."""
    layout = block_layout(sizes, attach)
    count: dict[int, int] = {}
    for b in layout:
        for v in b:
            count[v] = count.get(v, 0) + 1
    cuts = sorted(v for v, c in count.items() if c > 1)
    nodes = [("B", len(b)) for b in layout] + [("C", 0)] * len(cuts)
    adj: list[list[int]] = [[] for _ in nodes]
    for i, b in enumerate(layout):
        for ci, v in enumerate(cuts):
            if v in b:
                adj[i].append(len(layout) + ci)
                adj[len(layout) + ci].append(i)

    def encode(u, parent):
        kind, size = nodes[u]
        inner = "".join(sorted(encode(v, u) for v in adj[u] if v != parent))
        return f"{kind}{size}({inner})"

    return min(encode(r, -1) for r in range(len(nodes)))


def clique_tree_shapes(max_n: int, max_k: int) -> list[BlockGraphK]:
    """Every block graph of cliques with at most ``max_n`` vertices and ``max_k``
    blocks, one representative per isomorphism class."""
    found: dict[str, BlockGraphK] = {}

    def grow(sizes, attach, n):
        key = _shape_key(sizes, attach)
        if key not in found:
            found[key] = BlockGraphK(tuple(sizes), tuple(attach))
        if len(sizes) == max_k:
            return
        layout = block_layout(sizes, attach)
        count: dict[int, int] = {}
        for b in layout:
            for v in b:
                count[v] = count.get(v, 0) + 1
        for s in range(2, max_n - n + 2):
            for j, b in enumerate(layout):
                free_seen = False
                for slot, v in enumerate(b):
                    # unshared slots of one block are interchangeable
                    if count[v] == 1:
                        if free_seen:
                            continue
                        free_seen = True
                    grow(sizes + [s], attach + [(j, slot)], n + s - 1)

    for s in range(2, max_n + 1):
        grow([s], [], s)
    return sorted(found.values(), key=lambda f: (len(f.sizes), f.sizes, f.attach))
