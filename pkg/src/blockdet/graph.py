"""Exact signed digraphs, block decomposition, balance and subgraph algebra.

Undirected graphs are stored as symmetric arc sets, so a single type covers
simple graphs, digraphs and mixed graphs. Block structure is always taken on
the undirected support.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass
from types import MappingProxyType
from typing import Iterable, Mapping, Sequence


class GraphError(ValueError):
    """Malformed graph input or a violated structural precondition."""


class SignedDigraph:
    """Integer-weighted digraph on vertices ``0..n-1``.

    Parameters
    ----------
    n : int
        Number of vertices.
    arcs : mapping of (u, v) -> int
        Nonzero exact integer weights. An undirected edge is two symmetric arcs.
    loops : bool
        Whether self-loop arcs ``(v, v)`` are permitted.
    """

    __slots__ = ("_n", "_arcs", "_loops", "_hash")

    def __init__(self, n: int, arcs: Mapping[tuple[int, int], int] | None = None,
                 loops: bool = False):
        if not isinstance(n, int) or isinstance(n, bool) or n < 0:
            raise GraphError(f"vertex count must be a non-negative int, got {n!r}")
        clean = {}
        for (u, v), w in sorted((arcs or {}).items()):
            _check_arc(n, u, v, w, loops)
            clean[(u, v)] = int(w)
        self._n = n
        self._arcs = MappingProxyType(clean)
        self._loops = bool(loops)
        self._hash = None

    @property
    def n(self) -> int:
        return self._n

    @property
    def arcs(self) -> Mapping[tuple[int, int], int]:
        """Read-only arc map, iterated in lexicographic order."""
        return self._arcs

    @property
    def loops(self) -> bool:
        return self._loops

    def weight(self, u: int, v: int) -> int:
        return self._arcs.get((u, v), 0)

    def has_arc(self, u: int, v: int) -> bool:
        return (u, v) in self._arcs

    def matrix(self) -> list[list[int]]:
        """Dense adjacency matrix as nested lists of Python ints."""
        a = [[0] * self._n for _ in range(self._n)]
        for (u, v), w in self._arcs.items():
            a[u][v] = w
        return a

    def is_symmetric(self) -> bool:
        return all(self._arcs.get((v, u)) == w for (u, v), w in self._arcs.items())

    def neighbors(self) -> list[list[int]]:
        """Sorted neighbour lists of the undirected support, loops dropped."""
        adj = [set() for _ in range(self._n)]
        for u, v in self._arcs:
            if u != v:
                adj[u].add(v)
                adj[v].add(u)
        return [sorted(s) for s in adj]

    def loop_vertices(self) -> set[int]:
        return {u for u, v in self._arcs if u == v}

    def transpose(self) -> "SignedDigraph":
        return SignedDigraph(self._n, {(v, u): w for (u, v), w in self._arcs.items()},
                             loops=self._loops)

    def __eq__(self, other):
        if not isinstance(other, SignedDigraph):
            return NotImplemented
        return (self._n == other._n and self._loops == other._loops
                and dict(self._arcs) == dict(other._arcs))

    def __hash__(self):
        if self._hash is None:
            self._hash = hash((self._n, self._loops, tuple(self._arcs.items())))
        return self._hash

    def __repr__(self):
        return f"SignedDigraph(n={self._n}, arcs={len(self._arcs)}, loops={self._loops})"


def _check_arc(n, u, v, w, loops):
    for x in (u, v):
        if not isinstance(x, int) or isinstance(x, bool) or not 0 <= x < n:
            raise GraphError(f"vertex {x!r} out of range for n={n}")
    if u == v and not loops:
        raise GraphError(f"self-loop at {u} but loops are not permitted")
    if not isinstance(w, int) or isinstance(w, bool):
        raise GraphError(f"arc ({u},{v}) weight must be an exact int, got {w!r}")
    if w == 0:
        raise GraphError(f"arc ({u},{v}) has zero weight; omit absent arcs instead")


def build_graph(n: int, arc_list: Iterable[tuple[int, int, int]],
                loops: bool = False) -> SignedDigraph:
    """Build a graph from ``(u, v, weight)`` triples; duplicates are an error."""
    arcs: dict[tuple[int, int], int] = {}
    for u, v, w in arc_list:
        if (u, v) in arcs:
            raise GraphError(f"duplicate arc ({u},{v})")
        _check_arc(n, u, v, w, loops)
        arcs[(u, v)] = w
    return SignedDigraph(n, arcs, loops=loops)


def from_edges(n: int, edges: Iterable[tuple[int, int, int]],
               arcs: Iterable[tuple[int, int, int]] = ()) -> SignedDigraph:
    """Undirected ``edges`` become symmetric arc pairs; ``arcs`` are one-way."""
    triples = []
    for u, v, w in edges:
        triples.append((u, v, w))
        if u != v:
            triples.append((v, u, w))
    triples.extend(arcs)
    return build_graph(n, triples, loops=any(u == v for u, v, _ in triples))


def from_matrix(a: Sequence[Sequence[int]]) -> SignedDigraph:
    n = len(a)
    arcs = {(i, j): int(a[i][j]) for i in range(n) for j in range(n) if a[i][j]}
    return SignedDigraph(n, arcs, loops=any(a[i][i] for i in range(n)))


def underlying(g: SignedDigraph) -> SignedDigraph:
    """Replace every weight by its absolute value."""
    return SignedDigraph(g.n, {k: abs(w) for k, w in g.arcs.items()}, loops=g.loops)


def disjoint_union(*graphs: SignedDigraph) -> SignedDigraph:
    arcs = {}
    offset = 0
    loops = False
    for h in graphs:
        for (u, v), w in h.arcs.items():
            arcs[(u + offset, v + offset)] = w
        offset += h.n
        loops = loops or h.loops
    return SignedDigraph(offset, arcs, loops=loops)


# --- subgraphs ---------------------------------------------------------------

def induced_subgraph(g: SignedDigraph, s: Iterable[int]) -> tuple[SignedDigraph, dict[int, int]]:
    """Subgraph induced on ``s``, relabelled densely in increasing label order.

    Returns the subgraph and the map from old to new labels.
    """
    verts = sorted(set(s))
    for v in verts:
        if not 0 <= v < g.n:
            raise GraphError(f"vertex {v} not in graph with n={g.n}")
    relabel = {v: i for i, v in enumerate(verts)}
    arcs = {(relabel[u], relabel[v]): w for (u, v), w in g.arcs.items()
            if u in relabel and v in relabel}
    return SignedDigraph(len(verts), arcs, loops=g.loops), relabel


def components(g: SignedDigraph) -> list[list[int]]:
    """Connected components of the undirected support, each sorted, ordered by min vertex."""
    adj = g.neighbors()
    seen = [False] * g.n
    out = []
    for s in range(g.n):
        if seen[s]:
            continue
        seen[s] = True
        comp = [s]
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                if not seen[v]:
                    seen[v] = True
                    comp.append(v)
                    queue.append(v)
        out.append(sorted(comp))
    return out


def is_connected(g: SignedDigraph) -> bool:
    return len(components(g)) <= 1


# --- block decomposition -----------------------------------------------------

@dataclass(frozen=True)
class BlockDecomposition:
    """Blocks (sorted vertex tuples), cut vertices, and cut-vertex incidence.

    ``incidence[v]`` lists the indices of the blocks containing cut vertex ``v``.
    """

    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    incidence: Mapping[int, tuple[int, ...]]

    @property
    def k(self) -> int:
        return len(self.blocks)

    def block_of(self) -> dict[int, int]:
        """Unique block index of every non-cut vertex."""
        owner = {}
        for i, b in enumerate(self.blocks):
            for v in b:
                if v not in self.cut_vertices:
                    owner[v] = i
        return owner


def block_decompose(g: SignedDigraph) -> BlockDecomposition:
    """Blocks and articulation points of the undirected support of ``g``.

    Iterative Hopcroft-Tarjan lowpoint search. Bridges come out as two-vertex
    blocks; an isolated single vertex is its own block. Blocks are ordered by
    their smallest vertex, ties broken by the rest of the sorted tuple.

    Raises
    ------
    GraphError
        If the support is disconnected.
    """
    n = g.n
    if n == 0:
        return BlockDecomposition((), frozenset(), MappingProxyType({}))
    if not is_connected(g):
        raise GraphError("block_decompose needs a connected graph; split components first")
    if n == 1:
        return BlockDecomposition(((0,),), frozenset(), MappingProxyType({}))

    adj = g.neighbors()
    disc = [-1] * n
    low = [0] * n
    blocks: list[tuple[int, ...]] = []
    cuts: set[int] = set()
    edge_stack: list[tuple[int, int]] = []
    timer = 0

    root = 0
    disc[root] = low[root] = timer
    timer += 1
    root_children = 0
    # frames: (vertex, parent, next neighbour index)
    stack = [[root, -1, 0]]
    while stack:
        frame = stack[-1]
        u, parent, i = frame
        if i < len(adj[u]):
            frame[2] += 1
            v = adj[u][i]
            if disc[v] == -1:
                disc[v] = low[v] = timer
                timer += 1
                edge_stack.append((u, v))
                stack.append([v, u, 0])
                if u == root:
                    root_children += 1
            elif v != parent and disc[v] < disc[u]:
                edge_stack.append((u, v))
                low[u] = min(low[u], disc[v])
            continue
        stack.pop()
        if parent == -1:
            continue
        low[parent] = min(low[parent], low[u])
        if low[u] >= disc[parent]:
            if parent != root:
                cuts.add(parent)
            verts = set()
            while True:
                a, b = edge_stack.pop()
                verts.update((a, b))
                if (a, b) == (parent, u):
                    break
            blocks.append(tuple(sorted(verts)))
    if root_children > 1:
        cuts.add(root)

    blocks.sort()
    incidence = {c: tuple(i for i, b in enumerate(blocks) if c in b) for c in sorted(cuts)}
    return BlockDecomposition(tuple(blocks), frozenset(cuts), MappingProxyType(incidence))


# --- balance -----------------------------------------------------------------

@dataclass(frozen=True)
class SwitchingSignature:
    """Per-vertex signs; conjugating ``A`` by ``diag(signs)`` keeps det and per."""

    signs: tuple[int, ...]

    def apply(self, g: SignedDigraph) -> SignedDigraph:
        s = self.signs
        if len(s) != g.n:
            raise GraphError(f"signature length {len(s)} != n={g.n}")
        return SignedDigraph(g.n, {(u, v): s[u] * w * s[v] for (u, v), w in g.arcs.items()},
                             loops=g.loops)


@dataclass(frozen=True)
class BalanceResult:
    balanced: bool
    signature: SwitchingSignature | None = None
    cycle: tuple[int, ...] | None = None

    def __bool__(self):
        return self.balanced


def is_balanced(g: SignedDigraph) -> BalanceResult:
    """Decide balance of a symmetric signed graph by spanning-forest propagation.

    On success the result carries a signature ``s`` with ``s[u]*w(u,v)*s[v] > 0``
    on every edge. On failure it carries a cycle (vertex sequence, first vertex
    not repeated) whose weight product is negative.
    """
    if not g.is_symmetric():
        raise GraphError("balance is defined for undirected (symmetric) graphs")
    n = g.n
    sign = [0] * n
    parent = [-1] * n
    depth = [0] * n
    adj = g.neighbors()
    for v in g.loop_vertices():
        if g.weight(v, v) < 0:
            return BalanceResult(False, cycle=(v,))
    for s in range(n):
        if sign[s]:
            continue
        sign[s] = 1
        queue = deque([s])
        while queue:
            u = queue.popleft()
            for v in adj[u]:
                w = 1 if g.weight(u, v) > 0 else -1
                if not sign[v]:
                    sign[v] = sign[u] * w
                    parent[v] = u
                    depth[v] = depth[u] + 1
                    queue.append(v)
                elif sign[u] * w * sign[v] < 0:
                    return BalanceResult(False, cycle=_tree_cycle(u, v, parent, depth))
    return BalanceResult(True, signature=SwitchingSignature(tuple(sign)))


def _tree_cycle(u, v, parent, depth):
    left, right = [u], [v]
    a, b = u, v
    while depth[a] > depth[b]:
        a = parent[a]
        left.append(a)
    while depth[b] > depth[a]:
        b = parent[b]
        right.append(b)
    while a != b:
        a, b = parent[a], parent[b]
        left.append(a)
        right.append(b)
    # left ends at the common ancestor; right ends there too
    return tuple(left + right[-2::-1])


def cycle_sign(g: SignedDigraph, cycle: Sequence[int]) -> int:
    """Sign of the product of weights along ``cycle`` (closing arc included)."""
    prod = 1
    k = len(cycle)
    for i in range(k):
        u, v = cycle[i], cycle[(i + 1) % k]
        w = g.weight(u, v)
        if w == 0:
            raise GraphError(f"({u},{v}) is not an arc of the graph")
        prod *= w
    return 1 if prod > 0 else -1


# --- text format -------------------------------------------------------------

def format_graph(g: SignedDigraph) -> str:
    """Serialize to the ``sdg`` text format.

    Symmetric pairs with equal weight are written as ``edge u v w`` with
    ``u < v``; everything else as ``arc u v w``. Lines are in lexicographic
    order, so the output is canonical.
    """
    lines = [f"sdg {g.n}" + (" loops" if g.loops else "")]
    for (u, v), w in g.arcs.items():
        if u < v and g.arcs.get((v, u)) == w:
            lines.append(f"edge {u} {v} {w}")
        elif u > v and g.arcs.get((v, u)) == w:
            continue
        else:
            lines.append(f"arc {u} {v} {w}")
    return "\n".join(lines) + "\n"


def parse_graph(text: str) -> SignedDigraph:
    """Parse the ``sdg`` text format; raises :class:`GraphError` on bad input."""
    header = None
    triples = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tok = line.split()
        if header is None:
            if tok[0] != "sdg" or len(tok) not in (2, 3) or (len(tok) == 3 and tok[2] != "loops"):
                raise GraphError(f"line {lineno}: expected 'sdg <n> [loops]'")
            header = (_int(tok[1], lineno), len(tok) == 3)
            continue
        if tok[0] not in ("arc", "edge") or len(tok) != 4:
            raise GraphError(f"line {lineno}: expected 'arc|edge <u> <v> <w>'")
        u, v, w = (_int(t, lineno) for t in tok[1:])
        triples.append((u, v, w))
        if tok[0] == "edge" and u != v:
            triples.append((v, u, w))
    if header is None:
        raise GraphError("missing 'sdg <n>' header")
    n, loops = header
    return build_graph(n, triples, loops=loops)


def _int(tok, lineno):
    try:
        return int(tok, 10)
    except ValueError:
        raise GraphError(f"line {lineno}: {tok!r} is not a decimal integer") from None
