"""Ground-truth determinant and permanent computations.

Everything here is exact integer arithmetic: fraction-free Bareiss
elimination for the determinant, Ryser's inclusion-exclusion with Gray-code
column updates for the permanent, and direct cycle-cover expansion as a third,
structurally different route.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Sequence

from .graph import SignedDigraph

PER_MAX_N = 20
CYCLE_COVER_MAX_N = 10


class SizeBoundError(ValueError):
    """Input is larger than an exponential-cost method is configured to accept."""


def det_matrix(a: Sequence[Sequence[int]]) -> int:
    """Determinant of a square integer matrix by Bareiss elimination.

    Every intermediate division is exact, so no rationals ever appear.
    """
    n = len(a)
    if n == 0:
        return 1
    m = [list(map(int, row)) for row in a]
    sign = 1
    prev = 1
    for k in range(n - 1):
        if m[k][k] == 0:
            for r in range(k + 1, n):
                if m[r][k]:
                    m[k], m[r] = m[r], m[k]
                    sign = -sign
                    break
            else:
                return 0
        pivot = m[k][k]
        row_k = m[k]
        for i in range(k + 1, n):
            row_i = m[i]
            f = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (row_i[j] * pivot - f * row_k[j]) // prev
        prev = pivot
    return sign * m[n - 1][n - 1]


def per_matrix(a: Sequence[Sequence[int]], max_n: int = PER_MAX_N) -> int:
    """Permanent of a square integer matrix by Ryser's formula.

    Uses ``per(A) = (-1)^n * sum_S (-1)^|S| prod_i sum_{j in S} a_ij`` with the
    subsets ``S`` visited in Gray-code order, so each step adds or removes a
    single column from the running row sums.
    """
    n = len(a)
    if n > max_n:
        raise SizeBoundError(f"permanent of order {n} exceeds bound {max_n}")
    if n == 0:
        return 1
    # sparse columns: only rows with a nonzero entry need updating
    cols = [[(i, a[i][j]) for i in range(n) if a[i][j]] for j in range(n)]
    if any(not c for c in cols) or any(not any(row) for row in a):
        return 0
    sums = [0] * n
    nonzero = 0
    total = 0
    in_set = [False] * n
    size = 0
    for k in range(1, 1 << n):
        j = (k & -k).bit_length() - 1
        if in_set[j]:
            in_set[j] = False
            size -= 1
            for i, x in cols[j]:
                old = sums[i]
                new = old - x
                sums[i] = new
                nonzero += (new != 0) - (old != 0)
        else:
            in_set[j] = True
            size += 1
            for i, x in cols[j]:
                old = sums[i]
                new = old + x
                sums[i] = new
                nonzero += (new != 0) - (old != 0)
        if nonzero == n:
            p = 1
            for s in sums:
                p *= s
            total += -p if size & 1 else p
    return -total if n & 1 else total


def det_exact(g: SignedDigraph) -> int:
    """Exact determinant of the adjacency matrix of ``g`` (1 for the null graph)."""
    return det_matrix(g.matrix())


def per_exact(g: SignedDigraph, max_n: int = PER_MAX_N) -> int:
    """Exact permanent of the adjacency matrix of ``g`` (1 for the null graph).

    Raises
    ------
    SizeBoundError
        If ``g.n > max_n``.
    """
    return per_matrix(g.matrix(), max_n=max_n)


@dataclass(frozen=True)
class CycleCover:
    """Vertex-disjoint directed cycles covering every vertex.

    Each cycle starts at its smallest vertex; cycles are ordered by that vertex.
    Loops appear as 1-cycles.
    """

    cycles: tuple[tuple[int, ...], ...]
    weight: int

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)


def enumerate_cycle_covers(g: SignedDigraph,
                           max_n: int = CYCLE_COVER_MAX_N) -> Iterator[CycleCover]:
    """Yield every cycle cover of ``g`` exactly once, in a deterministic order.

    The smallest uncovered vertex always opens the next cycle, and a cycle may
    only pass through vertices larger than its opener, which makes every cover
    appear exactly once.
    """
    n = g.n
    if n > max_n:
        raise SizeBoundError(f"cycle-cover enumeration of order {n} exceeds bound {max_n}")
    out = [[] for _ in range(n)]
    for (u, v), w in g.arcs.items():
        out[u].append((v, w))
    used = [False] * n
    cycles: list[tuple[int, ...]] = []

    def open_cycle(weight):
        start = next((v for v in range(n) if not used[v]), None)
        if start is None:
            yield CycleCover(tuple(cycles), weight)
            return
        used[start] = True
        yield from extend(start, [start], weight)
        used[start] = False

    def extend(start, path, weight):
        u = path[-1]
        for v, w in out[u]:
            if v == start:
                cycles.append(tuple(path))
                yield from open_cycle(weight * w)
                cycles.pop()
            elif v > start and not used[v]:
                used[v] = True
                path.append(v)
                yield from extend(start, path, weight * w)
                path.pop()
                used[v] = False

    yield from open_cycle(1)


def det_via_cycle_covers(g: SignedDigraph, max_n: int = CYCLE_COVER_MAX_N) -> int:
    """``(-1)^n * sum_L (-1)^c(L) w(L)`` over all cycle covers ``L``."""
    total = 0
    for cover in enumerate_cycle_covers(g, max_n):
        total += -cover.weight if cover.cycle_count & 1 else cover.weight
    return -total if g.n & 1 else total


def per_via_cycle_covers(g: SignedDigraph, max_n: int = CYCLE_COVER_MAX_N) -> int:
    """``sum_L w(L)`` over all cycle covers ``L``."""
    return sum(cover.weight for cover in enumerate_cycle_covers(g, max_n))
