import itertools

import pytest

from blockdet.graph import from_edges


def leibniz_det(a):
    """Determinant by the permutation expansion, for tiny matrices only."""
    n = len(a)
    total = 0
    for perm in itertools.permutations(range(n)):
        inv = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = -1 if inv % 2 else 1
        for i in range(n):
            term *= a[i][perm[i]]
        total += term
    return total


def brute_per(a):
    n = len(a)
    total = 0
    for perm in itertools.permutations(range(n)):
        term = 1
        for i in range(n):
            term *= a[i][perm[i]]
        total += term
    return total


@pytest.fixture
def bowtie():
    return from_edges(5, [(0, 1, 1), (0, 2, 1), (1, 2, 1), (0, 3, 1), (0, 4, 1), (3, 4, 1)])


@pytest.fixture
def paw():
    # triangle 0-1-2 with pendant 3 on vertex 0
    return from_edges(4, [(0, 1, 1), (1, 2, 1), (0, 2, 1), (0, 3, 1)])


def path_graph(n, signs=None):
    signs = signs or [1] * (n - 1)
    return from_edges(n, [(i, i + 1, signs[i]) for i in range(n - 1)])


def cycle_graph(n, signs=None):
    signs = signs or [1] * n
    return from_edges(n, [(i, (i + 1) % n, signs[i]) for i in range(n)])
