"""Randomised cross-checks of every computation route against the oracles.

Each check returns a :class:`CheckResult`; a failing check carries the first
counterexample it met. ``blockdet check`` runs them all.
"""

from __future__ import annotations

import os
import random
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from typing import Callable

from . import closed_forms as cf
from .bpartition import (alpha_tuples_by_constraints, count_bpartitions, det_via_bpartitions,
                         enumerate_alpha_tuples, per_via_bpartitions)
from .families import (BlockGraphK, MixedComplete, MixedStar, NegCliqueBlockGraph, NegCliqueK,
                       NegMixedComplete, NegMixedStar, SignedCycle, UnicyclicMulti,
                       UnicyclicSingle, UnicyclicTwo, clique_tree_shapes, gen,
                       gen_random_block_graph, gen_random_signed_tree)
from .graph import (SignedDigraph, SwitchingSignature, block_decompose, cycle_sign,
                    format_graph, from_matrix, induced_subgraph, is_balanced, underlying)
from .oracles import det_exact, det_via_cycle_covers, per_exact, per_via_cycle_covers


@dataclass
class CheckResult:
    name: str
    passed: bool
    cases: int
    counterexample: str | None = None


@dataclass
class Config:
    cases: int = 100
    max_n: int = 12
    seed: int = 0
    inject_fault: bool = False
    formulas: dict[str, Callable] = field(default_factory=dict)

    def formula(self, name):
        return self.formulas.get(name, getattr(cf, name))


# --- case generators ---------------------------------------------------------

def random_matrix_graph(rng: random.Random, n: int, density: float = 0.6) -> SignedDigraph:
    """Random digraph with weights in {-1, 1}, loops allowed."""
    a = [[rng.choice((-1, 1)) if rng.random() < density else 0 for _ in range(n)]
         for _ in range(n)]
    return from_matrix(a)


def random_signature(rng: random.Random, n: int) -> SwitchingSignature:
    return SwitchingSignature(tuple(rng.choice((-1, 1)) for _ in range(n)))


def random_clique_tree(rng: random.Random, max_n: int, max_k: int,
                       max_size: int = 6) -> BlockGraphK:
    while True:
        k = rng.randint(1, max_k)
        sizes = [rng.randint(2, max_size) for _ in range(k)]
        if sum(sizes) - (k - 1) > max_n:
            continue
        attach = [(j, rng.randrange(sizes[j])) for j in (rng.randrange(i) for i in range(1, k))]
        return BlockGraphK(tuple(sizes), tuple(attach))


def random_neg_clique_block_graph(rng: random.Random, max_n: int, max_k: int = 3):
    while True:
        k = rng.randint(1, max_k)
        blocks = []
        for _ in range(k):
            n = rng.randint(3, 7)
            r = rng.randint(2, n - 1)
            m = rng.randint(0, (n - 1) // r)
            blocks.append((n, m, r))
        if sum(b[0] for b in blocks) - (k - 1) > max_n:
            continue
        attach = []
        for i in range(1, k):
            j = rng.randrange(i)
            n, m, r = blocks[j]
            attach.append((j, rng.randrange(m * r, n)))
        return NegCliqueBlockGraph(tuple(blocks), tuple(attach))


def random_cycle_signs(rng: random.Random, n: int, delta: int) -> tuple[int, ...]:
    signs = [rng.choice((-1, 1)) for _ in range(n - 1)]
    prod = 1
    for s in signs:
        prod *= s
    return tuple(signs) + (prod * delta,)


def plant_unbalanced_cycle(rng: random.Random, g: SignedDigraph) -> SignedDigraph:
    """Flip one edge inside a block with a cycle; ``g`` must be balanced."""
    d = block_decompose(g)
    big = [b for b in d.blocks if len(b) >= 3]
    if not big:
        raise ValueError("graph has no cycle")
    block = rng.choice(big)
    edges = [(u, v) for (u, v) in g.arcs if u < v and u in block and v in block]
    u, v = rng.choice(edges)
    arcs = dict(g.arcs)
    arcs[(u, v)] = -arcs[(u, v)]
    arcs[(v, u)] = -arcs[(v, u)]
    return SignedDigraph(g.n, arcs, loops=g.loops)


# --- checks ------------------------------------------------------------------

def _fail(name, cases, detail):
    return CheckResult(name, False, cases, detail)


def check_oracle_triangle(cfg: Config) -> CheckResult:
    rng = random.Random(cfg.seed)
    for case in range(cfg.cases):
        g = random_matrix_graph(rng, rng.randint(0, min(8, cfg.max_n)))
        de, dc = det_exact(g), det_via_cycle_covers(g)
        pe, pc = per_exact(g), per_via_cycle_covers(g)
        if (de, pe) != (dc, pc):
            return _fail("oracle_triangle", case + 1,
                         f"det {de} vs {dc}, per {pe} vs {pc}\n{format_graph(g)}")
    return CheckResult("oracle_triangle", True, cfg.cases)


def check_bpartition(cfg: Config) -> CheckResult:
    for case in range(cfg.cases):
        g = gen_random_block_graph(cfg.seed + case, cfg.max_n, weights=(-1, 1),
                                   directed=case % 3 == 2)
        d = block_decompose(g)
        got = det_via_bpartitions(g, d), per_via_bpartitions(g, d)
        want = det_exact(g), per_exact(g)
        if got != want:
            return _fail("bpartition_sum", case + 1, f"got {got}, want {want}\n{format_graph(g)}")
    return CheckResult("bpartition_sum", True, cfg.cases)


def check_bijection(cfg: Config) -> CheckResult:
    for case in range(cfg.cases):
        g = gen_random_block_graph(cfg.seed + case, cfg.max_n, max_block=4)
        d = block_decompose(g)
        if d.k > 6:
            continue
        tuples = list(enumerate_alpha_tuples(d))
        if (len(tuples) != count_bpartitions(d) or len(set(tuples)) != len(tuples)
                or set(tuples) != alpha_tuples_by_constraints(d)):
            return _fail("alpha_bijection", case + 1, format_graph(g))
    return CheckResult("alpha_bijection", True, cfg.cases)


def check_block_graph_formulas(cfg: Config) -> CheckResult:
    shapes = clique_tree_shapes(min(cfg.max_n, 12), 4)
    rng = random.Random(cfg.seed)
    picked = shapes if cfg.cases >= len(shapes) else rng.sample(shapes, cfg.cases)
    det_f, per_f = cfg.formula("det_block_graph"), cfg.formula("per_block_graph")
    for case, spec in enumerate(picked):
        g = gen(spec)
        if (det_f(spec), per_f(spec)) != (det_exact(g), per_exact(g)):
            return _fail("block_graph_formulas", case + 1, repr(spec))
    return CheckResult("block_graph_formulas", True, len(picked))


def check_neg_clique(cfg: Config) -> CheckResult:
    f = cfg.formula("det_neg_clique_complete")
    cases = 0
    for n in range(3, 11):
        for r in range(2, n):
            for m in range(1, (n - 1) // r + 1):
                cases += 1
                if f(n, m, r) != det_exact(gen(NegCliqueK(n, m, r))):
                    return _fail("neg_clique", cases, f"NegCliqueK({n}, {m}, {r})")
    rng = random.Random(cfg.seed)
    block_f = cfg.formula("det_neg_clique_block_graph")
    for _ in range(cfg.cases):
        spec = random_neg_clique_block_graph(rng, 13)
        cases += 1
        if block_f(spec) != det_exact(gen(spec)):
            return _fail("neg_clique", cases, repr(spec))
    return CheckResult("neg_clique", True, cases)


def check_unicyclic(cfg: Config) -> CheckResult:
    rng = random.Random(cfg.seed)
    seeds = iter(range(cfg.seed * 7919, 1 << 63))
    for case in range(cfg.cases):
        n = rng.randint(3, 8)
        delta = rng.choice((-1, 1))
        cs = random_cycle_signs(rng, n, delta)
        trees = [gen_random_signed_tree(next(seeds), rng.randint(1, 5)) for _ in range(3)]
        kind = case % 3
        if kind == 0:
            spec = UnicyclicSingle(n, delta, trees[0], cs)
            want = (cf.det_unicyclic_single(n, delta, trees[0]),
                    cf.per_unicyclic_single(n, delta, trees[0]))
            alt = (cf.det_unicyclic_single_cases(n, delta, trees[0]),
                   cf.per_unicyclic_single_cases(n, delta, trees[0]))
            if alt != want:
                return _fail("unicyclic", case + 1, f"case table disagrees: {spec!r}")
        elif kind == 1:
            ts = tuple(trees[:rng.randint(1, 3)])
            while n + sum(t.m for t in ts) > 16:
                ts = ts[:-1]
            spec = UnicyclicMulti(n, delta, ts, cs)
            want = cf.det_unicyclic_multi(n, delta, ts), cf.per_unicyclic_multi(n, delta, ts)
        else:
            l = rng.randint(1, n // 2)
            spec = UnicyclicTwo(n, delta, trees[0], trees[1], l, cs)
            want = (cf.det_unicyclic_two(n, delta, trees[0], trees[1], l),
                    cf.per_unicyclic_two(n, delta, trees[0], trees[1], l))
        g = gen(spec)
        if want != (det_exact(g), per_exact(g)):
            return _fail("unicyclic", case + 1, repr(spec))
    return CheckResult("unicyclic", True, cfg.cases)


def check_mixed(cfg: Config) -> CheckResult:
    cases = 0
    top = max(4, min(cfg.max_n, 12))
    for n in range(4, top + 1):
        g = gen(MixedComplete(n))
        cases += 1
        if cfg.formula("det_mixed_complete")(n) != det_exact(g):
            return _fail("mixed_complete", cases, f"MixedComplete({n})")
        want = cfg.formula("det_mixed_complete_minus_v")(n)
        for v in range(n):
            if det_exact(induced_subgraph(g, set(range(n)) - {v})[0]) != want:
                return _fail("mixed_complete", cases, f"MixedComplete({n}) minus {v}")
        if abs(cf.roots_of_unity_product(n) - (n % 2)) > 1e-9:
            return _fail("mixed_complete", cases, f"roots of unity product, n={n}")
    star = cfg.formula("det_mixed_star")
    for k in (1, 2, 3):
        for sizes in _multisets(range(4, 8), k):
            cases += 1
            if star(sizes) != det_exact(gen(MixedStar(sizes))):
                return _fail("mixed_complete", cases, f"MixedStar({sizes})")
    return CheckResult("mixed_complete", True, cases)


def check_neg_mixed(cfg: Config) -> CheckResult:
    cases = 0
    top = max(4, min(cfg.max_n, 12))
    for n in range(4, top + 1):
        cases += 1
        approx, exact = cf.det_neg_mixed_complete(n)
        if abs(approx - exact) > 1e-6 * max(1, abs(exact)):
            return _fail("neg_mixed_complete", cases, f"float {approx} vs exact {exact}, n={n}")
        g = gen(NegMixedComplete(n))
        want = cfg.formula("det_neg_mixed_complete_minus_v")(n)
        for v in range(n):
            if det_exact(induced_subgraph(g, set(range(n)) - {v})[0]) != want:
                return _fail("neg_mixed_complete", cases, f"NegMixedComplete({n}) minus {v}")
    star = cfg.formula("det_neg_mixed_star")
    for k in (1, 2, 3):
        for sizes in _multisets(range(4, 7), k):
            cases += 1
            if star(sizes) != det_exact(gen(NegMixedStar(sizes))):
                return _fail("neg_mixed_complete", cases, f"NegMixedStar({sizes})")
    return CheckResult("neg_mixed_complete", True, cases)


def check_balance(cfg: Config) -> CheckResult:
    rng = random.Random(cfg.seed)
    for case in range(cfg.cases):
        base = gen_random_block_graph(cfg.seed + case, cfg.max_n)
        g = random_signature(rng, base.n).apply(base)
        res = is_balanced(g)
        if not res or res.signature.apply(g) != underlying(g):
            return _fail("balance", case + 1, f"switched graph not recognised\n{format_graph(g)}")
        if (det_exact(g), per_exact(g)) != (det_exact(base), per_exact(base)):
            return _fail("balance", case + 1, f"det/per changed by switching\n{format_graph(g)}")
        if any(len(b) >= 3 for b in block_decompose(g).blocks):
            bad = plant_unbalanced_cycle(rng, g)
            res = is_balanced(bad)
            if res or cycle_sign(bad, res.cycle) != -1:
                return _fail("balance", case + 1, f"planted cycle missed\n{format_graph(bad)}")
    return CheckResult("balance", True, cfg.cases)


def _multisets(values, k):
    import itertools
    return [tuple(c) for c in itertools.combinations_with_replacement(values, k)]


CHECKS = {
    "oracle_triangle": check_oracle_triangle,
    "bpartition_sum": check_bpartition,
    "alpha_bijection": check_bijection,
    "block_graph_formulas": check_block_graph_formulas,
    "neg_clique": check_neg_clique,
    "unicyclic": check_unicyclic,
    "mixed_complete": check_mixed,
    "neg_mixed_complete": check_neg_mixed,
    "balance": check_balance,
}


def _faulty_formulas():
    def flipped(n, m, r):
        return -cf.det_neg_clique_complete(n, m, r)
    return {"det_neg_clique_complete": flipped}


def _run_one(name, cases, max_n, seed, inject_fault):
    cfg = Config(cases=cases, max_n=max_n, seed=seed, inject_fault=inject_fault,
                 formulas=_faulty_formulas() if inject_fault else {})
    return CHECKS[name](cfg)


def run_checks(cases: int = 100, max_n: int = 12, seed: int = 0, inject_fault: bool = False,
               names=None, workers: int | None = None) -> list[CheckResult]:
    """Run the named checks (all by default); results come back sorted by name."""
    names = sorted(names or CHECKS)
    if workers is None:
        workers = int(os.environ.get("BLOCKDET_THREADS", "1") or 1)
    args = [(n, cases, max_n, seed, inject_fault) for n in names]
    if workers > 1:
        with ProcessPoolExecutor(max_workers=workers) as pool:
            results = list(pool.map(_run_one, *zip(*args)))
    else:
        results = [_run_one(*a) for a in args]
    return sorted(results, key=lambda r: r.name)
