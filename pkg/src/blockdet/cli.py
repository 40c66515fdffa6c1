"""Command-line front end.

    blockdet det --family mixed-complete:5 --method closed-form
    blockdet per --file bowtie.sdg --method bpartition
    blockdet check --cases 500 --max-n 12
    blockdet bench --family block-path --block-size 8 --k-max 4

Exit codes: 0 success, 1 a check failed, 2 bad arguments or unparsable
input, 3 the chosen method cannot handle the input.
"""

from __future__ import annotations

import argparse
import csv
import json
import sys
import time
from dataclasses import asdict, dataclass

from . import closed_forms as cf
from .bpartition import det_via_bpartitions, per_via_bpartitions
from .checks import run_checks
from .families import (BlockGraphK, CompleteK, MixedComplete, MixedStar, NegCliqueK,
                       NegMixedComplete, NegMixedStar, SignedCycle, SignedPath, SignedTree,
                       UnicyclicSingle, gen)
from .graph import GraphError, SignedDigraph, block_decompose, is_connected, parse_graph
from .oracles import (CYCLE_COVER_MAX_N, PER_MAX_N, SizeBoundError, det_exact,
                      det_via_cycle_covers, per_exact, per_via_cycle_covers)

METHODS = ("auto", "bpartition", "dense", "cycle-cover", "closed-form")


class PreconditionError(Exception):
    """The selected method does not apply to this input."""


@dataclass
class RunReport:
    input: str
    quantity: str
    method: str
    value: str
    elapsed_ms: float
    cross_check: str
    float_check: str | None = None

    def to_json(self) -> str:
        return json.dumps(asdict(self), sort_keys=True)

    @classmethod
    def from_json(cls, text: str) -> "RunReport":
        return cls(**json.loads(text))


# --- family strings ----------------------------------------------------------

def _ints(arg: str) -> list[int]:
    return [int(x) for x in arg.split(",")] if arg else []


def parse_family(text: str):
    """Parse ``name:a,b,...`` into a family instance.

    Known names: complete, neg-clique, cycle, path, star, block-path,
    unicyclic (``n,delta,m`` hangs a path of m vertices), mixed-complete,
    neg-mixed-complete, mixed-star, neg-mixed-star.
    """
    name, _, rest = text.partition(":")
    try:
        p = _ints(rest)
        if name == "complete":
            return CompleteK(*p)
        if name == "neg-clique":
            return NegCliqueK(*p)
        if name == "cycle":
            return SignedCycle(*p)
        if name == "path":
            (n,) = p
            return SignedPath(n)
        if name == "star":
            (leaves,) = p
            return SignedTree((-1,) + (0,) * leaves)
        if name == "block-path":
            sizes = tuple(p)
            attach = tuple((i - 1, 0 if i > 1 else sizes[0] - 1) for i in range(1, len(sizes)))
            return BlockGraphK(sizes, attach)
        if name == "unicyclic":
            n, delta, m = p
            return UnicyclicSingle(n, delta, SignedTree((-1,) + tuple(range(m - 1))))
        if name == "mixed-complete":
            return MixedComplete(*p)
        if name == "neg-mixed-complete":
            return NegMixedComplete(*p)
        if name == "mixed-star":
            return MixedStar(tuple(p))
        if name == "neg-mixed-star":
            return NegMixedStar(tuple(p))
    except (TypeError, ValueError) as exc:
        raise GraphError(f"bad family parameters {text!r}: {exc}") from None
    raise GraphError(f"unknown family {name!r}")


def closed_form(family, quantity: str) -> tuple[int, str | None]:
    """Closed-form value for a family; second item is the float leg if any."""
    det = quantity == "det"
    f = family
    if isinstance(f, CompleteK):
        return (cf.det_complete(f.n) if det else cf.per_complete(f.n)), None
    if isinstance(f, SignedCycle):
        return (cf.det_signed_cycle(f.n, f.delta) if det else cf.per_signed_cycle(f.n, f.delta)), None
    if isinstance(f, SignedPath):
        return (cf.det_signed_path(f.n) if det else cf.per_signed_path(f.n)), None
    if isinstance(f, SignedTree):
        return (cf.det_signed_tree(f) if det else cf.per_signed_tree(f)), None
    if isinstance(f, BlockGraphK):
        return (cf.det_block_graph(f) if det else cf.per_block_graph(f)), None
    if isinstance(f, UnicyclicSingle):
        return (cf.det_unicyclic_single(f.n, f.delta, f.tree) if det
                else cf.per_unicyclic_single(f.n, f.delta, f.tree)), None
    if det:
        if isinstance(f, NegCliqueK):
            return cf.det_neg_clique_complete(f.n, f.m, f.r), None
        if isinstance(f, MixedComplete):
            return cf.det_mixed_complete(f.n), None
        if isinstance(f, MixedStar):
            return cf.det_mixed_star(f.sizes), None
        if isinstance(f, NegMixedComplete):
            approx, exact = cf.det_neg_mixed_complete(f.n)
            return exact, repr(approx)
        if isinstance(f, NegMixedStar):
            return cf.det_neg_mixed_star(f.sizes), None
    raise PreconditionError(f"no closed-form {quantity} for {type(f).__name__}")


def compute(g: SignedDigraph, quantity: str, method: str, family=None) -> tuple[int, str | None]:
    """Evaluate ``quantity`` by ``method``; raises :class:`PreconditionError`."""
    if method == "auto":
        method = "bpartition" if is_connected(g) and block_decompose(g).k >= 2 else "dense"
    try:
        if method == "dense":
            return (det_exact(g) if quantity == "det" else per_exact(g)), None
        if method == "cycle-cover":
            return (det_via_cycle_covers(g) if quantity == "det" else per_via_cycle_covers(g)), None
        if method == "bpartition":
            if not is_connected(g):
                raise PreconditionError("bpartition needs a connected graph")
            return (det_via_bpartitions(g) if quantity == "det" else per_via_bpartitions(g)), None
        if method == "closed-form":
            if family is None:
                raise PreconditionError("closed-form needs --family")
            return closed_form(family, quantity)
    except (SizeBoundError, GraphError) as exc:
        raise PreconditionError(str(exc)) from None
    raise PreconditionError(f"unknown method {method!r}")


def _cross_check(g, quantity, method, value):
    if method != "dense":
        if quantity == "per" and g.n > PER_MAX_N:
            return "skipped"
        ref = det_exact(g) if quantity == "det" else per_exact(g)
        return "agree" if ref == value else f"disagree (dense {ref})"
    if g.n <= CYCLE_COVER_MAX_N:
        ref = det_via_cycle_covers(g) if quantity == "det" else per_via_cycle_covers(g)
        return "agree" if ref == value else f"disagree (cycle-cover {ref})"
    if is_connected(g) and block_decompose(g).k >= 2:
        ref = det_via_bpartitions(g) if quantity == "det" else per_via_bpartitions(g)
        return "agree" if ref == value else f"disagree (bpartition {ref})"
    return "skipped"


def cmd_compute(args) -> int:
    family = None
    try:
        if args.family:
            family = parse_family(args.family)
            g = gen(family)
            descriptor = f"family:{args.family}"
        else:
            with open(args.file, encoding="utf-8") as fh:
                g = parse_graph(fh.read())
            descriptor = f"file:{args.file}"
    except (GraphError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    start = time.perf_counter()
    try:
        value, float_check = compute(g, args.quantity, args.method, family)
    except PreconditionError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3
    elapsed = (time.perf_counter() - start) * 1000
    status = "skipped" if args.no_cross_check else _cross_check(g, args.quantity, args.method, value)
    report = RunReport(descriptor, args.quantity, args.method, str(value), round(elapsed, 3),
                       status, float_check)
    print(report.to_json())
    return 0


def cmd_check(args) -> int:
    results = run_checks(cases=args.cases, max_n=args.max_n, seed=args.seed,
                         inject_fault=args.inject_fault, names=args.only or None)
    width = max(len(r.name) for r in results)
    failed = False
    for r in results:
        print(f"{r.name:<{width}}  {'PASS' if r.passed else 'FAIL'}  cases={r.cases}")
        if not r.passed:
            failed = True
            print(f"  counterexample: {r.counterexample}")
    return 1 if failed else 0


def _bench_graphs(args):
    if args.family == "block-path":
        for k in range(1, args.k_max + 1):
            spec = parse_family("block-path:" + ",".join([str(args.block_size)] * k))
            yield gen(spec)
    else:
        for n in range(args.n_min, args.n_max + 1):
            yield gen(parse_family(f"{args.family}:{n}"))


def cmd_bench(args) -> int:
    writer = csv.writer(sys.stdout, lineterminator="\n")
    writer.writerow(["family", "n", "method", "ms"])
    try:
        graphs = list(_bench_graphs(args))
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    for g in graphs:
        for method in args.methods.split(","):
            if method == "dense" and args.quantity == "per" and g.n > args.dense_max:
                continue
            start = time.perf_counter()
            try:
                compute(g, args.quantity, method)
            except PreconditionError as exc:
                print(f"error: {exc}", file=sys.stderr)
                return 3
            ms = (time.perf_counter() - start) * 1000
            writer.writerow([args.family, g.n, method, f"{ms:.3f}"])
    return 0


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="blockdet", description=__doc__.split("\n\n")[0])
    sub = parser.add_subparsers(dest="command", required=True)
    for quantity in ("det", "per"):
        p = sub.add_parser(quantity, help=f"compute the exact {quantity} of a graph")
        src = p.add_mutually_exclusive_group(required=True)
        src.add_argument("--file", help="graph in sdg text format")
        src.add_argument("--family", help="family spec such as mixed-complete:5")
        p.add_argument("--method", choices=METHODS, default="auto")
        p.add_argument("--no-cross-check", action="store_true")
        p.set_defaults(func=cmd_compute, quantity=quantity)
    p = sub.add_parser("check", help="run randomised cross-checks")
    p.add_argument("--cases", type=int, default=100)
    p.add_argument("--max-n", type=int, default=12)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--only", action="append", help="run just this check (repeatable)")
    p.add_argument("--inject-fault", action="store_true",
                   help="flip the sign of one closed form to self-test the harness")
    p.set_defaults(func=cmd_check)
    p = sub.add_parser("bench", help="time methods and print CSV")
    p.add_argument("--family", default="block-path")
    p.add_argument("--quantity", choices=("det", "per"), default="per")
    p.add_argument("--block-size", type=int, default=8)
    p.add_argument("--k-max", type=int, default=4)
    p.add_argument("--n-min", type=int, default=4)
    p.add_argument("--n-max", type=int, default=10)
    p.add_argument("--methods", default="bpartition,dense")
    p.add_argument("--dense-max", type=int, default=16,
                   help="skip dense permanents above this order")
    p.set_defaults(func=cmd_bench)
    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
