"""Exact determinants and permanents of signed and mixed graphs.

Three independent routes are provided and cross-checked: dense oracles
(:mod:`blockdet.oracles`), sums over B-partitions of the block decomposition
(:mod:`blockdet.bpartition`), and closed forms for structured families
(:mod:`blockdet.closed_forms`).
"""

from .bpartition import (BPartition, det_via_bpartitions, enumerate_alpha_tuples,
                         enumerate_bpartitions, per_via_bpartitions, split_at_cut_vertex_det,
                         split_at_cut_vertex_per)
from .families import gen
from .graph import (BlockDecomposition, GraphError, SignedDigraph, SwitchingSignature,
                    block_decompose, build_graph, cycle_sign, format_graph, induced_subgraph,
                    is_balanced, parse_graph, underlying)
from .oracles import (CycleCover, SizeBoundError, det_exact, det_via_cycle_covers,
                      enumerate_cycle_covers, per_exact, per_via_cycle_covers)

__version__ = "0.1.0"

__all__ = [
    "BPartition", "BlockDecomposition", "CycleCover", "GraphError", "SignedDigraph",
    "SizeBoundError", "SwitchingSignature", "block_decompose", "build_graph", "cycle_sign",
    "det_exact", "det_via_bpartitions", "det_via_cycle_covers", "enumerate_alpha_tuples",
    "enumerate_bpartitions", "enumerate_cycle_covers", "format_graph", "gen", "induced_subgraph",
    "is_balanced", "parse_graph", "per_exact", "per_via_bpartitions", "per_via_cycle_covers",
    "split_at_cut_vertex_det", "split_at_cut_vertex_per", "underlying",
]
