#!/usr/bin/env python3
"""Decompose generated class members and report what the leaf atoms are.

Members of the four classes decompose along clique cutsets into atoms that
should land in a small list of basic shapes. The census generates seeded
members, builds the decomposition tree for each, classifies every leaf atom
(complete, chordal, hyperhole, ring, hyperantihole, other), and prints a
table per class along with tree size statistics.

Two expectations to check in the output: the chordal column stays zero,
because a chordal atom without a clique cutset is necessarily complete; and
"other" atoms appear only for the join-based basic families (joins of
holes, cliques, and small pieces have no clique cutset but are none of the
listed shapes). Pass --show-other to print one such atom per class.

Example:
    python scripts/structure_census.py --trials 200 --max-n 13
"""

from __future__ import annotations

import argparse
import sys
from collections import Counter
from dataclasses import dataclass
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent.parent / "src"))

from tcfree.chordal import simplicial_order
from tcfree.decomposition import build_tree
from tcfree.generators import gen_class_member
from tcfree.graphs import Graph, induced_subgraph
from tcfree.io import format_graph
from tcfree.rings import recognize_hyperantihole, recognize_hyperhole, recognize_ring


@dataclass(frozen=True)
class CensusConfig:
    trials: int = 200
    max_n: int = 13
    seed: int = 0
    pieces: int = 3


def classify_atom(g: Graph) -> str:
    if all(g.has_edge(u, v) for u in range(g.n) for v in range(u + 1, g.n)):
        return "complete"
    if simplicial_order(g) is not None:
        return "chordal"
    if recognize_hyperhole(g) is not None:
        return "hyperhole"
    if recognize_ring(g) is not None:
        return "ring"
    if recognize_hyperantihole(g) is not None:
        return "hyperantihole"
    return "other"


def census(cls: str, cfg: CensusConfig) -> tuple[Counter, Counter, Graph | None]:
    kinds: Counter = Counter()
    tree_stats: Counter = Counter()
    example_other = None
    for index in range(cfg.trials):
        g = gen_class_member(cfg.seed + index, cls, pieces=cfg.pieces, max_n=cfg.max_n)
        tree = build_tree(g)
        leaves = [node for node in tree.nodes if node.kind == "leaf"]
        tree_stats["trees"] += 1
        tree_stats["nodes"] += len(tree.nodes)
        tree_stats["leaves"] += len(leaves)
        for node in leaves:
            atom, _ = induced_subgraph(g, node.vertices)
            kind = classify_atom(atom)
            kinds[kind] += 1
            if kind == "other" and example_other is None:
                example_other = atom
    return kinds, tree_stats, example_other


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(description=__doc__.splitlines()[0])
    parser.add_argument("--trials", type=int, default=200)
    parser.add_argument("--max-n", type=int, default=13)
    parser.add_argument("--seed", type=int, default=0)
    parser.add_argument("--pieces", type=int, default=3)
    parser.add_argument("--show-other", action="store_true", help="print one 'other' atom per class")
    args = parser.parse_args(argv)
    cfg = CensusConfig(trials=args.trials, max_n=args.max_n, seed=args.seed, pieces=args.pieces)

    order = ("complete", "chordal", "hyperhole", "ring", "hyperantihole", "other")
    header = f"{'class':<8} {'trees':>5} {'nodes':>6} {'leaves':>6}  " + "".join(
        f"{k:>14}" for k in order
    )
    print(header)
    for cls in ("gut", "gu", "gt", "gutcap"):
        kinds, stats, example = census(cls, cfg)
        per_leaf = "".join(f"{kinds.get(k, 0):>14}" for k in order)
        print(
            f"{cls:<8} {stats['trees']:>5} {stats['nodes']:>6} {stats['leaves']:>6}  {per_leaf}"
        )
        if args.show_other and example is not None:
            print(f"-- one 'other' atom from {cls} --")
            sys.stdout.write(format_graph(example))
    return 0


if __name__ == "__main__":
    raise SystemExit(main())
