"""Command line interface.

Subcommands: recognize, solve, decompose, generate, verify-chi. Graphs are
read in the text format (vertices numbered from 1); "-" reads stdin. Results
go to stdout as JSON with vertex labels matching the input numbering,
diagnostics go to stderr. generate writes the text format instead so its
output pipes straight back into the other commands.

Exit codes: 0 success or member, 1 non-member, 2 input error, 3 unsupported
class/problem pair, 4 internal verification failure.
"""

from __future__ import annotations

import argparse
import json
import random
import sys
from pathlib import Path
from typing import Optional

from .classes import (
    CLASS_IDS,
    NotInClassError,
    color_gu,
    color_gutcap,
    mwc_gt,
    mwc_mwss_gu,
    mwc_mwss_gutcap,
    mwss_gt,
    recognize_gt,
    recognize_gu,
    recognize_gut,
    recognize_gutcap,
)
from .decomposition import build_tree
from .generators import (
    _rand_sizes,
    gen_chordal,
    gen_class_member,
    gen_hyperantihole,
    gen_hyperhole,
    gen_ring,
)
from .graphs import Coloring, Graph, WeightedGraph, is_proper_coloring
from .io import ParseError, format_graph, parse_graph
from .oracles import brute_chi, brute_omega_w

_RECOGNIZERS = {
    "gut": recognize_gut,
    "gu": recognize_gu,
    "gt": recognize_gt,
    "gutcap": recognize_gutcap,
}

# solvable class/problem pairs; finding a maximum clique in gut is np-hard
# and the other gut problems and gt coloring have no known polynomial
# algorithm, so those pairs are rejected up front
_SUPPORTED = {
    ("gu", "mwc"),
    ("gu", "mwss"),
    ("gu", "color"),
    ("gt", "mwc"),
    ("gt", "mwss"),
    ("gutcap", "mwc"),
    ("gutcap", "mwss"),
    ("gutcap", "color"),
}

_UNSUPPORTED_WHY = {
    ("gut", "mwc"): "maximum weight clique is np-hard on this class",
    ("gut", "mwss"): "no polynomial algorithm is known for this pair",
    ("gut", "color"): "no polynomial algorithm is known for this pair",
    ("gt", "color"): "no polynomial algorithm is known for this pair",
}

_CHI_BOUND_FORMULAS = {
    "gu": "omega + 1",
    "gt": "floor(3 * omega / 2)",
    "gutcap": "floor(3 * omega / 2)",
    "gut": "2 * omega ** 4",
    "hyperantihole7": "floor(4 * omega / 3)",
}


class CliError(Exception):
    """User-facing input problem; maps to exit code 2."""


# ---------------------------------------------------------------------------
# helpers


def _read_weighted(path: str) -> WeightedGraph:
    if path == "-":
        text = sys.stdin.read()
    else:
        try:
            text = Path(path).read_text()
        except OSError as exc:
            raise CliError(f"cannot read {path}: {exc}") from None
    try:
        return parse_graph(text)
    except ParseError as exc:
        raise CliError(str(exc)) from None


_VERTEX_LIST_KEYS = {"vertices", "paths", "cutset", "parts", "leaf", "anticomponent"}
_VERTEX_INT_KEYS = {"center"}


def _shift_nested(value):
    if isinstance(value, int):
        return value + 1
    return [_shift_nested(x) for x in value]


def _to_external(obj):
    """Rewrite 0-based internal vertex labels to the 1-based text-format
    numbering inside a JSON-ready structure."""
    if isinstance(obj, dict):
        out = {}
        for key, value in obj.items():
            if value is None:
                out[key] = None
            elif key in _VERTEX_INT_KEYS and isinstance(value, int):
                out[key] = value + 1
            elif key in _VERTEX_LIST_KEYS:
                out[key] = _shift_nested(value)
            else:
                out[key] = _to_external(value)
        return out
    if isinstance(obj, list):
        return [_to_external(x) for x in obj]
    return obj


def _emit(payload: dict) -> None:
    sys.stdout.write(json.dumps(payload, sort_keys=True, indent=2) + "\n")


def _check_clique(g: Graph, vertices: frozenset[int]) -> bool:
    vs = sorted(vertices)
    return all(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


def _check_stable(g: Graph, vertices: frozenset[int]) -> bool:
    vs = sorted(vertices)
    return not any(g.has_edge(u, v) for i, u in enumerate(vs) for v in vs[i + 1 :])


# ---------------------------------------------------------------------------
# commands


def cmd_recognize(args: argparse.Namespace) -> int:
    wg = _read_weighted(args.graph)
    rec = _RECOGNIZERS[args.cls](wg.graph)
    payload = {"class": args.cls, "certificate": None}
    payload.update(_to_external(rec.to_json_dict()))
    _emit(payload)
    return 0 if rec.member else 1


def _solve_dispatch(cls: str, problem: str, wg: WeightedGraph):
    """Run the solver; returns (solution dict, value) with 1-based labels."""
    if problem == "color":
        col: Coloring = color_gu(wg.graph) if cls == "gu" else color_gutcap(wg.graph)
        if not is_proper_coloring(wg.graph, col):
            raise AssertionError("coloring is not proper")
        return {"kind": "coloring", "colors": list(col.colors), "count": col.count}, col.count
    if cls == "gu":
        pair = mwc_mwss_gu(wg)
        value, chosen = pair[0] if problem == "mwc" else pair[1]
    elif cls == "gutcap":
        pair = mwc_mwss_gutcap(wg)
        value, chosen = pair[0] if problem == "mwc" else pair[1]
    else:
        value, chosen = mwc_gt(wg) if problem == "mwc" else mwss_gt(wg)
    ok = _check_clique(wg.graph, chosen) if problem == "mwc" else _check_stable(wg.graph, chosen)
    if not ok:
        raise AssertionError("selected vertices violate the adjacency requirement")
    if sum(wg.weights[v] for v in chosen) != value:
        raise AssertionError("reported value does not match the selected vertices")
    kind = "clique" if problem == "mwc" else "stable_set"
    return {"kind": kind, "vertices": sorted(v + 1 for v in chosen)}, value


def cmd_solve(args: argparse.Namespace) -> int:
    pair = (args.cls, args.problem)
    if pair not in _SUPPORTED:
        why = _UNSUPPORTED_WHY.get(pair, "unsupported class/problem pair")
        print(f"error: {args.cls}/{args.problem}: {why}", file=sys.stderr)
        return 3
    wg = _read_weighted(args.graph)
    try:
        solution, value = _solve_dispatch(args.cls, args.problem, wg)
    except NotInClassError as exc:
        cert = exc.certificate.to_json_dict() if exc.certificate is not None else None
        _emit(
            {
                "class": args.cls,
                "member": False,
                "certificate": _to_external(cert),
                "solution": None,
                "value": None,
                "reason": str(exc),
            }
        )
        return 1
    except AssertionError as exc:
        print(f"internal verification failed: {exc}", file=sys.stderr)
        return 4
    _emit(
        {
            "class": args.cls,
            "member": True,
            "certificate": None,
            "solution": solution,
            "value": value,
        }
    )
    return 0


def cmd_decompose(args: argparse.Namespace) -> int:
    wg = _read_weighted(args.graph)
    tree = build_tree(wg.graph)
    _emit(_to_external(tree.to_json_dict()))
    return 0


def _parse_sizes(text: str) -> tuple[int, ...]:
    try:
        sizes = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise CliError(f"cannot parse sizes {text!r}") from None
    return sizes


def cmd_generate(args: argparse.Namespace) -> int:
    try:
        if args.kind in ("ring", "hyperhole", "hyperantihole"):
            if args.k is None or args.sizes is None:
                raise CliError(f"--kind {args.kind} requires --k and --sizes")
            sizes = _parse_sizes(args.sizes)
            if len(sizes) != args.k:
                raise CliError("--sizes must list one size per part")
            if args.kind == "ring":
                g, partition = gen_ring(args.seed, args.k, sizes)
                parts = _to_external(partition.to_json_dict())
                print(json.dumps(parts, sort_keys=True), file=sys.stderr)
            elif args.kind == "hyperhole":
                g = gen_hyperhole(args.seed, args.k, sizes)
            else:
                g = gen_hyperantihole(args.seed, args.k, sizes)
        elif args.kind == "chordal":
            if args.n is None:
                raise CliError("--kind chordal requires --n")
            g = gen_chordal(args.seed, args.n, args.density)
        else:
            if args.cls is None:
                raise CliError("--kind member requires --class")
            g = gen_class_member(args.seed, args.cls, args.pieces, args.max_n)
    except ValueError as exc:
        raise CliError(str(exc)) from None
    sys.stdout.write(format_graph(g))
    return 0


def _chi_bound(cls: str, omega: int) -> int:
    if cls == "gu":
        return omega + 1
    if cls in ("gt", "gutcap"):
        return (3 * omega) // 2
    if cls == "gut":
        return 2 * omega**4
    return (4 * omega) // 3


def cmd_verify_chi(args: argparse.Namespace) -> int:
    if args.max_n > 16:
        raise CliError("--max-n above 16 is out of brute-force range")
    if args.trials < 1:
        raise CliError("--trials must be positive")
    results = []
    all_ok = True
    for index in range(args.trials):
        trial_seed = args.seed + index
        if args.cls == "hyperantihole7":
            rng = random.Random(trial_seed)
            g = gen_hyperantihole(trial_seed, 7, _rand_sizes(rng, 7, max(7, args.max_n)))
        else:
            g = gen_class_member(trial_seed, args.cls, pieces=2, max_n=args.max_n)
        omega = brute_omega_w(WeightedGraph(g, (1,) * g.n))
        chi = brute_chi(g)
        bound = _chi_bound(args.cls, omega)
        ok = chi <= bound
        all_ok = all_ok and ok
        results.append(
            {
                "trial": index,
                "seed": trial_seed,
                "n": g.n,
                "omega": omega,
                "chi": chi,
                "bound": bound,
                "ok": ok,
            }
        )
    _emit(
        {
            "class": args.cls,
            "trials": args.trials,
            "max_n": args.max_n,
            "seed": args.seed,
            "bound": _CHI_BOUND_FORMULAS[args.cls],
            "all_ok": all_ok,
            "results": results,
        }
    )
    return 0 if all_ok else 4


# ---------------------------------------------------------------------------
# parser


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="tcfree",
        description="Recognition, decomposition, and exact solving for "
        "graph classes excluding Truemper configurations.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rec = sub.add_parser("recognize", help="test class membership")
    p_rec.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    p_rec.add_argument("graph", help="graph file in the text format, or - for stdin")
    p_rec.set_defaults(func=cmd_recognize)

    p_solve = sub.add_parser("solve", help="solve an optimization problem exactly")
    p_solve.add_argument("--class", dest="cls", choices=CLASS_IDS, required=True)
    p_solve.add_argument("--problem", choices=("mwc", "mwss", "color"), required=True)
    p_solve.add_argument("graph")
    p_solve.set_defaults(func=cmd_solve)

    p_dec = sub.add_parser("decompose", help="print the clique-cutset decomposition tree")
    p_dec.add_argument("graph")
    p_dec.set_defaults(func=cmd_decompose)

    p_gen = sub.add_parser("generate", help="generate a graph in the text format")
    p_gen.add_argument(
        "--kind",
        choices=("ring", "hyperhole", "hyperantihole", "chordal", "member"),
        required=True,
    )
    p_gen.add_argument("--k", type=int, help="number of parts")
    p_gen.add_argument("--sizes", help="comma-separated part sizes")
    p_gen.add_argument("--n", type=int, help="vertex count for chordal graphs")
    p_gen.add_argument("--density", type=float, default=0.5)
    p_gen.add_argument("--class", dest="cls", choices=CLASS_IDS)
    p_gen.add_argument("--pieces", type=int, default=2)
    p_gen.add_argument("--max-n", type=int, default=14)
    p_gen.add_argument("--seed", type=int, default=0)
    p_gen.set_defaults(func=cmd_generate)

    p_chi = sub.add_parser(
        "verify-chi", help="sample class members and check the chromatic bound"
    )
    p_chi.add_argument(
        "--class",
        dest="cls",
        choices=CLASS_IDS + ("hyperantihole7",),
        required=True,
    )
    p_chi.add_argument("--trials", type=int, default=50)
    p_chi.add_argument("--max-n", type=int, default=12)
    p_chi.add_argument("--seed", type=int, default=0)
    p_chi.set_defaults(func=cmd_verify_chi)

    return parser


def main(argv: Optional[list[str]] = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return exc.code if isinstance(exc.code, int) else 2
    try:
        return args.func(args)
    except CliError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
