"""Command-line front end: edge-list files in, JSON on stdout.

Every query prints one JSON object with a fixed key set: command,
graph_summary {n, m, blocks, cut_vertices, eb, b}, result, elapsed_micros.
Vertex sets are rendered as arrays of original labels in sorted order.
elapsed_micros covers the algorithm only, not file parsing.  Exit codes:
0 success, 1 validation failure or oracle disagreement, 2 usage error.
"""

from __future__ import annotations

import argparse
import json
import sys
import time

from .blocks import decompose, end_block_stats, to_dot
from .convexity import interval, is_convex, numbers
from .generators import FAMILIES, GenSpec, generate
from .graph import Graph, GraphError, parse_edge_list, to_edge_list_text
from .oracle import (
    BudgetExceeded,
    OracleBudget,
    hull_brute,
    interval_brute,
    is_convex_brute,
    numbers_brute,
)


def _load_graph(path: str) -> Graph:
    with open(path, "rb") as fh:
        return parse_edge_list(fh.read())


def _parse_set(g: Graph, args) -> set:
    if args.set_inline is not None:
        names = [tok.strip() for tok in args.set_inline.split(",") if tok.strip()]
    else:
        with open(args.set_file, "r", encoding="utf-8") as fh:
            names = [ln.strip() for ln in fh if ln.strip() and not ln.lstrip().startswith("#")]
    return {g.index(nm) for nm in names}


def _labels(g: Graph, vs) -> list:
    return sorted(g.label(v) for v in vs)


def _emit(command: str, g: Graph, tree, result, elapsed_ns: int) -> None:
    stats = end_block_stats(tree)
    payload = {
        "command": command,
        "graph_summary": {
            "n": g.n,
            "m": g.m,
            "blocks": len(tree.blocks),
            "cut_vertices": len(tree.cut_vertices),
            "eb": stats.eb,
            "b": stats.b,
        },
        "result": result,
        "elapsed_micros": elapsed_ns // 1000,
    }
    print(json.dumps(payload, indent=2))


def _cmd_convex(args) -> int:
    g = _load_graph(args.graph)
    s = _parse_set(g, args)
    t0 = time.perf_counter_ns()
    tree = decompose(g)
    if args.oracle:
        ok = is_convex_brute(g, s)
    else:
        ok = is_convex(g, s)
    t1 = time.perf_counter_ns()
    _emit("convex", g, tree, ok, t1 - t0)
    return 0


def _cmd_interval(args, command: str) -> int:
    g = _load_graph(args.graph)
    s = _parse_set(g, args)
    t0 = time.perf_counter_ns()
    tree = decompose(g)
    if args.oracle:
        out = hull_brute(g, s)[0] if command == "hull" else interval_brute(g, s)
    else:
        out = interval(g, s, tree=tree)
    t1 = time.perf_counter_ns()
    _emit(command, g, tree, _labels(g, out), t1 - t0)
    return 0


def _cmd_numbers(args) -> int:
    g = _load_graph(args.graph)
    t0 = time.perf_counter_ns()
    tree = decompose(g)
    rep = numbers_brute(g) if args.oracle else numbers(g, tree=tree, strict=args.strict)
    t1 = time.perf_counter_ns()
    result = {
        "c": rep.c,
        "i": rep.i,
        "h": rep.h,
        "gin": rep.gin,
        "max_convex_witness": _labels(g, rep.max_convex_witness),
        "min_interval_witness": _labels(g, rep.min_interval_witness),
        "trivial": rep.trivial,
    }
    _emit("numbers", g, tree, result, t1 - t0)
    return 0


def _cmd_blocks(args) -> int:
    g = _load_graph(args.graph)
    t0 = time.perf_counter_ns()
    tree = decompose(g)
    stats = end_block_stats(tree)
    t1 = time.perf_counter_ns()
    result = {
        "blocks": [_labels(g, bs) for bs in tree.blocks],
        "cut_vertices": _labels(g, tree.cut_vertices),
        "end_blocks": list(stats.end_blocks),
        "eb": stats.eb,
        "b": stats.b,
    }
    _emit("blocks", g, tree, result, t1 - t0)
    if args.dot:
        with open(args.dot, "w", encoding="utf-8") as fh:
            fh.write(to_dot(tree, g))
    return 0


def _cmd_gen(args) -> int:
    extra = {}
    if args.p is not None:
        extra["p"] = args.p
    if args.sizes is not None:
        extra["sizes"] = [int(tok) for tok in args.sizes.split(",") if tok.strip()]
    g = generate(GenSpec(family=args.family, n=args.n, seed=args.seed, extra=extra))
    sys.stdout.write(to_edge_list_text(g))
    return 0


def _cmd_oracle_check(args) -> int:
    g = _load_graph(args.graph)
    budget = OracleBudget(max_n=args.max_n)
    if g.n > budget.max_n:
        raise BudgetExceeded(f"{g.n} vertices exceed the check budget of {budget.max_n}")
    t0 = time.perf_counter_ns()
    tree = decompose(g)
    n = g.n
    mismatch = None
    for mask in range(1 << n):
        sub = {v for v in range(n) if mask >> v & 1}
        fast = interval(g, sub, tree=tree)
        slow = interval_brute(g, sub, budget)
        if fast != slow:
            mismatch = {
                "set": _labels(g, sub),
                "fast": _labels(g, fast),
                "oracle": _labels(g, slow),
            }
            break
    rep_fast = numbers(g, tree=tree)
    rep_slow = numbers_brute(g, budget)
    numbers_agree = (rep_fast.c, rep_fast.i, rep_fast.h, rep_fast.gin) == (
        rep_slow.c,
        rep_slow.i,
        rep_slow.h,
        rep_slow.gin,
    )
    t1 = time.perf_counter_ns()
    result = {
        "subsets": 1 << n,
        "interval_agree": mismatch is None,
        "numbers_agree": numbers_agree,
    }
    if mismatch is not None:
        result["mismatch"] = mismatch
    _emit("oracle-check", g, tree, result, t1 - t0)
    return 0 if mismatch is None and numbers_agree else 1


def _add_set_args(sub) -> None:
    grp = sub.add_mutually_exclusive_group(required=True)
    grp.add_argument("-s", dest="set_inline", metavar="a,b,c", help="vertex labels, comma separated")
    grp.add_argument("-S", dest="set_file", metavar="FILE", help="file with one vertex label per line")


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="allpath",
        description="Convexity queries over all simple paths of a connected graph.",
    )
    subs = parser.add_subparsers(dest="command", required=True)

    p = subs.add_parser("convex", help="is the set convex")
    p.add_argument("-g", "--graph", required=True, metavar="FILE")
    _add_set_args(p)
    p.add_argument("--oracle", action="store_true", help="answer by brute force (small graphs only)")
    p.set_defaults(func=_cmd_convex)

    for name, blurb in (("interval", "vertices on paths between set members"),
                        ("hull", "smallest convex superset")):
        p = subs.add_parser(name, help=blurb)
        p.add_argument("-g", "--graph", required=True, metavar="FILE")
        _add_set_args(p)
        p.add_argument("--oracle", action="store_true", help="answer by brute force (small graphs only)")
        p.set_defaults(func=lambda a, _nm=name: _cmd_interval(a, _nm))

    p = subs.add_parser("numbers", help="convexity, interval, hull, and iteration numbers")
    p.add_argument("-g", "--graph", required=True, metavar="FILE")
    p.add_argument("--oracle", action="store_true", help="answer by brute force (small graphs only)")
    p.add_argument("--strict", action="store_true", help="error on the one-vertex graph")
    p.set_defaults(func=_cmd_numbers)

    p = subs.add_parser("blocks", help="block-cut tree description")
    p.add_argument("-g", "--graph", required=True, metavar="FILE")
    p.add_argument("--dot", metavar="FILE", help="also write the tree in DOT format")
    p.set_defaults(func=_cmd_blocks)

    p = subs.add_parser("gen", help="emit a generated graph as an edge list")
    p.add_argument("--family", required=True, choices=FAMILIES)
    p.add_argument("-n", type=int, default=1, help="target vertex count")
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--p", type=float, default=None, help="edge probability (random_connected)")
    p.add_argument("--sizes", default=None, help="comma-separated block sizes (block_chain)")
    p.set_defaults(func=_cmd_gen)

    p = subs.add_parser("oracle-check", help="compare fast answers with brute force on all subsets")
    p.add_argument("-g", "--graph", required=True, metavar="FILE")
    p.add_argument("--max-n", type=int, default=12, help="budget for the brute-force side")
    p.set_defaults(func=_cmd_oracle_check)

    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return int(exc.code or 0)
    try:
        return args.func(args)
    except (GraphError, BudgetExceeded) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1
    except KeyError as exc:
        print(f"error: {exc.args[0]}", file=sys.stderr)
        return 1
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
