"""Brute-force ground truth by explicit enumeration of simple paths.

Everything here works straight from the definitions, with no block-cut
machinery, so it can vouch for the fast path on small graphs.  Exponential
by nature; a budget guards against accidental large inputs.
"""

from __future__ import annotations

from dataclasses import dataclass

from .convexity import ConvexityReport
from .graph import Graph, VertexSet, check_vertex_set


class BudgetExceeded(Exception):
    """The graph or the path enumeration is too large for brute force."""


@dataclass(frozen=True)
class OracleBudget:
    """Hard limits for the exhaustive routines.

    max_n caps the vertex count (default 12, override explicitly at your
    own risk); max_paths optionally caps the number of enumerated simple
    paths across one interval computation.
    """

    max_n: int = 12
    max_paths: int | None = None


DEFAULT_BUDGET = OracleBudget()


def _check_budget(g: Graph, budget: OracleBudget):
    if g.n > budget.max_n:
        raise BudgetExceeded(f"{g.n} vertices exceed the oracle budget of {budget.max_n}")


def interval_brute(g: Graph, s: VertexSet, budget: OracleBudget = DEFAULT_BUDGET) -> set[int]:
    """s plus every vertex on some simple path between two distinct members of s.

    Depth-first enumeration of simple paths out of each seed vertex; every
    time the path tip hits a larger-numbered seed the whole path is marked
    covered.  Stops early once all n vertices are covered.
    """
    _check_budget(g, budget)
    sset = check_vertex_set(g, s)
    if len(sset) <= 1:
        return sset
    n = g.n
    adj = g.adj
    covered = bytearray(n)
    for v in sset:
        covered[v] = 1
    n_covered = len(sset)
    paths_seen = 0
    for u in sorted(sset):
        if n_covered == n:
            break
        on_path = bytearray(n)
        on_path[u] = 1
        path = [u]
        nxt = [0]  # per depth, next adjacency offset to try
        while path:
            x = path[-1]
            ax = adj[x]
            i = nxt[-1]
            if i == len(ax):
                path.pop()
                nxt.pop()
                on_path[x] = 0
                continue
            nxt[-1] = i + 1
            w = ax[i]
            if on_path[w]:
                continue
            paths_seen += 1
            if budget.max_paths is not None and paths_seen > budget.max_paths:
                raise BudgetExceeded(f"more than {budget.max_paths} simple paths enumerated")
            if w > u and w in sset:
                # u..w is a path between two seeds: everything on it is in the interval
                for y in path:
                    if not covered[y]:
                        covered[y] = 1
                        n_covered += 1
                if n_covered == n:
                    path.clear()
                    break
            # keep extending even through a seed; a longer path may cover more
            on_path[w] = 1
            path.append(w)
            nxt.append(0)
    return {v for v in range(n) if covered[v]}


def hull_brute(
    g: Graph, s: VertexSet, budget: OracleBudget = DEFAULT_BUDGET
) -> tuple[set[int], int]:
    """Iterate interval_brute to a fixpoint; returns (hull, growing steps taken)."""
    cur = check_vertex_set(g, s)
    steps = 0
    while True:
        grown = interval_brute(g, cur, budget)
        if grown == cur:
            return cur, steps
        cur = grown
        steps += 1


def is_convex_brute(g: Graph, s: VertexSet, budget: OracleBudget = DEFAULT_BUDGET) -> bool:
    sset = check_vertex_set(g, s)
    return interval_brute(g, sset, budget) == sset


def numbers_brute(g: Graph, budget: OracleBudget = DEFAULT_BUDGET) -> ConvexityReport:
    """All four numbers by scanning every subset of vertices.

    Subsets are visited in (size, bitmask) order so the reported witnesses
    are the deterministic smallest ones.  gin is the largest number of
    growing interval steps needed by any subset.
    """
    _check_budget(g, budget)
    n = g.n
    full = set(range(n))
    full_mask = (1 << n) - 1
    masks = sorted(range(1 << n), key=lambda mk: (bin(mk).count("1"), mk))
    c_best = -1
    c_wit: set[int] = set()
    i_best = -1
    i_wit: set[int] = set()
    h_best = -1
    gin = 0
    for mask in masks:
        sub = {v for v in range(n) if mask >> v & 1}
        one_step = interval_brute(g, sub, budget)
        grown = one_step
        steps = 0
        if grown != sub:
            steps = 1
            while True:
                again = interval_brute(g, grown, budget)
                if again == grown:
                    break
                grown = again
                steps += 1
        if steps > gin:
            gin = steps
        if steps == 0 and mask != full_mask and len(sub) > c_best:
            c_best = len(sub)
            c_wit = sub
        if i_best < 0 and one_step == full:
            i_best = len(sub)
            i_wit = sub
        if h_best < 0 and grown == full:
            h_best = len(sub)
    return ConvexityReport(
        c=c_best,
        i=i_best,
        h=h_best,
        gin=gin,
        max_convex_witness=frozenset(c_wit),
        min_interval_witness=frozenset(i_wit),
        trivial=n == 1,
    )
