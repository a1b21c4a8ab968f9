"""Convexity over all simple paths, answered through the block-cut tree.

The interval of a vertex set S is S plus every vertex lying on some simple
path whose two distinct endpoints are in S.  A set is convex when its
interval adds nothing.  The interval turns out to be a union of blocks:
prune leaf blocks of the block-cut tree whose only S-vertex is their
connecting cut vertex, and what survives covers the interval exactly.
One decomposition plus one pruning pass answers each query in O(n + m).
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .blocks import BlockCutTree, decompose, end_block_stats
from .graph import Graph, GraphError, VertexSet, check_vertex_set


class SetTooSmall(GraphError):
    """Pruning needs at least two seed vertices."""


class TrivialGraph(GraphError):
    """Raised in strict mode for queries undefined on the one-vertex graph."""


@dataclass(frozen=True)
class PrunedTree:
    """Subtree of the block-cut tree left after pruning against a seed set.

    surviving_blocks are block ids in ascending order; tree_adjacency maps
    each surviving block to the surviving cut vertices inside it, which
    determines the bipartite subtree.  Always a connected subtree with at
    least one block node.
    """

    surviving_blocks: tuple[int, ...]
    surviving_cut_vertices: frozenset[int]
    tree_adjacency: dict[int, tuple[int, ...]] = field(hash=False)


def is_convex(g: Graph, s: VertexSet) -> bool:
    """True iff no simple path between two distinct members of s leaves s.

    Checked structurally: s is convex exactly when s is the whole vertex
    set, s is empty, or every connected component of the graph minus s is
    adjacent to exactly one vertex of s.  O(n + m).
    """
    sset = check_vertex_set(g, s)
    if not sset or len(sset) == g.n:
        return True
    n = g.n
    adj = g.adj
    in_s = bytearray(n)
    for v in sset:
        in_s[v] = 1
    seen = bytearray(n)
    stack: list[int] = []
    for start in range(n):
        if in_s[start] or seen[start]:
            continue
        seen[start] = 1
        stack.append(start)
        contact = -1  # the single allowed neighbor of this component inside s
        while stack:
            x = stack.pop()
            for w in adj[x]:
                if in_s[w]:
                    if contact < 0:
                        contact = w
                    elif w != contact:
                        return False
                elif not seen[w]:
                    seen[w] = 1
                    stack.append(w)
    return True


def prune_tree(g: Graph, tree: BlockCutTree, s: VertexSet) -> PrunedTree:
    """Strip leaf blocks holding no seed vertex besides their attaching cut vertex.

    Repeats until no leaf qualifies.  A cut-vertex node left with a single
    block neighbor is dropped as well; its vertex still belongs to that
    block.  Runs in O(n) after decomposition via a worklist of current
    leaves.  Raises SetTooSmall when |s| < 2.
    """
    sset = check_vertex_set(g, s)
    if len(sset) < 2:
        raise SetTooSmall(f"need at least 2 vertices to prune, got {len(sset)}")
    nb = len(tree.blocks)
    s_in = [0] * nb  # seed vertices per block, cut vertices counted in every home
    for v in sset:
        for j in tree.blocks_of(v):
            s_in[j] += 1
    deg = [len(c) for c in tree.block_cuts]
    cut_deg = {z: len(js) for z, js in tree.cut_blocks.items()}
    alive_block = bytearray([1]) * nb
    alive_cut = bytearray(g.n)
    for z in tree.cut_blocks:
        alive_cut[z] = 1
    n_alive = nb
    work = [j for j in range(nb) if deg[j] <= 1]
    while work:
        j = work.pop()
        if not alive_block[j] or deg[j] != 1 or n_alive == 1:
            continue
        z = -1
        for c in tree.block_cuts[j]:
            if alive_cut[c]:
                z = c
                break
        if s_in[j] != (1 if z in sset else 0):
            continue  # a seed vertex other than z lives here; the leaf stays
        alive_block[j] = 0
        n_alive -= 1
        cut_deg[z] -= 1
        if cut_deg[z] == 1:
            # z dangles: detach the node, its vertex survives in the last block
            alive_cut[z] = 0
            for jj in tree.cut_blocks[z]:
                if alive_block[jj]:
                    deg[jj] -= 1
                    if deg[jj] <= 1:
                        work.append(jj)
                    break
    surviving = tuple(j for j in range(nb) if alive_block[j])
    return PrunedTree(
        surviving_blocks=surviving,
        surviving_cut_vertices=frozenset(z for z in tree.cut_blocks if alive_cut[z]),
        tree_adjacency={
            j: tuple(z for z in tree.block_cuts[j] if alive_cut[z]) for j in surviving
        },
    )


def interval(g: Graph, s: VertexSet, *, tree: BlockCutTree | None = None) -> set[int]:
    """All vertices on simple paths between two distinct members of s, plus s.

    Union of the surviving blocks after pruning; sets of size at most one
    come back unchanged since a path needs two distinct endpoints.
    """
    sset = check_vertex_set(g, s)
    if len(sset) <= 1:
        return sset
    t = tree if tree is not None else decompose(g)
    pruned = prune_tree(g, t, sset)
    out: set[int] = set()
    for j in pruned.surviving_blocks:
        out.update(t.blocks[j])
    return out


def hull(g: Graph, s: VertexSet, *, tree: BlockCutTree | None = None) -> set[int]:
    """Smallest convex superset of s.

    One interval application already lands on a convex set, so this equals
    interval(g, s); kept as its own entry point for callers thinking in
    terms of the fixpoint.
    """
    return interval(g, s, tree=tree)


def convexity_number(
    g: Graph, *, tree: BlockCutTree | None = None, strict: bool = False
) -> tuple[int, frozenset[int]]:
    """Size of a largest convex set that is not all of V, with one witness.

    1 for two-vertex or 2-connected graphs (any singleton works); otherwise
    n - b + 1 where b is the smallest end-block size, witnessed by deleting
    a minimum end block except its cut vertex.  The one-vertex graph gets
    0 with the empty witness (largest convex set besides V is empty); pass
    strict=True to get TrivialGraph instead.  Ties break toward smallest
    vertex indices and then smallest block id.
    """
    n = g.n
    if n == 1:
        if strict:
            raise TrivialGraph("convexity number of a one-vertex graph is a convention")
        return 0, frozenset()
    t = tree if tree is not None else decompose(g)
    if n == 2 or len(t.blocks) == 1:
        return 1, frozenset({0})
    stats = end_block_stats(t)
    bid = min(stats.end_blocks, key=lambda j: (len(t.blocks[j]), j))
    z = t.block_cuts[bid][0]
    witness = set(range(n)) - set(t.blocks[bid])
    witness.add(z)
    return n - len(t.blocks[bid]) + 1, frozenset(witness)


def interval_number(
    g: Graph, *, tree: BlockCutTree | None = None
) -> tuple[int, frozenset[int]]:
    """Size of a smallest set whose interval is all of V, with one witness.

    1 for the one-vertex graph, 2 for two-vertex or 2-connected graphs,
    otherwise the number of end blocks: a smallest spanning seed takes one
    non-cut vertex from each end block, and we pick the smallest index in
    each.
    """
    n = g.n
    if n == 1:
        return 1, frozenset({0})
    t = tree if tree is not None else decompose(g)
    if n == 2 or len(t.blocks) == 1:
        return 2, frozenset({0, 1})
    stats = end_block_stats(t)
    witness = set()
    for j in stats.end_blocks:
        cut = t.block_cuts[j][0]
        for v in t.blocks[j]:
            if v != cut:
                witness.add(v)
                break
    return stats.eb, frozenset(witness)


def hull_number(
    g: Graph, *, tree: BlockCutTree | None = None
) -> tuple[int, frozenset[int]]:
    """Size of a smallest set whose hull is all of V; coincides with interval_number."""
    return interval_number(g, tree=tree)


def geodetic_iteration_number(g: Graph) -> int:
    """Interval applications needed to reach a hull, worst case over all seeds.

    0 when every subset is already convex, which happens exactly for one or
    two vertices; 1 otherwise, since any path u-x-w makes {u, w} non-convex
    while a single interval step is always a fixpoint.
    """
    return 0 if g.n <= 2 else 1


@dataclass(frozen=True)
class ConvexityReport:
    """The four invariants of one graph plus verifiable witnesses.

    c: convexity number, i: interval number, h: hull number, gin: geodetic
    iteration number.  h always equals i and gin is 0 or 1.  trivial marks
    the one-vertex graph, where c = 0 is a convention of this library.
    """

    c: int
    i: int
    h: int
    gin: int
    max_convex_witness: frozenset[int]
    min_interval_witness: frozenset[int]
    trivial: bool = False


def numbers(
    g: Graph, *, tree: BlockCutTree | None = None, strict: bool = False
) -> ConvexityReport:
    """All four numbers from a single decomposition."""
    t = tree if tree is not None else decompose(g)
    c, cw = convexity_number(g, tree=t, strict=strict)
    i, iw = interval_number(g, tree=t)
    return ConvexityReport(
        c=c,
        i=i,
        h=i,
        gin=geodetic_iteration_number(g),
        max_convex_witness=cw,
        min_interval_witness=iw,
        trivial=g.n == 1,
    )
