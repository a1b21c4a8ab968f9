"""Biconnected components, cut vertices, and the block-cut tree.

A block is a cut edge or a maximal 2-connected subgraph; blocks partition
the edges.  The block-cut tree is the bipartite tree whose nodes are the
blocks and the cut vertices, with an edge whenever the cut vertex belongs
to the block.  Everything here runs in O(n + m) with an iterative DFS, so
graphs in the 10^5..10^6 vertex range are fine.
"""

from __future__ import annotations

from dataclasses import dataclass

from .graph import Graph


@dataclass(frozen=True)
class BlockCutTree:
    """Block-cut tree of a connected graph.

    blocks       -- per block, the ascending tuple of its vertices
    cut_vertices -- vertices whose removal disconnects the graph
    block_cuts   -- per block, the ascending tuple of cut vertices inside it
    cut_blocks   -- per cut vertex, the ascending tuple of block ids holding it
    home_block   -- per vertex, its unique block id (meaningless for cut vertices)

    Blocks are numbered by DFS discovery order of their vertices, which is
    deterministic because adjacency lists are sorted.  The one-vertex graph
    gets a single vertex-only block so the tree is never empty.
    """

    n: int
    blocks: tuple[tuple[int, ...], ...]
    cut_vertices: frozenset[int]
    block_cuts: tuple[tuple[int, ...], ...]
    cut_blocks: dict[int, tuple[int, ...]]
    home_block: tuple[int, ...]

    def blocks_of(self, v: int) -> tuple[int, ...]:
        """Ids of the blocks containing v; length >= 2 exactly for cut vertices."""
        if v in self.cut_vertices:
            return self.cut_blocks[v]
        return (self.home_block[v],)

    @property
    def node_count(self) -> int:
        return len(self.blocks) + len(self.cut_vertices)

    @property
    def edge_count(self) -> int:
        return sum(len(c) for c in self.block_cuts)

    def leaf_block_ids(self) -> tuple[int, ...]:
        """Blocks incident to at most one cut vertex (all of them, if only one block)."""
        return tuple(j for j, cuts in enumerate(self.block_cuts) if len(cuts) <= 1)


@dataclass(frozen=True)
class EndBlockStats:
    """Leaf blocks of the tree with their count and minimum size.

    For a tree with a single block node, that block is reported with eb = 1
    and b = n.  Callers implementing the piecewise formulas must branch on
    2-connectivity before consulting eb or b.
    """

    end_blocks: tuple[int, ...]
    b: int
    eb: int


def decompose(g: Graph) -> BlockCutTree:
    """Block-cut tree of g via one iterative low-link DFS, O(n + m)."""
    n = g.n
    if n == 1:
        return BlockCutTree(
            n=1,
            blocks=((0,),),
            cut_vertices=frozenset(),
            block_cuts=((),),
            cut_blocks={},
            home_block=(0,),
        )
    adj = g.adj
    disc = [0] * n  # 0 means unvisited
    low = [0] * n
    is_cut = bytearray(n)
    estack: list[int] = []  # edges encoded as u * n + w, each pushed once
    raw_blocks: list[set[int]] = []
    timer = 1
    disc[0] = low[0] = 1
    # frame: [vertex, parent, next adjacency offset]
    frames: list[list[int]] = [[0, -1, 0]]
    root_children = 0
    while frames:
        fr = frames[-1]
        u = fr[0]
        i = fr[2]
        au = adj[u]
        du = disc[u]
        descended = False
        while i < len(au):
            w = au[i]
            i += 1
            dw = disc[w]
            if dw == 0:
                fr[2] = i
                timer += 1
                disc[w] = low[w] = timer
                estack.append(u * n + w)
                frames.append([w, u, 0])
                descended = True
                break
            if dw < du and w != fr[1]:
                estack.append(u * n + w)
                if dw < low[u]:
                    low[u] = dw
        if descended:
            continue
        frames.pop()
        if not frames:
            break
        p = frames[-1][0]
        lu = low[u]
        if lu < low[p]:
            low[p] = lu
        if lu >= disc[p]:
            # the subtree under tree edge (p, u) closes one block
            if p == 0:
                root_children += 1
            else:
                is_cut[p] = 1
            key = p * n + u
            verts = {p, u}
            while True:
                e = estack.pop()
                if e == key:
                    break
                verts.add(e // n)
                verts.add(e % n)
            raw_blocks.append(verts)
    if root_children >= 2:
        is_cut[0] = 1
    if estack:
        raise AssertionError("edge stack not drained; graph invariants violated")

    def block_key(verts: set[int]) -> tuple[int, int]:
        a = b = n + 2
        for v in verts:
            d = disc[v]
            if d < a:
                a, b = d, a
            elif d < b:
                b = d
        return a, b

    raw_blocks.sort(key=block_key)
    blocks = tuple(tuple(sorted(verts)) for verts in raw_blocks)

    home = [0] * n
    cut_block_lists: dict[int, list[int]] = {}
    block_cuts: list[tuple[int, ...]] = []
    for j, bs in enumerate(blocks):
        bc = []
        for v in bs:
            if is_cut[v]:
                bc.append(v)
                cut_block_lists.setdefault(v, []).append(j)
            else:
                home[v] = j
        block_cuts.append(tuple(bc))
    return BlockCutTree(
        n=n,
        blocks=blocks,
        cut_vertices=frozenset(cut_block_lists),
        block_cuts=tuple(block_cuts),
        cut_blocks={z: tuple(js) for z, js in cut_block_lists.items()},
        home_block=tuple(home),
    )


def end_block_stats(t: BlockCutTree) -> EndBlockStats:
    leaves = t.leaf_block_ids()
    return EndBlockStats(
        end_blocks=leaves,
        b=min(len(t.blocks[j]) for j in leaves),
        eb=len(leaves),
    )


def is_two_connected(g: Graph, *, tree: BlockCutTree | None = None) -> bool:
    """True iff n >= 3 and g has no cut vertex (single-block tree)."""
    t = tree if tree is not None else decompose(g)
    return g.n >= 3 and len(t.blocks) == 1


def to_dot(t: BlockCutTree, g: Graph) -> str:
    """Render the block-cut tree in DOT: block nodes as boxes, cut vertices as circles."""

    def esc(s: str) -> str:
        return s.replace("\\", "\\\\").replace('"', '\\"')

    lines = ["graph blockcut {"]
    for j, bs in enumerate(t.blocks):
        label = "{" + ",".join(sorted(esc(g.label(v)) for v in bs)) + "}"
        lines.append(f'  b{j} [shape=box, label="{label}"];')
    for z in sorted(t.cut_vertices):
        lines.append(f'  c{z} [shape=circle, label="{esc(g.label(z))}"];')
    for z in sorted(t.cut_vertices):
        for j in t.cut_blocks[z]:
            lines.append(f"  b{j} -- c{z};")
    lines.append("}")
    return "\n".join(lines) + "\n"
