"""Shared fixtures: the 18-vertex worked example and slow reference algorithms.

The reference block decomposition below is deliberately quadratic and
structurally unrelated to the fast one (union-find over edges instead of a
low-link DFS) so the two can vouch for each other.
"""

import pytest

from allpath import Graph, parse_edge_list

# Seven blocks: two cut edges, a triangle, a 4-cycle, two 5-cycles, a triangle.
# Cut vertices b, f, l, w; five end blocks; smallest end block has 2 vertices.
SAMPLE18_TEXT = """\
a b
b c
c d
d b
b e
e g
g f
f b
f u
u v
v w
w l
l f
l h
h i
i j
j k
k l
w x
w y
y z
z w
"""


@pytest.fixture(scope="session")
def sample18() -> Graph:
    return parse_edge_list(SAMPLE18_TEXT)


def labelset(g: Graph, vs) -> frozenset:
    return frozenset(g.label(v) for v in vs)


def _components_without(g: Graph, removed: int) -> list[set]:
    seen = {removed}
    comps = []
    for start in range(g.n):
        if start in seen:
            continue
        comp = {start}
        seen.add(start)
        stack = [start]
        while stack:
            x = stack.pop()
            for w in g.adj[x]:
                if w not in seen:
                    seen.add(w)
                    comp.add(w)
                    stack.append(w)
        comps.append(comp)
    return comps


def reference_cut_vertices(g: Graph) -> set:
    """Cut vertices straight from the definition: removal disconnects."""
    if g.n <= 2:
        return set()
    return {v for v in range(g.n) if len(_components_without(g, v)) > 1}


def reference_blocks(g: Graph) -> set:
    """Blocks as vertex sets, via union-find over edges.

    Two edges at a shared vertex v belong to the same block exactly when
    their far endpoints stay connected after deleting v.
    """
    if g.n == 1:
        return {frozenset({0})}
    edges = list(g.edges())
    eid = {e: i for i, e in enumerate(edges)}

    parent = list(range(len(edges)))

    def find(x):
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    def union(a, b):
        ra, rb = find(a), find(b)
        if ra != rb:
            parent[ra] = rb

    def key(u, w):
        return (u, w) if u < w else (w, u)

    for v in range(g.n):
        comps = _components_without(g, v)
        comp_of = {}
        for idx, comp in enumerate(comps):
            for x in comp:
                comp_of[x] = idx
        by_comp = {}
        for w in g.adj[v]:
            by_comp.setdefault(comp_of[w], []).append(eid[key(v, w)])
        for group in by_comp.values():
            for other in group[1:]:
                union(group[0], other)

    groups = {}
    for e, i in eid.items():
        groups.setdefault(find(i), set()).update(e)
    return {frozenset(s) for s in groups.values()}
