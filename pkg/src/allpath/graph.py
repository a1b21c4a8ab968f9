"""Immutable simple connected undirected graphs with dense integer vertices."""

from __future__ import annotations

from collections.abc import Iterable, Set as AbstractSet

# A vertex set is any set of vertex indices in [0, n).
VertexSet = AbstractSet[int]


class GraphError(Exception):
    """Base class for graph construction and validation failures."""


class MalformedLine(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class DuplicateEdge(GraphError):
    pass


class Disconnected(GraphError):
    pass


class EmptyGraph(GraphError):
    pass


class Graph:
    """Simple, undirected, connected graph on vertices 0..n-1.

    ``adj[v]`` is the ascending list of neighbors of ``v``.  ``labels``, when
    present, maps each index back to the external name it carried in the
    input (indices are assigned in first-appearance order).

    Instances are frozen by convention: nothing in this package mutates a
    Graph after construction, so one Graph may be shared freely across
    threads and queries.
    """

    __slots__ = ("n", "m", "adj", "labels", "_index")

    def __init__(self, adj: list[list[int]], labels: tuple[str, ...] | None = None):
        self.n = len(adj)
        self.m = sum(len(a) for a in adj) // 2
        self.adj = adj
        self.labels = labels
        self._index = (
            {name: i for i, name in enumerate(labels)} if labels is not None else None
        )

    @classmethod
    def from_edges(
        cls,
        n: int,
        edges: Iterable[tuple[int, int]],
        labels: tuple[str, ...] | None = None,
        validate: bool = True,
    ) -> "Graph":
        """Build a graph on ``n`` vertices from an iterable of index pairs.

        With ``validate`` (the default) rejects self-loops, duplicate edges,
        out-of-range endpoints, and disconnected results.  Callers that
        construct provably valid edge lists may skip the checks.
        """
        if n < 1:
            raise EmptyGraph("a graph needs at least one vertex")
        if labels is not None and len(labels) != n:
            raise ValueError(f"{len(labels)} labels for {n} vertices")
        adj: list[list[int]] = [[] for _ in range(n)]
        if validate:
            seen: set[int] = set()
            for u, w in edges:
                if not (0 <= u < n and 0 <= w < n):
                    raise ValueError(f"edge ({u}, {w}) out of range for n={n}")
                if u == w:
                    raise SelfLoop(f"self-loop at vertex {u}")
                key = u * n + w if u < w else w * n + u
                if key in seen:
                    raise DuplicateEdge(f"duplicate edge ({u}, {w})")
                seen.add(key)
                adj[u].append(w)
                adj[w].append(u)
        else:
            for u, w in edges:
                adj[u].append(w)
                adj[w].append(u)
        for a in adj:
            a.sort()
        g = cls(adj, labels)
        if validate:
            _require_connected(g)
        return g

    def label(self, v: int) -> str:
        return self.labels[v] if self.labels is not None else str(v)

    def index(self, name: str) -> int:
        """Vertex index for an external label; KeyError when unknown."""
        if self._index is not None:
            try:
                return self._index[name]
            except KeyError:
                raise KeyError(f"unknown vertex label {name!r}") from None
        try:
            v = int(name)
        except ValueError:
            raise KeyError(f"unknown vertex label {name!r}") from None
        if not 0 <= v < self.n:
            raise KeyError(f"unknown vertex label {name!r}")
        return v

    def edges(self):
        """Yield each edge once as an index pair (u, w) with u < w."""
        for u, au in enumerate(self.adj):
            for w in au:
                if w > u:
                    yield u, w

    def degree(self, v: int) -> int:
        return len(self.adj[v])

    def __repr__(self) -> str:
        return f"Graph(n={self.n}, m={self.m})"


def parse_edge_list(text: str | bytes) -> Graph:
    """Parse edge-list text into a validated Graph.

    One edge per line: two whitespace-separated labels.  A line with a
    single label declares an isolated vertex, which is only useful for the
    one-vertex graph since the result must be connected.  Blank lines and
    lines starting with '#' are ignored.  Labels become dense indices in
    first-appearance order.
    """
    if isinstance(text, bytes):
        text = text.decode("utf-8")
    index: dict[str, int] = {}
    names: list[str] = []
    edges: list[tuple[int, int]] = []
    seen: set[tuple[int, int]] = set()

    def intern(label: str) -> int:
        i = index.get(label)
        if i is None:
            i = len(names)
            index[label] = i
            names.append(label)
        return i

    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        parts = line.split()
        if len(parts) == 1:
            intern(parts[0])
            continue
        if len(parts) != 2:
            raise MalformedLine(f"line {lineno}: expected two labels, got {line!r}")
        a, b = parts
        if a == b:
            raise SelfLoop(f"line {lineno}: self-loop at {a!r}")
        u, w = intern(a), intern(b)
        key = (u, w) if u < w else (w, u)
        if key in seen:
            raise DuplicateEdge(f"line {lineno}: duplicate edge {a!r} {b!r}")
        seen.add(key)
        edges.append(key)

    if not names:
        raise EmptyGraph("no vertices in input")
    g = Graph.from_edges(len(names), edges, labels=tuple(names), validate=False)
    _require_connected(g)
    return g


def to_edge_list_text(g: Graph) -> str:
    """Serialize a graph to edge-list text; inverse of parse_edge_list.

    Deterministic: edges in ascending (u, w) index order.  The one-vertex
    graph serializes as a single isolated-vertex line.
    """
    if g.n == 1:
        return g.label(0) + "\n"
    return "".join(f"{g.label(u)} {g.label(w)}\n" for u, w in g.edges())


def _require_connected(g: Graph) -> None:
    reached = _reach(g.adj, g.n, 0)
    if len(reached) != g.n:
        missing = next(v for v in range(g.n) if v not in reached)
        raise Disconnected(
            f"vertex {g.label(missing)!r} is unreachable from {g.label(0)!r}"
        )


def _reach(adj, n: int, start: int) -> set[int]:
    seen = {start}
    stack = [start]
    while stack:
        u = stack.pop()
        for w in adj[u]:
            if w not in seen:
                seen.add(w)
                stack.append(w)
    return seen


def check_vertex_set(g: Graph, s: VertexSet) -> set[int]:
    """Validate s against g and return it as a plain set of indices."""
    out = set(s)
    for v in out:
        if not isinstance(v, int) or not 0 <= v < g.n:
            raise ValueError(f"vertex {v!r} out of range for n={g.n}")
    return out


def delete_vertices(g: Graph, s: VertexSet) -> list[set[int]]:
    """Connected components of the subgraph induced on V minus s.

    Components are returned as vertex sets ordered by smallest member;
    the list is empty when s covers every vertex.
    """
    s_set = check_vertex_set(g, s)
    n = g.n
    adj = g.adj
    blocked = bytearray(n)
    for v in s_set:
        blocked[v] = 1
    seen = bytearray(n)
    components: list[set[int]] = []
    for v0 in range(n):
        if blocked[v0] or seen[v0]:
            continue
        comp = {v0}
        seen[v0] = 1
        stack = [v0]
        while stack:
            u = stack.pop()
            for w in adj[u]:
                if not blocked[w] and not seen[w]:
                    seen[w] = 1
                    comp.add(w)
                    stack.append(w)
        components.append(comp)
    return components


def neighbors_into(g: Graph, x: VertexSet, y: VertexSet) -> set[int]:
    """Members of y adjacent to at least one member of x."""
    x_set = check_vertex_set(g, x)
    y_set = check_vertex_set(g, y)
    adj = g.adj
    return {w for u in x_set for w in adj[u] if w in y_set}


def validate_graph(g: Graph) -> None:
    """Re-check every structural invariant; raises GraphError on violation.

    Intended for tests and for auditing graphs built with validate=False.
    """
    if g.n < 1:
        raise EmptyGraph("a graph needs at least one vertex")
    pairs = set()
    deg_total = 0
    for u, au in enumerate(g.adj):
        deg_total += len(au)
        if list(au) != sorted(au):
            raise GraphError(f"adjacency of vertex {u} is not sorted")
        for w in au:
            if not 0 <= w < g.n:
                raise GraphError(f"neighbor {w} of {u} out of range")
            if w == u:
                raise SelfLoop(f"self-loop at vertex {u}")
            if (u, w) in pairs:
                raise DuplicateEdge(f"duplicate edge ({u}, {w})")
            pairs.add((u, w))
    for u, w in pairs:
        if (w, u) not in pairs:
            raise GraphError(f"edge ({u}, {w}) has no mirror entry")
    if deg_total != 2 * g.m:
        raise GraphError("degree sum does not equal 2m")
    _require_connected(g)
