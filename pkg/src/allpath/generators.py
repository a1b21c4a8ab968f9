"""Seeded graph generators for tests and benchmarks.

Randomness comes from a local SplitMix64 implementation (the published
64-bit mixing generator, constants 0x9E3779B97F4A7C15, 0xBF58476D1CE4E5B9,
0x94D049BB133111EB) so a port to another language reproduces the exact
same graphs from the same seed.  No platform randomness is involved.
"""

from __future__ import annotations

import heapq
from dataclasses import dataclass, field

from .graph import Graph, GraphError

_MASK64 = (1 << 64) - 1

FAMILIES = ("tree", "cycle", "complete", "cactus", "random_connected", "block_chain")


class InvalidSpec(GraphError):
    """Unknown family or family parameters out of range."""


class SplitMix64:
    """64-bit SplitMix generator; one next() per draw, state advances by the golden gamma."""

    __slots__ = ("state",)

    def __init__(self, seed: int):
        self.state = seed & _MASK64

    def next(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK64
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK64
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK64
        return z ^ (z >> 31)

    def below(self, bound: int) -> int:
        # modulo draw; the bias at these bounds is far below anything tests can see
        return self.next() % bound


@dataclass(frozen=True)
class GenSpec:
    """What to generate: family name, target size, seed, family-specific extras.

    extra keys: "p" (edge probability, random_connected), "sizes" (block
    sizes along the chain, block_chain; n is then derived, not read).
    """

    family: str
    n: int = 1
    seed: int = 0
    extra: dict = field(default_factory=dict)


def _prufer_tree(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    if n == 1:
        return []
    if n == 2:
        return [(0, 1)]
    seq = [rng.below(n) for _ in range(n - 2)]
    deg = [1] * n
    for x in seq:
        deg[x] += 1
    leaves = [v for v in range(n) if deg[v] == 1]
    heapq.heapify(leaves)
    edges = []
    for x in seq:
        v = heapq.heappop(leaves)
        edges.append((v, x))
        deg[x] -= 1
        if deg[x] == 1:
            heapq.heappush(leaves, x)
    a = heapq.heappop(leaves)
    b = heapq.heappop(leaves)
    edges.append((a, b))
    return edges


def _cactus(n: int, rng: SplitMix64) -> list[tuple[int, int]]:
    """Tree of small cycles and pendant edges; every edge is in at most one cycle."""
    edges = []
    cur = 1
    while cur < n:
        a = rng.below(cur)
        remaining = n - cur
        if remaining < 2 or rng.below(4) == 0:
            edges.append((a, cur))
            cur += 1
            continue
        size = min(3 + rng.below(4), remaining + 1)
        ring = list(range(cur, cur + size - 1))
        edges.append((a, ring[0]))
        for i in range(len(ring) - 1):
            edges.append((ring[i], ring[i + 1]))
        edges.append((ring[-1], a))
        cur += size - 1
    return edges


def _random_connected(n: int, p: float, rng: SplitMix64) -> list[tuple[int, int]]:
    edges = _prufer_tree(n, rng)
    have = {u * n + w for u, w in edges} | {w * n + u for u, w in edges}
    threshold = int(p * 2**64)
    for u in range(n):
        for w in range(u + 1, n):
            if u * n + w in have:
                continue
            if rng.next() < threshold:
                edges.append((u, w))
    return edges


def _block_chain(sizes) -> tuple[int, list[tuple[int, int]]]:
    if not sizes or any(int(s) != s or s < 2 for s in sizes):
        raise InvalidSpec("block_chain needs a nonempty list of integer sizes >= 2")
    edges = []
    start = 0
    for s in sizes:
        ring = list(range(start, start + s))
        for i in range(s - 1):
            edges.append((ring[i], ring[i + 1]))
        if s >= 3:
            edges.append((ring[-1], ring[0]))
        start += s - 1
    return start + 1, edges


def generate(spec: GenSpec) -> Graph:
    """Deterministic graph for a GenSpec; same inputs, same edge list, always."""
    fam = spec.family
    if fam not in FAMILIES:
        raise InvalidSpec(f"unknown family {fam!r}, expected one of {', '.join(FAMILIES)}")
    rng = SplitMix64(spec.seed)
    n = spec.n
    if fam != "block_chain" and n < 1:
        raise InvalidSpec(f"n must be >= 1, got {n}")
    if fam == "tree":
        edges = _prufer_tree(n, rng)
    elif fam == "cycle":
        if n < 3:
            raise InvalidSpec("a cycle needs at least 3 vertices")
        edges = [(i, (i + 1) % n) for i in range(n)]
    elif fam == "complete":
        edges = [(u, w) for u in range(n) for w in range(u + 1, n)]
    elif fam == "cactus":
        edges = _cactus(n, rng)
    elif fam == "random_connected":
        p = spec.extra.get("p", 0.3)
        if not 0.0 <= p <= 1.0:
            raise InvalidSpec(f"edge probability must be in [0, 1], got {p}")
        edges = _random_connected(n, p, rng)
    else:
        n, edges = _block_chain(spec.extra.get("sizes"))
    return Graph.from_edges(n, edges)


def enumerate_small(n_max: int):
    """Yield every connected labeled graph with 1..n_max vertices.

    Filters all edge subsets, so counts grow fast: 1, 1, 4, 38, 728, 26704
    graphs at n = 1..6.  Capped at n_max <= 7.  No isomorphism reduction;
    duplicates up to relabeling are intentional.
    """
    if n_max > 7:
        raise InvalidSpec("exhaustive enumeration is capped at 7 vertices")
    for n in range(1, n_max + 1):
        pairs = [(u, w) for u in range(n) for w in range(u + 1, n)]
        all_bits = (1 << n) - 1
        for mask in range(1 << len(pairs)):
            nbr = [0] * n
            for i, (u, w) in enumerate(pairs):
                if mask >> i & 1:
                    nbr[u] |= 1 << w
                    nbr[w] |= 1 << u
            reach = 1
            frontier = 1
            while frontier:
                nxt = 0
                f = frontier
                while f:
                    v = (f & -f).bit_length() - 1
                    f &= f - 1
                    nxt |= nbr[v]
                frontier = nxt & ~reach
                reach |= frontier
            if reach == all_bits:
                chosen = [pairs[i] for i in range(len(pairs)) if mask >> i & 1]
                yield Graph.from_edges(n, chosen, validate=False)
