"""Immutable bitset-backed simple graphs, structural metrics, and I/O.

Vertices are the dense integers 0..n-1.  Adjacency is stored as one integer
bitmask per vertex, which keeps every operation a handful of word-wide bit
operations and makes graphs hashable values that can be shared freely.

Two pair orders appear below and are easy to confuse:

* colex order (``(0,1), (0,2), (1,2), (0,3), ...``) indexes the bits of
  :func:`edge_mask` and of the graph6 encoding;
* lexicographic order (``(0,1), (0,2), (0,3), ..., (1,2), ...``) is the
  canonical order for reporting edges and scanning non-edges.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Iterable, Iterator

from .errors import (
    EdgeExistsError,
    GraphTooLargeError,
    MalformedEdgeListError,
    MalformedGraph6Error,
    OutOfRangeError,
    SelfLoopError,
)

GRAPH6_MAX_N = 62


def iter_bits(mask: int) -> Iterator[int]:
    """Yield the positions of set bits of ``mask`` in ascending order."""
    while mask:
        low = mask & -mask
        yield low.bit_length() - 1
        mask ^= low


def pair_index(u: int, v: int) -> int:
    """Colex index of the unordered pair {u, v} (u != v)."""
    if u > v:
        u, v = v, u
    return v * (v - 1) // 2 + u


@lru_cache(maxsize=None)
def pair_table(n: int) -> tuple[tuple[int, int], ...]:
    """All pairs (i, j) with i < j < n, in colex order."""
    return tuple((i, j) for j in range(n) for i in range(j))


@dataclass(frozen=True)
class Graph:
    """A simple undirected graph on vertices 0..n-1.

    ``adj[v]`` is the neighbour bitmask of v.  Instances are immutable;
    editing operations return new graphs.
    """

    n: int
    adj: tuple[int, ...]

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    def degree(self, v: int) -> int:
        return self.adj[v].bit_count()

    @property
    def degrees(self) -> tuple[int, ...]:
        return tuple(a.bit_count() for a in self.adj)

    def has_edge(self, u: int, v: int) -> bool:
        return bool(self.adj[u] >> v & 1)

    @property
    def edge_count(self) -> int:
        return sum(a.bit_count() for a in self.adj) // 2

    def edges(self) -> list[tuple[int, int]]:
        """Edges as sorted pairs in lexicographic order."""
        out = []
        for u in range(self.n):
            rest = self.adj[u] >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                out.append((u, v))
        return out

    def non_edges(self) -> list[tuple[int, int]]:
        """Non-adjacent pairs in lexicographic order (the complement's edges)."""
        out = []
        for u in range(self.n):
            rest = ~self.adj[u] & self.full_mask
            rest = rest >> (u + 1) << (u + 1)
            for v in iter_bits(rest):
                out.append((u, v))
        return out

    @property
    def edge_mask(self) -> int:
        """Upper-triangle bitmask of the edge set, one bit per colex pair."""
        mask = 0
        for u, v in self.edges():
            mask |= 1 << pair_index(u, v)
        return mask

    def isolated_mask(self) -> int:
        mask = 0
        for v, a in enumerate(self.adj):
            if a == 0:
                mask |= 1 << v
        return mask

    def has_isolated_vertices(self) -> bool:
        return any(a == 0 for a in self.adj)


@dataclass(frozen=True)
class GraphMetrics:
    """Degree, connectivity and distance facts about one graph.

    ``diameter`` is None when the graph is disconnected (the infinity
    marker); otherwise it is the largest eccentricity.
    """

    degrees: tuple[int, ...]
    components: tuple[tuple[int, ...], ...]
    isolated_vertices: tuple[int, ...]
    diameter: int | None
    universal_vertex: int | None

    @property
    def connected(self) -> bool:
        return len(self.components) == 1


def _check_vertex(v: int, n: int) -> None:
    if not 0 <= v < n:
        raise OutOfRangeError(f"vertex {v} outside 0..{n - 1}")


def build_graph(n: int, edges: Iterable[tuple[int, int]]) -> Graph:
    """Build a graph on n vertices from unordered pairs; duplicates collapse."""
    if n < 1:
        raise OutOfRangeError(f"vertex count must be >= 1, got {n}")
    adj = [0] * n
    for u, v in edges:
        _check_vertex(u, n)
        _check_vertex(v, n)
        if u == v:
            raise SelfLoopError(f"self-loop at vertex {u}")
        adj[u] |= 1 << v
        adj[v] |= 1 << u
    return Graph(n, tuple(adj))


def from_edge_mask(n: int, mask: int) -> Graph:
    """Build a graph from a colex upper-triangle bitmask (fast path)."""
    adj = [0] * n
    table = pair_table(n)
    while mask:
        low = mask & -mask
        i, j = table[low.bit_length() - 1]
        adj[i] |= 1 << j
        adj[j] |= 1 << i
        mask ^= low
    return Graph(n, tuple(adj))


def complement(g: Graph) -> Graph:
    """The complement graph; an involution."""
    full = g.full_mask
    return Graph(g.n, tuple(~a & full & ~(1 << v) for v, a in enumerate(g.adj)))


def add_edge(g: Graph, u: int, v: int) -> Graph:
    """Return g plus the edge uv; g itself is unchanged."""
    _check_vertex(u, g.n)
    _check_vertex(v, g.n)
    if u == v:
        raise SelfLoopError(f"self-loop at vertex {u}")
    if g.has_edge(u, v):
        raise EdgeExistsError(f"edge ({u}, {v}) already present")
    adj = list(g.adj)
    adj[u] |= 1 << v
    adj[v] |= 1 << u
    return Graph(g.n, tuple(adj))


def induced_subgraph(g: Graph, vertices: Iterable[int]) -> Graph:
    """Subgraph induced by ``vertices``, relabelled 0.. in the given order."""
    verts = list(vertices)
    index = {v: i for i, v in enumerate(verts)}
    adj = [0] * len(verts)
    for v in verts:
        for w in iter_bits(g.adj[v]):
            if w in index:
                adj[index[v]] |= 1 << index[w]
    return Graph(len(verts), tuple(adj))


def disjoint_union(graphs: Iterable[Graph]) -> Graph:
    """Disjoint union with vertex blocks in argument order."""
    parts = list(graphs)
    n = sum(p.n for p in parts)
    adj: list[int] = []
    offset = 0
    for p in parts:
        adj.extend(a << offset for a in p.adj)
        offset += p.n
    return Graph(n, tuple(adj))


def component_masks(g: Graph) -> list[int]:
    """Vertex bitmasks of the connected components, by smallest member."""
    seen = 0
    comps = []
    for v in range(g.n):
        if seen >> v & 1:
            continue
        comp = 1 << v
        frontier = comp
        while frontier:
            nxt = 0
            for u in iter_bits(frontier):
                nxt |= g.adj[u]
            frontier = nxt & ~comp
            comp |= nxt
        comps.append(comp)
        seen |= comp
    return comps


def is_connected(g: Graph) -> bool:
    comp = 1
    frontier = 1
    while frontier:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        frontier = nxt & ~comp
        comp |= nxt
    return comp == g.full_mask


def _eccentricity(g: Graph, start: int) -> int:
    """Largest BFS distance from ``start`` within its component."""
    seen = 1 << start
    frontier = seen
    dist = 0
    while True:
        nxt = 0
        for u in iter_bits(frontier):
            nxt |= g.adj[u]
        nxt &= ~seen
        if not nxt:
            return dist
        seen |= nxt
        frontier = nxt
        dist += 1


def metrics(g: Graph) -> GraphMetrics:
    """Degrees, components, isolated vertices, diameter, universal vertex."""
    degrees = g.degrees
    comps = tuple(tuple(iter_bits(m)) for m in component_masks(g))
    isolated = tuple(v for v, d in enumerate(degrees) if d == 0)
    universal = next((v for v, d in enumerate(degrees) if d == g.n - 1), None)
    if len(comps) == 1:
        diameter: int | None = max(_eccentricity(g, v) for v in range(g.n))
    else:
        diameter = None
    return GraphMetrics(degrees, comps, isolated, diameter, universal)


def graph6_encode(g: Graph) -> str:
    """Short-form graph6 encoding (n <= 62)."""
    if g.n > GRAPH6_MAX_N:
        raise GraphTooLargeError(f"graph6 short form supports n <= 62, got {g.n}")
    mask = g.edge_mask
    m = g.n * (g.n - 1) // 2
    chars = [chr(63 + g.n)]
    for start in range(0, m, 6):
        val = 0
        for k in range(6):
            p = start + k
            bit = (mask >> p) & 1 if p < m else 0
            val = (val << 1) | bit
        chars.append(chr(63 + val))
    return "".join(chars)


def graph6_decode(text: str) -> Graph:
    """Decode one short-form graph6 line; strict about length and padding."""
    s = text.strip()
    if not s:
        raise MalformedGraph6Error("empty graph6 string")
    codes = [ord(c) for c in s]
    for c in codes:
        if not 63 <= c <= 126:
            raise MalformedGraph6Error(f"byte {c} out of range 63..126")
    if codes[0] == 126:
        raise MalformedGraph6Error("long-form graph6 (n > 62) is unsupported")
    n = codes[0] - 63
    if n == 0:
        raise MalformedGraph6Error("order-0 graph6 string is unsupported")
    m = n * (n - 1) // 2
    expected = 1 + (m + 5) // 6
    if len(codes) != expected:
        raise MalformedGraph6Error(
            f"bad length {len(codes)} for order {n}, expected {expected}"
        )
    mask = 0
    for idx, c in enumerate(codes[1:]):
        group = c - 63
        if not 0 <= group < 64:
            raise MalformedGraph6Error(f"byte {c} out of range 63..126")
        for k in range(6):
            p = idx * 6 + k
            bit = (group >> (5 - k)) & 1
            if p < m:
                mask |= bit << p
            elif bit:
                raise MalformedGraph6Error("nonzero padding bits")
    return from_edge_mask(n, mask)


def parse_edge_list(text: str) -> Graph:
    """Parse the 'n m' header format: one 'u v' line per edge."""
    lines = [ln.strip() for ln in text.splitlines() if ln.strip()]
    if not lines:
        raise MalformedEdgeListError("empty edge-list document")
    head = lines[0].split()
    if len(head) != 2:
        raise MalformedEdgeListError(f"bad header {lines[0]!r}, expected 'n m'")
    try:
        n, m = int(head[0]), int(head[1])
    except ValueError as exc:
        raise MalformedEdgeListError(f"non-integer header {lines[0]!r}") from exc
    if len(lines) - 1 != m:
        raise MalformedEdgeListError(
            f"header declares {m} edges but {len(lines) - 1} lines follow"
        )
    edges = []
    for ln in lines[1:]:
        parts = ln.split()
        if len(parts) != 2:
            raise MalformedEdgeListError(f"bad edge line {ln!r}")
        try:
            edges.append((int(parts[0]), int(parts[1])))
        except ValueError as exc:
            raise MalformedEdgeListError(f"non-integer edge line {ln!r}") from exc
    return build_graph(n, edges)


def format_edge_list(g: Graph) -> str:
    edges = g.edges()
    lines = [f"{g.n} {len(edges)}"]
    lines.extend(f"{u} {v}" for u, v in edges)
    return "\n".join(lines) + "\n"
