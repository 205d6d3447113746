"""Simple undirected graphs over dense integer ids, stored as adjacency bitrows.

A vertex set is a plain ``int`` bitmask: bit ``v`` set means vertex ``v`` is a
member.  :func:`mask_of` and :func:`members` convert to and from iterables.
"""

from __future__ import annotations

from typing import Iterable, Iterator, Sequence

__all__ = [
    "Graph",
    "GraphError",
    "ParseError",
    "CapacityError",
    "mask_of",
    "members",
    "popcount",
    "path",
    "cycle",
    "complete",
    "star",
    "empty",
    "parse_edge_list",
    "emit_edge_list",
]

EXACT_VERTEX_LIMIT = 64


class GraphError(ValueError):
    """Domain or usage error on graph inputs."""


class ParseError(GraphError):
    """Malformed edge-list text."""


class CapacityError(GraphError):
    """Instance exceeds a solver capacity limit."""


def popcount(x: int) -> int:
    return bin(x).count("1")


def mask_of(vertices: Iterable[int]) -> int:
    m = 0
    for v in vertices:
        m |= 1 << v
    return m


def members(mask: int) -> list[int]:
    out = []
    v = 0
    while mask:
        if mask & 1:
            out.append(v)
        mask >>= 1
        v += 1
    return out


class Graph:
    """Immutable simple undirected graph.

    ``adj[v]`` is the neighbor bitrow of ``v``.  ``labels`` optionally tags each
    vertex with provenance, e.g. ``(component, original_id, glued)`` for
    composed graphs; labels never take part in equality.
    """

    __slots__ = ("n", "adj", "labels", "_deg")

    def __init__(self, n: int, adj: Sequence[int], labels: Sequence | None = None):
        if n < 0:
            raise GraphError(f"vertex count must be nonnegative, got {n}")
        if len(adj) != n:
            raise GraphError(f"expected {n} bitrows, got {len(adj)}")
        full = (1 << n) - 1
        for v, row in enumerate(adj):
            if row & ~full:
                raise GraphError(f"bitrow of vertex {v} references ids outside [0, {n})")
            if row >> v & 1:
                raise GraphError(f"self-loop at vertex {v}")
        for v, row in enumerate(adj):
            for w in members(row):
                if not adj[w] >> v & 1:
                    raise GraphError(f"asymmetric adjacency between {v} and {w}")
        if labels is not None and len(labels) != n:
            raise GraphError(f"labels have length {len(labels)}, expected {n}")
        self.n = n
        self.adj = tuple(adj)
        self.labels = tuple(labels) if labels is not None else None
        self._deg = tuple(popcount(row) for row in self.adj)

    @classmethod
    def from_edges(cls, n: int, edges: Iterable[tuple[int, int]], labels=None) -> "Graph":
        adj = [0] * n
        for u, v in edges:
            if not (0 <= u < n and 0 <= v < n):
                raise GraphError(f"edge ({u}, {v}) out of range for n={n}")
            if u == v:
                raise GraphError(f"self-loop at vertex {u}")
            adj[u] |= 1 << v
            adj[v] |= 1 << u
        return cls(n, adj, labels)

    def __eq__(self, other):
        if not isinstance(other, Graph):
            return NotImplemented
        return self.n == other.n and self.adj == other.adj

    def __hash__(self):
        return hash((self.n, self.adj))

    def __repr__(self):
        return f"Graph(n={self.n}, m={self.num_edges})"

    def _check(self, v: int) -> None:
        if not 0 <= v < self.n:
            raise GraphError(f"vertex {v} out of range [0, {self.n})")

    def degree(self, v: int) -> int:
        self._check(v)
        return self._deg[v]

    @property
    def degrees(self) -> tuple[int, ...]:
        return self._deg

    def neighbors(self, v: int) -> list[int]:
        self._check(v)
        return members(self.adj[v])

    def has_edge(self, u: int, v: int) -> bool:
        self._check(u)
        self._check(v)
        return bool(self.adj[u] >> v & 1)

    @property
    def full_mask(self) -> int:
        return (1 << self.n) - 1

    @property
    def num_edges(self) -> int:
        return sum(self._deg) // 2

    def edges(self) -> Iterator[tuple[int, int]]:
        """Edges ``(u, v)`` with ``u < v`` in lexicographic order."""
        for u in range(self.n):
            for v in members(self.adj[u] >> (u + 1)):
                yield u, u + 1 + v

    def is_clique(self, vertices: Sequence[int]) -> bool:
        for i, u in enumerate(vertices):
            self._check(u)
            for v in vertices[i + 1:]:
                if u == v or not self.adj[u] >> v & 1:
                    return False
        return True

    def component_mask(self, v: int, removed_edge: tuple[int, int] | None = None) -> int:
        """Bitmask of the connected component containing ``v``."""
        self._check(v)
        seen = 1 << v
        frontier = seen
        while frontier:
            nxt = 0
            for w in members(frontier):
                row = self.adj[w]
                if removed_edge is not None and w in removed_edge:
                    other = removed_edge[1] if w == removed_edge[0] else removed_edge[0]
                    row &= ~(1 << other)
                nxt |= row
            frontier = nxt & ~seen
            seen |= frontier
        return seen

    def is_connected(self) -> bool:
        if self.n == 0:
            return True
        return self.component_mask(0) == self.full_mask

    def is_bridge(self, u: int, v: int) -> bool:
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        return not self.component_mask(u, removed_edge=(u, v)) >> v & 1

    def bridges(self) -> list[tuple[int, int]]:
        return [e for e in self.edges() if self.is_bridge(*e)]

    def remove_edge(self, u: int, v: int) -> "Graph":
        if not self.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge")
        adj = list(self.adj)
        adj[u] &= ~(1 << v)
        adj[v] &= ~(1 << u)
        return Graph(self.n, adj, self.labels)

    def induced(self, vertices: Sequence[int]) -> "Graph":
        """Induced subgraph, relabelled ``0..k-1`` in the given order."""
        index = {v: i for i, v in enumerate(vertices)}
        edges = [(index[u], index[w]) for u in vertices for w in self.neighbors(u)
                 if w in index and index[u] < index[w]]
        return Graph.from_edges(len(vertices), edges)

    def relabel(self, labels: Sequence | None) -> "Graph":
        return Graph(self.n, self.adj, labels)


# -- generators ---------------------------------------------------------------

def _need(n: int, least: int, name: str) -> None:
    if n < least:
        raise GraphError(f"{name}(n) requires n >= {least}, got {n}")


def empty(n: int) -> Graph:
    _need(n, 0, "empty")
    return Graph(n, [0] * n)


def path(n: int) -> Graph:
    _need(n, 1, "path")
    return Graph.from_edges(n, [(i, i + 1) for i in range(n - 1)])


def cycle(n: int) -> Graph:
    _need(n, 3, "cycle")
    return Graph.from_edges(n, [(i, (i + 1) % n) for i in range(n)])


def complete(n: int) -> Graph:
    _need(n, 1, "complete")
    full = (1 << n) - 1
    return Graph(n, [full & ~(1 << v) for v in range(n)])


def star(n: int) -> Graph:
    """Star with center 0 and ``n`` leaves (``n + 1`` vertices)."""
    _need(n, 1, "star")
    return Graph.from_edges(n + 1, [(0, i) for i in range(1, n + 1)])


# -- edge-list text format ----------------------------------------------------

def parse_edge_list(text: str) -> Graph:
    """Parse ``n <count>`` followed by ``u v`` lines.

    Blank lines and ``#`` comments are ignored.  Duplicate edges are accepted.
    """
    n = None
    edges = []
    for lineno, raw in enumerate(text.splitlines(), 1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        parts = line.split()
        if n is None:
            if len(parts) != 2 or parts[0] != "n":
                raise ParseError(f"line {lineno}: expected header 'n <count>', got {raw!r}")
            try:
                n = int(parts[1])
            except ValueError:
                raise ParseError(f"line {lineno}: bad vertex count {parts[1]!r}") from None
            if n < 0:
                raise ParseError(f"line {lineno}: negative vertex count")
            continue
        if len(parts) != 2:
            raise ParseError(f"line {lineno}: expected 'u v', got {raw!r}")
        try:
            u, v = int(parts[0]), int(parts[1])
        except ValueError:
            raise ParseError(f"line {lineno}: non-integer vertex id in {raw!r}") from None
        if u == v:
            raise ParseError(f"line {lineno}: self-loop at vertex {u}")
        if not (0 <= u < n and 0 <= v < n):
            raise ParseError(f"line {lineno}: vertex id out of range [0, {n})")
        edges.append((u, v))
    if n is None:
        raise ParseError("missing header 'n <count>'")
    return Graph.from_edges(n, edges)


def emit_edge_list(g: Graph) -> str:
    lines = [f"n {g.n}"]
    lines.extend(f"{u} {v}" for u, v in g.edges())
    return "\n".join(lines) + "\n"
