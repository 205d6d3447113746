"""Graph composition: disjoint union, vertex-sum, K_r-gluing, chain, link, circuit.

Every operator returns a :class:`ComposedGraph`.  Vertex layout is fixed:
surviving (non-identified) vertices first, in component order then original
order, followed by identified vertices in the order the operator creates them.
Composed vertices carry labels ``(component, original_id, glued)``; an
identified vertex is labelled with its lowest-index component.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from itertools import permutations
from typing import Iterator, Sequence

from .graph import Graph, GraphError, members

__all__ = [
    "GluingSpec",
    "CompositionSpec",
    "ComposedGraph",
    "disjoint_union",
    "vertex_sum",
    "r_glue",
    "chain",
    "link",
    "circuit",
    "enumerate_r_gluings",
    "cliques",
]


@dataclass(frozen=True)
class GluingSpec:
    """Identify ``q1[j]`` of the first graph with ``q2[j]`` of the second."""

    r: int
    q1: tuple[int, ...]
    q2: tuple[int, ...]

    def __post_init__(self):
        object.__setattr__(self, "q1", tuple(self.q1))
        object.__setattr__(self, "q2", tuple(self.q2))
        if self.r < 0:
            raise GraphError(f"clique size must be nonnegative, got {self.r}")
        if len(self.q1) != self.r or len(self.q2) != self.r:
            raise GraphError(f"gluing lists must both have length r={self.r}")
        for name, q in (("q1", self.q1), ("q2", self.q2)):
            if len(set(q)) != len(q):
                raise GraphError(f"{name} contains a repeated vertex: {list(q)}")

    def validate(self, g1: Graph, g2: Graph) -> None:
        for name, g, q in (("q1", g1, self.q1), ("q2", g2, self.q2)):
            for v in q:
                if not 0 <= v < g.n:
                    raise GraphError(f"{name} vertex {v} out of range [0, {g.n})")
            if not g.is_clique(q):
                raise GraphError(f"{name}={list(q)} does not induce a clique")


@dataclass(frozen=True)
class CompositionSpec:
    """Attachment data for chain/link (``(x_i, y_i)`` pairs) or circuit (``x_i``)."""

    kind: str
    attachments: tuple

    def __post_init__(self):
        if self.kind not in ("chain", "link", "circuit"):
            raise GraphError(f"unknown composition kind {self.kind!r}")
        if self.kind == "circuit":
            att = tuple(int(x) for x in self.attachments)
            if len(att) < 3:
                raise GraphError(f"circuit needs at least 3 components, got {len(att)}")
        else:
            att = tuple((int(x), int(y)) for x, y in self.attachments)
            for i, (x, y) in enumerate(att):
                if x == y:
                    raise GraphError(f"component {i}: attachment vertices x and y must differ (both {x})")
        object.__setattr__(self, "attachments", att)

    def validate(self, graphs: Sequence[Graph]) -> None:
        if len(graphs) != len(self.attachments):
            raise GraphError(f"{len(graphs)} components but {len(self.attachments)} attachments")
        if not graphs:
            raise GraphError(f"{self.kind} needs at least one component")
        for i, (g, att) in enumerate(zip(graphs, self.attachments)):
            for v in (att if isinstance(att, tuple) else (att,)):
                if not 0 <= v < g.n:
                    raise GraphError(f"component {i}: attachment vertex {v} out of range [0, {g.n})")


@dataclass
class ComposedGraph:
    graph: Graph
    vertex_map: dict[tuple[int, int], int]
    special: dict[str, object] = field(default_factory=dict)

    def image(self, component: int, vertices) -> int:
        """Bitmask of the composed images of ``vertices`` (ids or a bitmask) of one component."""
        if isinstance(vertices, int):
            vertices = members(vertices)
        m = 0
        for v in vertices:
            m |= 1 << self.vertex_map[component, v]
        return m

    def origins(self, w: int) -> list[tuple[int, int]]:
        return sorted(k for k, v in self.vertex_map.items() if v == w)


def _assemble(graphs: Sequence[Graph], merges: Sequence[Sequence[tuple[int, int]]],
              extra_edges: Sequence[tuple[tuple[int, int], tuple[int, int]]] = ()) -> ComposedGraph:
    """Build the composed graph.

    ``merges`` lists groups of ``(component, vertex)`` pairs to identify; each
    group becomes one fresh vertex appended after the survivors.
    ``extra_edges`` join pairs of ``(component, vertex)``.
    """
    merged_of: dict[tuple[int, int], int] = {}
    for gi, group in enumerate(merges):
        for key in group:
            if key in merged_of:
                raise GraphError(f"vertex {key[1]} of component {key[0]} identified twice")
            merged_of[key] = gi
    vmap: dict[tuple[int, int], int] = {}
    labels = []
    for ci, g in enumerate(graphs):
        for v in range(g.n):
            if (ci, v) not in merged_of:
                vmap[ci, v] = len(labels)
                labels.append((ci, v, False))
    base = len(labels)
    for gi, group in enumerate(merges):
        ci, v = min(group)
        labels.append((ci, v, True))
        for key in group:
            vmap[key] = base + gi
    n = len(labels)
    adj = [0] * n
    for ci, g in enumerate(graphs):
        for u, v in g.edges():
            a, b = vmap[ci, u], vmap[ci, v]
            if a == b:
                raise GraphError(f"identification collapses edge ({u}, {v}) of component {ci}")
            adj[a] |= 1 << b
            adj[b] |= 1 << a
    for p, q in extra_edges:
        a, b = vmap[p], vmap[q]
        if a == b:
            raise GraphError(f"added edge {p}-{q} would be a self-loop")
        adj[a] |= 1 << b
        adj[b] |= 1 << a
    return ComposedGraph(Graph(n, adj, labels), vmap)


def disjoint_union(g1: Graph, g2: Graph) -> ComposedGraph:
    return _assemble([g1, g2], [])


def vertex_sum(graphs: Sequence[Graph], attach: Sequence[int]) -> ComposedGraph:
    """Identify ``attach[i]`` of every ``graphs[i]`` into one vertex ``u``."""
    if len(graphs) < 2:
        raise GraphError(f"vertex-sum needs at least 2 components, got {len(graphs)}")
    if len(attach) != len(graphs):
        raise GraphError(f"{len(graphs)} components but {len(attach)} attachment vertices")
    for i, (g, u) in enumerate(zip(graphs, attach)):
        if not 0 <= u < g.n:
            raise GraphError(f"component {i}: vertex {u} out of range [0, {g.n})")
    cg = _assemble(graphs, [[(i, u) for i, u in enumerate(attach)]])
    cg.special["u"] = cg.vertex_map[0, attach[0]]
    return cg


def r_glue(g1: Graph, g2: Graph, spec: GluingSpec) -> ComposedGraph:
    """Identify the ordered r-clique ``spec.q1`` of ``g1`` with ``spec.q2`` of ``g2``."""
    spec.validate(g1, g2)
    cg = _assemble([g1, g2], [[(0, a), (1, b)] for a, b in zip(spec.q1, spec.q2)])
    cg.special["glued"] = [cg.vertex_map[0, a] for a in spec.q1]
    return cg


def chain(graphs: Sequence[Graph], spec: CompositionSpec) -> ComposedGraph:
    """Identify ``y_i`` of ``G_i`` with ``x_{i+1}`` of ``G_{i+1}``; merged vertices are ``z_i``."""
    if spec.kind != "chain":
        raise GraphError(f"chain() given a {spec.kind!r} spec")
    spec.validate(graphs)
    att = spec.attachments
    merges = [[(i, att[i][1]), (i + 1, att[i + 1][0])] for i in range(len(graphs) - 1)]
    cg = _assemble(graphs, merges)
    cg.special["z"] = [cg.vertex_map[i, att[i][1]] for i in range(len(graphs) - 1)]
    cg.special["x"] = [cg.vertex_map[i, x] for i, (x, _) in enumerate(att)]
    cg.special["y"] = [cg.vertex_map[i, y] for i, (_, y) in enumerate(att)]
    return cg


def link(graphs: Sequence[Graph], spec: CompositionSpec) -> ComposedGraph:
    """Join ``y_i`` of ``G_i`` to ``x_{i+1}`` of ``G_{i+1}`` by a new (bridge) edge."""
    if spec.kind != "link":
        raise GraphError(f"link() given a {spec.kind!r} spec")
    spec.validate(graphs)
    att = spec.attachments
    extra = [((i, att[i][1]), (i + 1, att[i + 1][0])) for i in range(len(graphs) - 1)]
    cg = _assemble(graphs, [], extra)
    cg.special["x"] = [cg.vertex_map[i, x] for i, (x, _) in enumerate(att)]
    cg.special["y"] = [cg.vertex_map[i, y] for i, (_, y) in enumerate(att)]
    return cg


def circuit(graphs: Sequence[Graph], spec: CompositionSpec) -> ComposedGraph:
    """Place ``x_i`` of ``G_i`` on the i-th vertex of a cycle ``C_n``."""
    if spec.kind != "circuit":
        raise GraphError(f"circuit() given a {spec.kind!r} spec")
    spec.validate(graphs)
    att = spec.attachments
    n = len(graphs)
    extra = [((i, att[i]), ((i + 1) % n, att[(i + 1) % n])) for i in range(n)]
    cg = _assemble(graphs, [], extra)
    cg.special["x"] = [cg.vertex_map[i, x] for i, x in enumerate(att)]
    return cg


def cliques(g: Graph, r: int) -> Iterator[tuple[int, ...]]:
    """All r-cliques of ``g`` as ascending tuples, in lexicographic order."""
    if r < 0:
        return
    if r == 0:
        yield ()
        return

    def extend(prefix: list[int], candidates: int):
        if len(prefix) == r:
            yield tuple(prefix)
            return
        # Not enough candidates left to finish the clique.
        if bin(candidates).count("1") < r - len(prefix):
            return
        for v in members(candidates):
            prefix.append(v)
            yield from extend(prefix, candidates & g.adj[v] & ~((2 << v) - 1))
            prefix.pop()

    yield from extend([], g.full_mask)


def enumerate_r_gluings(g1: Graph, g2: Graph, r: int) -> Iterator[GluingSpec]:
    """Every labelled r-gluing: (r-clique of g1, r-clique of g2, bijection)."""
    if r < 1:
        raise GraphError(f"r must be at least 1, got {r}")
    c2 = list(cliques(g2, r))
    for q1 in cliques(g1, r):
        for q in c2:
            for perm in permutations(q):
                yield GluingSpec(r, q1, perm)
