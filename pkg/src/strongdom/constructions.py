"""Build strong dominating sets of composed graphs from component sets.

Each builder follows an upper-bound argument for its operator and then checks
the result with :func:`is_strong_dominating`; nothing is trusted unverified.
Max-degree choices break ties toward the lowest composed vertex id.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Sequence

from .compose import ComposedGraph, CompositionSpec, GluingSpec, chain, circuit, link, r_glue
from .graph import Graph, GraphError, members, popcount
from .solver import is_strong_dominating

__all__ = [
    "ConstructionResult",
    "construct_edge_glue_sds",
    "construct_kr_glue_sds",
    "construct_chain_sds",
    "construct_link_sds",
    "construct_circuit_sds",
]


@dataclass
class ConstructionResult:
    vertices: int
    valid: bool
    size: int
    claimed_upper: int
    composed: ComposedGraph

    @property
    def members(self) -> list[int]:
        return members(self.vertices)

    @property
    def within_bound(self) -> bool:
        return self.size <= self.claimed_upper


def _require_sds(graphs: Sequence[Graph], sets: Sequence[int]) -> None:
    if len(graphs) != len(sets):
        raise GraphError(f"{len(graphs)} components but {len(sets)} dominating sets")
    for i, (g, d) in enumerate(zip(graphs, sets)):
        if not is_strong_dominating(g, d):
            raise GraphError(f"set {members(d)} is not a strong dominating set of component {i}")


def _finish(cg: ComposedGraph, d: int, claimed_upper: int) -> ConstructionResult:
    return ConstructionResult(d, is_strong_dominating(cg.graph, d), popcount(d), claimed_upper, cg)


def _images(cg: ComposedGraph, sets: Sequence[int]) -> int:
    d = 0
    for i, s in enumerate(sets):
        d |= cg.image(i, s)
    return d


def construct_edge_glue_sds(g1: Graph, d1: int, e1: tuple[int, int],
                            g2: Graph, d2: int, e2: tuple[int, int]) -> ConstructionResult:
    """Edge gluing of ``e1 = u_1v_1`` onto ``e2 = u_2v_2``.

    * one side holds both endpoints: the images of ``d1`` and ``d2`` suffice;
    * some endpoint is held: images plus both glued vertices ``u``, ``v``;
    * no endpoint is held: images plus the higher-degree of ``u``, ``v``.
    """
    _require_sds((g1, g2), (d1, d2))
    spec = GluingSpec(2, e1, e2)
    cg = r_glue(g1, g2, spec)
    u, v = cg.special["glued"]
    d = _images(cg, (d1, d2))
    ends1 = popcount(d1 & ((1 << e1[0]) | (1 << e1[1])))
    ends2 = popcount(d2 & ((1 << e2[0]) | (1 << e2[1])))
    if ends1 == 2 or ends2 == 2:
        pass
    elif ends1 or ends2:
        d |= (1 << u) | (1 << v)
    else:
        deg = cg.graph.degrees
        d |= 1 << (u if deg[u] >= deg[v] else v)
    return _finish(cg, d, popcount(d1) + popcount(d2) + 1)


def construct_kr_glue_sds(g1: Graph, d1: int, g2: Graph, d2: int, spec: GluingSpec) -> ConstructionResult:
    """K_r-gluing: images of both sets, plus a max-degree unheld clique vertex if any."""
    if spec.r < 2:
        raise GraphError(f"K_r-gluing construction needs r >= 2, got {spec.r}")
    _require_sds((g1, g2), (d1, d2))
    cg = r_glue(g1, g2, spec)
    glued = cg.special["glued"]
    held = [j for j in range(spec.r) if d1 >> spec.q1[j] & 1 or d2 >> spec.q2[j] & 1]
    d = _images(cg, (d1, d2))
    if len(held) < spec.r:
        deg = cg.graph.degrees
        unheld = [glued[j] for j in range(spec.r) if j not in held]
        d |= 1 << max(unheld, key=lambda w: (deg[w], -w))
    return _finish(cg, d, popcount(d1) + popcount(d2) + 1)


def construct_chain_sds(graphs: Sequence[Graph], sets: Sequence[int], spec: CompositionSpec) -> ConstructionResult:
    """Images of all component sets plus every merged vertex ``z_i``."""
    _require_sds(graphs, sets)
    cg = chain(graphs, spec)
    d = _images(cg, sets)
    for z in cg.special["z"]:
        d |= 1 << z
    return _finish(cg, d, sum(map(popcount, sets)) + len(graphs) - 1)


def construct_link_sds(graphs: Sequence[Graph], sets: Sequence[int], spec: CompositionSpec) -> ConstructionResult:
    """Component sets plus, per bridge ``y_j x_{j+1}``, its endpoint of larger degree (``x_{j+1}`` on ties)."""
    _require_sds(graphs, sets)
    cg = link(graphs, spec)
    deg = cg.graph.degrees
    d = _images(cg, sets)
    xs, ys = cg.special["x"], cg.special["y"]
    for j in range(len(graphs) - 1):
        x_next, y = xs[j + 1], ys[j]
        d |= 1 << (x_next if deg[x_next] >= deg[y] else y)
    return _finish(cg, d, sum(map(popcount, sets)) + len(graphs) - 1)


def _circuit_extras(deg_x: Sequence[int]) -> list[int]:
    """Cycle positions (0-based) to add so every cycle vertex is strongly dominated.

    Positions are rotated so that the max-degree attachment (lowest index on
    ties) sits second to last; consecutive pairs before it contribute their
    higher-degree member, and for even ``n`` the position three from the end
    is taken outright.
    """
    n = len(deg_x)
    top = max(range(n), key=lambda i: (deg_x[i], -i))
    # rotated position p (1-based) holds original index order[p - 1]
    shift = (top - (n - 2)) % n
    order = [(p + shift) % n for p in range(n)]
    dx = [deg_x[i] for i in order]
    picks = []
    pairs = (n - 2) // 2 if n % 2 else (n - 4) // 2
    for j in range(1, pairs + 1):
        even, odd = 2 * j, 2 * j - 1
        picks.append(even if dx[even - 1] >= dx[odd - 1] else odd)
    if n % 2 == 0:
        picks.append(n - 3)
    picks.append(n - 1)
    return [order[p - 1] for p in picks]


def construct_circuit_sds(graphs: Sequence[Graph], sets: Sequence[int], spec: CompositionSpec) -> ConstructionResult:
    _require_sds(graphs, sets)
    cg = circuit(graphs, spec)
    deg = cg.graph.degrees
    xs = cg.special["x"]
    d = _images(cg, sets)
    for i in _circuit_extras([deg[x] for x in xs]):
        d |= 1 << xs[i]
    return _finish(cg, d, sum(map(popcount, sets)) + len(graphs) // 2)
