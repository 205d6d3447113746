"""Closed-form bounds on the strong domination number of composed graphs.

Each ``bound_*`` function is plain arithmetic on component data and returns a
:class:`Bounds`.  A lower bound may be zero or negative; ``lower_raw`` keeps
the formula value and ``lower`` clamps it to 1.  :class:`BoundReport` pairs a
bound with an exact value for verification.
"""

from __future__ import annotations

import hashlib
import json
from dataclasses import dataclass, field
from typing import Sequence

from .graph import Graph, GraphError

__all__ = [
    "Bounds",
    "BoundReport",
    "PsiTerms",
    "THEOREMS",
    "psi_12",
    "psi_r",
    "bound_disjoint_union",
    "bound_vertex_sum",
    "bound_one_glue",
    "bound_edge_glue",
    "bound_kr_glue_upper",
    "conjecture_kr_glue_lower",
    "bound_chain",
    "bound_link",
    "bound_circuit",
    "bound_edge_deletion",
    "bound_bridge",
]

THEOREMS = (
    "disconnected",
    "v-sum",
    "1-gluing",
    "2-gluing-upper",
    "2-gluing-lower",
    "2-gluing-lower2",
    "2-gluing-upper-Kr",
    "2-gluing-lower-Kr",
    "chain",
    "link",
    "circuit",
    "edge-deletion",
    "bridge",
)


@dataclass(frozen=True)
class Bounds:
    """``None`` on either side means the result gives no bound in that direction."""

    lower_raw: int | None = None
    upper: int | None = None

    @property
    def lower(self) -> int | None:
        return None if self.lower_raw is None else max(1, self.lower_raw)


@dataclass(frozen=True)
class PsiTerms:
    deg_u: tuple[int, int]
    deg_v: tuple[int, int]

    @property
    def psi_12(self) -> int:
        return sum(self.deg_u) + sum(self.deg_v)


@dataclass
class BoundReport:
    theorem: str
    lower_raw: int | None
    upper: int | None
    exact: int
    terms: dict = field(default_factory=dict)
    inputs: dict = field(default_factory=dict)

    @property
    def lower(self) -> int | None:
        return None if self.lower_raw is None else max(1, self.lower_raw)

    @property
    def holds_lower(self) -> bool:
        return self.lower_raw is None or self.lower_raw <= self.exact

    @property
    def holds_upper(self) -> bool:
        return self.upper is None or self.exact <= self.upper

    @property
    def holds(self) -> bool:
        return self.holds_lower and self.holds_upper

    @property
    def tight_lower(self) -> bool:
        return self.lower_raw is not None and self.lower_raw == self.exact

    @property
    def tight_upper(self) -> bool:
        return self.upper is not None and self.upper == self.exact

    @property
    def digest(self) -> str:
        blob = json.dumps(self.inputs, sort_keys=True, separators=(",", ":"))
        return hashlib.sha256(blob.encode()).hexdigest()[:16]

    def to_dict(self) -> dict:
        return {
            "theorem": self.theorem,
            "lower_raw": self.lower_raw,
            "lower": self.lower,
            "upper": self.upper,
            "exact": self.exact,
            "holds_lower": self.holds_lower,
            "holds_upper": self.holds_upper,
            "tight_lower": self.tight_lower,
            "tight_upper": self.tight_upper,
            "terms": self.terms,
            "inputs": self.inputs,
            "digest": self.digest,
        }


def _same_length(name: str, got: Sequence, want: int) -> None:
    if len(got) != want:
        raise GraphError(f"{name} has length {len(got)}, expected {want}")


def psi_12(g1: Graph, e1: tuple[int, int], g2: Graph, e2: tuple[int, int]) -> PsiTerms:
    """Endpoint degrees of the two glued edges ``u_i v_i`` (component-local)."""
    for i, (g, (u, v)) in enumerate(((g1, e1), (g2, e2)), 1):
        if not g.has_edge(u, v):
            raise GraphError(f"({u}, {v}) is not an edge of component {i}")
    return PsiTerms((g1.degree(e1[0]), g2.degree(e2[0])), (g1.degree(e1[1]), g2.degree(e2[1])))


def psi_r(g: Graph, clique: Sequence[int]) -> int:
    """Degree sum over a gluing clique, measured in its own component."""
    if not g.is_clique(list(clique)):
        raise GraphError(f"{list(clique)} is not a clique")
    return sum(g.degree(u) for u in clique)


def bound_disjoint_union(gst1: int, gst2: int) -> Bounds:
    s = gst1 + gst2
    return Bounds(s, s)


def bound_vertex_sum(gst: Sequence[int], deg_u: Sequence[int]) -> Bounds:
    if len(gst) < 2:
        raise GraphError(f"vertex-sum needs at least 2 components, got {len(gst)}")
    _same_length("deg_u", deg_u, len(gst))
    return Bounds(1 + sum(g - d for g, d in zip(gst, deg_u)), sum(gst) + 1)


def bound_one_glue(gst1: int, gst2: int, deg_u: int, deg_v: int) -> Bounds:
    return bound_vertex_sum((gst1, gst2), (deg_u, deg_v))


def _edge_glue_hypothesis(g1: Graph, g2: Graph) -> None:
    for i, g in enumerate((g1, g2), 1):
        if g.n < 3:
            raise GraphError(f"component {i} has order {g.n}; edge gluing bounds need order >= 3")
        if not g.is_connected():
            raise GraphError(f"component {i} is not connected")


@dataclass(frozen=True)
class EdgeGlueBounds(Bounds):
    psi: int = 0
    lower2_raw: int | None = None


def bound_edge_glue(g1: Graph, e1: tuple[int, int], g2: Graph, e2: tuple[int, int],
                    gst1: int, gst2: int) -> EdgeGlueBounds:
    """Upper ``gst1+gst2+1``; lower ``gst1+gst2+5-Psi``, plus ``+6-Psi`` once Psi >= 7."""
    _edge_glue_hypothesis(g1, g2)
    psi = psi_12(g1, e1, g2, e2).psi_12
    s = gst1 + gst2
    return EdgeGlueBounds(s + 5 - psi, s + 1, psi=psi, lower2_raw=s + 6 - psi if psi >= 7 else None)


def bound_kr_glue_upper(gst1: int, gst2: int, r: int | None = None,
                        orders: tuple[int, int] | None = None) -> int:
    if r is not None and r < 2:
        raise GraphError(f"K_r-gluing upper bound needs r >= 2, got {r}")
    if r is not None and orders is not None and min(orders) < r + 1:
        raise GraphError(f"components of orders {orders} are smaller than r+1={r + 1}")
    return gst1 + gst2 + 1


@dataclass(frozen=True)
class ConjectureCheck:
    lower: int
    psi: tuple[int, int]
    exact: int | None = None

    @property
    def holds(self) -> bool | None:
        return None if self.exact is None else self.exact >= self.lower


def conjecture_kr_glue_lower(g1: Graph, q1: Sequence[int], g2: Graph, q2: Sequence[int],
                             gst1: int, gst2: int, r: int | None = None,
                             exact: int | None = None) -> ConjectureCheck:
    """Conjectured lower bound ``gst1+gst2+2r^2-2r+1-Psi_1^r-Psi_2^r``.

    Open problem: ``holds`` only records whether ``exact`` satisfies it.
    """
    if r is None:
        r = len(q1)
    if r < 2:
        raise GraphError(f"conjectured K_r-gluing bound needs r >= 2, got {r}")
    if len(q1) != r or len(q2) != r:
        raise GraphError(f"gluing cliques must have r={r} vertices")
    p1, p2 = psi_r(g1, q1), psi_r(g2, q2)
    return ConjectureCheck(gst1 + gst2 + 2 * r * r - 2 * r + 1 - p1 - p2, (p1, p2), exact)


def bound_chain(gst: Sequence[int], deg_x: Sequence[int], deg_y: Sequence[int]) -> Bounds:
    """``deg_x`` lists x_2..x_n, ``deg_y`` lists y_1..y_{n-1}; component-local degrees."""
    n = len(gst)
    if n < 1:
        raise GraphError("chain needs at least one component")
    _same_length("deg_x", deg_x, n - 1)
    _same_length("deg_y", deg_y, n - 1)
    s = sum(gst)
    return Bounds(s - sum(deg_x) - sum(deg_y) + n - 1, s + n - 1)


def bound_link(gst: Sequence[int], deg_x: Sequence[int], deg_y: Sequence[int]) -> Bounds:
    """Same argument layout as :func:`bound_chain`; degrees measured in the link."""
    n = len(gst)
    if n < 1:
        raise GraphError("link needs at least one component")
    _same_length("deg_x", deg_x, n - 1)
    _same_length("deg_y", deg_y, n - 1)
    s = sum(gst)
    return Bounds(s - sum(deg_x) - sum(deg_y) + 2 * n - 2, s + n - 1)


def bound_circuit(gst: Sequence[int], deg_x: Sequence[int]) -> Bounds:
    n = len(gst)
    if n < 3:
        raise GraphError(f"circuit needs at least 3 components, got {n}")
    _same_length("deg_x", deg_x, n)
    s = sum(gst)
    return Bounds(s - sum(deg_x) + n, s + n // 2)


def bound_edge_deletion(gst_g: int, deg_u: int, deg_v: int, is_k2: bool = False) -> Bounds:
    """Bounds on gamma_st(G - uv) from gamma_st(G); degrees measured in G."""
    if is_k2:
        raise GraphError("edge-deletion bounds exclude G = K_2")
    return Bounds(gst_g - 1, gst_g + deg_u + deg_v - 2)


def bound_bridge(gst1: int, gst2: int, deg_u: int, deg_v: int) -> Bounds:
    """Lower bound for a graph with bridge ``uv`` and sides G_1, G_2; degrees measured in G."""
    return Bounds(gst1 + gst2 - deg_u - deg_v + 2, None)
