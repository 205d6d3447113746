"""Concrete tightness examples and seeded random component families."""

from __future__ import annotations

import random
from typing import Sequence

from .bounds import THEOREMS
from .compose import cliques
from .graph import Graph, GraphError
from .instance import Instance

__all__ = [
    "fig_example",
    "fig_example3",
    "random_connected",
    "random_tree",
    "sample_instance",
    "tightness_search",
    "SamplingLimits",
]


def fig_example() -> Instance:
    """Edge gluing attaining the Psi-based lower bound.

    G_1 is the path x_1 - u_1 - v_1; G_2 is u_2 - v_2 - y_2 with leaves w_2, z_2
    on y_2.  The edge u_1v_1 is glued onto u_2v_2.
    """
    # G_1: x1=0, u1=1, v1=2
    g1 = Graph.from_edges(3, [(0, 1), (1, 2)])
    # G_2: u2=0, v2=1, y2=2, w2=3, z2=4
    g2 = Graph.from_edges(5, [(0, 1), (1, 2), (2, 3), (2, 4)])
    return Instance("glue", [g1, g2], clique1=(1, 2), clique2=(0, 1), r=2, name="fig-example",
                    expected={"gst_components": [1, 2], "gst": 2, "psi_12": 6, "lower": 2})


def fig_example3(r: int) -> Instance:
    """K_r-gluing attaining the conjectured lower bound for every r >= 2.

    G_1 is K_r plus a pendant x_1 at u_1; G_2 is K_r plus a path w_2 y_2 z_2
    whose middle vertex y_2 is joined to v_2.  u_1 and v_2 land on distinct
    glued positions.
    """
    if r < 2:
        raise GraphError(f"fig_example3 needs r >= 2, got {r}")
    clique = [(a, b) for a in range(r) for b in range(a + 1, r)]
    # G_1: clique 0..r-1 with u1=0, x1=r
    g1 = Graph.from_edges(r + 1, clique + [(0, r)])
    # G_2: clique 0..r-1 with v2=r-1, w2=r, y2=r+1, z2=r+2
    g2 = Graph.from_edges(r + 3, clique + [(r, r + 1), (r + 1, r + 2), (r + 1, r - 1)])
    q = tuple(range(r))
    psi = r * r - r + 1
    return Instance("glue", [g1, g2], clique1=q, clique2=q, r=r, name=f"fig-example3-r{r}",
                    expected={"gst_components": [1, 2], "gst": 2, "psi_r": [psi, psi], "lower": 2})


def _as_rng(seed) -> random.Random:
    return seed if isinstance(seed, random.Random) else random.Random(seed)


def random_tree(n: int, seed=None) -> Graph:
    """Uniform random labelled tree, decoded from a random Pruefer sequence."""
    if n < 1:
        raise GraphError(f"random_tree needs n >= 1, got {n}")
    rng = _as_rng(seed)
    if n == 1:
        return Graph(1, [0])
    if n == 2:
        return Graph.from_edges(2, [(0, 1)])
    seq = [rng.randrange(n) for _ in range(n - 2)]
    degree = [1] * n
    for v in seq:
        degree[v] += 1
    edges = []
    for v in seq:
        leaf = min(u for u in range(n) if degree[u] == 1)
        edges.append((leaf, v))
        degree[leaf] -= 1
        degree[v] -= 1
    u, w = (x for x in range(n) if degree[x] == 1)
    edges.append((u, w))
    return Graph.from_edges(n, edges)


def random_connected(n: int, edge_prob: float, seed=None, retries: int = 50,
                     fallback: bool = True) -> Graph:
    """Erdos-Renyi G(n, p) conditioned on connectivity.

    After ``retries`` disconnected samples, a random spanning tree is laid down
    first and the G(n, p) edges are added on top (unless ``fallback`` is off).
    """
    if n < 1:
        raise GraphError(f"random_connected needs n >= 1, got {n}")
    if not 0 < edge_prob <= 1:
        raise GraphError(f"edge_prob must lie in (0, 1], got {edge_prob}")
    rng = _as_rng(seed)
    pairs = [(u, v) for u in range(n) for v in range(u + 1, n)]
    for _ in range(retries):
        g = Graph.from_edges(n, [e for e in pairs if rng.random() < edge_prob])
        if g.is_connected():
            return g
    if not fallback:
        raise GraphError(f"no connected G({n}, {edge_prob}) sample in {retries} tries")
    tree = random_tree(n, rng)
    return Graph.from_edges(n, list(tree.edges()) + [e for e in pairs if rng.random() < edge_prob])


# -- campaign sampling ---------------------------------------------------------------

class SamplingLimits:
    """Component order range, component count range and cap on composed order."""

    def __init__(self, min_order: int = 1, max_order: int = 7, min_count: int = 2,
                 max_count: int = 4, max_composed: int = 18, r_values: Sequence[int] = (2, 3)):
        if min_order < 1 or max_order < min_order:
            raise GraphError(f"bad component order range [{min_order}, {max_order}]")
        if min_count < 1 or max_count < min_count:
            raise GraphError(f"bad component count range [{min_count}, {max_count}]")
        self.min_order = min_order
        self.max_order = max_order
        self.min_count = min_count
        self.max_count = max_count
        self.max_composed = max_composed
        self.r_values = tuple(r_values)

    def to_dict(self) -> dict:
        return {"min_order": self.min_order, "max_order": self.max_order,
                "min_count": self.min_count, "max_count": self.max_count,
                "max_composed": self.max_composed, "r_values": list(self.r_values)}


def _component(rng: random.Random, lo: int, hi: int) -> Graph:
    n = rng.randint(lo, hi)
    return random_connected(n, rng.uniform(0.25, 0.9), rng)


def _sizes_ok(graphs, shared: int, cap: int) -> bool:
    return sum(g.n for g in graphs) - shared <= cap


def _glue_instance(rng, lim: SamplingLimits, r: int, least: int) -> Instance:
    lo = max(lim.min_order, least, r)
    hi = max(lim.max_order, lo)
    for _ in range(1000):
        comps = [_component(rng, lo, hi) for _ in range(2)]
        if not _sizes_ok(comps, r, lim.max_composed):
            continue
        c1, c2 = list(cliques(comps[0], r)), list(cliques(comps[1], r))
        if not c1 or not c2:
            continue
        q2 = list(rng.choice(c2))
        rng.shuffle(q2)
        return Instance("glue", comps, clique1=rng.choice(c1), clique2=tuple(q2), r=r)
    raise GraphError(f"could not sample an r={r} gluing within the size limits")


def _multi(rng, lim: SamplingLimits, lo_count: int, hi_count: int, least: int, shared):
    lo = max(lim.min_order, least)
    hi = max(lim.max_order, lo)
    for _ in range(1000):
        k = rng.randint(max(lim.min_count, lo_count), max(min(lim.max_count, hi_count), lo_count))
        comps = [_component(rng, lo, hi) for _ in range(k)]
        if _sizes_ok(comps, shared(k), lim.max_composed):
            return comps
    raise GraphError("could not sample components within the size limits")


def sample_instance(theorem: str, rng: random.Random, limits: SamplingLimits | None = None) -> Instance:
    """Draw a random instance satisfying the theorem's hypotheses."""
    lim = limits or SamplingLimits()
    if theorem == "disconnected":
        comps = _multi(rng, lim, 2, 2, 1, lambda k: 0)
        return Instance("union", comps)
    if theorem == "v-sum":
        comps = _multi(rng, lim, 2, 4, 1, lambda k: k - 1)
        return Instance("vertex-sum", comps, attachments=[rng.randrange(g.n) for g in comps])
    if theorem == "1-gluing":
        return _glue_instance(rng, lim, 1, 1)
    if theorem in ("2-gluing-upper", "2-gluing-lower"):
        return _glue_instance(rng, lim, 2, 3)
    if theorem == "2-gluing-lower2":
        for _ in range(1000):
            inst = _glue_instance(rng, lim, 2, 3)
            (g1, g2), e1, e2 = inst.components, inst.clique1, inst.clique2
            if g1.degree(e1[0]) + g1.degree(e1[1]) + g2.degree(e2[0]) + g2.degree(e2[1]) >= 7:
                return inst
        raise GraphError("could not sample an edge gluing with Psi >= 7")
    if theorem in ("2-gluing-upper-Kr", "2-gluing-lower-Kr"):
        r = rng.choice(lim.r_values)
        return _glue_instance(rng, lim, r, r + 1)
    if theorem in ("chain", "link"):
        shared = (lambda k: k - 1) if theorem == "chain" else (lambda k: 0)
        comps = _multi(rng, lim, 2, 4, 2, shared)
        att = [tuple(rng.sample(range(g.n), 2)) for g in comps]
        return Instance(theorem, comps, attachments=att)
    if theorem == "circuit":
        comps = _multi(rng, lim, 3, 4, 1, lambda k: 0)
        return Instance("circuit", comps, attachments=[rng.randrange(g.n) for g in comps])
    if theorem in ("edge-deletion", "bridge"):
        lo = max(3, lim.min_order)
        hi = max(lo, min(lim.max_composed, 2 * lim.max_order))
        for _ in range(1000):
            n = rng.randint(lo, hi)
            if theorem == "bridge":
                g = random_connected(n, rng.uniform(0.1, 0.4), rng)
                candidates = g.bridges()
            else:
                g = random_connected(n, rng.uniform(0.2, 0.8), rng)
                candidates = list(g.edges())
            if candidates:
                kind = "edge-delete" if theorem == "edge-deletion" else "bridge"
                return Instance(kind, [g], edge=rng.choice(candidates))
        raise GraphError(f"could not sample a {theorem} instance")
    raise GraphError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREMS)}")


def tightness_search(theorem: str, budget: int, seed=0, side: str | None = None,
                     limits: SamplingLimits | None = None, timeout: float | None = 30.0) -> list[Instance]:
    """Random search for instances where a bound holds with equality.

    ``side`` restricts to ``"lower"`` or ``"upper"`` tightness.  Each hit has
    ``expected`` filled with the component values, the exact value and the
    tight side(s).
    """
    from .verify import HypothesisError, verify_instance

    if theorem not in THEOREMS:
        raise GraphError(f"unknown theorem id {theorem!r}; expected one of {', '.join(THEOREMS)}")
    if side not in (None, "lower", "upper"):
        raise GraphError(f"side must be 'lower' or 'upper', got {side!r}")
    rng = _as_rng(seed)
    hits = []
    for i in range(budget):
        inst = sample_instance(theorem, rng, limits)
        try:
            res = verify_instance(theorem, inst, timeout=timeout)
        except HypothesisError:
            continue
        rep = res.report
        tight = [s for s, t in (("lower", rep.tight_lower), ("upper", rep.tight_upper)) if t]
        if res.timed_out or not tight or (side is not None and side not in tight):
            continue
        inst.name = f"{theorem}-tight-{i}"
        inst.expected = {"gst_components": rep.terms["gst_components"], "gst": rep.exact,
                         "lower_raw": rep.lower_raw, "upper": rep.upper, "tight": tight}
        hits.append(inst)
    return hits
