"""Exact (strong) domination numbers.

Both problems reduce to set cover over closed "cover sets": vertex ``y`` covers
itself and every neighbor ``x`` it may dominate.  For strong domination that
means ``deg(x) <= deg(y)``; for ordinary domination every neighbor qualifies.

Two solvers share that reduction:

* :func:`gamma_st_oracle` / :func:`gamma_oracle` enumerate subsets by
  cardinality, then numeric bitmask order, and return the first valid set.
* :func:`gamma_st` / :func:`gamma` run a depth-first branch and bound.
"""

from __future__ import annotations

import os
import time
from dataclasses import dataclass, field

from .graph import EXACT_VERTEX_LIMIT, CapacityError, Graph, GraphError, members, popcount

__all__ = [
    "SolveResult",
    "is_dominating",
    "is_strong_dominating",
    "strong_cover_sets",
    "dominating_cover_sets",
    "gamma_st_oracle",
    "gamma_oracle",
    "gamma_st",
    "gamma",
    "DEFAULT_ORACLE_LIMIT",
    "DEFAULT_TIMEOUT",
]

DEFAULT_ORACLE_LIMIT = 20
DEFAULT_TIMEOUT = 30.0
LIMIT_ENV = "STRONGDOM_SOLVER_LIMIT"


@dataclass(frozen=True)
class SolveResult:
    value: int
    witness: int
    nodes_explored: int = 0
    elapsed: float = field(default=0.0, compare=False)
    optimal: bool = True

    @property
    def vertices(self) -> list[int]:
        return members(self.witness)

    def to_dict(self) -> dict:
        return {
            "value": self.value,
            "witness": self.vertices,
            "optimal": self.optimal,
            "stats": {"nodes_explored": self.nodes_explored, "elapsed": round(self.elapsed, 6)},
        }


def strong_cover_sets(g: Graph) -> list[int]:
    deg = g.degrees
    covers = []
    for y in range(g.n):
        c = 1 << y
        for x in members(g.adj[y]):
            if deg[x] <= deg[y]:
                c |= 1 << x
        covers.append(c)
    return covers


def dominating_cover_sets(g: Graph) -> list[int]:
    return [g.adj[v] | (1 << v) for v in range(g.n)]


def _covered(covers: list[int], d: int) -> int:
    c = 0
    for v in members(d):
        c |= covers[v]
    return c


def _check_subset(g: Graph, d: int) -> None:
    if d < 0 or d & ~g.full_mask:
        raise GraphError(f"vertex set {members(d) if d >= 0 else d} is not a subset of V(G)")


def is_dominating(g: Graph, d: int) -> bool:
    _check_subset(g, d)
    return _covered(dominating_cover_sets(g), d) == g.full_mask


def is_strong_dominating(g: Graph, d: int) -> bool:
    _check_subset(g, d)
    return _covered(strong_cover_sets(g), d) == g.full_mask


def _env_limit(default: int) -> int:
    raw = os.environ.get(LIMIT_ENV)
    if raw is None:
        return default
    try:
        return int(raw)
    except ValueError:
        raise GraphError(f"{LIMIT_ENV} must be an integer, got {raw!r}") from None


def _isolated(g: Graph) -> int:
    return sum(1 << v for v in range(g.n) if not g.adj[v])


# -- plain enumeration ------------------------------------------------------------

def _same_popcount_masks(pool: list[int], k: int):
    """Subsets of ``pool`` of size ``k`` as bitmasks, in increasing numeric order."""
    m = len(pool)
    if k == 0:
        yield 0
        return
    if k > m:
        return
    # Gosper's hack over positions in ``pool`` (ascending), mapped back to vertex bits.
    x = (1 << k) - 1
    limit = 1 << m
    while x < limit:
        mask = 0
        for i in members(x):
            mask |= 1 << pool[i]
        yield mask
        c = x & -x
        r = x + c
        x = (((r ^ x) >> 2) // c) | r


def _oracle(g: Graph, covers: list[int], limit: int | None) -> SolveResult:
    if limit is None:
        limit = _env_limit(DEFAULT_ORACLE_LIMIT)
    if g.n == 0:
        raise GraphError("domination number is undefined for the empty graph")
    if g.n > limit:
        raise CapacityError(f"oracle limit is {limit} vertices, graph has {g.n}")
    start = time.perf_counter()
    full = g.full_mask
    forced = _isolated(g)
    pool = [v for v in range(g.n) if not forced >> v & 1]
    base = _covered(covers, forced)
    checked = 0
    for k in range(len(pool) + 1):
        for extra in _same_popcount_masks(pool, k):
            checked += 1
            c = base
            for v in members(extra):
                c |= covers[v]
            if c == full:
                d = forced | extra
                return SolveResult(popcount(d), d, checked, time.perf_counter() - start)
    raise AssertionError("the full vertex set always dominates")  # pragma: no cover


def gamma_st_oracle(g: Graph, limit: int | None = None) -> SolveResult:
    """Strong domination number by exhaustive enumeration (default cap 20 vertices)."""
    return _oracle(g, strong_cover_sets(g), limit)


def gamma_oracle(g: Graph, limit: int | None = None) -> SolveResult:
    return _oracle(g, dominating_cover_sets(g), limit)


# -- branch and bound ---------------------------------------------------------------

class _Timeout(Exception):
    pass


class _Search:
    def __init__(self, g: Graph, covers: list[int], timeout: float | None):
        self.n = g.n
        self.deg = g.degrees
        self.covers = covers
        self.full = g.full_mask
        # coverers[x]: vertices whose cover set contains x
        self.coverers = [0] * g.n
        for y, c in enumerate(covers):
            for x in members(c):
                self.coverers[x] |= 1 << y
        self.nodes = 0
        self.deadline = None if timeout is None else time.perf_counter() + timeout
        self.best_size = g.n + 1
        self.best = self.full

    def greedy(self, chosen: int, covered: int, allowed: int) -> int:
        """Greedy completion; returns a full cover or -1 if ``allowed`` cannot finish."""
        while covered != self.full:
            best_v, best_gain = -1, 0
            for v in members(allowed & ~chosen):
                gain = popcount(self.covers[v] & ~covered)
                if gain > best_gain or (gain == best_gain and gain and self.deg[v] > self.deg[best_v]):
                    best_v, best_gain = v, gain
            if best_v < 0:
                return -1
            chosen |= 1 << best_v
            covered |= self.covers[best_v]
        return chosen

    def lower_bound(self, uncovered: int, allowed: int) -> int:
        # Packing bound: uncovered vertices with pairwise disjoint coverer sets
        # each need their own chosen vertex.
        used = 0
        packing = 0
        for x in members(uncovered):
            cx = self.coverers[x] & allowed
            if not cx & used:
                used |= cx
                packing += 1
        # Counting bound: no single vertex covers more than max_gain uncovered vertices.
        max_gain = 0
        for v in members(allowed):
            gain = popcount(self.covers[v] & uncovered)
            if gain > max_gain:
                max_gain = gain
        counting = -(-popcount(uncovered) // max_gain) if max_gain else self.n + 1
        return max(packing, counting)

    def run(self, chosen: int, excluded: int) -> None:
        covered = 0
        for v in members(chosen):
            covered |= self.covers[v]
        allowed = self.full & ~excluded
        seed = self.greedy(chosen, covered, allowed)
        if seed >= 0:
            self.best, self.best_size = seed, popcount(seed)
        self._branch(chosen, covered, excluded)

    def _branch(self, chosen: int, covered: int, excluded: int) -> None:
        self.nodes += 1
        if self.deadline is not None and self.nodes & 0xFF == 0 and time.perf_counter() > self.deadline:
            raise _Timeout
        size = popcount(chosen)
        while True:
            if covered == self.full:
                if size < self.best_size:
                    self.best, self.best_size = chosen, size
                return
            if size + 1 >= self.best_size:
                return
            allowed = self.full & ~excluded & ~chosen
            uncovered = self.full & ~covered
            # Most constrained uncovered vertex; force it when it has one coverer.
            target, target_opts = -1, 0
            for x in members(uncovered):
                opts = self.coverers[x] & allowed
                k = popcount(opts)
                if k == 0:
                    return
                if target < 0 or k < popcount(target_opts):
                    target, target_opts = x, opts
                    if k == 1:
                        break
            if popcount(target_opts) == 1:
                chosen |= target_opts
                covered |= self.covers[members(target_opts)[0]]
                size += 1
                continue
            break
        if size + self.lower_bound(uncovered, allowed) >= self.best_size:
            return
        # Branch vertex: maximum degree among the target's coverers, then lowest id.
        v = max(members(target_opts), key=lambda w: (self.deg[w], -w))
        bit = 1 << v
        self._branch(chosen | bit, covered | self.covers[v], excluded)
        self._branch(chosen, covered, excluded | bit)


def _bnb(g: Graph, covers: list[int], timeout: float | None, limit: int | None) -> SolveResult:
    if limit is None:
        limit = _env_limit(EXACT_VERTEX_LIMIT)
    if g.n == 0:
        raise GraphError("domination number is undefined for the empty graph")
    if g.n > limit:
        raise CapacityError(f"exact solver limit is {limit} vertices, graph has {g.n}")
    start = time.perf_counter()
    search = _Search(g, covers, timeout)
    forced = _isolated(g)
    optimal = True
    try:
        search.run(forced, 0)
    except _Timeout:
        optimal = False
    return SolveResult(search.best_size, search.best, search.nodes,
                       time.perf_counter() - start, optimal)


def gamma_st(g: Graph, timeout: float | None = DEFAULT_TIMEOUT, limit: int | None = None) -> SolveResult:
    """Strong domination number by branch and bound.

    On timeout the best set found so far is returned with ``optimal=False``.
    """
    return _bnb(g, strong_cover_sets(g), timeout, limit)


def gamma(g: Graph, timeout: float | None = DEFAULT_TIMEOUT, limit: int | None = None) -> SolveResult:
    return _bnb(g, dominating_cover_sets(g), timeout, limit)
