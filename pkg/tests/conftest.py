"""Shared helpers: an independent set-based oracle and acceptance summary lines."""

from itertools import combinations

import pytest

ACCEPTANCE_LINES: list[str] = []


def _adjacency(n, edges):
    adj = {v: set() for v in range(n)}
    for u, v in edges:
        adj[u].add(v)
        adj[v].add(u)
    return adj


def brute_min(n, edges, strong=True):
    """Smallest (strong) dominating set size by itertools enumeration."""
    adj = _adjacency(n, edges)
    deg = {v: len(adj[v]) for v in adj}

    def ok(d):
        for x in range(n):
            if x in d:
                continue
            if not any(y in d and (not strong or deg[x] <= deg[y]) for y in adj[x]):
                return False
        return True

    for k in range(n + 1):
        for d in combinations(range(n), k):
            if ok(set(d)):
                return k
    raise AssertionError("unreachable")


def brute_graph(g, strong=True):
    return brute_min(g.n, list(g.edges()), strong)


def record(criterion: str, passed: bool, detail: str) -> None:
    line = f"[{'PASS' if passed else 'FAIL'}] {criterion}: {detail}"
    ACCEPTANCE_LINES.append(line)
    print(line)


@pytest.fixture
def acceptance_record():
    return record


def pytest_terminal_summary(terminalreporter):
    if ACCEPTANCE_LINES:
        terminalreporter.section("acceptance criteria")
        for line in ACCEPTANCE_LINES:
            terminalreporter.write_line(line)
