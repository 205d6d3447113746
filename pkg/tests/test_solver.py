import random

import pytest

from conftest import brute_graph
from strongdom import (CapacityError, Graph, GraphError, complete, cycle, gamma, gamma_oracle,
                       gamma_st, gamma_st_oracle, is_dominating, is_strong_dominating, mask_of,
                       path, star)
from strongdom.families import random_connected
from strongdom.solver import LIMIT_ENV


def test_predicates_examples():
    # P_3: the centre alone dominates and strongly dominates
    assert is_strong_dominating(path(3), mask_of([1]))
    # a leaf cannot strongly dominate the higher-degree centre
    assert not is_strong_dominating(path(3), mask_of([0]))
    # P_4 with {0, 3}: dominating, but vertex 1 (deg 2) sees only vertex 0 (deg 1)
    assert is_dominating(path(4), mask_of([0, 3]))
    assert not is_strong_dominating(path(4), mask_of([0, 3]))
    assert is_strong_dominating(path(4), mask_of([1, 2]))


def test_predicates_reject_foreign_vertices():
    with pytest.raises(GraphError):
        is_strong_dominating(path(2), mask_of([0, 5]))


@pytest.mark.parametrize("g, value", [
    (complete(5), 1), (star(6), 1), (path(4), 2), (path(5), 2), (path(6), 2), (cycle(6), 2),
    (Graph(3, [0, 0, 0]), 3), (Graph(1, [0]), 1),
])
def test_known_values(g, value):
    assert brute_graph(g) == value
    assert gamma_st_oracle(g).value == value
    assert gamma_st(g).value == value


@pytest.mark.parametrize("seed", range(60))
def test_bnb_matches_oracle_and_independent_brute(seed):
    rng = random.Random(seed)
    n = rng.randint(1, 10)
    g = random_connected(n, rng.uniform(0.2, 0.8), rng)
    want = brute_graph(g)
    got = gamma_st(g)
    assert gamma_st_oracle(g).value == want
    assert got.value == want and got.optimal
    assert is_strong_dominating(g, got.witness) and got.witness.bit_count() == want
    assert gamma(g).value == gamma_oracle(g).value == brute_graph(g, strong=False)
    assert gamma(g).value <= got.value


@pytest.mark.parametrize("n", range(3, 13))
def test_regular_identity_on_cycles(n):
    assert gamma_st_oracle(cycle(n)).value == gamma_oracle(cycle(n)).value


def test_witness_is_minimum_not_just_valid():
    res = gamma_st(cycle(9))
    assert res.value == 3
    for v in res.vertices:
        assert not is_strong_dominating(cycle(9), res.witness & ~(1 << v))


def test_disconnected_with_isolated_vertices():
    g = Graph.from_edges(5, [(0, 1), (1, 2)])
    assert gamma_st(g).value == gamma_st_oracle(g).value == brute_graph(g) == 3


def test_empty_graph_rejected():
    with pytest.raises(GraphError):
        gamma_st_oracle(Graph(0, []))


def test_capacity_limits(monkeypatch):
    with pytest.raises(CapacityError):
        gamma_st_oracle(path(21))
    with pytest.raises(CapacityError):
        gamma_st(path(65))
    monkeypatch.setenv(LIMIT_ENV, "5")
    with pytest.raises(CapacityError):
        gamma_st_oracle(path(6))
    assert gamma_st_oracle(path(5)).value == 2


def test_large_graph_within_capacity():
    rng = random.Random(7)
    g = random_connected(64, 0.08, rng)
    res = gamma_st(g, timeout=60)
    assert res.optimal and is_strong_dominating(g, res.witness)


def test_timeout_returns_valid_upper_bound():
    g = random_connected(60, 0.1, random.Random(3))
    res = gamma_st(g, timeout=0.0)
    assert is_strong_dominating(g, res.witness)
    assert res.witness.bit_count() == res.value


def test_result_dict_shape():
    d = gamma_st(path(4)).to_dict()
    assert d["value"] == 2 and d["optimal"] is True
    assert set(d["stats"]) == {"nodes_explored", "elapsed"}
