import random

import pytest

from strongdom import GraphError, emit_edge_list
from strongdom.bounds import THEOREMS
from strongdom.families import (SamplingLimits, fig_example, fig_example3, random_connected,
                                random_tree, sample_instance, tightness_search)
from strongdom.instance import Instance, load_instance
from strongdom.verify import verify_instance


def test_fig_example_shape():
    inst = fig_example()
    assert [g.n for g in inst.components] == [3, 5]
    assert inst.compose().graph.n == 6


def test_fig_example3_shape():
    inst = fig_example3(3)
    assert inst.compose().graph.n == 4 + 6 - 3
    with pytest.raises(GraphError):
        fig_example3(1)


@pytest.mark.parametrize("n", [1, 2, 3, 8, 15])
def test_random_tree(n):
    t = random_tree(n, seed=n)
    assert t.is_connected() and t.num_edges == n - 1


def test_random_connected_deterministic():
    a = random_connected(9, 0.3, seed=4)
    assert a.is_connected()
    assert emit_edge_list(a) == emit_edge_list(random_connected(9, 0.3, seed=4))


def test_random_connected_errors():
    with pytest.raises(GraphError):
        random_connected(4, 0.0, seed=1)
    with pytest.raises(GraphError):
        random_connected(10, 0.01, seed=1, retries=1, fallback=False)


@pytest.mark.parametrize("theorem", THEOREMS)
def test_samples_satisfy_hypotheses(theorem):
    rng = random.Random(theorem)
    lim = SamplingLimits(min_order=2)
    for _ in range(10):
        inst = sample_instance(theorem, rng, lim)
        assert inst.compose().graph.n <= lim.max_composed
        verify_instance(theorem, inst)  # raises HypothesisError if out of scope


def test_circuit_sample_counts():
    rng = random.Random(0)
    counts = {len(sample_instance("circuit", rng).components) for _ in range(60)}
    assert counts == {3, 4}


def test_tightness_search():
    assert tightness_search("2-gluing-lower", 0) == []
    hits = tightness_search("2-gluing-lower", 60, seed=1, side="lower")
    assert hits
    for h in hits:
        assert verify_instance("2-gluing-lower", h).report.tight_lower
    again = tightness_search("2-gluing-lower", 60, seed=1, side="lower")
    assert [h.to_json() for h in hits] == [h.to_json() for h in again]


def test_instance_bundle_roundtrip(tmp_path):
    inst = fig_example3(3)
    path = inst.write_bundle(tmp_path / "b")
    back = load_instance(path)
    assert back.to_json() == inst.to_json()
    assert isinstance(back, Instance)
