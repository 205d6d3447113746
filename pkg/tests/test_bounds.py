import random

import pytest

from conftest import brute_graph
from strongdom import CompositionSpec, Graph, GraphError, GluingSpec, complete, cycle, path, star
from strongdom.bounds import (THEOREMS, bound_bridge, bound_chain, bound_circuit,
                              bound_disjoint_union, bound_edge_deletion, bound_edge_glue,
                              bound_kr_glue_upper, bound_link, bound_one_glue, bound_vertex_sum,
                              conjecture_kr_glue_lower, psi_12, psi_r)
from strongdom.compose import enumerate_r_gluings, link, r_glue, vertex_sum
from strongdom.families import random_connected
from strongdom.instance import Instance
from strongdom.verify import HypothesisError, verify_instance


def test_theorem_ids():
    assert len(THEOREMS) == len(set(THEOREMS)) == 13


def test_disjoint_union():
    b = bound_disjoint_union(1, 2)
    assert b.lower == b.upper == 3


def test_vertex_sum_two_stars():
    b = bound_vertex_sum([1, 1], [2, 2])
    assert (b.lower_raw, b.lower, b.upper) == (-1, 1, 3)
    assert brute_graph(vertex_sum([star(2), star(2)], [0, 0]).graph) == 1


def test_vertex_sum_k2_matches_one_glue():
    assert bound_vertex_sum([3, 2], [4, 1]) == bound_one_glue(3, 2, 4, 1)


def test_vertex_sum_length_mismatch():
    with pytest.raises(GraphError):
        bound_vertex_sum([1, 2], [1])


def test_edge_glue_two_triangles():
    b = bound_edge_glue(complete(3), (0, 1), complete(3), (0, 1), 1, 1)
    assert (b.lower_raw, b.upper, b.psi, b.lower2_raw) == (-1, 3, 8, 0)
    g = r_glue(complete(3), complete(3), GluingSpec(2, (0, 1), (0, 1))).graph
    assert brute_graph(g) == 1


def test_edge_glue_needs_order_three():
    with pytest.raises(GraphError):
        bound_edge_glue(path(2), (0, 1), complete(3), (0, 1), 1, 1)


def test_psi_at_least_six():
    rng = random.Random(11)
    for _ in range(100):
        g1 = random_connected(rng.randint(3, 7), 0.5, rng)
        g2 = random_connected(rng.randint(3, 7), 0.5, rng)
        e1, e2 = rng.choice(list(g1.edges())), rng.choice(list(g2.edges()))
        assert psi_12(g1, e1, g2, e2).psi_12 >= 6


def test_conjecture_r2_is_edge_glue_lower():
    rng = random.Random(5)
    for _ in range(50):
        g1 = random_connected(rng.randint(3, 6), 0.6, rng)
        g2 = random_connected(rng.randint(3, 6), 0.6, rng)
        e1, e2 = rng.choice(list(g1.edges())), rng.choice(list(g2.edges()))
        c = conjecture_kr_glue_lower(g1, e1, g2, e2, 2, 3)
        assert c.lower == bound_edge_glue(g1, e1, g2, e2, 2, 3).lower_raw


def test_kr_upper_k4_k4():
    assert bound_kr_glue_upper(1, 1, r=3, orders=(4, 4)) == 3
    g = r_glue(complete(4), complete(4), GluingSpec(3, (0, 1, 2), (0, 1, 2))).graph
    assert brute_graph(g) == 1
    with pytest.raises(GraphError):
        bound_kr_glue_upper(1, 1, r=3, orders=(3, 4))


def test_psi_r_on_clique():
    assert psi_r(complete(4), (0, 1, 2)) == 9


def test_chain_examples():
    assert bound_chain([3], [], []).lower_raw == bound_chain([3], [], []).upper == 3
    b = bound_chain([1, 1], [1], [1])
    assert (b.lower_raw, b.upper) == (1, 3)
    assert brute_graph(path(5)) == 2  # two P_3 chained end to end


def test_link_examples():
    assert bound_link([2], [], []).upper == 2
    b = bound_link([1, 1], [2], [2])
    assert (b.lower_raw, b.upper) == (0, 3)
    cg = link([complete(3), complete(3)], CompositionSpec("link", [(0, 1), (0, 1)]))
    assert brute_graph(cg.graph) == 2


def test_circuit_arithmetic_and_bad_n():
    assert (bound_circuit([1, 1, 1], [0, 0, 0]).lower_raw, bound_circuit([1, 1, 1], [0, 0, 0]).upper) == (6, 4)
    assert bound_circuit([1, 1, 1], [2, 2, 2]).lower_raw == 0
    with pytest.raises(GraphError):
        bound_circuit([1, 1], [0, 0])


def test_edge_deletion_examples():
    b = bound_edge_deletion(2, 2, 2)
    assert (b.lower_raw, b.upper) == (1, 4)
    assert brute_graph(path(4)) == 2
    b = bound_edge_deletion(1, 2, 2)
    assert (b.lower_raw, b.lower, b.upper) == (0, 1, 3)
    with pytest.raises(GraphError):
        bound_edge_deletion(1, 1, 1, is_k2=True)


def test_bridge_examples():
    assert bound_bridge(1, 1, 3, 3).lower_raw == -2
    assert bound_bridge(1, 1, 2, 2).lower_raw == 0
    assert brute_graph(path(4)) == 2


def test_bridge_hypothesis_checked():
    with pytest.raises(HypothesisError):
        verify_instance("bridge", Instance("bridge", [cycle(4)], edge=(0, 1)))


# Pinned findings: instances where the literal statements fail.

def test_edge_glue_lower_counterexample_p6():
    # two P_4 glued leaf-to-internal along end edges: the result is P_6
    g1 = path(4)
    g2 = Graph.from_edges(4, [(0, 1), (0, 3), (2, 3)])  # path 1-0-3-2
    inst = Instance("glue", [g1, g2], clique1=(0, 1), clique2=(3, 2), r=2)
    res = verify_instance("2-gluing-lower", inst)
    assert res.report.terms["psi_12"] == 6
    assert (res.report.lower_raw, res.report.exact) == (3, 2)
    assert brute_graph(inst.compose().graph) == 2
    assert res.violation


def test_edge_glue_lower2_counterexample():
    g1 = Graph.from_edges(5, [(0, 3), (1, 3), (2, 3), (2, 4)])
    g2 = cycle(4)
    inst = Instance("glue", [g1, g2], clique1=(2, 4), clique2=(1, 2), r=2)
    res = verify_instance("2-gluing-lower2", inst)
    assert (res.report.lower_raw, res.report.exact) == (3, 2)
    assert brute_graph(inst.compose().graph) == 2


def test_vertex_sum_with_k1_is_degenerate():
    inst = Instance("vertex-sum", [Graph(1, [0]), path(3)], attachments=[0, 0])
    res = verify_instance("v-sum", inst)
    assert (res.report.lower_raw, res.report.exact) == (2, 1)


def test_link_local_degrees_fail_composed_hold():
    # K_2 linked to a leaf of P_4 gives P_6
    p4 = Graph.from_edges(4, [(0, 1), (0, 2), (2, 3)])
    inst = Instance("link", [path(2), p4], attachments=[(1, 0), (3, 2)])
    res = verify_instance("link", inst)
    assert res.report.terms["lower_local_raw"] == bound_link([1, 2], [1], [1]).lower_raw == 3
    assert res.report.exact == brute_graph(path(6)) == 2
    assert res.report.holds


def test_link_rejects_equal_attachments():
    with pytest.raises(GraphError):
        Instance("link", [Graph(1, [0])] * 2, attachments=[(0, 0), (0, 0)]).compose()


def test_circuit_local_degrees_fail_composed_hold():
    comps = [path(2), path(4), path(4)]
    local = bound_circuit([1, 2, 2], [1, 1, 1]).lower_raw
    inst = Instance("circuit", comps, attachments=[0, 0, 0])
    res = verify_instance("circuit", inst)
    assert res.report.exact == brute_graph(inst.compose().graph) == 3
    assert local == 5 > res.report.exact
    assert res.report.holds
