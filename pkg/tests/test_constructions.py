import random

import pytest

import anchors
from vgr.canon import are_isomorphic
from vgr.constructions import (
    NonIntegerLambda,
    PreconditionViolated,
    cartesian_product,
    complete_bipartite,
    complete_graph,
    cycle_graph,
    double_complete,
    egr_to_vgr_lambda,
    generalized_truncation,
)
from vgr.graph import Graph, VgrProfile, classify


def test_basic_families():
    assert classify(complete_graph(4)) == VgrProfile(4, 3, 3, 3, True, False, 2)
    assert classify(complete_bipartite(3, 3)) == VgrProfile(6, 3, 4, 6, True, True, 4)
    assert classify(cycle_graph(5)) == VgrProfile(5, 2, 5, 1, True, False, 1)
    with pytest.raises(ValueError):
        complete_graph(0)
    with pytest.raises(ValueError):
        cycle_graph(2)


def test_edge_to_vertex_count_conversion():
    assert egr_to_vgr_lambda(3, 4) == 6      # Petersen
    assert egr_to_vgr_lambda(3, 8) == 12     # Heawood
    assert egr_to_vgr_lambda(4, 2) == 4
    with pytest.raises(NonIntegerLambda):
        egr_to_vgr_lambda(3, 3)


def test_double_complete():
    g = double_complete(3)
    assert are_isomorphic(g, anchors.prism())
    for k in (3, 4, 5, 6):
        prof = classify(double_complete(k))
        want = VgrProfile(2 * k, k, 3, (k - 1) * (k - 2) // 2, False, False)
        assert prof == want


def test_truncation_pentagon_into_k6():
    # every K6 vertex becomes a 5-cycle; degree 2 -> 3, girth 5 kept
    g = generalized_truncation(cycle_graph(5), complete_graph(6))
    prof = classify(g)
    assert prof == VgrProfile(30, 3, 5, 1, False, False)


def test_truncation_triangle_into_petersen():
    # the classical truncation: vertices blown up into triangles
    g = generalized_truncation(cycle_graph(3), anchors.petersen())
    prof = classify(g)
    assert (prof.v, prof.k, prof.g, prof.lam) == (30, 3, 3, 1)


def test_truncation_preconditions():
    with pytest.raises(PreconditionViolated):
        # host degree differs from base order
        generalized_truncation(cycle_graph(5), anchors.quartic25())
    with pytest.raises(PreconditionViolated):
        # host girth 3 is not above base girth 6 / 2
        generalized_truncation(cycle_graph(6), complete_graph(7))
    with pytest.raises(PreconditionViolated):
        # base vertices must all carry the same cycle count
        bad = Graph(8, [(0, 1), (1, 2), (2, 0), (3, 4), (4, 5), (5, 3),
                        (0, 6), (3, 6), (6, 7), (1, 7), (4, 7), (2, 5)])
        generalized_truncation(bad, complete_graph(9))


def test_truncation_respects_seed():
    base = cycle_graph(3)
    host = anchors.petersen()
    g1 = generalized_truncation(base, host, rng=random.Random(9))
    g2 = generalized_truncation(base, host, rng=random.Random(9))
    assert g1 == g2


def test_cartesian_product_shapes():
    # C4 x K2 is the cube
    g = cartesian_product(cycle_graph(4), complete_graph(3))
    prof = classify(g)
    assert (prof.v, prof.k) == (12, 4)
    h = cartesian_product(complete_graph(2), complete_graph(2))
    assert are_isomorphic(h, cycle_graph(4))


def test_cartesian_product_of_triangle_factors():
    # equal per-edge counts in both girth-3 factors multiply up
    a = complete_graph(4)
    g = cartesian_product(a, a)
    prof = classify(g)
    assert prof == VgrProfile(16, 6, 3, 6, True, False, 2)
    b = complete_graph(5)
    prof = classify(cartesian_product(b, b))
    assert (prof.v, prof.k, prof.g) == (25, 8, 3)
    assert prof.is_egr and prof.lambda_edge == 3


def test_cartesian_product_order_cap():
    with pytest.raises(ValueError):
        cartesian_product(complete_graph(30), complete_graph(30))
