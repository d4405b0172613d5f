"""Exact verification of the supercharge algebra and grading relations."""

from __future__ import annotations

import random

from hypothesis import given, settings
from hypothesis import strategies as st

from conftest import directed_graphs
from susygraph.graph import DirectedGraph, reorient
from susygraph.operators import build_incidence, build_super_operators, build_vertex_operators
from susygraph.rand import random_reorientation
from susygraph.susy import verify_factorizations, verify_grading, verify_superalgebra

SUPER_RELATIONS = 18
GRADING_RELATIONS = 13


def reports_for(g: DirectedGraph):
    inc = build_incidence(g)
    sup = build_super_operators(inc)
    return (
        verify_superalgebra(sup),
        verify_grading(sup),
        verify_factorizations(inc, build_vertex_operators(inc)),
    )


def assert_all_exact(g: DirectedGraph):
    alg, gra, fact = reports_for(g)
    assert len(alg.checks) == SUPER_RELATIONS
    assert len(gra.checks) == GRADING_RELATIONS
    for rep in (alg, gra, fact):
        assert rep.all_hold, [c.name for c in rep.failed()]
        assert all(c.residual == 0 for c in rep.checks)
        assert rep.failed() == []


def test_k2_all_relations_exact():
    assert_all_exact(DirectedGraph(2, ((0, 1),)))


def test_c3_all_relations_exact():
    assert_all_exact(DirectedGraph(3, ((0, 1), (1, 2), (2, 0))))


def test_edgeless_graph_trivially_passes():
    assert_all_exact(DirectedGraph(3, ()))


def test_seeded_random_graph_passes():
    from susygraph.rand import random_graph

    g = random_graph(random.Random(1), 30, 0.2)
    assert_all_exact(g)


def test_relation_names_and_lookup():
    alg, gra, _ = reports_for(DirectedGraph(2, ((0, 1),)))
    c = alg.by_name("q_plus squares to zero")
    assert c.holds and c.residual == 0
    assert gra.by_name("grading squares to identity").holds
    try:
        alg.by_name("no such relation")
    except KeyError:
        pass
    else:
        raise AssertionError("expected KeyError")


@settings(max_examples=60)
@given(directed_graphs(max_vertices=10))
def test_all_relations_exact_on_random_graphs(g):
    assert_all_exact(g)


@settings(max_examples=25)
@given(directed_graphs(min_vertices=2, max_vertices=8, mode="oriented"), st.integers(0, 2**31))
def test_relations_invariant_under_reorientation(g, seed):
    flips = random_reorientation(random.Random(seed), g)
    assert_all_exact(reorient(g, flips))


@settings(max_examples=25)
@given(directed_graphs(min_vertices=2, max_vertices=8), st.randoms(use_true_random=False))
def test_relations_invariant_under_relabeling(g, rng):
    perm = list(range(g.num_vertices))
    rng.shuffle(perm)
    relabeled = DirectedGraph(
        g.num_vertices,
        tuple((perm[t], perm[h]) for t, h in g.edges),
        g.mode,
    )
    assert_all_exact(relabeled)


def test_laplacian_exactly_invariant_under_reorientation():
    g = DirectedGraph(4, ((0, 1), (1, 2), (2, 3), (3, 0), (0, 2)))
    vops = build_vertex_operators(build_incidence(g))
    for flips in ([0], [1, 3], [0, 1, 2, 3, 4]):
        flipped = reorient(g, flips)
        vops2 = build_vertex_operators(build_incidence(flipped))
        assert vops2.laplacian == vops.laplacian
