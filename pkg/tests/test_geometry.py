"""The two incidence geometries and the amalgams anchored in them."""

import pytest

from amalgamlab.amalgam import ROWS_BY_LABEL
from amalgamlab.geometry import (
    build_q4_amalgam,
    build_q5_amalgam,
    gq44_incidence_graph,
    gq_axiom_holds,
    pg24_incidence_graph,
    psl34_overgroup,
)
from amalgamlab.graphsym import graph_automorphisms


class TestPlane:
    def test_counts(self):
        graph = pg24_incidence_graph()
        assert graph.n == 42
        degrees = [len(graph.adj[v]) for v in range(graph.n)]
        assert degrees == [5] * 42

    def test_girth(self):
        assert pg24_incidence_graph().girth() == 6

    def test_automorphism_order(self):
        # independent search agrees with the constructed overgroup
        aut = graph_automorphisms(pg24_incidence_graph())
        assert aut.order() == 241920
        assert psl34_overgroup()["group"].order() == 241920

    def test_overgroup_preserves_edges(self):
        graph = pg24_incidence_graph()
        edges = graph.edge_set()
        for g in psl34_overgroup()["group"].generators:
            assert frozenset(frozenset((g(u), g(v)))
                             for u, v in graph.edges()) == edges


class TestQuadrangle:
    def test_counts(self):
        graph = gq44_incidence_graph()
        assert graph.n == 170
        degrees = [len(graph.adj[v]) for v in range(graph.n)]
        assert degrees == [5] * 170

    def test_girth(self):
        assert gq44_incidence_graph().girth() == 8

    def test_axiom(self):
        assert gq_axiom_holds()

    def test_automorphism_order(self):
        aut = graph_automorphisms(gq44_incidence_graph())
        assert aut.order() == 3916800


class TestAnchoredAmalgams:
    @pytest.mark.parametrize("label", ["Q4^1", "Q4^2", "Q4^3", "Q4^4",
                                       "Q4^5", "Q4^6"])
    def test_q4_orders(self, label):
        a1, a2, b, _ = build_q4_amalgam(label)
        row = ROWS_BY_LABEL[label]
        assert b.order() == row.b_order
        assert a1.order() == 5 * row.b_order
        assert a2.order() == 2 * row.b_order

    def test_q4_1_orders_exact(self):
        a1, a2, b, _ = build_q4_amalgam("Q4^1")
        assert (a1.order(), a2.order(), b.order()) == (960, 384, 192)

    def test_q5_orders(self):
        a1, a2, b, _ = build_q5_amalgam()
        assert (a1.order(), a2.order(), b.order()) == (23040, 9216, 4608)
