"""Tests for invariants module"""
import networkx as nx
import numpy as np
import pytest

from src.core.errors import CatalogError
from src.graphs.comaximal import ComaximalGraph, Vertex
from src.graphs.invariants import (
    borel_coloring_sl2,
    compute_bundle,
    degree_profile,
    girth,
    is_planar,
    isolated_and_frattini_check,
    metric_invariants,
)
from src.graphs.solvers import check_coloring
from tests.conftest import graph_of

BUDGET = 200_000


def synthetic(algebra, graph: nx.Graph) -> ComaximalGraph:
    """A ComaximalGraph carrying an arbitrary adjacency, for metric tests"""
    n = graph.number_of_nodes()
    vertices = [Vertex(algebra.whole(), "other-dim", "other-dim")] * n
    return ComaximalGraph(algebra, vertices, nx.to_numpy_array(graph, nodelist=range(n), dtype=bool))


class TestMetrics:
    """Tests for girth, eccentricities, diameter, radius and center"""

    @pytest.mark.parametrize(
        "graph,expected",
        [
            (nx.complete_graph(4), 3),
            (nx.cycle_graph(4), 4),
            (nx.cycle_graph(5), 5),
            (nx.petersen_graph(), 5),
            (nx.path_graph(4), float("inf")),
        ],
    )
    def test_girth(self, sl2_3, graph, expected):
        assert girth(synthetic(sl2_3, graph)) == expected

    def test_sl2_metrics(self, sl2_3_graph):
        metrics = metric_invariants(sl2_3_graph)
        assert metrics.is_connected
        assert metrics.diameter == 2
        assert metrics.radius == 1
        assert [sl2_3_graph.vertices[i].kind for i in metrics.center] == ["line-nonsplit"] * 3
        assert metrics.girth == 3

    def test_disconnected(self, F2):
        _, _, G = graph_of("heisenberg3", F2)
        metrics = metric_invariants(G)
        assert not metrics.is_connected
        assert metrics.diameter == float("inf")
        assert metrics.center == []
        assert metric_invariants(G.star()).diameter == 2

    def test_empty_graph(self, F3):
        _, _, G = graph_of("dim1", F3)
        metrics = metric_invariants(G)
        assert (metrics.is_connected, metrics.diameter, metrics.radius, metrics.center) == (False, 0, 0, [])
        assert metrics.girth == float("inf")


class TestDegreeProfile:
    """Tests for degree_profile"""

    def test_sl2_classes(self, sl2_3_graph):
        profile = degree_profile(sl2_3_graph)
        assert profile.by_class == {
            "borel": (4, [12]),
            "line-nilpotent": (4, [12]),
            "line-nonsplit": (3, [16]),
            "line-split": (6, [8]),
        }
        assert profile.sequence[:3] == [16, 16, 16]

    def test_heisenberg_classes(self, F3):
        _, _, G = graph_of("heisenberg3", F3)
        assert degree_profile(G).by_class == {
            "line:central": (1, [0]),
            "line:noncentral": (12, [12]),
            "plane": (4, [12]),
        }


class TestPlanarity:
    """Tests for is_planar"""

    def test_k4_is_planar(self, F3):
        _, _, G = graph_of("abelian2", F3)
        assert is_planar(G)

    def test_k6_is_not(self, F5):
        _, _, G = graph_of("abelian2", F5)
        assert not is_planar(G)

    def test_clique_filter(self, sl2_3_graph):
        assert not is_planar(sl2_3_graph, clique_size=7)


class TestSl2Coloring:
    """Tests for the Borel coloring hint"""

    def test_proper_with_omega_colors(self, sl2_3_graph):
        coloring = borel_coloring_sl2(sl2_3_graph)
        check_coloring(sl2_3_graph.masks, coloring)
        assert len(set(coloring)) == 7

    def test_other_family(self, F3):
        _, _, G = graph_of("su2", F3)
        with pytest.raises(CatalogError):
            borel_coloring_sl2(G)


class TestBundle:
    """Tests for compute_bundle and witness verification"""

    def test_sl2_over_f3(self, sl2_3_graph):
        bundle = compute_bundle(sl2_3_graph, BUDGET, hint=borel_coloring_sl2(sl2_3_graph))
        assert (bundle.order, bundle.size) == (17, 96)
        assert bundle.clique_number == 7
        assert bundle.chromatic_number == 7
        assert bundle.domination_number == 1
        assert not bundle.domination_on_star
        assert bundle.is_planar is False
        assert not bundle.is_regular and not bundle.is_complete
        assert bundle.undecided == {}
        assert bundle.verify_witnesses(sl2_3_graph) == []

    def test_without_hint_agrees(self, sl2_3_graph):
        bundle = compute_bundle(sl2_3_graph, BUDGET)
        assert bundle.chromatic_number == 7
        assert bundle.verify_witnesses(sl2_3_graph) == []

    @pytest.mark.slow
    def test_sl2_over_f5(self, F5):
        L, _, G = graph_of("sl2", F5)
        bundle = compute_bundle(G, BUDGET, hint=borel_coloring_sl2(G))
        assert bundle.order == 31 + 6
        assert bundle.clique_number == 16
        assert bundle.chromatic_number == 16

    def test_heisenberg_over_f2(self, F2):
        """The star is K_{3,3,3}: one part per plane, holding the plane and its two noncentral lines"""
        _, inventory, G = graph_of("heisenberg3", F2)
        bundle = compute_bundle(G, BUDGET)
        assert bundle.chromatic_number == 3
        assert bundle.clique_number == 3
        assert bundle.domination_number == 2
        assert bundle.domination_on_star
        assert "domination number computed on the graph without isolated vertices" in bundle.notes
        assert bundle.verify_witnesses(G) == []
        check = isolated_and_frattini_check(G, inventory)
        assert check.ok and check.counterexamples == []

    def test_abelian3_over_f2(self, F2):
        """Two planes never dominate the line they share, and lines only dominate planes"""
        _, _, G = graph_of("abelian3", F2)
        bundle = compute_bundle(G, BUDGET)
        assert bundle.order == 14
        assert bundle.domination_number == 3
        assert bundle.clique_number == 7

    def test_empty_graph(self, F3):
        _, _, G = graph_of("dim1", F3)
        bundle = compute_bundle(G, BUDGET)
        assert bundle.notes == ["graph has no vertices"]
        data = bundle.to_json()
        assert data["girth"] == "inf"
        assert data["diameter"] == 0
        assert data["clique_number"] == 0

    def test_budget_exhaustion_is_recorded(self, sl2_3_graph):
        bundle = compute_bundle(sl2_3_graph, 1)
        assert set(bundle.undecided) == {"clique_number", "chromatic_number", "independence_number"}
        assert bundle.clique_number is None
        assert bundle.domination_number == 1
        assert bundle.to_json()["undecided"]["clique_number"] == "clique: node budget of 1 exhausted"

    def test_tampered_witness_is_reported(self, sl2_3_graph):
        bundle = compute_bundle(sl2_3_graph, BUDGET)
        bundle.clique_witness = bundle.clique_witness[:-1]
        assert bundle.verify_witnesses(sl2_3_graph) == ["clique witness does not certify the clique number"]
        bundle.coloring = [0] * 17
        assert len(bundle.verify_witnesses(sl2_3_graph)) == 3

    def test_adjacency_dtype(self, sl2_3_graph):
        assert sl2_3_graph.adjacency.dtype == np.bool_
