"""Tests for the exact bitset solvers"""
import itertools

import networkx as nx
import pytest
from hypothesis import given, settings, strategies as st

from src.core.errors import ImproperColoring, SolverBudgetExhausted
from src.graphs.solvers import (
    check_coloring,
    chromatic_number,
    complement_masks,
    dsatur_coloring,
    is_clique,
    is_dominating,
    is_independent,
    max_clique,
    max_independent_set,
    min_dominating_set,
    normalize_coloring,
)

BUDGET = 100_000


def masks_of(graph: nx.Graph) -> list[int]:
    nodes = sorted(graph.nodes)
    return [sum(1 << nodes.index(u) for u in graph.neighbors(v)) for v in nodes]


@st.composite
def small_graphs(draw, max_n=6):
    n = draw(st.integers(min_value=1, max_value=max_n))
    pairs = list(itertools.combinations(range(n), 2))
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True) if pairs else st.just([]))
    graph = nx.empty_graph(n)
    graph.add_edges_from(chosen)
    return graph


def brute_chromatic(masks):
    n = len(masks)
    for k in range(1, n + 1):
        for coloring in itertools.product(range(k), repeat=n):
            if all(coloring[u] != coloring[v] for u in range(n) for v in range(n) if masks[u] >> v & 1):
                return k
    return 0


def brute_domination(masks):
    n = len(masks)
    for k in range(1, n + 1):
        if any(is_dominating(masks, list(c)) for c in itertools.combinations(range(n), k)):
            return k
    return 0


class TestKnownGraphs:
    """Tests against graphs with textbook invariants"""

    @pytest.mark.parametrize(
        "graph,omega,chi,alpha,gamma",
        [
            (nx.complete_graph(5), 5, 5, 1, 1),
            (nx.cycle_graph(5), 2, 3, 2, 2),
            (nx.petersen_graph(), 2, 3, 4, 3),
            (nx.empty_graph(3), 1, 1, 3, 3),
            (nx.complete_multipartite_graph(3, 3, 3), 3, 3, 3, 2),
        ],
    )
    def test_invariants(self, graph, omega, chi, alpha, gamma):
        masks = masks_of(graph)
        clique = max_clique(masks, BUDGET)
        assert len(clique) == omega and is_clique(masks, clique)
        k, coloring = chromatic_number(masks, BUDGET)
        assert k == chi and max(coloring) + 1 == chi
        check_coloring(masks, coloring)
        independent = max_independent_set(masks, BUDGET)
        assert len(independent) == alpha and is_independent(masks, independent)
        dominating = min_dominating_set(masks, BUDGET)
        assert len(dominating) == gamma and is_dominating(masks, dominating)

    def test_empty_input(self):
        assert max_clique([], BUDGET) == []
        assert chromatic_number([], BUDGET) == (0, [])
        assert min_dominating_set([], BUDGET) == []


class TestColoringHelpers:
    """Tests for hints, normalization and DSatur"""

    def test_hint_certifies_chi(self):
        masks = masks_of(nx.complete_graph(3))
        assert chromatic_number(masks, BUDGET, hint=[5, 7, 9]) == (3, [0, 1, 2])

    def test_improper_hint(self):
        masks = masks_of(nx.complete_graph(3))
        with pytest.raises(ImproperColoring):
            chromatic_number(masks, BUDGET, hint=[0, 0, 1])

    def test_check_coloring_length(self):
        with pytest.raises(ValueError):
            check_coloring([0, 0], [0])

    def test_normalize(self):
        assert normalize_coloring([2, 2, 0, 1]) == [0, 0, 1, 2]

    def test_dsatur_is_proper(self):
        masks = masks_of(nx.petersen_graph())
        check_coloring(masks, dsatur_coloring(masks))

    def test_complement(self):
        assert complement_masks(masks_of(nx.complete_graph(3))) == [0, 0, 0]
        assert complement_masks([0, 0]) == [0b10, 0b01]


class TestBudget:
    """Tests for node budget exhaustion"""

    def test_clique_budget(self):
        with pytest.raises(SolverBudgetExhausted, match="clique: node budget of 1 exhausted"):
            max_clique(masks_of(nx.petersen_graph()), 1)

    def test_chromatic_budget(self):
        masks = masks_of(nx.petersen_graph())
        with pytest.raises(SolverBudgetExhausted):
            chromatic_number(masks, 1)


@pytest.mark.property_based
class TestAgainstBruteForce:
    """Property tests against exhaustive search on small graphs"""

    @settings(max_examples=50, deadline=None)
    @given(small_graphs())
    def test_clique(self, graph):
        masks = masks_of(graph)
        expected = max(len(c) for c in nx.find_cliques(graph))
        clique = max_clique(masks, BUDGET)
        assert len(clique) == expected
        assert is_clique(masks, clique)

    @settings(max_examples=50, deadline=None)
    @given(small_graphs())
    def test_chromatic(self, graph):
        masks = masks_of(graph)
        k, coloring = chromatic_number(masks, BUDGET)
        assert k == brute_chromatic(masks)
        check_coloring(masks, coloring)

    @settings(max_examples=50, deadline=None)
    @given(small_graphs(max_n=8))
    def test_domination(self, graph):
        masks = masks_of(graph)
        dominating = min_dominating_set(masks, BUDGET)
        assert is_dominating(masks, dominating)
        assert len(dominating) == brute_domination(masks)
