"""Tests for comaximal graph construction and export"""
import numpy as np
import pytest

from src.algebra.finite_field import make_field
from src.core.errors import SubspaceError
from src.graphs.comaximal import build_graph, distance, is_adjacent, is_complete_multipartite, triangle_vertices
from src.graphs.export import dumps, to_dot, vertex_label, vertex_table
from tests.conftest import graph_of


class TestSmallGraphs:
    """Tests for families with a known graph shape"""

    def test_dim1_has_no_vertices(self, F3):
        _, _, G = graph_of("dim1", F3)
        assert G.order == 0
        assert G.size == 0
        assert G.degrees == []
        assert G.edges() == []

    @pytest.mark.parametrize("family", ["abelian2", "nonabelian2"])
    @pytest.mark.parametrize("q", [2, 3, 5])
    def test_dimension_two_is_complete(self, family, q):
        _, _, G = graph_of(family, make_field(q))
        assert G.order == q + 1
        assert G.size == q * (q + 1) // 2

    def test_heisenberg_over_f2(self, F2):
        L, _, G = graph_of("heisenberg3", F2)
        assert G.order == 10
        assert [G.vertices[i].subspace for i in G.isolated] == [L.span((0, 0, 1))]
        assert G.vertices[G.isolated[0]].klass == "line:central"
        assert G.size == 27

    def test_heisenberg_star_is_complete_tripartite(self, F2):
        L, _, G = graph_of("heisenberg3", F2)
        star = G.star()
        assert star.order == 9
        assert star.is_star
        center = L.span((0, 0, 1))
        lines = [j for j, w in enumerate(star.vertices) if w.subspace.dim == 1]
        parts = [
            [i] + [j for j in lines if v.subspace.contains(star.vertices[j].subspace)]
            for i, v in enumerate(star.vertices)
            if v.subspace.dim == 2
        ]
        assert all(star.vertices[j].subspace != center for part in parts for j in part)
        assert is_complete_multipartite(star, parts)
        assert not is_complete_multipartite(star, parts[:2])


class TestSl2Graph:
    """Tests for Γ(sl2(F_3))"""

    def test_order_and_size(self, sl2_3_graph):
        assert sl2_3_graph.order == 17
        assert sl2_3_graph.size == 96

    def test_degrees_by_kind(self, sl2_3_graph):
        expected = {"borel": 12, "line-nilpotent": 12, "line-split": 8, "line-nonsplit": 16}
        for v, degree in zip(sl2_3_graph.vertices, sl2_3_graph.degrees):
            assert degree == expected[v.kind]

    def test_adjacency_is_symmetric_and_loopless(self, sl2_3_graph):
        A = sl2_3_graph.adjacency
        assert (A == A.T).all()
        assert not A.diagonal().any()

    def test_generation_test(self, sl2_3):
        x, y, h = sl2_3.span((1, 0, 0)), sl2_3.span((0, 1, 0)), sl2_3.span((0, 0, 1))
        assert is_adjacent(sl2_3, x, y)
        assert not is_adjacent(sl2_3, x, h)

    def test_threads_do_not_change_the_graph(self, sl2_3, sl2_3_inventory, sl2_3_graph):
        threaded = build_graph(sl2_3, sl2_3_inventory, threads=4)
        assert np.array_equal(threaded.adjacency, sl2_3_graph.adjacency)
        assert [v.subspace for v in threaded.vertices] == [v.subspace for v in sl2_3_graph.vertices]

    def test_vertices_in_canonical_order(self, sl2_3_graph):
        keys = [v.subspace.sort_key for v in sl2_3_graph.vertices]
        assert keys == sorted(keys)
        assert sl2_3_graph.vertices[0].subspace.dim == 1
        assert sl2_3_graph.vertices[-1].subspace.dim == 2

    def test_every_vertex_on_a_triangle(self, sl2_3_graph):
        assert triangle_vertices(sl2_3_graph) == list(range(17))

    def test_distance(self, sl2_3, sl2_3_graph):
        h, x = sl2_3.span((0, 0, 1)), sl2_3.span((1, 0, 0))
        assert distance(sl2_3_graph, h, x) == 2
        with pytest.raises(SubspaceError):
            sl2_3_graph.index_of(sl2_3.whole())

    def test_networkx_view(self, sl2_3_graph):
        graph = sl2_3_graph.to_networkx()
        assert graph.number_of_nodes() == 17
        assert graph.number_of_edges() == 96
        assert graph.nodes[0]["kind"] == "line-split"


class TestExport:
    """Tests for DOT and JSON renderings"""

    def test_labels(self, sl2_3_graph):
        assert vertex_label(sl2_3_graph, 0) == "S[0 0 1]"
        assert vertex_label(sl2_3_graph, 16).startswith("B[")

    def test_dot(self, sl2_3_graph):
        dot = to_dot(sl2_3_graph)
        assert dot.startswith('graph "comaximal_sl2_3" {')
        assert dot.count(" -- ") == 96
        assert dot.endswith("}\n")

    def test_dot_marks_isolated_vertices(self, F2):
        _, _, G = graph_of("heisenberg3", F2)
        isolated = G.isolated[0]
        assert f"    {isolated} [label=" in to_dot(G)
        assert "color=black" in to_dot(G).splitlines()[2 + isolated]

    def test_vertex_table(self, sl2_3_graph):
        table = vertex_table(sl2_3_graph)
        assert len(table) == 17
        assert table[0] == {
            "index": 0,
            "label": "S[0 0 1]",
            "dim": 1,
            "kind": "line-split",
            "class": "line-split",
            "span": "<h>",
            "degree": 8,
        }

    def test_dumps_is_deterministic(self, sl2_3_graph):
        assert dumps(vertex_table(sl2_3_graph)) == dumps(vertex_table(sl2_3_graph))
        assert dumps({"b": 1, "a": 2}) == '{\n  "a": 2,\n  "b": 1\n}\n'
