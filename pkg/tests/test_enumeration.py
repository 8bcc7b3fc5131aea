"""Tests for enumeration module"""
import pytest

from src.algebra.finite_field import make_field
from src.algebra.lie_algebra import generated_subalgebra
from src.core.errors import SubspaceError
from src.subalgebras.catalog import build
from src.subalgebras.enumeration import (
    enumerate_subalgebras,
    enumerate_subspaces,
    frattini,
    gaussian_binomial,
    intersect_all,
    rref_patterns,
)


class TestSubspaceEnumeration:
    """Tests for enumerate_subspaces and gaussian_binomial"""

    def test_gaussian_binomials(self):
        assert gaussian_binomial(3, 1, 2) == 7
        assert gaussian_binomial(3, 1, 3) == 13
        assert gaussian_binomial(4, 2, 2) == 35
        assert gaussian_binomial(3, 4, 2) == 0

    @pytest.mark.parametrize("n", [1, 2, 3, 4])
    @pytest.mark.parametrize("q", [2, 3])
    def test_counts_match_gaussian_binomial(self, n, q):
        L = build("abelian", make_field(q), n=n)
        for d in range(n + 1):
            subspaces = enumerate_subspaces(L, d)
            assert len(subspaces) == gaussian_binomial(n, d, q)
            assert len(set(subspaces)) == len(subspaces)
            assert all(S.dim == d for S in subspaces)

    def test_extension_field_counts(self, F4):
        L = build("abelian3", F4)
        assert len(enumerate_subspaces(L, 1)) == 21

    def test_patterns_are_in_rref(self):
        for rows in rref_patterns(3, 2, 3):
            pivots = [row.index(1) for row in rows]
            assert pivots == sorted(pivots)
            for r, p in enumerate(pivots):
                assert [row[p] for row in rows] == [int(i == r) for i in range(len(rows))]

    def test_sorted_by_canonical_matrix(self, sl2_3):
        lines = enumerate_subspaces(sl2_3, 1)
        assert lines == sorted(lines, key=lambda S: S.sort_key)
        assert lines[0].rows == ((0, 0, 1),)

    def test_out_of_range(self, sl2_3):
        with pytest.raises(SubspaceError):
            enumerate_subspaces(sl2_3, 4)
        with pytest.raises(SubspaceError):
            enumerate_subspaces(sl2_3, -1)


class TestSubalgebraInventory:
    """Tests for enumerate_subalgebras, maximals and the Frattini subalgebra"""

    @pytest.mark.parametrize("q", [2, 3])
    def test_plane_counts(self, q):
        F = make_field(q)
        assert enumerate_subalgebras(build("abelian3", F)).count(2) == q * q + q + 1
        assert enumerate_subalgebras(build("heisenberg3", F)).count(2) == q + 1
        assert enumerate_subalgebras(build("solvable2B", F)).count(2) == 2 * q + 1
        assert enumerate_subalgebras(build("case3_irreducible", F)).count(2) == 1
        assert enumerate_subalgebras(build("case3_jordan", F)).count(2) == 1 + q
        assert enumerate_subalgebras(build("case3_scalar", F)).count(2) == 1 + q + q * q

    def test_two_eigen_planes(self, F3):
        assert enumerate_subalgebras(build("case3_two_eigen", F3)).count(2) == 1 + 2 * 3

    def test_heisenberg_planes_contain_center(self, F3):
        L = build("heisenberg3", F3)
        center = L.span((0, 0, 1))
        assert all(P.contains(center) for P in enumerate_subalgebras(L).planes)

    def test_every_listed_subspace_is_closed(self, sl2_3_inventory):
        L = sl2_3_inventory.algebra
        assert all(generated_subalgebra(L, S) == S for S in sl2_3_inventory.proper)

    def test_proper_is_in_vertex_order(self, sl2_3_inventory):
        proper = sl2_3_inventory.proper
        assert len(proper) == 17
        assert [S.dim for S in proper] == [1] * 13 + [2] * 4

    @pytest.mark.parametrize(
        "family,dim",
        [("abelian3", 0), ("heisenberg3", 1), ("case3_jordan", 1), ("diam3_example", 0), ("sl2", 0), ("dim1", 0)],
    )
    def test_frattini_dimension(self, family, dim, F3):
        assert frattini(build(family, F3)).dim == dim

    def test_jordan_frattini_is_the_eigenline(self, F3):
        L = build("case3_jordan", F3)
        assert frattini(L) == L.span((0, 1, 0))

    def test_maximals_of_sl2(self, sl2_3_inventory):
        """Borels plus the nonsplit lines, which lie in no Borel"""
        maximals = sl2_3_inventory.maximals
        assert all(B in maximals for B in sl2_3_inventory.planes)
        assert sorted(S.rows[0] for S in maximals if S.dim == 1) == [(1, 1, 1), (1, 1, 2), (1, 2, 0)]

    def test_intersect_all_of_nothing_is_everything(self, sl2_3):
        assert intersect_all(sl2_3, []) == sl2_3.whole()

    def test_inventory_json(self, sl2_3_inventory):
        data = sl2_3_inventory.to_json()
        assert data["field"] == "3"
        assert len(data["by_dim"]["1"]) == 13
        assert data["by_dim"]["2"][0] == [["0", "1", "0"], ["0", "0", "1"]]
        assert data["frattini"] == []
