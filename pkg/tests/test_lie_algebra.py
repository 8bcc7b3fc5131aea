"""Tests for lie_algebra module"""
import itertools

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from src.algebra.finite_field import make_field
from src.algebra.lie_algebra import (
    LieAlgebra,
    ad_matrix,
    derived_algebra,
    derived_dim,
    generated_subalgebra,
    nullspace,
    rref,
    subspace_intersection,
    subspace_ops,
    subspace_sum,
    validate,
)
from src.core.errors import AlgebraError, SubspaceError
from src.subalgebras.catalog import FAMILY_IDS, FAMILIES, build
from src.subalgebras.enumeration import enumerate_subspaces


class TestConstruction:
    """Tests for LieAlgebra.from_brackets and validate"""

    def test_antisymmetric_completion(self, F3):
        L = LieAlgebra.from_brackets(F3, 3, {(0, 1): (0, 0, 1)})
        assert L.bracket((0, 1, 0), (1, 0, 0)) == (0, 0, 2)
        assert L.basis_names == ("e1", "e2", "e3")

    def test_rejects_nonzero_self_bracket(self, F3):
        with pytest.raises(AlgebraError):
            LieAlgebra.from_brackets(F3, 2, {(0, 0): (1, 0)})

    def test_rejects_pair_given_twice(self, F3):
        with pytest.raises(AlgebraError):
            LieAlgebra.from_brackets(F3, 2, {(0, 1): (1, 0), (1, 0): (2, 0)})

    def test_rejects_wrong_length(self, F3):
        with pytest.raises(AlgebraError):
            LieAlgebra.from_brackets(F3, 3, {(0, 1): (0, 1)})

    def test_bracket_length_mismatch(self, sl2_3):
        with pytest.raises(AlgebraError):
            sl2_3.bracket((1, 0), (0, 1, 0))

    def test_validate_reports_jacobi_failure(self, F3):
        """[e1,e2] = e1, [e2,e3] = e2, [e1,e3] = e3 violates Jacobi over F_3"""
        L = LieAlgebra.from_brackets(F3, 3, {(0, 1): (1, 0, 0), (1, 2): (0, 1, 0), (0, 2): (0, 0, 1)})
        report = validate(L)
        assert not report.ok
        assert all(v.kind == "jacobi" for v in report.violations)
        assert "jacobi" in report.summary()

    def test_validate_reports_antisymmetry(self, F3):
        L = LieAlgebra(F3, 2, (((0, 0), (0, 1)), ((0, 1), (0, 0))))
        report = validate(L)
        assert "antisymmetry" in {v.kind for v in report.violations}

    def test_validate_reports_shape(self, F3):
        L = LieAlgebra(F3, 2, (((0, 0),),))
        assert validate(L).violations[0].kind == "shape"

    @pytest.mark.parametrize("family", FAMILY_IDS)
    def test_catalog_algebras_validate(self, family, F3):
        assert validate(build(family, F3)).ok


class TestSubspaces:
    """Tests for RREF canonicity, sum, intersection and containment"""

    def test_rref_is_canonical(self, F3):
        assert rref(F3, [(2, 2, 0), (0, 1, 1)], 3) == ((1, 0, 2), (0, 1, 1))
        assert rref(F3, [(0, 0, 0)], 3) == ()

    def test_nullspace(self, F3):
        basis = nullspace(F3, [(1, 1, 0)], 3)
        assert basis == [(2, 1, 0), (0, 0, 1)]

    def test_span_of_dependent_vectors(self, sl2_3):
        S = sl2_3.span((1, 0, 0), (2, 0, 0), (0, 0, 1))
        assert S.dim == 2
        assert S.rows == ((1, 0, 0), (0, 0, 1))

    def test_two_planes_sum_to_whole(self, sl2_3):
        A = sl2_3.span((1, 0, 0), (0, 0, 1))
        B = sl2_3.span((0, 1, 0), (0, 0, 1))
        assert subspace_ops(A, B, "sum").dim == 3
        assert subspace_ops(A, B, "intersection") == sl2_3.span((0, 0, 1))

    def test_intersection_with_itself(self, sl2_3):
        A = sl2_3.span((1, 0, 0), (0, 1, 0))
        assert subspace_intersection(A, A) == A
        assert subspace_ops(A, A, "equals")
        assert subspace_ops(A, sl2_3.span((1, 1, 0)), "contains")

    def test_mixed_algebras_rejected(self, F3, F5):
        A = build("abelian3", F3).span((1, 0, 0))
        B = build("abelian3", F5).span((1, 0, 0))
        with pytest.raises(SubspaceError):
            subspace_sum(A, B)

    def test_equality_needs_the_same_algebra(self, F3, F5, sl2_3):
        """Equal coordinates in different algebras are different subspaces"""
        line = sl2_3.span((1, 0, 0))
        assert line != build("su2", F3).span((1, 0, 0))
        assert line != build("sl2", F5).span((1, 0, 0))
        assert line == build("sl2", F3).span((1, 0, 0))
        assert len({line, build("abelian3", F5).span((1, 0, 0))}) == 2

    def test_wrong_length_vector(self, sl2_3):
        with pytest.raises(SubspaceError):
            sl2_3.span((1, 0))

    def test_vectors_enumerates_q_to_the_dim(self, sl2_3):
        plane = sl2_3.span((1, 0, 0), (0, 0, 1))
        vectors = plane.vectors()
        assert len(vectors) == 9
        assert len(set(vectors)) == 9
        assert all(plane.contains_vector(v) for v in vectors)

    def test_format_and_describe(self, sl2_3):
        plane = sl2_3.span((1, 0, 0), (0, 0, 1))
        assert plane.format() == "[1 0 0;0 0 1]"
        assert plane.describe() == "<x, h>"
        assert sl2_3.format_vector((2, 0, 1)) == "2x+h"

    def test_dimension_formula_exhaustive(self):
        """dim(A+B) + dim(A∩B) = dim A + dim B over all pairs, n = 3, q = 2"""
        L = build("abelian3", make_field(2))
        subspaces = [S for d in range(4) for S in enumerate_subspaces(L, d)]
        for A, B in itertools.product(subspaces, repeat=2):
            assert subspace_sum(A, B).dim + subspace_intersection(A, B).dim == A.dim + B.dim


class TestGeneratedSubalgebra:
    """Tests for bracket closure"""

    def test_heisenberg_pair_generates_everything(self, F3):
        L = build("heisenberg3", F3)
        assert generated_subalgebra(L, L.span((1, 0, 0), (0, 1, 0))).dim == 3

    def test_sl2_x_and_y_generate_everything(self, sl2_3):
        assert generated_subalgebra(sl2_3, sl2_3.span((1, 0, 0), (0, 1, 0))) == sl2_3.whole()

    def test_subalgebra_is_fixed(self, sl2_3):
        borel = sl2_3.span((1, 0, 0), (0, 0, 1))
        assert generated_subalgebra(sl2_3, borel) == borel

    @pytest.mark.parametrize("family", ["heisenberg3", "solvable2B", "sl2", "case3_jordan"])
    def test_closure_is_extensive_monotone_idempotent(self, family, F3):
        L = build(family, F3)
        subspaces = [S for d in range(4) for S in enumerate_subspaces(L, d)]
        closures = {S: generated_subalgebra(L, S) for S in subspaces}
        for S, C in closures.items():
            assert C.contains(S)
            assert C.is_subalgebra()
            assert generated_subalgebra(L, C) == C
        for A, B in itertools.combinations(subspaces[:40], 2):
            if B.contains(A):
                assert closures[B].contains(closures[A])


class TestDerived:
    """Tests for derived_dim, derived_algebra and ad_matrix"""

    @pytest.mark.parametrize(
        "family,expected",
        [("abelian3", 0), ("heisenberg3", 1), ("solvable2B", 1), ("case3_irreducible", 2), ("sl2", 3), ("su2", 3)],
    )
    def test_derived_dim(self, family, expected, F3):
        assert derived_dim(build(family, F3)) == expected

    def test_heisenberg_derived_is_center(self, F3):
        L = build("heisenberg3", F3)
        assert derived_algebra(L) == L.span((0, 0, 1))

    def test_ad_matrix_rows(self, sl2_3):
        """ad h: [h, x] = 2x, [h, y] = -2y, [h, h] = 0"""
        assert ad_matrix(sl2_3, (0, 0, 1)) == [(2, 0, 0), (0, 1, 0), (0, 0, 0)]

    @pytest.mark.property_based
    @given(st.tuples(*[st.integers(0, 4)] * 3), st.tuples(*[st.integers(0, 4)] * 3))
    @settings(max_examples=150)
    def test_bracket_is_antisymmetric(self, u, v):
        L = build("sl2", make_field(5))
        neg = L.field.neg_table
        assert L.bracket(u, v) == tuple(neg[x] for x in L.bracket(v, u))
        assert not any(L.bracket(u, u))


def test_family_registry_is_ordered():
    assert FAMILY_IDS[0] == "dim1"
    assert FAMILY_IDS[-1] == "diam3_example"
    assert len(FAMILIES) == 13
