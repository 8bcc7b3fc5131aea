"""Tests for predictions module"""
import re

import pytest

from src.core.errors import CatalogError, FieldError, UnknownFamilyError
from src.subalgebras.catalog import FAMILY_IDS
from src.verify.predictions import (
    PREDICTION_TABLE,
    STANDARD_INVARIANTS,
    UNDECIDED,
    Prediction,
    generic_predictions,
    predict,
)


def rows_by_name(rows):
    return {row.invariant: row for row in rows}


class TestPredictionTable:
    """Tests for the per-family closed forms"""

    def test_every_catalog_family_has_a_table(self):
        assert set(PREDICTION_TABLE) == set(FAMILY_IDS)

    @pytest.mark.parametrize("q,omega", [(3, 7), (5, 16), (7, 29)])
    def test_sl2_values(self, q, omega):
        rows = rows_by_name(predict("sl2", q))
        assert rows["clique_number"].predicted == omega
        assert rows["chromatic_number"].predicted == omega
        assert rows["order"].predicted == q * q + q + 1 + q + 1
        assert rows["count.center"].predicted == q * (q - 1) // 2

    def test_sl2_over_f3_sizes(self):
        rows = rows_by_name(predict("sl2", 3))
        assert rows["size"].predicted == 96
        assert rows["class.line-split.degree"].predicted == 8
        assert rows["class.line-nonsplit.degree"].predicted == 16

    def test_heisenberg(self):
        rows = rows_by_name(predict("heisenberg3", 2))
        assert rows["order"].predicted == 10
        assert rows["size"].predicted == 27
        assert rows["star.order"].predicted == 9
        assert rows["class.line:central.degree"].predicted == 0

    def test_dimension_two_planarity(self):
        assert rows_by_name(predict("abelian2", 3))["is_planar"].predicted is True
        assert rows_by_name(predict("abelian2", 5))["is_planar"].predicted is False

    def test_abelian_dispatches_on_n(self):
        assert rows_by_name(predict("abelian", 3, {"n": "2"}))["order"].predicted == 4
        assert rows_by_name(predict("abelian", 3, {"n": "1"}))["order"].predicted == 0
        assert rows_by_name(predict("abelian", 3, {"n": "4"}))["order"].predicted is None

    def test_su2_rows_are_claims(self):
        rows = rows_by_name(predict("su2", 3))
        assert rows["is_complete"].kind == "claim"
        assert not rows["is_complete"].checked

    def test_standard_invariants_always_listed(self):
        names = {row.invariant for row in predict("diam3_example", 3)}
        assert set(STANDARD_INVARIANTS) <= names
        names = {row.invariant for row in generic_predictions()}
        assert set(STANDARD_INVARIANTS) <= names
        assert "law.frattini" in names

    def test_unpredicted_rows(self):
        rows = rows_by_name(predict("diam3_example", 3))
        assert rows["clique_number"].predicted is None
        assert not rows["clique_number"].checked


NAMED_RESULT = re.compile(r"^(Theorem|Proposition|Corollary|Lemma) \([A-Za-z0-9 -]+\)([,:]|$)")
NON_RESULT_LAWS = {"law.symmetric": "Definition (", "law.witnesses": "Certificate ("}


class TestCitations:
    """Tests that every predicted row names the result it encodes"""

    @pytest.mark.parametrize("family", FAMILY_IDS)
    @pytest.mark.parametrize("q", [3, 5])
    def test_every_result_is_named(self, family, q):
        for row in predict(family, q):
            if row.predicted is None:
                assert row.citation == "no closed form for this family"
            elif row.invariant in NON_RESULT_LAWS:
                assert row.citation.startswith(NON_RESULT_LAWS[row.invariant])
            else:
                assert NAMED_RESULT.match(row.citation), row.citation

    def test_generic_rows(self):
        rows = rows_by_name(generic_predictions())
        assert rows["law.frattini"].citation.startswith("Lemma (isolated vertices):")
        assert rows["law.completeness"].citation.startswith("Theorem (complete graphs):")
        assert rows["core.diameter"].citation.startswith("Proposition (diameter bound):")


class TestPredictErrors:
    """Tests for invalid family or field"""

    def test_unknown_family(self):
        with pytest.raises(UnknownFamilyError):
            predict("sl3", 3)

    def test_even_q_for_sl2(self):
        with pytest.raises(FieldError):
            predict("sl2", 4)

    def test_small_q(self):
        with pytest.raises(CatalogError):
            predict("case3_two_eigen", 2)


class TestEvaluate:
    """Tests for Prediction.evaluate statuses"""

    def test_match_and_mismatch(self):
        assert Prediction("order", 17, "c").evaluate(17).status == "match"
        row = Prediction("order", 17, "c").evaluate(16)
        assert row.status == "mismatch"
        assert row.checked

    def test_upper_bound(self):
        assert Prediction("core.diameter", 3, "c", relation="<=").evaluate(2).status == "match"
        assert Prediction("core.diameter", 3, "c", relation="<=").evaluate(4).status == "mismatch"

    def test_claim_conflict(self):
        row = Prediction("is_complete", True, "c", kind="claim").evaluate(False)
        assert row.status == "conflict"
        assert row.computed is False

    def test_undecided(self):
        row = Prediction("clique_number", 7, "c").evaluate(UNDECIDED)
        assert row.status == "undecided"
        assert row.computed is None

    def test_unpredicted(self):
        assert Prediction("girth", None, "c").evaluate(3).status == "unpredicted"

    def test_json_infinity(self):
        data = Prediction("girth", None, "c").evaluate(float("inf")).to_json()
        assert data["computed"] == "inf"
        assert data["status"] == "unpredicted"
