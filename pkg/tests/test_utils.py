"""Tests for core helpers and the error hierarchy"""
import pytest

from src.core.errors import (
    CatalogError,
    ComaxError,
    FormatError,
    ImproperColoring,
    SolverBudgetExhausted,
    UnknownFamilyError,
)
from src.core.utils import json_number, parse_csv, parse_param_pairs


class TestParsing:
    """Tests for parse_param_pairs and parse_csv"""

    def test_param_pairs(self):
        assert parse_param_pairs(["mu=2", " matrix = 0,1,1,1 "]) == {"mu": "2", "matrix": "0,1,1,1"}
        assert parse_param_pairs(["mu=2", "mu=3"]) == {"mu": "3"}
        assert parse_param_pairs(None) == {}

    @pytest.mark.parametrize("raw", ["mu", "=2", "2x=1", "mu="])
    def test_bad_param(self, raw):
        with pytest.raises(FormatError):
            parse_param_pairs([raw])

    def test_csv(self):
        assert parse_csv("2, 3,,5,3") == ["2", "3", "5"]
        assert parse_csv("") == []

    def test_json_number(self):
        assert json_number(float("inf")) == "inf"
        assert json_number(2.0) == 2
        assert json_number(None) is None


class TestErrors:
    """Tests for the exception hierarchy"""

    def test_hierarchy(self):
        assert issubclass(UnknownFamilyError, CatalogError)
        assert issubclass(ComaxError, ValueError)
        assert not issubclass(SolverBudgetExhausted, ComaxError)

    def test_format_error_line(self):
        assert str(FormatError("bad", 4)) == "line 4: bad"
        assert FormatError("bad").line_no is None

    def test_improper_coloring(self):
        exc = ImproperColoring((1, 2), 0)
        assert exc.edge == (1, 2)
        assert "edge (1, 2)" in str(exc)
