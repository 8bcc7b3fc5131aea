"""Core utilities and the shared exception hierarchy"""

from .errors import (
    AlgebraError,
    CatalogError,
    ComaxError,
    FieldError,
    FormatError,
    ImproperColoring,
    SolverBudgetExhausted,
    SubspaceError,
    UnknownFamilyError,
)
from .utils import json_number, parse_csv, parse_param_pairs

__all__ = [
    "AlgebraError",
    "CatalogError",
    "ComaxError",
    "FieldError",
    "FormatError",
    "ImproperColoring",
    "SolverBudgetExhausted",
    "SubspaceError",
    "UnknownFamilyError",
    "json_number",
    "parse_csv",
    "parse_param_pairs",
]
