"""Subalgebra enumeration, sl2 classifications and the catalog of families"""

from .catalog import (
    EXTRA_FAMILIES,
    FAMILIES,
    FAMILY_IDS,
    CatalogFamily,
    FamilyInfo,
    build,
    build_catalog,
    detect_case3,
    family_info,
)
from .enumeration import (
    SubalgebraInventory,
    enumerate_subalgebras,
    enumerate_subspaces,
    frattini,
    gaussian_binomial,
)
from .sl2 import (
    LineKind,
    borel_membership_count,
    borel_membership_exhaustive,
    borels_closed_form,
    classify_line_sl2,
    discriminant,
)

__all__ = [
    "EXTRA_FAMILIES",
    "FAMILIES",
    "FAMILY_IDS",
    "CatalogFamily",
    "FamilyInfo",
    "LineKind",
    "SubalgebraInventory",
    "borel_membership_count",
    "borel_membership_exhaustive",
    "borels_closed_form",
    "build",
    "build_catalog",
    "classify_line_sl2",
    "detect_case3",
    "discriminant",
    "enumerate_subalgebras",
    "enumerate_subspaces",
    "family_info",
    "frattini",
    "gaussian_binomial",
]
