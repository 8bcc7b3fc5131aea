"""Finite fields, Lie algebras by structure constants, and their text formats"""

from .finite_field import (
    FieldElement,
    FieldSpec,
    arith,
    enumerate_elements,
    is_square,
    make_field,
    squares,
)
from .lie_algebra import (
    LieAlgebra,
    Subspace,
    ValidationReport,
    ad_matrix,
    bracket,
    derived_algebra,
    derived_dim,
    generated_subalgebra,
    nullspace,
    rref_canonical,
    subspace_intersection,
    subspace_ops,
    subspace_sum,
    validate,
)
from .structure_io import dump_algebra, load_algebra, parse_algebra, parse_element, parse_field_designation

__all__ = [
    "FieldElement",
    "FieldSpec",
    "LieAlgebra",
    "Subspace",
    "ValidationReport",
    "ad_matrix",
    "arith",
    "bracket",
    "derived_algebra",
    "derived_dim",
    "dump_algebra",
    "enumerate_elements",
    "generated_subalgebra",
    "is_square",
    "load_algebra",
    "make_field",
    "nullspace",
    "parse_algebra",
    "parse_element",
    "parse_field_designation",
    "rref_canonical",
    "squares",
    "subspace_intersection",
    "subspace_ops",
    "subspace_sum",
    "validate",
]
