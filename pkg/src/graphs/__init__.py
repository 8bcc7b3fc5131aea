"""Comaximal graph construction, exact solvers, invariants, laws and export"""

from .comaximal import (
    ComaximalGraph,
    Vertex,
    build_graph,
    distance,
    is_adjacent,
    is_complete_multipartite,
    triangle_vertices,
)
from .export import to_dot, vertex_table
from .invariants import (
    InvariantBundle,
    borel_coloring_sl2,
    chromatic_number,
    clique_number,
    compute_bundle,
    degree_profile,
    domination_number,
    independence_number,
    is_planar,
    isolated_and_frattini_check,
    metric_invariants,
)
from .laws import LawCheck

__all__ = [
    "ComaximalGraph",
    "InvariantBundle",
    "LawCheck",
    "Vertex",
    "borel_coloring_sl2",
    "build_graph",
    "chromatic_number",
    "clique_number",
    "compute_bundle",
    "degree_profile",
    "distance",
    "domination_number",
    "independence_number",
    "is_adjacent",
    "is_complete_multipartite",
    "is_planar",
    "isolated_and_frattini_check",
    "metric_invariants",
    "to_dot",
    "triangle_vertices",
    "vertex_table",
]
