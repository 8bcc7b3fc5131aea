"""Structural laws of comaximal graphs, each checked against the built adjacency

Every check returns a ``LawCheck`` with the offending vertices or pairs, so
a failing law can be reported without re-running anything.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field

from ..algebra.lie_algebra import subspace_sum
from ..subalgebras.enumeration import SubalgebraInventory
from ..subalgebras.sl2 import (
    MEMBERSHIP_BY_KIND,
    LineKind,
    borel_lines,
    borel_membership_count,
    borel_membership_exhaustive,
    borels_closed_form,
    classify_line_sl2,
)
from .comaximal import ComaximalGraph, is_complete_multipartite, triangle_vertices
from .invariants import isolated_and_frattini_check, metric_invariants

logger = logging.getLogger(__name__)


@dataclass
class LawCheck:
    name: str
    ok: bool
    counterexamples: list[str] = field(default_factory=list)

    @classmethod
    def from_failures(cls, name: str, failures: list[str], limit: int = 10) -> "LawCheck":
        return cls(name, not failures, failures[:limit])


def _label(G: ComaximalGraph, i: int) -> str:
    return G.vertices[i].subspace.format()


def symmetry_law(G: ComaximalGraph) -> LawCheck:
    A = G.adjacency
    failures = []
    if (A != A.T).any():
        failures.append("adjacency matrix is not symmetric")
    if A.diagonal().any():
        failures.append("adjacency matrix has self-loops")
    return LawCheck.from_failures("symmetric", failures)


def frattini_law(G: ComaximalGraph, inventory: SubalgebraInventory) -> LawCheck:
    """Isolated vertices are exactly the vertices contained in F(L)"""
    check = isolated_and_frattini_check(G, inventory)
    return LawCheck.from_failures("frattini", [_label(G, i) for i in check.counterexamples])


def completeness_law(G: ComaximalGraph, inventory: SubalgebraInventory) -> LawCheck:
    """Γ complete iff every proper subalgebra is one-dimensional"""
    n = G.order
    complete = G.size == n * (n - 1) // 2
    only_lines = all(S.dim == 1 for S in inventory.proper)
    failures = [] if complete == only_lines else [f"complete={complete} but only_lines={only_lines}"]
    return LawCheck.from_failures("completeness", failures)


def frattini_free_core(G: ComaximalGraph, inventory: SubalgebraInventory) -> ComaximalGraph:
    """Γ restricted to the vertices not contained in F(L)"""
    F = inventory.frattini
    return G.induced(i for i, v in enumerate(G.vertices) if not F.contains(v.subspace))


def diameter_bound_law(G: ComaximalGraph, inventory: SubalgebraInventory) -> LawCheck:
    """Away from F(L) the graph is connected with diameter at most 3"""
    core = frattini_free_core(G, inventory)
    if core.order <= 1:
        return LawCheck("diameter_bound", True)
    metrics = metric_invariants(core)
    failures = []
    if not metrics.is_connected:
        failures.append("graph without Frattini vertices is disconnected")
    elif metrics.diameter > 3:
        failures.append(f"graph without Frattini vertices has diameter {metrics.diameter}")
    return LawCheck.from_failures("diameter_bound", failures)


def plane_clique_law(G: ComaximalGraph) -> LawCheck:
    """In dimension 3, distinct planes are pairwise adjacent"""
    planes = [i for i, v in enumerate(G.vertices) if v.subspace.dim == 2]
    pairs = itertools.combinations(planes, 2)
    failures = [f"{_label(G, i)} / {_label(G, j)}" for i, j in pairs if not G.adjacent(i, j)]
    return LawCheck.from_failures("plane_clique", failures)


def line_plane_law(G: ComaximalGraph) -> LawCheck:
    """In dimension 3, a line and a plane are adjacent iff the line is not in the plane"""
    failures = []
    for i, u in enumerate(G.vertices):
        if u.subspace.dim != 1:
            continue
        for j, w in enumerate(G.vertices):
            if w.subspace.dim == 2 and G.adjacent(i, j) == w.subspace.contains(u.subspace):
                failures.append(f"{_label(G, i)} / {_label(G, j)}")
    return LawCheck.from_failures("line_plane", failures)


def line_pair_law(G: ComaximalGraph) -> LawCheck:
    """In dimension 3, distinct lines are non-adjacent iff their span is a subalgebra"""
    lines = [i for i, v in enumerate(G.vertices) if v.subspace.dim == 1]
    failures = []
    for i, j in itertools.combinations(lines, 2):
        span = subspace_sum(G.vertices[i].subspace, G.vertices[j].subspace)
        if G.adjacent(i, j) == span.is_subalgebra():
            failures.append(f"{_label(G, i)} / {_label(G, j)}")
    return LawCheck.from_failures("line_pair", failures)


def lines_independent_law(G: ComaximalGraph) -> LawCheck:
    lines = [i for i, v in enumerate(G.vertices) if v.subspace.dim == 1]
    failures = [f"{_label(G, i)} / {_label(G, j)}" for i, j in itertools.combinations(lines, 2) if G.adjacent(i, j)]
    return LawCheck.from_failures("lines_independent", failures)


def heisenberg_multipartite_law(G: ComaximalGraph) -> LawCheck:
    """Noncentral lines form a complete multipartite graph, one part per plane"""
    noncentral = [i for i, v in enumerate(G.vertices) if v.klass == "line:noncentral"]
    planes = [v.subspace for v in G.vertices if v.klass == "plane"]
    sub = G.induced(noncentral)
    parts = [[k for k, v in enumerate(sub.vertices) if P.contains(v.subspace)] for P in planes]
    q = G.algebra.field.q
    failures = []
    if len(parts) != q + 1 or any(len(part) != q for part in parts):
        failures.append(f"part sizes {[len(part) for part in parts]}, expected {q + 1} parts of size {q}")
    elif not is_complete_multipartite(sub, parts):
        failures.append("noncentral lines are not complete multipartite over the planes")
    return LawCheck.from_failures("heisenberg_multipartite", failures)


def solvable2b_outside_line_law(G: ComaximalGraph) -> LawCheck:
    """X_{a,b} = <x + ay + bz> ~ X_{c,d} iff a != c and b != d"""
    L = G.algebra
    q = L.field.q
    index = {}
    for a in range(q):
        for b in range(q):
            index[(a, b)] = G.index_of(L.span((1, a, b)))
    failures = []
    for (ab, i), (cd, j) in itertools.combinations(index.items(), 2):
        expected = ab[0] != cd[0] and ab[1] != cd[1]
        if G.adjacent(i, j) != expected:
            failures.append(f"X{ab} / X{cd}")
    return LawCheck.from_failures("solvable2B_outside_lines", failures)


def sl2_borels_law(G: ComaximalGraph, inventory: SubalgebraInventory) -> LawCheck:
    """The closed-form Borels are exactly the 2-dimensional subalgebras"""
    closed_form = set(borels_closed_form(G.algebra))
    brute_force = set(inventory.planes)
    failures = [S.format() for S in sorted(closed_form ^ brute_force)]
    return LawCheck.from_failures("sl2_borels", failures)


def sl2_membership_law(G: ComaximalGraph, inventory: SubalgebraInventory) -> LawCheck:
    """Borel membership is 0/1/2 for nonsplit/nilpotent/split lines, by both
    the quadratic criterion and direct containment"""
    L = G.algebra
    borels = list(inventory.planes)
    failures = []
    for line in inventory.lines:
        kind = classify_line_sl2(L, line)
        closed = borel_membership_count(L, line)
        exhaustive = borel_membership_exhaustive(L, line, borels)
        if not closed == exhaustive == MEMBERSHIP_BY_KIND[kind]:
            failures.append(f"{line.format()}: {kind.value}, closed {closed}, exhaustive {exhaustive}")
    return LawCheck.from_failures("sl2_membership", failures)


def sl2_borel_lines_law(G: ComaximalGraph, inventory: SubalgebraInventory) -> LawCheck:
    """Each Borel holds one nilpotent line and q split lines"""
    L = G.algebra
    q = L.field.q
    failures = []
    for B in inventory.planes:
        grouped = borel_lines(L, B, inventory.lines)
        counts = (len(grouped[LineKind.NILPOTENT]), len(grouped[LineKind.SPLIT]), len(grouped[LineKind.NONSPLIT]))
        if counts != (1, q, 0):
            failures.append(f"{B.format()}: nilpotent/split/nonsplit = {counts}")
    return LawCheck.from_failures("sl2_borel_lines", failures)


def sl2_center_law(G: ComaximalGraph) -> LawCheck:
    """The center of Γ(sl2) is the set of nonsplit lines"""
    center = metric_invariants(G).center
    nonsplit = [i for i, v in enumerate(G.vertices) if v.kind == "line-nonsplit"]
    failures = [] if center == nonsplit else [f"center {center} vs nonsplit lines {nonsplit}"]
    return LawCheck.from_failures("sl2_center", failures)


def triangle_law(G: ComaximalGraph) -> LawCheck:
    """Every vertex lies on a triangle"""
    on_triangle = set(triangle_vertices(G))
    failures = [_label(G, i) for i in range(G.order) if i not in on_triangle]
    return LawCheck.from_failures("triangles", failures)


def borel_clique_law(G: ComaximalGraph) -> LawCheck:
    """The Borels induce a complete graph"""
    borels = [i for i, v in enumerate(G.vertices) if v.kind == "borel"]
    pairs = itertools.combinations(borels, 2)
    failures = [f"{_label(G, i)} / {_label(G, j)}" for i, j in pairs if not G.adjacent(i, j)]
    return LawCheck.from_failures("borel_clique", failures)
