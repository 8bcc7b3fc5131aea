"""Exact invariants of a comaximal graph, with certifying witnesses"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field
from typing import Any, Sequence

import networkx as nx

from ..core.errors import SolverBudgetExhausted
from ..core.utils import json_number
from ..subalgebras.enumeration import SubalgebraInventory
from ..subalgebras.sl2 import require_sl2
from . import solvers
from .comaximal import ComaximalGraph

logger = logging.getLogger(__name__)

INF = float("inf")


@dataclass
class DegreeProfile:
    sequence: list[int]
    by_kind: dict[str, list[int]]
    by_class: dict[str, tuple[int, list[int]]]


def degree_profile(G: ComaximalGraph) -> DegreeProfile:
    """Non-increasing degree sequence plus the distinct degrees per kind and class

    ``by_class`` maps each degree class to (vertex count, sorted distinct degrees).
    """
    degrees = G.degrees
    by_kind: dict[str, set[int]] = {}
    by_class: dict[str, list[int]] = {}
    for v, d in zip(G.vertices, degrees):
        by_kind.setdefault(v.kind, set()).add(d)
        by_class.setdefault(v.klass, []).append(d)
    return DegreeProfile(
        sequence=sorted(degrees, reverse=True),
        by_kind={k: sorted(ds) for k, ds in sorted(by_kind.items())},
        by_class={k: (len(ds), sorted(set(ds))) for k, ds in sorted(by_class.items())},
    )


@dataclass
class Metrics:
    is_connected: bool
    diameter: float
    radius: float
    center: list[int]
    eccentricities: list[float]
    girth: float


def girth(G: ComaximalGraph) -> float:
    """Shortest cycle length, via the shortest cycle through each edge (``inf`` if acyclic)"""
    masks = G.masks
    best = INF
    for u, v in G.edges():
        # BFS from u without the edge uv until v is reached
        visited = (1 << u) | (1 << v)
        frontier = masks[u] & ~(1 << v)
        visited |= frontier
        depth = 1
        while frontier and depth + 1 < best:
            if any(masks[w] >> v & 1 for w in solvers._bits(frontier)):
                best = min(best, depth + 2)
                break
            grown = 0
            for w in solvers._bits(frontier):
                grown |= masks[w]
            frontier = grown & ~visited
            visited |= frontier
            depth += 1
        if best == 3:
            break
    return best


def metric_invariants(G: ComaximalGraph) -> Metrics:
    """BFS eccentricities, diameter, radius, center and girth

    Disconnected graphs have every eccentricity infinite; the graph with no
    vertices has diameter and radius 0 and is reported as not connected.
    """
    n = G.order
    if n == 0:
        return Metrics(False, 0, 0, [], [], INF)
    graph = G.to_networkx()
    eccentricities: list[float] = []
    for source, lengths in sorted(nx.all_pairs_shortest_path_length(graph)):
        eccentricities.append(max(lengths.values()) if len(lengths) == n else INF)
    connected = all(e != INF for e in eccentricities)
    diameter = max(eccentricities)
    radius = min(eccentricities)
    center = [i for i, e in enumerate(eccentricities) if e == radius] if connected else []
    return Metrics(connected, diameter, radius, center, eccentricities, girth(G))


def clique_number(G: ComaximalGraph, budget: int) -> tuple[int, list[int]]:
    witness = solvers.max_clique(G.masks, budget)
    return len(witness), witness


def independence_number(G: ComaximalGraph, budget: int) -> tuple[int, list[int]]:
    witness = solvers.max_independent_set(G.masks, budget)
    return len(witness), witness


def borel_coloring_sl2(G: ComaximalGraph) -> list[int]:
    """Borels and nonsplit lines get distinct colors; every other line takes
    the color of the first Borel (in vertex order) that contains it

    Raises:
        CatalogError: If the graph is not Γ(sl2)
        FieldError: If q is even
    """
    require_sl2(G.algebra)
    borels = [i for i, v in enumerate(G.vertices) if v.kind == "borel"]
    coloring = [-1] * G.order
    for color, i in enumerate(borels):
        coloring[i] = color
    next_color = len(borels)
    for i, v in enumerate(G.vertices):
        if v.kind == "line-nonsplit":
            coloring[i] = next_color
            next_color += 1
        elif v.kind in ("line-nilpotent", "line-split"):
            host = next(b for b in borels if G.vertices[b].subspace.contains(v.subspace))
            coloring[i] = coloring[host]
    return coloring


def chromatic_number(
    G: ComaximalGraph,
    budget: int,
    *,
    hint: Sequence[int] | None = None,
    clique: Sequence[int] | None = None,
) -> tuple[int, list[int]]:
    """Exact χ; a proper hint meeting the clique bound certifies immediately

    Raises:
        ImproperColoring: If ``hint`` is not proper (carries the violating edge)
    """
    return solvers.chromatic_number(G.masks, budget, clique=clique, hint=hint)


def domination_number(G: ComaximalGraph, budget: int) -> tuple[int, list[int], bool]:
    """Exact γ with witness; computed on Γ* when G has isolated vertices

    Returns:
        (γ, dominating set as indices of ``G``, whether Γ* was used)
    """
    if not G.isolated:
        witness = solvers.min_dominating_set(G.masks, budget)
        return len(witness), witness, False
    isolated = set(G.isolated)
    kept = [i for i in range(G.order) if i not in isolated]
    star = G.star()
    witness = [kept[i] for i in solvers.min_dominating_set(star.masks, budget)]
    return len(witness), witness, True


def is_planar(G: ComaximalGraph, clique_size: int | None = None) -> bool:
    """K5 filter, then the edge bound m <= 3n - 6, then a full planarity test"""
    if clique_size is not None and clique_size >= 5:
        logger.debug("non-planar: contains K5")
        return False
    if G.order >= 3 and G.size > 3 * G.order - 6:
        logger.debug(f"non-planar: {G.size} edges exceed 3n - 6 = {3 * G.order - 6}")
        return False
    planar, _ = nx.check_planarity(G.to_networkx())
    return bool(planar)


@dataclass
class FrattiniCheck:
    ok: bool
    isolated: list[int]
    in_frattini: list[int]

    @property
    def counterexamples(self) -> list[int]:
        return sorted(set(self.isolated) ^ set(self.in_frattini))


def isolated_and_frattini_check(G: ComaximalGraph, inventory: SubalgebraInventory) -> FrattiniCheck:
    """Compare the isolated vertices with the vertices contained in F(L)"""
    in_frattini = [i for i, v in enumerate(G.vertices) if inventory.frattini.contains(v.subspace)]
    isolated = G.isolated
    return FrattiniCheck(isolated == in_frattini, isolated, in_frattini)


@dataclass
class InvariantBundle:
    """Every computed invariant of one graph; ``None`` marks an undecided value"""

    order: int
    size: int
    degree_sequence: list[int]
    is_connected: bool
    diameter: float
    radius: float
    center: list[int]
    girth: float
    is_planar: bool | None
    isolated_vertices: list[int]
    is_regular: bool
    is_complete: bool
    clique_number: int | None = None
    clique_witness: list[int] = field(default_factory=list)
    chromatic_number: int | None = None
    coloring: list[int] = field(default_factory=list)
    independence_number: int | None = None
    independent_witness: list[int] = field(default_factory=list)
    domination_number: int | None = None
    dominating_set: list[int] = field(default_factory=list)
    domination_on_star: bool = False
    undecided: dict[str, str] = field(default_factory=dict)
    notes: list[str] = field(default_factory=list)

    def to_json(self) -> dict[str, Any]:
        data = {
            "order": self.order,
            "size": self.size,
            "degree_sequence": self.degree_sequence,
            "is_connected": self.is_connected,
            "diameter": json_number(self.diameter),
            "radius": json_number(self.radius),
            "center": self.center,
            "girth": json_number(self.girth),
            "clique_number": self.clique_number,
            "clique_witness": self.clique_witness,
            "chromatic_number": self.chromatic_number,
            "coloring": self.coloring,
            "independence_number": self.independence_number,
            "independent_witness": self.independent_witness,
            "domination_number": self.domination_number,
            "dominating_set": self.dominating_set,
            "domination_on_star": self.domination_on_star,
            "is_planar": self.is_planar,
            "isolated_vertices": self.isolated_vertices,
            "is_regular": self.is_regular,
            "is_complete": self.is_complete,
            "undecided": dict(sorted(self.undecided.items())),
            "notes": self.notes,
        }
        return data

    def verify_witnesses(self, G: ComaximalGraph) -> list[str]:
        """Problems with the stored witnesses (empty when all certify)"""
        masks = G.masks
        problems = []
        if self.clique_number is not None:
            if len(self.clique_witness) != self.clique_number or not solvers.is_clique(masks, self.clique_witness):
                problems.append("clique witness does not certify the clique number")
        if self.chromatic_number is not None:
            try:
                solvers.check_coloring(masks, self.coloring)
            except ValueError as exc:
                problems.append(str(exc))
            if self.coloring and len(set(self.coloring)) != self.chromatic_number:
                problems.append("coloring does not use exactly chi colors")
        if self.independence_number is not None:
            if len(self.independent_witness) != self.independence_number or not solvers.is_independent(
                masks, self.independent_witness
            ):
                problems.append("independent set witness does not certify alpha")
        if self.domination_number is not None:
            target = G.star() if self.domination_on_star else G
            if self.domination_on_star:
                kept = [i for i in range(G.order) if i not in set(G.isolated)]
                local = [kept.index(i) for i in self.dominating_set]
            else:
                local = list(self.dominating_set)
            if len(local) != self.domination_number or not solvers.is_dominating(target.masks, local):
                problems.append("dominating set witness does not dominate")
        if self.clique_number is not None and self.chromatic_number is not None:
            if self.clique_number > self.chromatic_number:
                problems.append("omega exceeds chi")
        if sum(self.degree_sequence) != 2 * self.size:
            problems.append("degree sum differs from twice the size")
        return problems


def compute_bundle(
    G: ComaximalGraph,
    budget: int,
    *,
    hint: Sequence[int] | None = None,
) -> InvariantBundle:
    """Compute every invariant; a solver that runs out of budget leaves its
    value ``None`` and records the invariant as undecided"""
    metrics = metric_invariants(G)
    degrees = G.degrees
    n = G.order
    bundle = InvariantBundle(
        order=n,
        size=G.size,
        degree_sequence=sorted(degrees, reverse=True),
        is_connected=metrics.is_connected,
        diameter=metrics.diameter,
        radius=metrics.radius,
        center=metrics.center,
        girth=metrics.girth,
        is_planar=None,
        isolated_vertices=G.isolated,
        is_regular=len(set(degrees)) <= 1,
        is_complete=G.size == n * (n - 1) // 2,
    )
    if n == 0:
        bundle.notes.append("graph has no vertices")

    try:
        bundle.clique_number, bundle.clique_witness = clique_number(G, budget)
    except SolverBudgetExhausted as exc:
        logger.warning(str(exc))
        bundle.undecided["clique_number"] = str(exc)
    try:
        bundle.chromatic_number, bundle.coloring = chromatic_number(
            G, budget, hint=hint, clique=bundle.clique_witness if bundle.clique_number is not None else None
        )
    except SolverBudgetExhausted as exc:
        logger.warning(str(exc))
        bundle.undecided["chromatic_number"] = str(exc)
    try:
        bundle.independence_number, bundle.independent_witness = independence_number(G, budget)
    except SolverBudgetExhausted as exc:
        logger.warning(str(exc))
        bundle.undecided["independence_number"] = str(exc)
    try:
        gamma, witness, on_star = domination_number(G, budget)
        bundle.domination_number, bundle.dominating_set, bundle.domination_on_star = gamma, witness, on_star
        if on_star:
            bundle.notes.append("domination number computed on the graph without isolated vertices")
    except SolverBudgetExhausted as exc:
        logger.warning(str(exc))
        bundle.undecided["domination_number"] = str(exc)

    bundle.is_planar = is_planar(G, bundle.clique_number)
    logger.info(
        f"invariants: order {n}, size {bundle.size}, omega {bundle.clique_number}, "
        f"chi {bundle.chromatic_number}, gamma {bundle.domination_number}"
    )
    return bundle
