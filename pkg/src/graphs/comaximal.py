"""The comaximal graph Γ(L): vertices are nontrivial proper subalgebras,
``A ~ B`` iff A and B together generate L.
"""
from __future__ import annotations

import itertools
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from functools import cached_property
from typing import Callable, Iterable, Sequence

import networkx as nx
import numpy as np

from ..algebra.lie_algebra import LieAlgebra, Subspace, derived_algebra, generated_subalgebra, subspace_sum
from ..core.errors import SubspaceError
from ..subalgebras.enumeration import SubalgebraInventory
from ..subalgebras.sl2 import classify_line_sl2

logger = logging.getLogger(__name__)


@dataclass(frozen=True)
class Vertex:
    """A vertex of Γ(L)

    Attributes:
        subspace: The subalgebra in canonical form
        kind: Coarse tag (``line``, ``plane``, ``borel``, ``line-split``, ...)
        klass: Family-specific degree class used by the degree laws
    """

    subspace: Subspace
    kind: str
    klass: str


@dataclass(eq=False)
class ComaximalGraph:
    algebra: LieAlgebra
    vertices: list[Vertex]
    adjacency: np.ndarray
    is_star: bool = False

    @property
    def order(self) -> int:
        return len(self.vertices)

    @cached_property
    def degrees(self) -> list[int]:
        return self.adjacency.sum(axis=1).astype(int).tolist() if self.order else []

    @property
    def size(self) -> int:
        return sum(self.degrees) // 2

    @cached_property
    def masks(self) -> list[int]:
        """Neighbour bitsets, bit ``j`` of ``masks[i]`` set iff ``i ~ j``"""
        return [sum(1 << int(j) for j in np.flatnonzero(row)) for row in self.adjacency]

    @cached_property
    def _index(self) -> dict[Subspace, int]:
        return {v.subspace: i for i, v in enumerate(self.vertices)}

    def index_of(self, subspace: Subspace) -> int:
        try:
            return self._index[subspace]
        except KeyError:
            raise SubspaceError(f"{subspace!r} is not a vertex of the graph") from None

    def neighbors(self, i: int) -> list[int]:
        return np.flatnonzero(self.adjacency[i]).tolist()

    def adjacent(self, i: int, j: int) -> bool:
        return bool(self.adjacency[i, j])

    def edges(self) -> list[tuple[int, int]]:
        rows, cols = np.nonzero(np.triu(self.adjacency, k=1))
        return list(zip(rows.tolist(), cols.tolist()))

    @property
    def isolated(self) -> list[int]:
        return [i for i, d in enumerate(self.degrees) if d == 0]

    def induced(self, indices: Iterable[int], *, is_star: bool | None = None) -> "ComaximalGraph":
        keep = sorted(indices)
        sub = self.adjacency[np.ix_(keep, keep)] if keep else np.zeros((0, 0), dtype=bool)
        return ComaximalGraph(
            self.algebra,
            [self.vertices[i] for i in keep],
            sub,
            self.is_star if is_star is None else is_star,
        )

    def star(self) -> "ComaximalGraph":
        """Γ*: the graph with its isolated vertices removed"""
        isolated = set(self.isolated)
        return self.induced((i for i in range(self.order) if i not in isolated), is_star=True)

    def to_networkx(self) -> nx.Graph:
        graph = nx.Graph()
        for i, v in enumerate(self.vertices):
            graph.add_node(i, label=v.subspace.format(), kind=v.kind, klass=v.klass)
        graph.add_edges_from(self.edges())
        return graph


def is_adjacent(L: LieAlgebra, A: Subspace, B: Subspace) -> bool:
    """True iff the subalgebra generated by A ∪ B is all of L"""
    total = subspace_sum(A, B)
    if total.dim == L.n:
        return True
    return generated_subalgebra(L, total).dim == L.n


# --- vertex kinds and degree classes ---


def _generic_kind(S: Subspace) -> str:
    return {1: "line", 2: "plane"}.get(S.dim, "other-dim")


def vertex_classifier(L: LieAlgebra) -> Callable[[Subspace], tuple[str, str]]:
    """Return a function mapping a subalgebra to its (kind, degree class)"""
    family = L.family or ""

    if family == "sl2" and L.field.is_odd:

        def sl2_classes(S: Subspace) -> tuple[str, str]:
            if S.dim == 2:
                return "borel", "borel"
            kind = f"line-{classify_line_sl2(L, S).value}"
            return kind, kind

        return sl2_classes

    if family == "heisenberg3":
        center = L.span((0, 0, 1))

        def heisenberg_classes(S: Subspace) -> tuple[str, str]:
            if S.dim == 2:
                return "plane", "plane"
            return "line", "line:central" if S == center else "line:noncentral"

        return heisenberg_classes

    if family == "solvable2B":
        line_y, line_z = L.span((0, 1, 0)), L.span((0, 0, 1))
        V = L.span((0, 1, 0), (0, 0, 1))

        def solvable_classes(S: Subspace) -> tuple[str, str]:
            if S.dim == 2:
                return "plane", "plane"
            if S == line_y:
                return "line", "line:y"
            if S == line_z:
                return "line", "line:z"
            return "line", "line:in-V" if V.contains(S) else "line:outside-V"

        return solvable_classes

    if family.startswith("case3_") and family != "case3_scalar":
        V = derived_algebra(L)
        x = L.basis_vector(0)

        def case3_classes(S: Subspace) -> tuple[str, str]:
            if S.dim == 2:
                return "plane", "plane"
            if not V.contains(S):
                return "line", "line:outside-V"
            eigen = S.contains_vector(L.bracket(x, S.rows[0]))
            return "line", "line:eigen" if eigen else "line:in-V"

        return case3_classes

    def generic_classes(S: Subspace) -> tuple[str, str]:
        kind = _generic_kind(S)
        return kind, kind

    return generic_classes


def build_graph(L: LieAlgebra, inventory: SubalgebraInventory, *, threads: int = 1) -> ComaximalGraph:
    """Γ(L) with vertices in canonical order and adjacency by the generation test

    Args:
        L: The algebra
        inventory: Its subalgebra inventory
        threads: Worker threads for the pairwise adjacency tests

    Returns:
        The graph; the result does not depend on ``threads``
    """
    subspaces = sorted(inventory.proper)
    classify = vertex_classifier(L)
    vertices = [Vertex(S, *classify(S)) for S in subspaces]
    n = len(vertices)
    adjacency = np.zeros((n, n), dtype=bool)

    def row(i: int) -> list[int]:
        return [j for j in range(i + 1, n) if is_adjacent(L, subspaces[i], subspaces[j])]

    if threads > 1 and n > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            rows = list(pool.map(row, range(n)))
    else:
        rows = [row(i) for i in range(n)]
    for i, neighbours in enumerate(rows):
        for j in neighbours:
            adjacency[i, j] = adjacency[j, i] = True

    inventory.kinds.update((v.subspace, v.kind) for v in vertices)
    graph = ComaximalGraph(L, vertices, adjacency)
    logger.info(f"Γ({L.label}) over {L.field}: order {graph.order}, size {graph.size}")
    return graph


def distance(G: ComaximalGraph, A: Subspace, B: Subspace) -> float:
    """BFS distance between two vertices (``inf`` when disconnected)"""
    source, target = G.index_of(A), G.index_of(B)
    try:
        return nx.shortest_path_length(G.to_networkx(), source, target)
    except nx.NetworkXNoPath:
        return float("inf")


def triangle_vertices(G: ComaximalGraph) -> list[int]:
    """Vertices lying on at least one triangle"""
    masks = G.masks
    on_triangle = []
    for i in range(G.order):
        neighbours = masks[i]
        if any(masks[j] & neighbours for j in G.neighbors(i)):
            on_triangle.append(i)
    return on_triangle


def is_complete_multipartite(G: ComaximalGraph, parts: Sequence[Sequence[int]]) -> bool:
    """True iff ``parts`` partition the vertices into independent sets with all
    edges between different parts present"""
    part_of: dict[int, int] = {}
    for p, part in enumerate(parts):
        for v in part:
            if v in part_of:
                return False
            part_of[v] = p
    if sorted(part_of) != list(range(G.order)):
        return False
    return all(
        G.adjacent(u, v) == (part_of[u] != part_of[v]) for u, v in itertools.combinations(range(G.order), 2)
    )
