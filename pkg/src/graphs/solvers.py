"""Exact solvers on adjacency bitsets: clique, coloring, domination, independence

Graphs are given as ``masks[v]``, the bitset of neighbours of ``v`` (no self
bits). Every search counts its nodes against a budget and raises
``SolverBudgetExhausted`` instead of returning an uncertified bound.
"""
from __future__ import annotations

import logging
from typing import Sequence

from ..core.errors import ImproperColoring, SolverBudgetExhausted

logger = logging.getLogger(__name__)


class NodeBudget:
    """Search-node counter shared by one solver invocation"""

    def __init__(self, limit: int, solver: str):
        self.limit = limit
        self.solver = solver
        self.used = 0

    def tick(self) -> None:
        self.used += 1
        if self.used > self.limit:
            raise SolverBudgetExhausted(self.solver, self.limit)


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def complement_masks(masks: Sequence[int]) -> list[int]:
    full = (1 << len(masks)) - 1
    return [full & ~m & ~(1 << v) for v, m in enumerate(masks)]


def _greedy_color_order(P: int, masks: Sequence[int]) -> list[tuple[int, int]]:
    """Sequential greedy coloring of ``P``; returns (vertex, color) by increasing color"""
    order = []
    color = 0
    uncolored = P
    while uncolored:
        color += 1
        candidates = uncolored
        while candidates:
            v = (candidates & -candidates).bit_length() - 1
            candidates &= ~masks[v] & ~(1 << v)
            uncolored &= ~(1 << v)
            order.append((v, color))
    return order


def max_clique(masks: Sequence[int], budget: int) -> list[int]:
    """Maximum clique by branch and bound with greedy-coloring upper bounds

    Returns:
        A maximum clique as sorted vertex indices (the first one found in
        index order, so witnesses are reproducible)

    Raises:
        SolverBudgetExhausted: If more than ``budget`` nodes are expanded
    """
    n = len(masks)
    if n == 0:
        return []
    counter = NodeBudget(budget, "clique")
    best: list[int] = []
    current: list[int] = []

    def expand(P: int) -> None:
        nonlocal best
        order = _greedy_color_order(P, masks)
        for v, color in reversed(order):
            if len(current) + color <= len(best):
                return
            counter.tick()
            current.append(v)
            candidates = P & masks[v]
            if candidates:
                expand(candidates)
            elif len(current) > len(best):
                best = list(current)
            current.pop()
            P &= ~(1 << v)

    expand((1 << n) - 1)
    logger.debug(f"clique search: {counter.used} nodes, omega = {len(best)}")
    return sorted(best)


def max_independent_set(masks: Sequence[int], budget: int) -> list[int]:
    """Maximum independent set as a maximum clique of the complement"""
    return max_clique(complement_masks(masks), budget)


def check_coloring(masks: Sequence[int], coloring: Sequence[int]) -> None:
    """Raise ``ImproperColoring`` on the first monochromatic edge (index order)"""
    if len(coloring) != len(masks):
        raise ValueError(f"coloring has {len(coloring)} entries for {len(masks)} vertices")
    for u, mask in enumerate(masks):
        for v in _bits(mask):
            if u < v and coloring[u] == coloring[v]:
                raise ImproperColoring((u, v), coloring[u])


def normalize_coloring(coloring: Sequence[int]) -> list[int]:
    """Relabel colors 0, 1, 2, ... by first appearance"""
    relabel: dict[int, int] = {}
    return [relabel.setdefault(c, len(relabel)) for c in coloring]


def dsatur_coloring(masks: Sequence[int]) -> list[int]:
    """DSatur heuristic: a proper coloring giving an upper bound on χ"""
    n = len(masks)
    coloring = [-1] * n
    neighbor_colors: list[set[int]] = [set() for _ in range(n)]
    degrees = [m.bit_count() for m in masks]
    for _ in range(n):
        v = max(
            (u for u in range(n) if coloring[u] < 0),
            key=lambda u: (len(neighbor_colors[u]), degrees[u], -u),
        )
        color = next(c for c in range(n) if c not in neighbor_colors[v])
        coloring[v] = color
        for u in _bits(masks[v]):
            neighbor_colors[u].add(color)
    return coloring


def k_coloring(masks: Sequence[int], k: int, clique: Sequence[int], counter: NodeBudget) -> list[int] | None:
    """Backtracking search for a proper k-coloring

    The vertices of ``clique`` are pre-colored 0..|clique|-1, which removes
    color permutations from the search. A new color is only opened after all
    used ones are exhausted.
    """
    n = len(masks)
    if len(clique) > k:
        return None
    coloring = [-1] * n
    neighbors = [_bits(m) for m in masks]
    degrees = [len(nbrs) for nbrs in neighbors]
    # seen[v][c]: number of neighbours of v colored c
    seen = [[0] * k for _ in range(n)]
    saturation = [0] * n

    def assign(v: int, color: int) -> None:
        coloring[v] = color
        for u in neighbors[v]:
            if seen[u][color] == 0:
                saturation[u] += 1
            seen[u][color] += 1

    def unassign(v: int) -> None:
        color = coloring[v]
        coloring[v] = -1
        for u in neighbors[v]:
            seen[u][color] -= 1
            if seen[u][color] == 0:
                saturation[u] -= 1

    for color, v in enumerate(clique):
        assign(v, color)

    def pick() -> int | None:
        best, best_key = None, None
        for v in range(n):
            if coloring[v] < 0:
                key = (saturation[v], degrees[v])
                if best_key is None or key > best_key:
                    best, best_key = v, key
        return best

    def solve(used: int) -> bool:
        v = pick()
        if v is None:
            return True
        if saturation[v] >= k:
            return False
        counter.tick()
        for color in range(min(k, used + 1)):
            if seen[v][color]:
                continue
            assign(v, color)
            if solve(max(used, color + 1)):
                return True
            unassign(v)
        return False

    return coloring if solve(len(clique)) else None


def chromatic_number(
    masks: Sequence[int],
    budget: int,
    *,
    clique: Sequence[int] | None = None,
    hint: Sequence[int] | None = None,
) -> tuple[int, list[int]]:
    """Exact χ between the clique lower bound and a constructive upper bound

    Args:
        masks: Adjacency bitsets
        budget: Node limit for the clique and coloring searches
        clique: A maximum clique, if already known
        hint: Optional proper coloring; if it uses ω colors it certifies χ = ω

    Returns:
        χ and a proper coloring using exactly χ colors

    Raises:
        ImproperColoring: If ``hint`` is not proper
        SolverBudgetExhausted: If the searches exceed ``budget``
    """
    n = len(masks)
    if n == 0:
        return 0, []
    clique = list(clique) if clique is not None else max_clique(masks, budget)
    lower = len(clique)

    if hint is not None:
        check_coloring(masks, hint)
        hinted = normalize_coloring(hint)
        if max(hinted) + 1 == lower:
            logger.debug(f"coloring hint certifies chi = {lower}")
            return lower, hinted

    best = normalize_coloring(dsatur_coloring(masks))
    upper = max(best) + 1
    if hint is not None and max(normalize_coloring(hint)) + 1 < upper:
        best = normalize_coloring(hint)
        upper = max(best) + 1
    counter = NodeBudget(budget, "chromatic")
    for k in range(lower, upper):
        found = k_coloring(masks, k, clique, counter)
        if found is not None:
            logger.debug(f"chromatic search: {counter.used} nodes, chi = {k}")
            return k, normalize_coloring(found)
    logger.debug(f"chromatic search: {counter.used} nodes, chi = {upper} (upper bound tight)")
    return upper, best


def _greedy_dominating(closed: Sequence[int], full: int) -> list[int]:
    chosen: list[int] = []
    dominated = 0
    while dominated != full:
        v = max(range(len(closed)), key=lambda u: ((closed[u] & ~dominated).bit_count(), -u))
        chosen.append(v)
        dominated |= closed[v]
    return chosen


def min_dominating_set(masks: Sequence[int], budget: int) -> list[int]:
    """Minimum dominating set by iterative deepening on its size

    Each level branches on the closed neighbourhood of the lowest undominated
    vertex; a branch is cut when the remaining picks cannot cover what is
    still undominated.

    Raises:
        SolverBudgetExhausted: If more than ``budget`` nodes are expanded
    """
    n = len(masks)
    if n == 0:
        return []
    full = (1 << n) - 1
    closed = [m | (1 << v) for v, m in enumerate(masks)]
    upper = _greedy_dominating(closed, full)
    max_cover = max(c.bit_count() for c in closed)
    lower = -(-n // max_cover)
    counter = NodeBudget(budget, "domination")

    def search(chosen: list[int], dominated: int, k: int) -> list[int] | None:
        if dominated == full:
            return list(chosen)
        left = k - len(chosen)
        if left == 0:
            return None
        undominated = full & ~dominated
        cover = max((closed[u] & undominated).bit_count() for u in range(n))
        if left * cover < undominated.bit_count():
            return None
        counter.tick()
        target = (undominated & -undominated).bit_length() - 1
        for u in _bits(closed[target]):
            chosen.append(u)
            found = search(chosen, dominated | closed[u], k)
            chosen.pop()
            if found is not None:
                return found
        return None

    for k in range(lower, len(upper)):
        found = search([], 0, k)
        if found is not None:
            logger.debug(f"domination search: {counter.used} nodes, gamma = {k}")
            return sorted(found)
    return sorted(upper)


def is_clique(masks: Sequence[int], vertices: Sequence[int]) -> bool:
    return all(masks[u] >> v & 1 for i, u in enumerate(vertices) for v in vertices[i + 1 :])


def is_independent(masks: Sequence[int], vertices: Sequence[int]) -> bool:
    return not any(masks[u] >> v & 1 for i, u in enumerate(vertices) for v in vertices[i + 1 :])


def is_dominating(masks: Sequence[int], vertices: Sequence[int]) -> bool:
    covered = 0
    for v in vertices:
        covered |= masks[v] | (1 << v)
    return covered == (1 << len(masks)) - 1
