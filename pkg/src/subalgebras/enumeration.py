"""Certified enumeration of subspaces and subalgebras

Subspaces are produced directly as RREF patterns (pivot columns times free
entries), so every d-dimensional subspace appears exactly once and the count
is the Gaussian binomial by construction.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterator

from ..algebra.lie_algebra import LieAlgebra, Subspace, subspace_intersection
from ..core.errors import SubspaceError

logger = logging.getLogger(__name__)


def gaussian_binomial(n: int, d: int, q: int) -> int:
    """Number of d-dimensional subspaces of F_q^n"""
    if d < 0 or d > n:
        return 0
    num, den = 1, 1
    for i in range(d):
        num *= q ** (n - i) - 1
        den *= q ** (i + 1) - 1
    return num // den


def rref_patterns(n: int, d: int, q: int) -> Iterator[tuple[tuple[int, ...], ...]]:
    """Yield every d×n RREF matrix over the codes ``0..q-1``"""
    for pivots in itertools.combinations(range(n), d):
        free = [(r, c) for r, p in enumerate(pivots) for c in range(p + 1, n) if c not in pivots]
        for values in itertools.product(range(q), repeat=len(free)):
            rows = [[0] * n for _ in range(d)]
            for r, p in enumerate(pivots):
                rows[r][p] = 1
            for (r, c), v in zip(free, values):
                rows[r][c] = v
            yield tuple(tuple(row) for row in rows)


def enumerate_subspaces(L: LieAlgebra, d: int) -> list[Subspace]:
    """All d-dimensional subspaces of L, sorted by canonical matrix

    Raises:
        SubspaceError: If ``d`` is outside ``0..n``
    """
    if not 0 <= d <= L.n:
        raise SubspaceError(f"subspace dimension {d} out of range 0..{L.n}")
    subspaces = [Subspace(L, rows) for rows in rref_patterns(L.n, d, L.field.q)]
    subspaces.sort()
    return subspaces


@dataclass
class SubalgebraInventory:
    """Every nontrivial proper subalgebra of ``algebra``, grouped by dimension"""

    algebra: LieAlgebra
    by_dim: dict[int, list[Subspace]]
    maximals: list[Subspace]
    frattini: Subspace
    kinds: dict[Subspace, str] = dc_field(default_factory=dict)

    @cached_property
    def proper(self) -> list[Subspace]:
        """Nontrivial proper subalgebras in vertex order (dimension, then matrix)"""
        return [S for d in sorted(self.by_dim) for S in self.by_dim[d]]

    @property
    def lines(self) -> list[Subspace]:
        return self.by_dim.get(1, [])

    @property
    def planes(self) -> list[Subspace]:
        return self.by_dim.get(2, [])

    def count(self, d: int) -> int:
        return len(self.by_dim.get(d, []))

    def to_json(self) -> dict:
        """Inventory export: matrices as rows of field-element strings"""
        fmt = self.algebra.field.format_code

        def matrix(S: Subspace) -> list[list[str]]:
            return [[fmt(x) for x in row] for row in S.rows]

        data: dict = {
            "algebra": self.algebra.label,
            "field": self.algebra.field.designation,
            "dim": self.algebra.n,
            "by_dim": {str(d): [matrix(S) for S in subs] for d, subs in sorted(self.by_dim.items())},
            "maximals": [matrix(S) for S in self.maximals],
            "frattini": matrix(self.frattini),
        }
        if self.kinds:
            data["kinds"] = [self.kinds.get(S, "") for S in self.lines]
        return data


def find_maximals(L: LieAlgebra, candidates: list[Subspace]) -> list[Subspace]:
    """Candidates not properly contained in another candidate (pairwise containment)"""
    maximals = []
    for S in candidates:
        if not any(T.dim > S.dim and T.contains(S) for T in candidates):
            maximals.append(S)
    return maximals


def intersect_all(L: LieAlgebra, subspaces: list[Subspace]) -> Subspace:
    """Intersection of ``subspaces``; the whole algebra when the list is empty"""
    result = L.whole()
    for S in subspaces:
        result = subspace_intersection(result, S)
        if result.dim == 0:
            break
    return result


def enumerate_subalgebras(L: LieAlgebra) -> SubalgebraInventory:
    """Filter every proper stratum by bracket closure, then find maximals and F(L)"""
    by_dim: dict[int, list[Subspace]] = {}
    for d in range(1, L.n):
        stratum = enumerate_subspaces(L, d)
        # lines are always subalgebras since [u, u] = 0
        by_dim[d] = stratum if d == 1 else [S for S in stratum if S.is_subalgebra()]
        logger.debug(f"{L.label}: {len(by_dim[d])} of {len(stratum)} {d}-dim subspaces are subalgebras")

    proper = [S for d in sorted(by_dim) for S in by_dim[d]]
    candidates = ([L.zero_subspace()] if L.n >= 1 else []) + proper
    maximals = find_maximals(L, candidates)
    frattini_subalgebra = intersect_all(L, maximals)
    logger.info(
        f"{L} has {len(proper)} proper subalgebras, {len(maximals)} maximal, "
        f"dim F(L) = {frattini_subalgebra.dim}"
    )
    return SubalgebraInventory(L, by_dim, maximals, frattini_subalgebra)


def frattini(source: LieAlgebra | SubalgebraInventory) -> Subspace:
    """F(L): intersection of all maximal subalgebras, L itself if there are none"""
    inventory = source if isinstance(source, SubalgebraInventory) else enumerate_subalgebras(source)
    return inventory.frattini
