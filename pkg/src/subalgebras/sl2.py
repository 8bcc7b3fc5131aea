"""Line types and Borel subalgebras of sl2(F_q), q odd

The basis is ``(x, y, h)`` with ``[x, y] = h``, ``[x, h] = -2x``, ``[y, h] = 2y``.
For ``u = ax + by + ch`` the discriminant ``c^2 + ab`` decides whether the
line through ``u`` is nilpotent, split or nonsplit.
"""
from __future__ import annotations

import logging
from enum import Enum
from typing import Sequence

from ..algebra.finite_field import FieldElement, is_square_code
from ..algebra.lie_algebra import LieAlgebra, Subspace
from ..core.errors import CatalogError, FieldError, SubspaceError

logger = logging.getLogger(__name__)


class LineKind(str, Enum):
    NILPOTENT = "nilpotent"
    SPLIT = "split"
    NONSPLIT = "nonsplit"
    GENERIC = "generic"


def require_sl2(L: LieAlgebra) -> None:
    """Raise unless ``L`` is the catalog sl2 over a field of odd order"""
    if L.family != "sl2":
        raise CatalogError(f"{L.label} is not sl2; sl2-specific operations do not apply")
    if not L.field.is_odd:
        raise FieldError(f"sl2 line types and Borels need odd q, got F_{L.field.designation}")


def _line_generator(line: Subspace) -> tuple[int, ...]:
    if line.dim != 1:
        raise SubspaceError(f"expected a line, got a {line.dim}-dimensional subspace")
    return line.rows[0]


def discriminant(L: LieAlgebra, u: Sequence[int]) -> FieldElement:
    """Δ(u) = c^2 + ab for u = ax + by + ch"""
    require_sl2(L)
    add, mul = L.field.add_table, L.field.mul_table
    a, b, c = u
    return FieldElement(L.field, add[mul[c][c]][mul[a][b]])


def classify_line_sl2(L: LieAlgebra, line: Subspace) -> LineKind:
    """Nilpotent, split or nonsplit by the squareness class of Δ"""
    delta = discriminant(L, _line_generator(line)).code
    if delta == 0:
        return LineKind.NILPOTENT
    return LineKind.SPLIT if is_square_code(L.field, delta) else LineKind.NONSPLIT


def borel_standard(L: LieAlgebra) -> Subspace:
    """B = span(x, h)"""
    require_sl2(L)
    return L.span((1, 0, 0), (0, 0, 1))


def borel_at(L: LieAlgebra, alpha: int) -> Subspace:
    """B(α) = span(h + αx, y + (α²/4)x)"""
    require_sl2(L)
    F = L.field
    quarter = F.inv_code(F.code([4 % F.p]))
    alpha_sq = F.mul_table[alpha][alpha]
    return L.span((alpha, 0, 1), (F.mul_table[alpha_sq][quarter], 1, 0))


def borels_closed_form(L: LieAlgebra) -> list[Subspace]:
    """The q+1 Borels {B} ∪ {B(α)}, in canonical vertex order"""
    require_sl2(L)
    borels = [borel_standard(L)] + [borel_at(L, alpha) for alpha in range(L.field.q)]
    return sorted(borels)


def borel_membership_count(L: LieAlgebra, line: Subspace) -> int:
    """Number of Borels containing ``line``, from the closed-form criterion

    Normalizing the generator to ``h + μx + νy`` (or ``μx + νy`` when it has no
    h-component), the count is decided by whether ``μν + 1`` (resp. ``μ/ν``)
    is zero, a nonzero square or a nonsquare.
    """
    require_sl2(L)
    F = L.field
    mul, add = F.mul_table, F.add_table
    a, b, c = _line_generator(line)

    if c:
        inv_c = F.inv_code(c)
        mu, nu = mul[a][inv_c], mul[b][inv_c]
        if nu == 0:
            # B itself plus the single root of 4α = 4μ
            return 2
        criterion = add[mul[mu][nu]][1]
        if criterion == 0:
            return 1
        return 2 if is_square_code(F, criterion) else 0

    mu, nu = a, b
    if nu == 0:
        return 1
    if mu == 0:
        return 1
    ratio = mul[mu][F.inv_code(nu)]
    return 2 if is_square_code(F, ratio) else 0


def borel_membership_exhaustive(L: LieAlgebra, line: Subspace, borels: list[Subspace] | None = None) -> int:
    """Number of Borels containing ``line``, by direct containment"""
    borels = borels if borels is not None else borels_closed_form(L)
    return sum(1 for B in borels if B.contains(line))


MEMBERSHIP_BY_KIND = {LineKind.NONSPLIT: 0, LineKind.NILPOTENT: 1, LineKind.SPLIT: 2}


def borel_lines(L: LieAlgebra, borel: Subspace, lines: list[Subspace]) -> dict[LineKind, list[Subspace]]:
    """Lines of ``borel`` grouped by kind"""
    grouped: dict[LineKind, list[Subspace]] = {kind: [] for kind in MEMBERSHIP_BY_KIND}
    for line in lines:
        if borel.contains(line):
            grouped[classify_line_sl2(L, line)].append(line)
    return grouped
