"""Lie algebras by structure constants, subspaces in canonical RREF form

Vectors are tuples of field codes (see ``finite_field``). A subspace is the
tuple of its reduced row echelon rows, so equal subspaces compare and hash
equal without any further normalization.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass, field as dc_field
from functools import cached_property
from typing import Iterable, Literal, Mapping, Sequence

from ..core.errors import AlgebraError, SubspaceError
from .finite_field import FieldElement, FieldSpec

logger = logging.getLogger(__name__)

Vector = tuple[int, ...]
SubspaceOp = Literal["sum", "intersection", "contains", "equals"]


def rref(field: FieldSpec, rows: Iterable[Sequence[int]], ncols: int) -> tuple[Vector, ...]:
    """Reduced row echelon form of ``rows`` with zero rows dropped"""
    add, mul, neg = field.add_table, field.mul_table, field.neg_table
    matrix = [list(row) for row in rows if any(row)]
    rank = 0
    for col in range(ncols):
        pivot = next((i for i in range(rank, len(matrix)) if matrix[i][col]), None)
        if pivot is None:
            continue
        matrix[rank], matrix[pivot] = matrix[pivot], matrix[rank]
        scale = field.inv_code(matrix[rank][col])
        pivot_row = [mul[scale][x] for x in matrix[rank]]
        matrix[rank] = pivot_row
        for i, row in enumerate(matrix):
            if i == rank or not row[col]:
                continue
            factor = neg[row[col]]
            matrix[i] = [add[x][mul[factor][y]] for x, y in zip(row, pivot_row)]
        rank += 1
        if rank == len(matrix):
            break
    return tuple(tuple(row) for row in matrix[:rank])


def nullspace(field: FieldSpec, matrix: Sequence[Sequence[int]], ncols: int) -> list[Vector]:
    """Basis of ``{x : M x = 0}``, one vector per free column of the RREF of ``M``"""
    reduced = rref(field, matrix, ncols)
    pivots = [next(col for col, x in enumerate(row) if x) for row in reduced]
    free = [col for col in range(ncols) if col not in pivots]
    basis = []
    for f in free:
        x = [0] * ncols
        x[f] = 1
        for row, p in zip(reduced, pivots):
            x[p] = field.neg_table[row[f]]
        basis.append(tuple(x))
    return basis


def _transpose(rows: Sequence[Sequence[int]], ncols: int) -> list[list[int]]:
    return [[row[c] for row in rows] for c in range(ncols)]


@dataclass(frozen=True)
class LieAlgebra:
    """A Lie algebra of dimension ``n`` over ``field`` given by structure constants

    ``c[i][j]`` is the coordinate vector of ``[e_i, e_j]``.
    """

    field: FieldSpec
    n: int
    c: tuple[tuple[Vector, ...], ...]
    name: str = ""
    basis_names: tuple[str, ...] = ()
    family: str | None = None
    params: tuple[tuple[str, str], ...] = dc_field(default=(), compare=False)

    @classmethod
    def from_brackets(
        cls,
        field: FieldSpec,
        n: int,
        brackets: Mapping[tuple[int, int], Sequence["int | str | FieldElement"]],
        *,
        name: str = "",
        basis_names: Sequence[str] = (),
        family: str | None = None,
        params: Mapping[str, object] | None = None,
    ) -> "LieAlgebra":
        """Build an algebra from the brackets of ordered basis pairs

        The antisymmetric partner of every listed pair is filled in; pairs not
        listed bracket to zero.

        Raises:
            AlgebraError: Bad indices, a nonzero ``[e_i, e_i]``, or
                conflicting entries for ``(i, j)`` and ``(j, i)``
        """
        if n < 0:
            raise AlgebraError(f"dimension must be non-negative, got {n}")
        tensor = [[[0] * n for _ in range(n)] for _ in range(n)]
        seen: set[tuple[int, int]] = set()
        for (i, j), coeffs in brackets.items():
            if not (0 <= i < n and 0 <= j < n):
                raise AlgebraError(f"bracket indices ({i}, {j}) out of range for dim {n}")
            if len(coeffs) != n:
                raise AlgebraError(f"bracket ({i}, {j}) needs {n} coefficients, got {len(coeffs)}")
            vec = [field.element(x).code for x in coeffs]
            if i == j:
                if any(vec):
                    raise AlgebraError(f"[e_{i}, e_{i}] must be zero")
                continue
            if (j, i) in seen:
                raise AlgebraError(f"bracket ({i}, {j}) given twice (also as ({j}, {i}))")
            seen.add((i, j))
            tensor[i][j] = vec
            tensor[j][i] = [field.neg_table[x] for x in vec]
        if basis_names and len(basis_names) != n:
            raise AlgebraError(f"expected {n} basis names, got {len(basis_names)}")
        frozen = tuple(tuple(tuple(v) for v in row) for row in tensor)
        return cls(
            field,
            n,
            frozen,
            name=name,
            basis_names=tuple(basis_names) or tuple(f"e{i + 1}" for i in range(n)),
            family=family,
            params=tuple(sorted((k, str(v)) for k, v in (params or {}).items())),
        )

    @cached_property
    def _nonzero_brackets(self) -> list[list[Vector | None]]:
        return [[vec if any(vec) else None for vec in row] for row in self.c]

    def vector(self, coords: Iterable["int | str | FieldElement"]) -> Vector:
        """Coerce coordinates into a canonical vector of this algebra"""
        vec = tuple(self.field.element(x).code for x in coords)
        if len(vec) != self.n:
            raise AlgebraError(f"expected {self.n} coordinates, got {len(vec)}")
        return vec

    def basis_vector(self, i: int) -> Vector:
        return tuple(1 if m == i else 0 for m in range(self.n))

    def bracket(self, u: Sequence[int], v: Sequence[int]) -> Vector:
        if len(u) != self.n or len(v) != self.n:
            raise AlgebraError(f"bracket of vectors of length {len(u)} and {len(v)} in dim {self.n}")
        add, mul = self.field.add_table, self.field.mul_table
        brackets = self._nonzero_brackets
        out = [0] * self.n
        for i, ui in enumerate(u):
            if not ui:
                continue
            row = brackets[i]
            for j, vj in enumerate(v):
                vec = row[j]
                if not vj or vec is None:
                    continue
                coef = mul[ui][vj]
                for m, cm in enumerate(vec):
                    if cm:
                        out[m] = add[out[m]][mul[coef][cm]]
        return tuple(out)

    def span(self, *vectors: Sequence[int]) -> "Subspace":
        return rref_canonical(self, vectors)

    def zero_subspace(self) -> "Subspace":
        return Subspace(self, ())

    def whole(self) -> "Subspace":
        return Subspace(self, tuple(self.basis_vector(i) for i in range(self.n)))

    def format_vector(self, v: Sequence[int]) -> str:
        """Render ``v`` in terms of the basis names, e.g. ``h+2x``"""
        terms = []
        for coeff, name in zip(v, self.basis_names):
            if not coeff:
                continue
            text = self.field.format_code(coeff)
            if coeff == 1:
                terms.append(name)
            elif "+" in text:
                terms.append(f"({text}){name}")
            else:
                terms.append(f"{text}{name}")
        return "+".join(terms) if terms else "0"

    @property
    def label(self) -> str:
        return self.name or self.family or f"L(dim {self.n})"

    def __str__(self) -> str:
        return f"{self.label} over {self.field}"


@dataclass(frozen=True, eq=False)
class Subspace:
    """A subspace of ``algebra`` stored as its RREF rows"""

    algebra: LieAlgebra
    rows: tuple[Vector, ...]

    @property
    def dim(self) -> int:
        return len(self.rows)

    @cached_property
    def pivots(self) -> tuple[int, ...]:
        return tuple(next(col for col, x in enumerate(row) if x) for row in self.rows)

    @property
    def sort_key(self) -> tuple[int, tuple[int, ...]]:
        return (self.dim, tuple(x for row in self.rows for x in row))

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, Subspace):
            return NotImplemented
        if self.rows != other.rows:
            return False
        A, B = self.algebra, other.algebra
        return A is B or (A.field == B.field and A.c == B.c)

    def __hash__(self) -> int:
        return hash((self.algebra.field, self.rows))

    def __lt__(self, other: "Subspace") -> bool:
        return self.sort_key < other.sort_key

    def reduce(self, v: Sequence[int]) -> Vector:
        """Residue of ``v`` after eliminating the pivot coordinates"""
        add, mul, neg = self.algebra.field.add_table, self.algebra.field.mul_table, self.algebra.field.neg_table
        out = list(v)
        for row, p in zip(self.rows, self.pivots):
            if out[p]:
                factor = neg[out[p]]
                out = [add[x][mul[factor][y]] for x, y in zip(out, row)]
        return tuple(out)

    def contains_vector(self, v: Sequence[int]) -> bool:
        return not any(self.reduce(v))

    def contains(self, other: "Subspace") -> bool:
        return other.dim <= self.dim and all(self.contains_vector(row) for row in other.rows)

    def vectors(self) -> list[Vector]:
        """All q^dim elements of the subspace, zero first"""
        field = self.algebra.field
        add, mul = field.add_table, field.mul_table
        out = []
        for coeffs in itertools.product(range(field.q), repeat=self.dim):
            vec = [0] * self.algebra.n
            for a, row in zip(coeffs, self.rows):
                if a:
                    vec = [add[x][mul[a][y]] for x, y in zip(vec, row)]
            out.append(tuple(vec))
        return out

    def is_subalgebra(self) -> bool:
        L = self.algebra
        return all(self.contains_vector(L.bracket(a, b)) for a, b in itertools.combinations(self.rows, 2))

    def format(self) -> str:
        """Rows as ``[1 0 0;0 0 1]`` using field-element text"""
        fmt = self.algebra.field.format_code
        return "[" + ";".join(" ".join(fmt(x) for x in row) for row in self.rows) + "]"

    def describe(self) -> str:
        """Span notation in basis names, e.g. ``<x, h>``"""
        return "<" + ", ".join(self.algebra.format_vector(row) for row in self.rows) + ">"

    def __repr__(self) -> str:
        return f"Subspace{self.format()}"


def rref_canonical(L: LieAlgebra, vectors: Iterable[Sequence[int]]) -> Subspace:
    """The unique RREF basis of the span of ``vectors``"""
    vectors = list(vectors)
    for v in vectors:
        if len(v) != L.n:
            raise SubspaceError(f"vector of length {len(v)} in an algebra of dim {L.n}")
    return Subspace(L, rref(L.field, vectors, L.n))


def _same_algebra(A: Subspace, B: Subspace) -> LieAlgebra:
    if A.algebra is not B.algebra and A.algebra != B.algebra:
        raise SubspaceError("subspaces belong to different algebras")
    return A.algebra


def subspace_sum(A: Subspace, B: Subspace) -> Subspace:
    L = _same_algebra(A, B)
    return rref_canonical(L, A.rows + B.rows)


def subspace_intersection(A: Subspace, B: Subspace) -> Subspace:
    """A ∩ B from the left nullspace of the stacked bases"""
    L = _same_algebra(A, B)
    if not A.rows or not B.rows:
        return L.zero_subspace()
    stacked = A.rows + B.rows
    relations = nullspace(L.field, _transpose(stacked, L.n), len(stacked))
    add, mul = L.field.add_table, L.field.mul_table
    common = []
    for coeffs in relations:
        vec = [0] * L.n
        for a, row in zip(coeffs[: A.dim], A.rows):
            if a:
                vec = [add[x][mul[a][y]] for x, y in zip(vec, row)]
        common.append(vec)
    return rref_canonical(L, common)


def subspace_ops(A: Subspace, B: Subspace, op: SubspaceOp) -> Subspace | bool:
    """Sum, intersection, containment (``B ⊆ A``) or equality of two subspaces"""
    _same_algebra(A, B)
    if op == "sum":
        return subspace_sum(A, B)
    if op == "intersection":
        return subspace_intersection(A, B)
    if op == "contains":
        return A.contains(B)
    if op == "equals":
        return A == B
    raise SubspaceError(f"unknown subspace operation {op!r}")


def bracket(L: LieAlgebra, u: Sequence[int], v: Sequence[int]) -> Vector:
    return L.bracket(u, v)


def generated_subalgebra(L: LieAlgebra, S: Subspace) -> Subspace:
    """Smallest subalgebra containing ``S`` (closure under brackets of basis pairs)"""
    current = S
    while True:
        brackets = [L.bracket(a, b) for a, b in itertools.combinations(current.rows, 2)]
        grown = rref_canonical(L, current.rows + tuple(brackets))
        if grown.dim == current.dim:
            return current
        current = grown


def is_subalgebra(L: LieAlgebra, S: Subspace) -> bool:
    return S.is_subalgebra()


def derived_algebra(L: LieAlgebra) -> Subspace:
    """[L, L] as a subspace"""
    return rref_canonical(L, (L.c[i][j] for i, j in itertools.combinations(range(L.n), 2)))


def derived_dim(L: LieAlgebra) -> int:
    return derived_algebra(L).dim


def ad_matrix(L: LieAlgebra, u: Sequence[int]) -> list[Vector]:
    """Matrix of ``ad u``; row ``i`` holds the coordinates of ``[u, e_i]``"""
    return [L.bracket(u, L.basis_vector(i)) for i in range(L.n)]


@dataclass(frozen=True)
class Violation:
    kind: Literal["shape", "alternating", "antisymmetry", "jacobi"]
    indices: tuple[int, ...]

    def __str__(self) -> str:
        return f"{self.kind} fails at {self.indices}"


@dataclass(frozen=True)
class ValidationReport:
    ok: bool
    violations: tuple[Violation, ...] = ()

    def __bool__(self) -> bool:
        return self.ok

    def summary(self, limit: int = 5) -> str:
        if self.ok:
            return "valid Lie algebra"
        shown = "; ".join(str(v) for v in self.violations[:limit])
        more = len(self.violations) - limit
        return shown + (f"; and {more} more" if more > 0 else "")


def validate(L: LieAlgebra) -> ValidationReport:
    """Check alternation, antisymmetry and the Jacobi identity on basis triples

    Never raises; every failure is listed in the returned report.
    """
    n, q = L.n, L.field.q
    shape_ok = len(L.c) == n and all(
        len(row) == n and all(len(vec) == n and all(0 <= x < q for x in vec) for vec in row) for row in L.c
    )
    if not shape_ok:
        return ValidationReport(False, (Violation("shape", ()),))

    neg, add = L.field.neg_table, L.field.add_table
    violations: list[Violation] = []
    for i in range(n):
        if any(L.c[i][i]):
            violations.append(Violation("alternating", (i, i)))
    for i, j in itertools.combinations(range(n), 2):
        if any(x != neg[y] for x, y in zip(L.c[i][j], L.c[j][i])):
            violations.append(Violation("antisymmetry", (i, j)))

    basis = [L.basis_vector(i) for i in range(n)]
    for i, j, k in itertools.combinations_with_replacement(range(n), 3):
        x, y, z = basis[i], basis[j], basis[k]
        terms = (
            L.bracket(x, L.c[j][k]),
            L.bracket(y, L.c[k][i]),
            L.bracket(z, L.c[i][j]),
        )
        total = [add[add[a][b]][c] for a, b, c in zip(*terms)]
        if any(total):
            violations.append(Violation("jacobi", (i, j, k)))
    if violations:
        logger.debug(f"{L.label}: {len(violations)} axiom violations")
    return ValidationReport(not violations, tuple(violations))
