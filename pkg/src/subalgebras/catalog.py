"""Builders for every Lie algebra family the graph classification covers

Each family is registered with its basis, its parameter defaults and the
dimension of its derived algebra, which is checked on every build.
"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from typing import Callable, Mapping

from ..algebra.finite_field import FieldSpec
from ..algebra.lie_algebra import LieAlgebra, derived_dim, validate
from ..core.errors import CatalogError, UnknownFamilyError

logger = logging.getLogger(__name__)

Matrix2 = tuple[tuple[int, int], tuple[int, int]]


@dataclass(frozen=True)
class CatalogFamily:
    """A family id, the field to build it over and its raw parameters"""

    family: str
    field: FieldSpec
    params: Mapping[str, object] = dc_field(default_factory=dict)


@dataclass(frozen=True)
class FamilyInfo:
    id: str
    description: str
    builder: Callable[[FieldSpec, Mapping[str, object]], LieAlgebra]
    odd_only: bool = False
    min_q: int = 2

    def supports(self, field: FieldSpec) -> bool:
        return field.q >= self.min_q and (field.is_odd or not self.odd_only)

    def unsupported_reason(self, field: FieldSpec) -> str | None:
        if self.odd_only and not field.is_odd:
            return f"{self.id} needs odd q"
        if field.q < self.min_q:
            return f"{self.id} needs q >= {self.min_q}"
        return None


# --- 2x2 matrices over F_q (row convention: [x, v_i] = sum_j A[i][j] v_j) ---


def _char_poly_roots(F: FieldSpec, A: Matrix2) -> list[int]:
    """Roots in F_q of t^2 - tr(A) t + det(A), with multiplicity"""
    add, sub, mul = F.add_table, F.sub_table, F.mul_table
    trace = add[A[0][0]][A[1][1]]
    det = sub[mul[A[0][0]][A[1][1]]][mul[A[0][1]][A[1][0]]]
    roots = []
    for t in range(F.q):
        value = add[sub[mul[t][t]][mul[trace][t]]][det]
        if value == 0:
            roots.append(t)
    # the second root is tr(A) - r, so a lone root is a double root
    if len(roots) == 1:
        roots.append(roots[0])
    return roots


def smallest_irreducible_companion(F: FieldSpec) -> Matrix2:
    """Companion matrix of the smallest irreducible t^2 + c1 t + c0 over F_q"""
    for c1 in range(F.q):
        for c0 in range(1, F.q):
            companion = ((0, 1), (F.neg_table[c0], F.neg_table[c1]))
            if not _char_poly_roots(F, companion):
                return companion
    raise CatalogError(f"no irreducible quadratic over F_{F.designation}")


def detect_case3(F: FieldSpec, A: Matrix2) -> tuple[str, dict[str, int]]:
    """Subcase of ``ad x`` on the derived algebra, with canonical parameters

    Returns:
        ``("irreducible", {})``, ``("two_eigen", {"mu": μ})``,
        ``("jordan", {"lam": 1})`` or ``("scalar", {})``

    Raises:
        CatalogError: If ``A`` is singular (then dim [L, L] < 2)
    """
    mul, sub = F.mul_table, F.sub_table
    det = sub[mul[A[0][0]][A[1][1]]][mul[A[0][1]][A[1][0]]]
    if det == 0:
        raise CatalogError("ad x must act invertibly on the derived algebra")
    if A[0][1] == 0 and A[1][0] == 0 and A[0][0] == A[1][1]:
        return "scalar", {}
    roots = _char_poly_roots(F, A)
    if not roots:
        return "irreducible", {}
    if roots[0] == roots[1]:
        return "jordan", {"lam": 1}
    # replacing x by λ1^{-1} x leaves eigenvalues 1 and μ = λ2 / λ1
    lam1, lam2 = sorted(roots)
    return "two_eigen", {"mu": mul[lam2][F.inv_code(lam1)]}


def _element(F: FieldSpec, value: object) -> int:
    try:
        return F.element(value).code
    except ValueError as exc:
        raise CatalogError(f"invalid field element {value!r}: {exc}") from exc


def _matrix_param(F: FieldSpec, raw: object) -> Matrix2:
    if isinstance(raw, str):
        entries = [e for e in raw.replace(";", ",").split(",") if e.strip()]
    else:
        entries = [x for row in raw for x in row]  # type: ignore[union-attr]
    if len(entries) != 4:
        raise CatalogError(f"matrix needs 4 entries (row-major), got {len(entries)}")
    a, b, c, d = (_element(F, e.strip() if isinstance(e, str) else e) for e in entries)
    return ((a, b), (c, d))


def _check_params(family: str, params: Mapping[str, object], allowed: set[str]) -> None:
    unknown = set(params) - allowed
    if unknown:
        raise CatalogError(f"{family} does not take parameter(s) {sorted(unknown)}")


def _case3_algebra(F: FieldSpec, A: Matrix2, family: str, params: Mapping[str, object]) -> LieAlgebra:
    zero = 0
    brackets = {
        (0, 1): (zero, A[0][0], A[0][1]),
        (0, 2): (zero, A[1][0], A[1][1]),
    }
    return LieAlgebra.from_brackets(
        F, 3, brackets, name=family, basis_names=("x", "v1", "v2"), family=family, params=params
    )


def _build_dim1(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("dim1", params, set())
    return LieAlgebra.from_brackets(F, 1, {}, name="dim1", basis_names=("x",), family="dim1")


def _abelian(F: FieldSpec, n: int, family: str) -> LieAlgebra:
    names = ("x", "y", "z", "w")[:n] if n <= 4 else tuple(f"e{i + 1}" for i in range(n))
    return LieAlgebra.from_brackets(F, n, {}, name=family, basis_names=names, family=family, params={"n": n})


def _build_abelian(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("abelian", params, {"n"})
    try:
        n = int(params.get("n", 3))  # type: ignore[arg-type]
    except (TypeError, ValueError):
        raise CatalogError(f"abelian n must be an integer, got {params.get('n')!r}") from None
    if not 1 <= n <= 4:
        raise CatalogError(f"abelian n must be in 1..4, got {n}")
    return _abelian(F, n, "abelian")


def _build_abelian2(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("abelian2", params, set())
    return _abelian(F, 2, "abelian2")


def _build_abelian3(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("abelian3", params, set())
    return _abelian(F, 3, "abelian3")


def _build_nonabelian2(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("nonabelian2", params, set())
    return LieAlgebra.from_brackets(
        F, 2, {(0, 1): (0, 1)}, name="nonabelian2", basis_names=("x", "y"), family="nonabelian2"
    )


def _build_heisenberg3(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("heisenberg3", params, set())
    return LieAlgebra.from_brackets(
        F, 3, {(0, 1): (0, 0, 1)}, name="heisenberg3", basis_names=("e", "f", "h"), family="heisenberg3"
    )


def _build_solvable2b(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("solvable2B", params, set())
    return LieAlgebra.from_brackets(
        F, 3, {(0, 1): (0, 1, 0)}, name="solvable2B", basis_names=("x", "y", "z"), family="solvable2B"
    )


def _build_case3_irreducible(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("case3_irreducible", params, {"matrix"})
    if "matrix" in params:
        A = _matrix_param(F, params["matrix"])
        if _char_poly_roots(F, A):
            raise CatalogError("case3_irreducible needs a matrix with no eigenvalue in F_q")
    else:
        A = smallest_irreducible_companion(F)
    return _case3_algebra(F, A, "case3_irreducible", {"matrix": _format_matrix(F, A)})


def _build_case3_two_eigen(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("case3_two_eigen", params, {"mu"})
    if "mu" in params:
        mu = _element(F, params["mu"])
    else:
        mu = next((c for c in range(2, F.q)), None)
        if mu is None:
            raise CatalogError(f"case3_two_eigen needs an eigenvalue outside {{0, 1}}; F_{F.designation} has none")
    if mu in (0, 1):
        raise CatalogError("case3_two_eigen needs mu outside {0, 1}")
    return _case3_algebra(F, ((1, 0), (0, mu)), "case3_two_eigen", {"mu": F.format_code(mu)})


def _build_case3_jordan(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("case3_jordan", params, {"lam"})
    lam = _element(F, params.get("lam", 1))
    if lam == 0:
        raise CatalogError("case3_jordan needs a nonzero eigenvalue lam")
    return _case3_algebra(F, ((lam, 0), (1, lam)), "case3_jordan", {"lam": F.format_code(lam)})


def _build_case3_scalar(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("case3_scalar", params, set())
    return _case3_algebra(F, ((1, 0), (0, 1)), "case3_scalar", {})


def _build_case3(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    """Detect the subcase of a raw ``ad x`` matrix and build its canonical form"""
    _check_params("case3", params, {"matrix"})
    if "matrix" not in params:
        raise CatalogError("case3 needs a matrix parameter, e.g. matrix=0,1,1,1")
    A = _matrix_param(F, params["matrix"])
    subcase, canonical = detect_case3(F, A)
    logger.info(f"case3 matrix {_format_matrix(F, A)} detected as subcase {subcase}")
    family = f"case3_{subcase}"
    if subcase == "irreducible":
        canonical_params: dict[str, object] = {"matrix": A}
    else:
        canonical_params = dict(canonical)
    algebra = FAMILIES[family].builder(F, canonical_params)
    return LieAlgebra.from_brackets(
        F,
        algebra.n,
        {(i, j): algebra.c[i][j] for i in range(algebra.n) for j in range(i + 1, algebra.n)},
        name="case3",
        basis_names=algebra.basis_names,
        family=family,
        params={"matrix": _format_matrix(F, A), "detected": subcase, **dict(algebra.params)},
    )


def _build_sl2(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("sl2", params, set())
    two = F.code([2 % F.p])
    minus_two = F.neg_table[two]
    brackets = {
        (0, 1): (0, 0, 1),
        (0, 2): (minus_two, 0, 0),
        (1, 2): (0, two, 0),
    }
    return LieAlgebra.from_brackets(F, 3, brackets, name="sl2", basis_names=("x", "y", "h"), family="sl2")


def _build_su2(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    _check_params("su2", params, set())
    minus_one = F.neg_table[1]
    brackets = {
        (0, 1): (0, 0, 1),
        (1, 2): (1, 0, 0),
        (0, 2): (0, minus_one, 0),
    }
    return LieAlgebra.from_brackets(F, 3, brackets, name="su2", basis_names=("e1", "e2", "e3"), family="su2")


def _build_diam3_example(F: FieldSpec, params: Mapping[str, object]) -> LieAlgebra:
    """(Fa ⊕ B) + Fx with a central and ad x irreducible on B = span(b1, b2)"""
    _check_params("diam3_example", params, {"matrix"})
    if "matrix" in params:
        A = _matrix_param(F, params["matrix"])
        if _char_poly_roots(F, A):
            raise CatalogError("diam3_example needs an irreducible action on B")
    else:
        A = smallest_irreducible_companion(F)
    neg = F.neg_table
    brackets = {
        (1, 3): (0, neg[A[0][0]], neg[A[0][1]], 0),
        (2, 3): (0, neg[A[1][0]], neg[A[1][1]], 0),
    }
    return LieAlgebra.from_brackets(
        F,
        4,
        brackets,
        name="diam3_example",
        basis_names=("a", "b1", "b2", "x"),
        family="diam3_example",
        params={"matrix": _format_matrix(F, A)},
    )


def _format_matrix(F: FieldSpec, A: Matrix2) -> str:
    return ",".join(F.format_code(x) for row in A for x in row)


FAMILIES: dict[str, FamilyInfo] = {
    info.id: info
    for info in (
        FamilyInfo("dim1", "one-dimensional algebra", _build_dim1),
        FamilyInfo("abelian2", "abelian, dimension 2", _build_abelian2),
        FamilyInfo("nonabelian2", "[x,y] = y", _build_nonabelian2),
        FamilyInfo("abelian3", "abelian, dimension 3", _build_abelian3),
        FamilyInfo("heisenberg3", "[e,f] = h central", _build_heisenberg3),
        FamilyInfo("solvable2B", "[x,y] = y, z central", _build_solvable2b),
        FamilyInfo("case3_irreducible", "ad x irreducible on [L,L]", _build_case3_irreducible),
        FamilyInfo("case3_two_eigen", "ad x = diag(1, mu) on [L,L]", _build_case3_two_eigen, min_q=3),
        FamilyInfo("case3_jordan", "ad x a Jordan block on [L,L]", _build_case3_jordan),
        FamilyInfo("case3_scalar", "ad x = identity on [L,L]", _build_case3_scalar),
        FamilyInfo("sl2", "[x,y] = h, [h,x] = 2x, [h,y] = -2y", _build_sl2, odd_only=True),
        FamilyInfo("su2", "[e1,e2] = e3 and cyclic", _build_su2, odd_only=True),
        FamilyInfo("diam3_example", "(Fa + B) + Fx, ad x irreducible on B", _build_diam3_example),
    )
}

# families reachable by id but left out of `sweep --all`
EXTRA_FAMILIES: dict[str, FamilyInfo] = {
    "abelian": FamilyInfo("abelian", "abelian of dimension n (param n, 1..4)", _build_abelian),
    "case3": FamilyInfo("case3", "derived dim 2 from a raw ad x matrix (param matrix)", _build_case3),
}

EXPECTED_DERIVED_DIM = {
    "dim1": 0,
    "abelian": 0,
    "abelian2": 0,
    "abelian3": 0,
    "nonabelian2": 1,
    "heisenberg3": 1,
    "solvable2B": 1,
    "case3_irreducible": 2,
    "case3_two_eigen": 2,
    "case3_jordan": 2,
    "case3_scalar": 2,
    "sl2": 3,
    "su2": 3,
    "diam3_example": 2,
}

FAMILY_IDS: tuple[str, ...] = tuple(FAMILIES)


def family_info(family: str) -> FamilyInfo:
    info = FAMILIES.get(family) or EXTRA_FAMILIES.get(family)
    if info is None:
        known = ", ".join(list(FAMILIES) + list(EXTRA_FAMILIES))
        raise UnknownFamilyError(f"unknown family {family!r}; known families: {known}")
    return info


def build_catalog(spec: CatalogFamily) -> LieAlgebra:
    """Build, validate and sanity-check a catalog algebra

    Raises:
        UnknownFamilyError: Unknown family id
        CatalogError: Invalid parameters, or a build whose derived dimension
            disagrees with its family
    """
    info = family_info(spec.family)
    algebra = info.builder(spec.field, spec.params)
    report = validate(algebra)
    if not report.ok:
        raise CatalogError(f"{spec.family} over {spec.field} is not a Lie algebra: {report.summary()}")
    expected = EXPECTED_DERIVED_DIM.get(algebra.family or spec.family)
    # sl2 degenerates to a Heisenberg-like algebra in characteristic 2
    if expected is not None and (spec.field.is_odd or algebra.family != "sl2"):
        actual = derived_dim(algebra)
        if actual != expected:
            raise CatalogError(
                f"{spec.family} over {spec.field} has derived dim {actual}, expected {expected}"
            )
    logger.info(f"built {algebra}")
    return algebra


def build(family: str, field: FieldSpec, **params: object) -> LieAlgebra:
    return build_catalog(CatalogFamily(family, field, params))
