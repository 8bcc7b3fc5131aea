"""Closed-form predictions for every catalog family, keyed by invariant name

Each entry cites the result it encodes as ``<Kind> (<topic>): <statement>``,
with Kind one of Theorem, Proposition, Corollary or Lemma. Order and
size are not listed separately: they follow from the degree-class table by
summing class sizes and by the handshake identity.

Invariant names:
    ``order``, ``size``, ``clique_number``, ... : the invariant bundle
    ``count.lines`` / ``count.planes`` / ``count.isolated`` : vertex counts
    ``class.<name>.count`` / ``class.<name>.degree`` : degree classes
    ``star.*`` : the graph with isolated vertices removed
    ``core.*`` : the graph restricted to vertices outside F(L)
    ``law.*`` : structural laws, predicted to hold
"""
from __future__ import annotations

import logging
from dataclasses import asdict, dataclass
from typing import Any, Callable, Literal

from ..core.errors import CatalogError, FieldError
from ..subalgebras.catalog import family_info

logger = logging.getLogger(__name__)

Relation = Literal["==", "<="]
Kind = Literal["exact", "law", "claim"]
Status = Literal["match", "mismatch", "unpredicted", "undecided", "conflict"]

UNDECIDED = object()


@dataclass
class Prediction:
    invariant: str
    predicted: Any
    citation: str
    relation: Relation = "=="
    kind: Kind = "exact"
    computed: Any = None
    status: Status = "unpredicted"

    @property
    def checked(self) -> bool:
        """Whether this row can fail a run (claims and unpredicted rows cannot)"""
        return self.predicted is not None and self.kind != "claim"

    def evaluate(self, computed: Any) -> "Prediction":
        if computed is UNDECIDED:
            self.computed = None
            self.status = "undecided"
            return self
        self.computed = computed
        if self.predicted is None:
            self.status = "unpredicted"
        elif self._holds(computed):
            self.status = "match"
        else:
            self.status = "conflict" if self.kind == "claim" else "mismatch"
            log = logger.warning if self.kind == "claim" else logger.info
            log(f"{self.invariant}: predicted {self.relation} {self.predicted}, computed {computed}")
        return self

    def _holds(self, computed: Any) -> bool:
        if self.relation == "<=":
            return computed is not None and computed <= self.predicted
        return computed == self.predicted

    def to_json(self) -> dict[str, Any]:
        data = asdict(self)
        for key in ("predicted", "computed"):
            if data[key] == float("inf"):
                data[key] = "inf"
        return data


STANDARD_INVARIANTS = (
    "order",
    "size",
    "clique_number",
    "chromatic_number",
    "independence_number",
    "domination_number",
    "diameter",
    "radius",
    "girth",
    "is_planar",
    "is_connected",
    "is_regular",
    "is_complete",
    "count.isolated",
    "frattini_dim",
)


ADJACENCY = "Definition (comaximal graph)"
CERTIFICATE = "Certificate (solver output)"
ISOLATED = "Lemma (isolated vertices)"
COMPLETE = "Theorem (complete graphs)"
MU_ALGEBRAS = "Theorem (mu-algebras)"
DIAMETER = "Proposition (diameter bound)"
DIM3 = "Lemma (adjacency in dimension 3)"
ABELIAN3 = "Proposition (abelian algebras of dimension 3)"
HEISENBERG = "Proposition (Heisenberg algebra)"
HEISENBERG_REGULAR = "Corollary (Heisenberg regularity)"
NONCENTRAL = "Proposition (one-dimensional noncentral derived algebra), [x,y] = y with z central"
DERIVED2 = "Proposition (two-dimensional derived algebra)"
DERIVED2_DEGREES = "Corollary (degrees for a two-dimensional derived algebra)"
PERFECT = "Theorem (perfect algebras of dimension 3)"
SL2_SUBALGEBRAS = "Proposition (subalgebras of sl2)"
SL2_BORELS = "Proposition (Borel subalgebras of sl2)"
SL2_ADJACENCY = "Proposition (adjacency in sl2)"
SL2_BOREL_LINES = "Lemma (lines of a Borel)"
SL2_DEGREES = "Corollary (degrees in sl2)"
SL2_BASIC = "Corollary (basic invariants of sl2)"
SL2_CHROMATIC = "Theorem (chromatic number of sl2)"


def _p(invariant: str, value: Any, citation: str, **kwargs: Any) -> Prediction:
    return Prediction(invariant, value, citation, **kwargs)


def _law(name: str, citation: str) -> Prediction:
    return Prediction(f"law.{name}", True, citation, kind="law")


def _classes(table: list[tuple[str, int, int]], citation: str) -> list[Prediction]:
    """Count and degree per class, plus order and size derived from the table"""
    rows = []
    for name, count, degree in table:
        rows.append(_p(f"class.{name}.count", count, citation))
        if count:
            rows.append(_p(f"class.{name}.degree", degree, citation))
    order = sum(count for _, count, _ in table)
    size = sum(count * degree for _, count, degree in table) // 2
    rows.append(_p("order", order, f"{citation}; order summed over the classes"))
    rows.append(_p("size", size, f"{citation}; size by the handshake identity"))
    return rows


def _universal() -> list[Prediction]:
    return [
        _law("symmetric", f"{ADJACENCY}: adjacency is symmetric and irreflexive"),
        _law("frattini", f"{ISOLATED}: a vertex is isolated iff it lies in the Frattini subalgebra"),
        _law("completeness", f"{COMPLETE}: the graph is complete iff every proper subalgebra is one-dimensional"),
        _law("diameter_bound", f"{DIAMETER}: away from F(L) the graph is connected of diameter at most 3"),
        _p("core.diameter", 3, f"{DIAMETER}: away from F(L) the diameter is at most 3", relation="<="),
        _law("witnesses", f"{CERTIFICATE}: clique, coloring, independent and dominating witnesses are verified"),
    ]


def _dim3_laws() -> list[Prediction]:
    return [
        _law("plane_clique", f"{DIM3}: the two-dimensional subalgebras induce a complete graph"),
        _law("line_plane", f"{DIM3}: a line and a plane are adjacent iff the line is not in the plane"),
        _law("line_pair", f"{DIM3}: two lines are non-adjacent iff they span a subalgebra"),
    ]


def _dim1(q: int) -> list[Prediction]:
    cite = f"{MU_ALGEBRAS}: a one-dimensional algebra has no nontrivial proper subalgebra, so the graph is empty"
    return [_p("order", 0, cite), _p("size", 0, cite)]


def _dim2(q: int) -> list[Prediction]:
    cite = f"{MU_ALGEBRAS}: in dimension 2 every proper subalgebra is a line, so the graph is K_{{q+1}}"
    return [
        _p("count.lines", q + 1, cite),
        _p("count.planes", 0, cite),
        _p("order", q + 1, cite),
        _p("size", q * (q + 1) // 2, cite),
        _p("clique_number", q + 1, cite),
        _p("chromatic_number", q + 1, cite),
        _p("independence_number", 1, cite),
        _p("domination_number", 1, cite),
        _p("diameter", 1, cite),
        _p("radius", 1, cite),
        _p("girth", 3, cite),
        _p("is_planar", q <= 3, f"{cite}; K_n is planar iff n <= 4"),
        _p("is_connected", True, cite),
        _p("is_regular", True, cite),
        _p("is_complete", True, cite),
        _p("count.isolated", 0, cite),
    ]


def _abelian3(q: int) -> list[Prediction]:
    cite = f"{ABELIAN3}: planes have degree 2q^2+q and lines degree q^2"
    return [
        _p("count.lines", q * q + q + 1, f"{ABELIAN3}: every one of the q^2+q+1 lines is a subalgebra"),
        _p("count.planes", q * q + q + 1, f"{ABELIAN3}: every one of the q^2+q+1 planes is a subalgebra"),
        *_classes([("plane", q * q + q + 1, 2 * q * q + q), ("line", q * q + q + 1, q * q)], cite),
        _law("lines_independent", f"{ABELIAN3}: two lines span a subalgebra, so lines are independent"),
        _p("count.isolated", 0, f"{ABELIAN3}: F(L) = 0, so there are no isolated vertices"),
        _p("frattini_dim", 0, f"{ABELIAN3}: the planes intersect in 0"),
        _p("is_complete", False, f"{ABELIAN3}: planes are proper subalgebras"),
        *_dim3_laws(),
    ]


def _heisenberg3(q: int) -> list[Prediction]:
    cite = f"{HEISENBERG}: planes and noncentral lines have degree q^2+q, the centre is isolated"
    regular = f"{HEISENBERG_REGULAR}: without the centre the graph is (q^2+q)-regular of order (q+1)^2"
    return [
        _p("count.planes", q + 1, f"{HEISENBERG}: the q+1 planes containing the centre are the 2-dim subalgebras"),
        _p("count.lines", q * q + q + 1, f"{HEISENBERG}: every line is a subalgebra"),
        *_classes(
            [("plane", q + 1, q * q + q), ("line:noncentral", q * q + q, q * q + q), ("line:central", 1, 0)],
            cite,
        ),
        _p("count.isolated", 1, f"{HEISENBERG}: the centre is the only isolated vertex"),
        _p("frattini_dim", 1, f"{HEISENBERG}: every maximal subalgebra contains the centre"),
        _p("star.order", (q + 1) ** 2, regular),
        _p("star.is_regular", True, regular),
        _p("star.degree", q * q + q, regular),
        _law(
            "heisenberg_multipartite",
            f"{HEISENBERG}: noncentral lines form a complete multipartite graph with q+1 parts of size q",
        ),
        *_dim3_laws(),
    ]


def _solvable2b(q: int) -> list[Prediction]:
    cite = f"{NONCENTRAL}: degrees q^2+2q, q, q, q^2+2q, q^2+q-1 by class"
    return [
        _p("count.planes", 2 * q + 1, f"{NONCENTRAL}: there are 2q+1 planes"),
        *_classes(
            [
                ("plane", 2 * q + 1, q * q + 2 * q),
                ("line:y", 1, q),
                ("line:z", 1, q),
                ("line:in-V", q - 1, q * q + 2 * q),
                ("line:outside-V", q * q, q * q + q - 1),
            ],
            cite,
        ),
        _p("count.isolated", 0, f"{NONCENTRAL}: F(L) = 0"),
        _law("solvable2B_outside_lines", f"{NONCENTRAL}: <x+ay+bz> ~ <x+cy+dz> iff a != c and b != d"),
        *_dim3_laws(),
    ]


def _case3(subcase: str) -> Callable[[int], list[Prediction]]:
    def table(q: int) -> list[Prediction]:
        cite = f"{DERIVED2_DEGREES}, {subcase} action: degrees by class"
        planes_cite = f"{DERIVED2}, {subcase} action: plane count from the canonical form of ad x"
        if subcase == "irreducible":
            rows = [
                _p("count.planes", 1, planes_cite),
                *_classes(
                    [("plane", 1, q * q), ("line:in-V", q + 1, q * q), ("line:outside-V", q * q, q * q + q + 1)],
                    cite,
                ),
                _p("count.isolated", 0, cite),
                _p("domination_number", 1, f"{cite}; a line outside [L,L] is adjacent to every vertex"),
                _p("radius", 1, f"{cite}; a line outside [L,L] is adjacent to every vertex"),
            ]
        elif subcase == "two_eigen":
            rows = [
                _p("count.planes", 1 + 2 * q, planes_cite),
                *_classes(
                    [
                        ("plane", 1 + 2 * q, q * q + 2 * q),
                        ("line:eigen", 2, q),
                        ("line:in-V", q - 1, q * q + 2 * q),
                        ("line:outside-V", q * q, q * q + q - 1),
                    ],
                    cite,
                ),
                _p("count.isolated", 0, cite),
            ]
        elif subcase == "jordan":
            regular = f"{DERIVED2_DEGREES}, Jordan action: without the eigenline the graph is (q^2+q)-regular"
            rows = [
                _p("count.planes", 1 + q, planes_cite),
                *_classes(
                    [
                        ("plane", q + 1, q * q + q),
                        ("line:eigen", 1, 0),
                        ("line:in-V", q, q * q + q),
                        ("line:outside-V", q * q, q * q + q),
                    ],
                    cite,
                ),
                _p("count.isolated", 1, f"{ISOLATED}, Jordan action: the eigenline is F(L), the only isolated vertex"),
                _p("star.order", (q + 1) ** 2, regular),
                _p("star.is_regular", True, regular),
                _p("star.degree", q * q + q, regular),
            ]
        else:
            rows = [
                _p("count.planes", 1 + q + q * q, planes_cite),
                *_classes([("plane", q * q + q + 1, 2 * q * q + q), ("line", q * q + q + 1, q * q)], cite),
                _p("count.isolated", 0, cite),
            ]
        return rows + _dim3_laws()

    return table


def _sl2(q: int) -> list[Prediction]:
    degrees = f"{SL2_DEGREES}: Borels and nilpotent lines q^2+q, split lines q^2-1, nonsplit lines (q+1)^2"
    omega = (q * q + q + 2) // 2
    return [
        _p("count.lines", q * q + q + 1, f"{SL2_SUBALGEBRAS}: every line is a subalgebra"),
        _p("count.planes", q + 1, f"{SL2_SUBALGEBRAS}: there are q+1 Borel subalgebras"),
        *_classes(
            [
                ("borel", q + 1, q * q + q),
                ("line-nilpotent", q + 1, q * q + q),
                ("line-split", q * (q + 1) // 2, q * q - 1),
                ("line-nonsplit", q * (q - 1) // 2, (q + 1) ** 2),
            ],
            degrees,
        ),
        _p("clique_number", omega, f"{SL2_CHROMATIC}: nonsplit lines together with the Borels form a maximum clique"),
        _p("chromatic_number", omega, f"{SL2_CHROMATIC}: coloring each line like a Borel containing it is optimal"),
        _p("domination_number", 1, f"{SL2_BASIC}: a nonsplit line dominates"),
        _p("diameter", 2, SL2_BASIC),
        _p("radius", 1, SL2_BASIC),
        _p("girth", 3, SL2_BASIC),
        _p("is_planar", False, f"{SL2_BASIC}: the graph contains K5"),
        _p("is_connected", True, SL2_BASIC),
        _p("is_regular", False, SL2_BASIC),
        _p("is_complete", False, SL2_BASIC),
        _p("count.isolated", 0, SL2_BASIC),
        _p("count.center", q * (q - 1) // 2, f"{SL2_BASIC}: the center is the set of nonsplit lines"),
        _law("sl2_center", f"{SL2_BASIC}: the center is the set of nonsplit lines"),
        _law("triangles", f"{SL2_BASIC}: every vertex lies on a triangle"),
        _law("borel_clique", f"{SL2_ADJACENCY}: the Borels induce K_{{q+1}}"),
        _law("sl2_borels", f"{SL2_BORELS}: the Borels are B = <x, h> and B(a) = <h + ax, y + (a^2/4)x>"),
        _law(
            "sl2_membership",
            f"{SL2_SUBALGEBRAS}: nonsplit, nilpotent and split lines lie in 0, 1 and 2 Borels, as decided by mu*nu + 1",
        ),
        _law("sl2_borel_lines", f"{SL2_BOREL_LINES}: each Borel contains one nilpotent line and q split lines"),
        *_dim3_laws(),
    ]


def _su2(q: int) -> list[Prediction]:
    claim = f"{PERFECT}, su2 case: every proper subalgebra is one-dimensional, so the graph is complete"
    return [
        _p("is_complete", True, claim, kind="claim"),
        _p("count.planes", 0, claim, kind="claim"),
        *_dim3_laws(),
    ]


def _diam3_example(q: int) -> list[Prediction]:
    cite = f"{DIAMETER}, attained by (Fa + B) + Fx with ad x irreducible on B: no path of length 2 joins Fa to B"
    return [
        _p("frattini_dim", 0, cite),
        _p("count.isolated", 0, cite),
        _p("is_connected", True, f"{cite}; the graph without F(L) is connected"),
        _p("distance.a_to_B", 3, cite),
        _p("diameter", 3, f"{cite}; the diameter bound 3 is attained"),
    ]


PREDICTION_TABLE: dict[str, Callable[[int], list[Prediction]]] = {
    "dim1": _dim1,
    "abelian2": _dim2,
    "nonabelian2": _dim2,
    "abelian3": _abelian3,
    "heisenberg3": _heisenberg3,
    "solvable2B": _solvable2b,
    "case3_irreducible": _case3("irreducible"),
    "case3_two_eigen": _case3("two_eigen"),
    "case3_jordan": _case3("jordan"),
    "case3_scalar": _case3("scalar"),
    "sl2": _sl2,
    "su2": _su2,
    "diam3_example": _diam3_example,
}

_ABELIAN_BY_DIM = {1: "dim1", 2: "abelian2", 3: "abelian3"}


def predict(family: str, q: int, params: dict[str, Any] | None = None) -> list[Prediction]:
    """The full prediction table for ``family`` over F_q

    Standard invariants without a closed form are included as ``unpredicted``
    rows so that every report lists them.

    Raises:
        UnknownFamilyError: Unknown family id
        FieldError: q even for a family that needs odd q
        CatalogError: q too small for the family
    """
    info = family_info(family)
    if info.odd_only and q % 2 == 0:
        raise FieldError(f"{family} predictions need odd q, got {q}")
    if q < info.min_q:
        raise CatalogError(f"{family} predictions need q >= {info.min_q}, got {q}")
    key = family
    if family == "abelian":
        key = _ABELIAN_BY_DIM.get(int((params or {}).get("n", 3)), "")
    return _with_unpredicted(_universal() + (PREDICTION_TABLE[key](q) if key in PREDICTION_TABLE else []))


def generic_predictions() -> list[Prediction]:
    """Laws that hold for every Lie algebra, for algebras outside the catalog"""
    return _with_unpredicted(_universal())


def _with_unpredicted(rows: list[Prediction]) -> list[Prediction]:
    named = {row.invariant for row in rows}
    missing = [name for name in STANDARD_INVARIANTS if name not in named]
    return rows + [_p(name, None, "no closed form for this family") for name in missing]
