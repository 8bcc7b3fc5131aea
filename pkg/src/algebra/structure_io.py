"""Text formats: field designations, field elements and structure-constant files

A structure-constant file describes one algebra::

    # sl2 over F_3
    field 3
    dim 3
    name sl2
    basis x y h
    bracket 1 2 : 0 0 1
    bracket 1 3 : 1 0 0
    bracket 2 3 : 0 2 0

Indices are 1-based with ``i < j``; pairs that are not listed bracket to zero.
Extension fields take an optional ``modulus`` line (coefficients, lowest
degree first) and coefficients written as polynomials in ``t``.
"""
from __future__ import annotations

import logging
import re
from pathlib import Path

from ..core.errors import AlgebraError, ComaxError, FormatError
from .finite_field import FieldElement, FieldSpec, is_prime, make_field
from .lie_algebra import LieAlgebra, validate

logger = logging.getLogger(__name__)

_DESIGNATION = re.compile(r"^\s*(\d+)\s*(?:\^\s*(\d+))?\s*$")
_TERM = re.compile(r"^(?:(\d+)\s*\*?\s*)?(t(?:\s*\^\s*(\d+))?)?$")


def _prime_power(q: int) -> tuple[int, int] | None:
    for p in range(2, q + 1):
        if q % p == 0:
            k, rest = 0, q
            while rest % p == 0:
                rest //= p
                k += 1
            return (p, k) if rest == 1 and is_prime(p) else None
    return None


def parse_field_designation(text: str, modulus: list[int] | None = None) -> FieldSpec:
    """Parse ``p``, ``p^k`` or a prime power ``q`` into a field

    Raises:
        FormatError: Unparseable text or an order that is not a prime power
    """
    match = _DESIGNATION.match(text)
    if not match:
        raise FormatError(f"field must be written p or p^k, got {text!r}")
    base = int(match.group(1))
    if match.group(2) is not None:
        p, k = base, int(match.group(2))
    else:
        found = _prime_power(base) if base > 1 else None
        if found is None:
            raise FormatError(f"{base} is not a prime power")
        p, k = found
    try:
        return make_field(p, k, modulus)
    except ComaxError as exc:
        raise FormatError(str(exc)) from exc


def parse_element(field: FieldSpec, text: str) -> FieldElement:
    """Parse an integer (reduced mod p) or a polynomial in ``t`` such as ``1+2*t``"""
    cleaned = text.replace(" ", "")
    if not cleaned:
        raise FormatError("empty field element")
    if re.fullmatch(r"[+-]?\d+", cleaned):
        return FieldElement(field, field.code([int(cleaned) % field.p]))
    if field.k == 1:
        raise FormatError(f"{text!r} is not an element of the prime field F_{field.p}")

    coeffs = [0] * field.k
    for sign, body in re.findall(r"([+-]?)([^+-]+)", cleaned):
        match = _TERM.match(body)
        if not match or (match.group(1) is None and match.group(2) is None):
            raise FormatError(f"cannot read term {body!r} in {text!r}")
        coeff = int(match.group(1)) if match.group(1) is not None else 1
        if match.group(2) is None:
            degree = 0
        else:
            degree = int(match.group(3)) if match.group(3) is not None else 1
        if degree >= field.k:
            raise FormatError(f"degree {degree} term in {text!r}; reduce modulo the field modulus first")
        coeffs[degree] += -coeff if sign == "-" else coeff
    return FieldElement(field, field.code(coeffs))


def parse_algebra(text: str, *, source: str = "<text>") -> LieAlgebra:
    """Parse the structure-constant format and validate the result

    Raises:
        FormatError: Malformed lines (with their 1-based line numbers)
        AlgebraError: Well-formed constants that violate the Lie axioms
    """
    field_text: str | None = None
    field_line = 0
    modulus: list[int] | None = None
    dim: int | None = None
    name = ""
    family: str | None = None
    basis_names: list[str] = []
    raw_brackets: list[tuple[int, int, int, list[str]]] = []

    for line_no, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        keyword, _, rest = line.partition(" ")
        rest = rest.strip()
        if keyword == "field":
            if field_text is not None:
                raise FormatError("field given twice", line_no)
            field_text, field_line = rest, line_no
        elif keyword == "modulus":
            try:
                modulus = [int(x) for x in rest.split()]
            except ValueError:
                raise FormatError(f"modulus must be integers, got {rest!r}", line_no) from None
        elif keyword == "dim":
            if not rest.isdigit():
                raise FormatError(f"dim must be a non-negative integer, got {rest!r}", line_no)
            dim = int(rest)
        elif keyword == "name":
            name = rest
        elif keyword == "family":
            family = rest or None
        elif keyword == "basis":
            basis_names = rest.split()
        elif keyword == "bracket":
            head, sep, coeffs = rest.partition(":")
            indices = head.split()
            if not sep or len(indices) != 2 or not all(x.isdigit() for x in indices):
                raise FormatError("expected 'bracket i j : c_1 ... c_n'", line_no)
            i, j = int(indices[0]), int(indices[1])
            if not 1 <= i < j:
                raise FormatError(f"bracket indices must satisfy 1 <= i < j, got {i} {j}", line_no)
            raw_brackets.append((line_no, i, j, coeffs.split()))
        else:
            raise FormatError(f"unknown directive {keyword!r}", line_no)

    if field_text is None:
        raise FormatError(f"{source}: missing 'field' line")
    if dim is None:
        raise FormatError(f"{source}: missing 'dim' line")
    try:
        field = parse_field_designation(field_text, modulus)
    except FormatError as exc:
        raise FormatError(str(exc), field_line) from exc
    if basis_names and len(basis_names) != dim:
        raise FormatError(f"{source}: {len(basis_names)} basis names for dim {dim}")

    brackets: dict[tuple[int, int], list[FieldElement]] = {}
    for line_no, i, j, coeffs in raw_brackets:
        if j > dim:
            raise FormatError(f"index {j} exceeds dim {dim}", line_no)
        if len(coeffs) != dim:
            raise FormatError(f"expected {dim} coefficients, got {len(coeffs)}", line_no)
        if (i - 1, j - 1) in brackets:
            raise FormatError(f"bracket {i} {j} listed twice", line_no)
        try:
            brackets[(i - 1, j - 1)] = [parse_element(field, c) for c in coeffs]
        except FormatError as exc:
            raise FormatError(str(exc), line_no) from exc

    algebra = LieAlgebra.from_brackets(
        field, dim, brackets, name=name, basis_names=basis_names, family=family
    )
    report = validate(algebra)
    if not report.ok:
        raise AlgebraError(f"{source}: structure constants are not a Lie algebra: {report.summary()}")
    logger.info(f"loaded {algebra} from {source}")
    return algebra


def load_algebra(path: str | Path) -> LieAlgebra:
    path = Path(path)
    try:
        text = path.read_text(encoding="utf-8")
    except OSError as exc:
        raise FormatError(f"cannot read {path}: {exc.strerror}") from exc
    return parse_algebra(text, source=str(path))


def dump_algebra(L: LieAlgebra) -> str:
    """Serialize ``L`` in the format read by :func:`parse_algebra`"""
    fmt = L.field.format_code
    lines = [f"# {L}", f"field {L.field.designation}"]
    if L.field.modulus is not None:
        lines.append("modulus " + " ".join(str(c) for c in L.field.modulus))
    lines.append(f"dim {L.n}")
    if L.name:
        lines.append(f"name {L.name}")
    if L.family:
        lines.append(f"family {L.family}")
    lines.append("basis " + " ".join(L.basis_names))
    for i in range(L.n):
        for j in range(i + 1, L.n):
            if any(L.c[i][j]):
                lines.append(f"bracket {i + 1} {j + 1} : " + " ".join(fmt(x) for x in L.c[i][j]))
    return "\n".join(lines) + "\n"
