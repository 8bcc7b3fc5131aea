"""Exact arithmetic in F_q for q = p^k

Elements are stored as integer codes ``c = a_0 + a_1 p + ... + a_{k-1} p^{k-1}``
where ``a_i`` are the coefficients of the residue polynomial in ``t``. Code order
is the fixed enumeration order of the field (zero first, then 1, ..., t, 1+t, ...).
All arithmetic goes through lookup tables built once per field.
"""
from __future__ import annotations

import itertools
import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Iterable, Literal

import numpy as np

from ..core.errors import FieldError

logger = logging.getLogger(__name__)

ArithOp = Literal["add", "sub", "mul", "div", "neg", "inv", "pow"]


def is_prime(n: int) -> bool:
    """Trial-division primality test (fields here are desk scale)"""
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def _trim(poly: list[int]) -> list[int]:
    while poly and poly[-1] == 0:
        poly.pop()
    return poly


def _poly_rem(num: Iterable[int], den: tuple[int, ...], p: int) -> list[int]:
    """Remainder of ``num`` modulo the monic polynomial ``den`` over F_p"""
    rem = _trim([c % p for c in num])
    d = len(den) - 1
    while len(rem) - 1 >= d:
        shift = len(rem) - 1 - d
        lead = rem[-1]
        for i, c in enumerate(den):
            rem[shift + i] = (rem[shift + i] - lead * c) % p
        _trim(rem)
    return rem


def _poly_mulmod(a: tuple[int, ...], b: tuple[int, ...], modulus: tuple[int, ...], p: int) -> tuple[int, ...]:
    product = [0] * (len(a) + len(b) - 1)
    for i, ai in enumerate(a):
        if ai:
            for j, bj in enumerate(b):
                product[i + j] += ai * bj
    rem = _poly_rem(product, modulus, p)
    k = len(modulus) - 1
    return tuple(rem + [0] * (k - len(rem)))


def is_irreducible(modulus: tuple[int, ...], p: int) -> bool:
    """Exhaustive irreducibility test for a monic polynomial over F_p

    Args:
        modulus: Coefficients, lowest degree first, leading coefficient 1
        p: The prime characteristic

    Returns:
        True iff no monic polynomial of degree 1..deg/2 divides ``modulus``
    """
    k = len(modulus) - 1
    for d in range(1, k // 2 + 1):
        for tail in itertools.product(range(p), repeat=d):
            factor = tuple(tail) + (1,)
            if not _poly_rem(modulus, factor, p):
                return False
    return True


def find_irreducible(p: int, k: int) -> tuple[int, ...]:
    """Lexicographically smallest monic irreducible polynomial of degree ``k``

    Candidates are ordered by their coefficients read from degree ``k-1``
    down to the constant term, so for p=3, k=2 the answer is t^2+1.
    """
    for high_to_low in itertools.product(range(p), repeat=k):
        candidate = tuple(reversed(high_to_low)) + (1,)
        if is_irreducible(candidate, p):
            return candidate
    raise FieldError(f"no irreducible polynomial of degree {k} over F_{p}")


@dataclass(frozen=True)
class FieldSpec:
    """Arithmetic context for F_q, q = p^k

    Attributes:
        p: Prime characteristic
        k: Extension degree
        modulus: Monic irreducible modulus, lowest degree first (``None`` iff k == 1)
    """

    p: int
    k: int = 1
    modulus: tuple[int, ...] | None = None

    def __post_init__(self):
        if not isinstance(self.k, int) or self.k < 1:
            raise FieldError(f"extension degree must be a positive integer, got {self.k}")
        if not is_prime(self.p):
            raise FieldError(f"characteristic must be prime, got {self.p}")
        if self.k == 1:
            if self.modulus is not None:
                raise FieldError("a prime field takes no modulus")
            return
        if self.modulus is None:
            raise FieldError("extension fields need a modulus; use make_field to pick one")
        if len(self.modulus) != self.k + 1 or self.modulus[-1] != 1:
            raise FieldError(f"modulus must be monic of degree {self.k}: {list(self.modulus)}")
        if any(not 0 <= c < self.p for c in self.modulus):
            raise FieldError(f"modulus coefficients must lie in [0, {self.p}): {list(self.modulus)}")
        if not is_irreducible(self.modulus, self.p):
            raise FieldError(f"modulus {list(self.modulus)} is reducible over F_{self.p}")

    @property
    def q(self) -> int:
        return self.p**self.k

    @property
    def designation(self) -> str:
        """Field label in the ``p^k`` notation used by every file format"""
        return str(self.p) if self.k == 1 else f"{self.p}^{self.k}"

    @property
    def is_odd(self) -> bool:
        return self.p != 2

    def rep(self, code: int) -> tuple[int, ...]:
        """Coefficient vector (lowest degree first) of the element with ``code``"""
        digits = []
        for _ in range(self.k):
            code, digit = divmod(code, self.p)
            digits.append(digit)
        return tuple(digits)

    def code(self, rep: Iterable[int]) -> int:
        coeffs = [c % self.p for c in rep]
        if len(coeffs) > self.k:
            raise FieldError(f"representation {coeffs} has more than {self.k} coefficients")
        return sum(c * self.p**i for i, c in enumerate(coeffs))

    @cached_property
    def _reps(self) -> np.ndarray:
        codes = np.arange(self.q)
        return np.stack([(codes // self.p**i) % self.p for i in range(self.k)], axis=1)

    @cached_property
    def add_table(self) -> list[list[int]]:
        reps = self._reps
        weights = self.p ** np.arange(self.k)
        summed = (reps[:, None, :] + reps[None, :, :]) % self.p
        return (summed @ weights).tolist()

    @cached_property
    def neg_table(self) -> list[int]:
        weights = self.p ** np.arange(self.k)
        return (((-self._reps) % self.p) @ weights).tolist()

    @cached_property
    def sub_table(self) -> list[list[int]]:
        add, neg = self.add_table, self.neg_table
        return [[add[a][neg[b]] for b in range(self.q)] for a in range(self.q)]

    @cached_property
    def mul_table(self) -> list[list[int]]:
        if self.k == 1:
            codes = np.arange(self.q)
            return (np.outer(codes, codes) % self.p).tolist()
        reps = [tuple(r) for r in self._reps.tolist()]
        table = [[0] * self.q for _ in range(self.q)]
        for a in range(self.q):
            for b in range(a, self.q):
                c = self.code(_poly_mulmod(reps[a], reps[b], self.modulus, self.p))
                table[a][b] = table[b][a] = c
        return table

    @cached_property
    def inv_table(self) -> list[int | None]:
        inverse: list[int | None] = [None] * self.q
        for a in range(1, self.q):
            row = self.mul_table[a]
            inverse[a] = row.index(1)
        logger.debug(f"built arithmetic tables for F_{self.designation}")
        return inverse

    def inv_code(self, a: int) -> int:
        inverse = self.inv_table[a]
        if inverse is None:
            raise FieldError("inversion of zero")
        return inverse

    def pow_code(self, a: int, e: int) -> int:
        if e < 0:
            a, e = self.inv_code(a), -e
        mul = self.mul_table
        result, base = 1, a
        while e:
            if e & 1:
                result = mul[result][base]
            base = mul[base][base]
            e >>= 1
        return result

    def element(self, value: "int | str | Iterable[int] | FieldElement") -> "FieldElement":
        """Coerce ``value`` into an element of this field

        Integers are reduced mod p in a prime field and read as codes in an
        extension field; strings are parsed (``2``, ``1+t``, ``2*t^2``);
        other iterables are coefficient vectors.
        """
        if isinstance(value, FieldElement):
            if value.field != self:
                raise FieldError(f"element of F_{value.field.designation} used in F_{self.designation}")
            return value
        if isinstance(value, (int, np.integer)):
            value = int(value)
            if self.k == 1:
                return FieldElement(self, value % self.p)
            if not 0 <= value < self.q:
                raise FieldError(f"code {value} out of range for F_{self.designation}")
            return FieldElement(self, value)
        if isinstance(value, str):
            from .structure_io import parse_element

            return parse_element(self, value)
        return FieldElement(self, self.code(value))

    @property
    def zero(self) -> "FieldElement":
        return FieldElement(self, 0)

    @property
    def one(self) -> "FieldElement":
        return FieldElement(self, 1)

    def format_code(self, code: int) -> str:
        """Render an element as an integer (prime field) or ``a0+a1*t`` text"""
        if self.k == 1:
            return str(code)
        terms = []
        for degree, coeff in enumerate(self.rep(code)):
            if coeff == 0:
                continue
            if degree == 0:
                terms.append(str(coeff))
                continue
            power = "t" if degree == 1 else f"t^{degree}"
            terms.append(power if coeff == 1 else f"{coeff}*{power}")
        return "+".join(terms) if terms else "0"

    def __str__(self) -> str:
        return f"F_{self.designation}"


@dataclass(frozen=True)
class FieldElement:
    """An element of F_q in canonical (fully reduced) form"""

    field: FieldSpec
    code: int

    def _check(self, other: "FieldElement | int") -> int:
        if isinstance(other, FieldElement):
            if other.field != self.field:
                raise FieldError(
                    f"mixed fields: F_{self.field.designation} and F_{other.field.designation}"
                )
            return other.code
        return self.field.element(other).code

    @property
    def rep(self) -> tuple[int, ...]:
        return self.field.rep(self.code)

    def __add__(self, other):
        return FieldElement(self.field, self.field.add_table[self.code][self._check(other)])

    __radd__ = __add__

    def __sub__(self, other):
        return FieldElement(self.field, self.field.sub_table[self.code][self._check(other)])

    def __rsub__(self, other):
        return FieldElement(self.field, self.field.sub_table[self._check(other)][self.code])

    def __mul__(self, other):
        return FieldElement(self.field, self.field.mul_table[self.code][self._check(other)])

    __rmul__ = __mul__

    def __truediv__(self, other):
        return self * self.field.element(other).inverse()

    def __neg__(self):
        return FieldElement(self.field, self.field.neg_table[self.code])

    def __pow__(self, exponent: int):
        return FieldElement(self.field, self.field.pow_code(self.code, exponent))

    def inverse(self) -> "FieldElement":
        return FieldElement(self.field, self.field.inv_code(self.code))

    def __bool__(self) -> bool:
        return self.code != 0

    def __str__(self) -> str:
        return self.field.format_code(self.code)

    def __repr__(self) -> str:
        return f"FieldElement({self.field.format_code(self.code)} in F_{self.field.designation})"


def make_field(p: int, k: int = 1, modulus: Iterable[int] | None = None) -> FieldSpec:
    """Build and validate F_{p^k}

    Args:
        p: Prime characteristic
        k: Extension degree
        modulus: Optional monic modulus, lowest degree first; the
            lexicographically smallest irreducible one is used when omitted

    Returns:
        The validated field

    Raises:
        FieldError: Non-prime ``p``, ``k <= 0`` or a reducible modulus
    """
    if not isinstance(k, int) or k < 1:
        raise FieldError(f"extension degree must be a positive integer, got {k}")
    if not is_prime(p):
        raise FieldError(f"characteristic must be prime, got {p}")
    if k == 1:
        return FieldSpec(p, 1, None)
    chosen = tuple(int(c) for c in modulus) if modulus is not None else find_irreducible(p, k)
    return FieldSpec(p, k, chosen)


def arith(a: FieldElement, b: FieldElement | int | None, op: ArithOp) -> FieldElement:
    """Dispatch a field operation by name (``b`` is the exponent for ``pow``)"""
    if op == "add":
        return a + b
    if op == "sub":
        return a - b
    if op == "mul":
        return a * b
    if op == "div":
        return a / b
    if op == "neg":
        return -a
    if op == "inv":
        return a.inverse()
    if op == "pow":
        return a ** int(b)
    raise FieldError(f"unknown field operation {op!r}")


def enumerate_elements(field: FieldSpec) -> list[FieldElement]:
    """All q elements in code order (zero first)"""
    return [FieldElement(field, code) for code in range(field.q)]


def _require_odd(field: FieldSpec) -> None:
    if not field.is_odd:
        raise FieldError(
            f"squareness classes are undefined in characteristic 2 (F_{field.designation})"
        )


def is_square_code(field: FieldSpec, a: int) -> bool:
    """Euler criterion on a raw code: a^((q-1)/2) == 1, with 0 counted as a square"""
    _require_odd(field)
    if a == 0:
        return True
    return field.pow_code(a, (field.q - 1) // 2) == 1


def is_square(a: FieldElement) -> bool:
    """True iff ``a = b^2`` for some ``b`` (odd q only)"""
    return is_square_code(a.field, a.code)


def squares(field: FieldSpec) -> set[int]:
    """Exhaustive-squaring oracle: codes of all squares, zero included"""
    _require_odd(field)
    mul = field.mul_table
    return {mul[b][b] for b in range(field.q)}


def multiplicative_order(a: FieldElement) -> int:
    if not a:
        raise FieldError("zero has no multiplicative order")
    mul = a.field.mul_table
    order, x = 1, a.code
    while x != 1:
        x = mul[x][a.code]
        order += 1
    return order
