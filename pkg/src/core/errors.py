"""Exception hierarchy shared by every comax module"""
from __future__ import annotations


class ComaxError(ValueError):
    """Base class for all user-facing errors raised by comax"""


class FieldError(ComaxError):
    """Invalid field parameters or arithmetic (e.g. inverting zero)"""


class AlgebraError(ComaxError):
    """Structure constants that do not define a Lie algebra, or mixed algebras"""


class SubspaceError(ComaxError):
    """Subspace operations on incompatible inputs or out-of-range dimensions"""


class CatalogError(ComaxError):
    """Invalid catalog family parameters"""


class UnknownFamilyError(CatalogError):
    """The requested family id is not in the catalog"""


class FormatError(ComaxError):
    """Malformed input text; carries the 1-based line number when known"""

    def __init__(self, message: str, line_no: int | None = None):
        self.line_no = line_no
        prefix = f"line {line_no}: " if line_no is not None else ""
        super().__init__(prefix + message)


class ImproperColoring(ComaxError):
    """A coloring hint assigns the same color to both ends of an edge"""

    def __init__(self, edge: tuple[int, int], color: int):
        self.edge = edge
        self.color = color
        super().__init__(f"coloring is not proper: edge {edge} has both ends colored {color}")


class SolverBudgetExhausted(RuntimeError):
    """An exact solver used up its node budget before certifying a result"""

    def __init__(self, solver: str, budget: int):
        self.solver = solver
        self.budget = budget
        super().__init__(f"{solver}: node budget of {budget} exhausted")
