"""Verification reports for single runs and sweeps, with JSON export"""
from __future__ import annotations

import logging
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any

from ..graphs.export import dumps
from ..graphs.laws import LawCheck
from .predictions import Prediction

logger = logging.getLogger(__name__)

STATUSES = ("match", "mismatch", "unpredicted", "undecided", "conflict")


@dataclass
class InvariantReport:
    """Computed invariants joined with the closed-form predictions"""

    family: str
    field: str
    params: dict[str, str]
    algebra: str
    dim: int
    derived_dim: int
    counts: dict[str, int]
    bundle: dict[str, Any]
    graph: str = "full"
    vertices: list[dict[str, Any]] = dc_field(default_factory=list)
    predictions: list[Prediction] = dc_field(default_factory=list)
    laws: list[LawCheck] = dc_field(default_factory=list)
    notes: list[str] = dc_field(default_factory=list)

    def summary(self) -> dict[str, int]:
        counts = {status: 0 for status in STATUSES}
        for row in self.predictions:
            counts[row.status] += 1
        return counts

    @property
    def failures(self) -> list[Prediction]:
        """Checked predictions that mismatch or stayed undecided"""
        return [row for row in self.predictions if row.checked and row.status in ("mismatch", "undecided")]

    @property
    def conflicts(self) -> list[Prediction]:
        return [row for row in self.predictions if row.status == "conflict"]

    @property
    def exit_code(self) -> int:
        return 1 if self.failures else 0

    def to_json(self) -> dict[str, Any]:
        return {
            "family": self.family,
            "field": self.field,
            "params": dict(sorted(self.params.items())),
            "algebra": self.algebra,
            "dim": self.dim,
            "derived_dim": self.derived_dim,
            "counts": dict(sorted(self.counts.items())),
            "graph": self.graph,
            "bundle": self.bundle,
            "vertices": self.vertices,
            "predictions": [row.to_json() for row in self.predictions],
            "laws": [
                {"name": law.name, "ok": law.ok, "counterexamples": law.counterexamples} for law in self.laws
            ],
            "summary": self.summary(),
            "notes": self.notes,
        }

    def format_text(self) -> str:
        """Plain-text rendering for terminals and ``--text``"""
        lines = [
            f"{self.algebra} over F_{self.field} (dim {self.dim}, derived dim {self.derived_dim})",
            f"graph: {self.graph}, order {self.bundle['order']}, size {self.bundle['size']}",
        ]
        lines += [f"note: {note}" for note in self.notes + self.bundle.get("notes", [])]
        if self.predictions:
            width = max(len(row.invariant) for row in self.predictions)
            for row in self.predictions:
                expected = "" if row.predicted is None else f"{row.relation} {row.predicted}"
                lines.append(f"  {row.status:<11} {row.invariant:<{width}}  {row.computed!s:<10} {expected}")
            summary = ", ".join(f"{k} {v}" for k, v in self.summary().items() if v)
            lines.append(f"summary: {summary}")
        return "\n".join(lines) + "\n"

    def export(self, path: str | Path) -> None:
        Path(path).write_text(dumps(self.to_json()), encoding="utf-8")
        logger.info(f"report written to {path}")


@dataclass
class SweepCell:
    family: str
    field: str
    status: str
    counts: dict[str, int] = dc_field(default_factory=dict)
    order: int | None = None
    size: int | None = None
    failures: list[str] = dc_field(default_factory=list)
    conflicts: list[str] = dc_field(default_factory=list)
    error: str | None = None

    @classmethod
    def from_report(cls, report: InvariantReport) -> "SweepCell":
        return cls(
            family=report.family,
            field=report.field,
            status="fail" if report.failures else "ok",
            counts=report.summary(),
            order=report.bundle["order"],
            size=report.bundle["size"],
            failures=[row.invariant for row in report.failures],
            conflicts=[row.invariant for row in report.conflicts],
        )


@dataclass
class SweepReport:
    cells: list[SweepCell] = dc_field(default_factory=list)

    def add(self, cell: SweepCell) -> None:
        self.cells.append(cell)

    def totals(self) -> dict[str, Any]:
        totals: dict[str, Any] = {status: 0 for status in STATUSES}
        for cell in self.cells:
            for status, count in cell.counts.items():
                totals[status] += count
        totals["cells"] = len(self.cells)
        totals["by_status"] = self._by_status()
        return totals

    def _by_status(self) -> dict[str, int]:
        statuses: dict[str, int] = {}
        for cell in self.cells:
            statuses[cell.status] = statuses.get(cell.status, 0) + 1
        return dict(sorted(statuses.items()))

    @property
    def exit_code(self) -> int:
        return 1 if any(cell.status in ("fail", "error") for cell in self.cells) else 0

    def to_json(self) -> dict[str, Any]:
        return {
            "cells": [
                {
                    "family": c.family,
                    "field": c.field,
                    "status": c.status,
                    "counts": c.counts,
                    "order": c.order,
                    "size": c.size,
                    "failures": c.failures,
                    "conflicts": c.conflicts,
                    "error": c.error,
                }
                for c in self.cells
            ],
            "totals": self.totals(),
        }

    def format_text(self) -> str:
        lines = [f"{'family':<18} {'field':<6} {'status':<8} match mismatch unpred undecided conflict"]
        for c in self.cells:
            k = c.counts
            lines.append(
                f"{c.family:<18} {c.field:<6} {c.status:<8} "
                f"{k.get('match', 0):>5} {k.get('mismatch', 0):>8} {k.get('unpredicted', 0):>6} "
                f"{k.get('undecided', 0):>9} {k.get('conflict', 0):>8}"
                + (f"  ({c.error})" if c.error else "")
            )
        totals = self.totals()
        lines.append(
            f"total: {totals['cells']} cells, {totals['match']} match, {totals['mismatch']} mismatch, "
            f"{totals['undecided']} undecided, {totals['conflict']} conflict"
        )
        return "\n".join(lines) + "\n"

    def export(self, path: str | Path) -> None:
        Path(path).write_text(dumps(self.to_json()), encoding="utf-8")
        logger.info(f"sweep report written to {path}")
