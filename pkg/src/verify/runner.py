"""Pipeline: algebra -> inventory -> graph -> invariants -> predictions -> report"""
from __future__ import annotations

import dataclasses
import logging
from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Any, Callable

from config.settings import settings

from ..algebra.lie_algebra import LieAlgebra, derived_dim
from ..algebra.structure_io import dump_algebra, load_algebra, parse_field_designation
from ..core.errors import CatalogError, ComaxError, FieldError, UnknownFamilyError
from ..graphs.comaximal import ComaximalGraph, build_graph, distance
from ..graphs.export import dumps, to_dot, vertex_table
from ..graphs.invariants import (
    InvariantBundle,
    borel_coloring_sl2,
    compute_bundle,
    degree_profile,
    metric_invariants,
)
from ..graphs import laws as law_checks
from ..subalgebras.catalog import CatalogFamily, build_catalog, family_info
from ..subalgebras.enumeration import SubalgebraInventory, enumerate_subalgebras
from .predictions import UNDECIDED, Prediction, generic_predictions, predict
from .report import InvariantReport, SweepCell, SweepReport

logger = logging.getLogger(__name__)


@dataclass
class RunConfig:
    """Everything one `comax` run needs

    Attributes:
        family: Catalog family id (ignored when ``algebra_path`` is set)
        field: Field designation such as ``3`` or ``2^2``
        params: Raw family parameters
        algebra_path: Structure-constant file to load instead of a family
        check: Evaluate the closed-form predictions
        star: Export Γ* instead of Γ (predictions always use Γ)
        invariants: Restrict the reported prediction rows to these names
        budget: Node limit for every exact solver
        threads: Worker threads for adjacency tests
    """

    family: str | None = None
    field: str = "3"
    params: dict[str, str] = dc_field(default_factory=dict)
    algebra_path: str | None = None
    check: bool = False
    star: bool = False
    invariants: list[str] | None = None
    json_path: str | None = None
    dot_path: str | None = None
    text_path: str | None = None
    inventory_path: str | None = None
    save_algebra_path: str | None = None
    budget: int = settings.COMAX_BUDGET
    threads: int = 1


@dataclass
class RunContext:
    algebra: LieAlgebra
    inventory: SubalgebraInventory
    graph: ComaximalGraph
    bundle: InvariantBundle


def _catalog_match(algebra: LieAlgebra) -> LieAlgebra:
    """Keep a loaded algebra's family tag only if it is that catalog algebra"""
    if not algebra.family:
        return algebra
    try:
        reference = build_catalog(CatalogFamily(algebra.family, algebra.field, {}))
    except ComaxError:
        reference = None
    if reference is None or reference.c != algebra.c:
        logger.warning(f"family tag {algebra.family!r} does not match the catalog algebra; ignoring it")
        return dataclasses.replace(algebra, family=None)
    return algebra


def build_algebra(config: RunConfig) -> LieAlgebra:
    if config.algebra_path:
        return _catalog_match(load_algebra(config.algebra_path))
    if not config.family:
        raise CatalogError("either a family or an algebra file is required")
    field_spec = parse_field_designation(config.field)
    return build_catalog(CatalogFamily(config.family, field_spec, dict(config.params)))


def analyze(algebra: LieAlgebra, budget: int, threads: int = 1) -> RunContext:
    """Inventory, graph and invariant bundle of ``algebra``"""
    inventory = enumerate_subalgebras(algebra)
    graph = build_graph(algebra, inventory, threads=threads)
    hint = None
    if algebra.family == "sl2" and algebra.field.is_odd:
        hint = borel_coloring_sl2(graph)
    bundle = compute_bundle(graph, budget, hint=hint)
    return RunContext(algebra, inventory, graph, bundle)


LAWS: dict[str, Callable[[RunContext], law_checks.LawCheck]] = {
    "symmetric": lambda ctx: law_checks.symmetry_law(ctx.graph),
    "frattini": lambda ctx: law_checks.frattini_law(ctx.graph, ctx.inventory),
    "completeness": lambda ctx: law_checks.completeness_law(ctx.graph, ctx.inventory),
    "diameter_bound": lambda ctx: law_checks.diameter_bound_law(ctx.graph, ctx.inventory),
    "plane_clique": lambda ctx: law_checks.plane_clique_law(ctx.graph),
    "line_plane": lambda ctx: law_checks.line_plane_law(ctx.graph),
    "line_pair": lambda ctx: law_checks.line_pair_law(ctx.graph),
    "lines_independent": lambda ctx: law_checks.lines_independent_law(ctx.graph),
    "heisenberg_multipartite": lambda ctx: law_checks.heisenberg_multipartite_law(ctx.graph),
    "solvable2B_outside_lines": lambda ctx: law_checks.solvable2b_outside_line_law(ctx.graph),
    "sl2_center": lambda ctx: law_checks.sl2_center_law(ctx.graph),
    "triangles": lambda ctx: law_checks.triangle_law(ctx.graph),
    "borel_clique": lambda ctx: law_checks.borel_clique_law(ctx.graph),
    "sl2_borels": lambda ctx: law_checks.sl2_borels_law(ctx.graph, ctx.inventory),
    "sl2_membership": lambda ctx: law_checks.sl2_membership_law(ctx.graph, ctx.inventory),
    "sl2_borel_lines": lambda ctx: law_checks.sl2_borel_lines_law(ctx.graph, ctx.inventory),
}


def _single(degrees: list[int]) -> int | list[int]:
    return degrees[0] if len(degrees) == 1 else degrees


def observe(ctx: RunContext, wanted: set[str]) -> tuple[dict[str, Any], list[law_checks.LawCheck]]:
    """Computed value of every invariant named in ``wanted``"""
    G, bundle, inventory = ctx.graph, ctx.bundle, ctx.inventory
    observed: dict[str, Any] = {
        "order": bundle.order,
        "size": bundle.size,
        "diameter": bundle.diameter,
        "radius": bundle.radius,
        "girth": bundle.girth,
        "is_planar": bundle.is_planar,
        "is_connected": bundle.is_connected,
        "is_regular": bundle.is_regular,
        "is_complete": bundle.is_complete,
        "count.lines": inventory.count(1),
        "count.planes": inventory.count(2),
        "count.isolated": len(bundle.isolated_vertices),
        "count.center": len(bundle.center),
        "frattini_dim": inventory.frattini.dim,
    }
    for name in ("clique_number", "chromatic_number", "independence_number", "domination_number"):
        value = getattr(bundle, name)
        observed[name] = UNDECIDED if name in bundle.undecided else value
    observed["law.witnesses"] = not bundle.verify_witnesses(G)

    for klass, (count, degrees) in degree_profile(G).by_class.items():
        observed[f"class.{klass}.count"] = count
        observed[f"class.{klass}.degree"] = _single(degrees)

    if any(name.startswith("star.") for name in wanted):
        star = G.star()
        observed["star.order"] = star.order
        observed["star.is_regular"] = len(set(star.degrees)) <= 1
        observed["star.degree"] = _single(sorted(set(star.degrees)))
    if "core.diameter" in wanted:
        core = law_checks.frattini_free_core(G, inventory)
        observed["core.diameter"] = metric_invariants(core).diameter
    if "distance.a_to_B" in wanted:
        L = ctx.algebra
        a, B = L.span(L.basis_vector(0)), L.span(L.basis_vector(1), L.basis_vector(2))
        observed["distance.a_to_B"] = distance(G, a, B)

    checks = []
    for name in sorted(n[len("law."):] for n in wanted if n.startswith("law.")):
        if name in LAWS:
            check = LAWS[name](ctx)
            checks.append(check)
            observed[f"law.{name}"] = check.ok
            if not check.ok:
                logger.info(f"law {name} fails: {check.counterexamples}")
    return observed, checks


def _filter_rows(rows: list[Prediction], subset: list[str] | None) -> list[Prediction]:
    if not subset:
        return rows
    wanted = set(subset)
    return [row for row in rows if row.invariant in wanted or row.invariant.split(".")[0] in wanted]


def _predictions_for(algebra: LieAlgebra, params: dict[str, str], notes: list[str]) -> list[Prediction]:
    if not algebra.family:
        notes.append("algebra is outside the catalog: only the general laws are predicted")
        return generic_predictions()
    try:
        return predict(algebra.family, algebra.field.q, params)
    except (FieldError, CatalogError) as exc:
        if isinstance(exc, UnknownFamilyError):
            notes.append(f"family {algebra.family!r} has no prediction table")
        else:
            notes.append(f"no closed-form predictions: {exc}")
        return generic_predictions()


def run(config: RunConfig) -> InvariantReport:
    """Build, analyze, check and write every requested output

    Raises:
        ComaxError: Invalid family, parameters, field or input file
    """
    algebra = build_algebra(config)
    logger.info(f"analyzing {algebra}")
    ctx = analyze(algebra, config.budget, config.threads)
    notes: list[str] = []

    predictions: list[Prediction] = []
    laws: list[law_checks.LawCheck] = []
    if config.check:
        rows = _filter_rows(_predictions_for(algebra, dict(config.params), notes), config.invariants)
        observed, laws = observe(ctx, {row.invariant for row in rows})
        predictions = [row.evaluate(observed.get(row.invariant, UNDECIDED)) for row in rows]

    exported_graph, exported_bundle, graph_name = ctx.graph, ctx.bundle, "full"
    if config.star:
        exported_graph = ctx.graph.star()
        exported_bundle = compute_bundle(exported_graph, config.budget)
        graph_name = "star"

    report = InvariantReport(
        family=algebra.family or config.family or "custom",
        field=algebra.field.designation,
        params={k: str(v) for k, v in (dict(algebra.params) or config.params).items()},
        algebra=algebra.label,
        dim=algebra.n,
        derived_dim=derived_dim(algebra),
        counts={str(d): len(subs) for d, subs in ctx.inventory.by_dim.items()},
        bundle=exported_bundle.to_json(),
        graph=graph_name,
        vertices=vertex_table(exported_graph),
        predictions=predictions,
        laws=laws,
        notes=notes,
    )
    if report.conflicts:
        logger.warning(f"claims in conflict with brute force: {[row.invariant for row in report.conflicts]}")
    _write_outputs(config, report, ctx, exported_graph)
    return report


def _write_outputs(config: RunConfig, report: InvariantReport, ctx: RunContext, graph: ComaximalGraph) -> None:
    if config.json_path:
        report.export(config.json_path)
    if config.text_path:
        Path(config.text_path).write_text(report.format_text(), encoding="utf-8")
    if config.dot_path:
        Path(config.dot_path).write_text(to_dot(graph), encoding="utf-8")
    if config.inventory_path:
        Path(config.inventory_path).write_text(dumps(ctx.inventory.to_json()), encoding="utf-8")
    if config.save_algebra_path:
        Path(config.save_algebra_path).write_text(dump_algebra(ctx.algebra), encoding="utf-8")


def _sweep_cell(family: str, field_text: str, budget: int) -> SweepCell:
    try:
        field_spec = parse_field_designation(field_text)
        info = family_info(family)
    except ComaxError as exc:
        return SweepCell(family, field_text, "error", error=str(exc))
    reason = info.unsupported_reason(field_spec)
    if reason:
        return SweepCell(family, field_spec.designation, "skipped", error=reason)
    try:
        report = run(RunConfig(family=family, field=field_text, check=True, budget=budget))
    except ComaxError as exc:
        logger.error(f"{family} over F_{field_text}: {exc}")
        return SweepCell(family, field_spec.designation, "error", error=str(exc))
    return SweepCell.from_report(report)


def sweep(families: list[str], fields: list[str], *, budget: int, threads: int = 1) -> SweepReport:
    """One checked run per (family, field) cell; cells run in parallel and are
    reported in (family, field) order"""
    cells = [(family, field_text) for family in families for field_text in fields]
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            results = list(pool.map(lambda cell: _sweep_cell(cell[0], cell[1], budget), cells))
    else:
        results = [_sweep_cell(family, field_text, budget) for family, field_text in cells]
    report = SweepReport()
    for cell in results:
        report.add(cell)
    return report
