"""The `comax` command line

    comax --family sl2 --field 3 --check [--json PATH] [--dot PATH]
    comax sweep --all --fields 2,3,5 [--json PATH]
    comax load --file algebra.txt [--check none]

Exit status: 0 on success, 1 when a checked prediction mismatches or stays
undecided, 2 on usage, configuration or input errors.
"""
from __future__ import annotations

import argparse
import logging
import sys

from config.settings import settings
from config.sweep_config import SweepConfig

from ..core.errors import ComaxError
from ..core.utils import parse_csv, parse_param_pairs
from ..graphs.export import dumps
from ..subalgebras.catalog import EXTRA_FAMILIES, FAMILY_IDS
from .runner import RunConfig, run, sweep

logger = logging.getLogger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _add_common(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--budget", type=int, default=None, help="node limit for every exact solver")
    parser.add_argument("--threads", type=int, default=None, help="worker threads (overrides COMAX_THREADS)")
    parser.add_argument("--log-level", default=None, help="logging level (overrides COMAX_LOG_LEVEL)")
    parser.add_argument("--json", dest="json_path", default=None, help="write the JSON report here ('-' for stdout)")


def _add_outputs(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--star", action="store_true", help="export the graph without isolated vertices")
    parser.add_argument("--dot", dest="dot_path", default=None, help="write a Graphviz DOT file")
    parser.add_argument("--text", dest="text_path", default=None, help="write the plain-text report")
    parser.add_argument("--inventory", dest="inventory_path", default=None, help="write the subalgebra inventory")
    parser.add_argument("--save-algebra", dest="save_algebra_path", default=None, help="write the structure constants")
    parser.add_argument("--invariants", default=None, help="comma separated invariant names to report")


def build_run_parser() -> argparse.ArgumentParser:
    families = ", ".join(FAMILY_IDS + tuple(EXTRA_FAMILIES))
    parser = argparse.ArgumentParser(
        prog="comax",
        description=settings.APP_TITLE,
        epilog=f"families: {families}. Subcommands: 'comax sweep ...', 'comax load ...'",
    )
    parser.add_argument("--family", required=True, help="catalog family id")
    parser.add_argument("--field", default="3", help="field designation: p, p^k or q")
    parser.add_argument("--param", action="append", default=[], metavar="KEY=VALUE", help="family parameter")
    parser.add_argument("--check", action="store_true", help="compare with the closed-form predictions")
    _add_outputs(parser)
    _add_common(parser)
    return parser


def build_load_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comax load", description="analyze an algebra from a structure-constant file")
    parser.add_argument("--file", required=True, help="structure-constant file")
    parser.add_argument("--check", choices=("all", "none"), default="all", help="evaluate predictions (default all)")
    _add_outputs(parser)
    _add_common(parser)
    return parser


def build_sweep_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="comax sweep", description="checked runs over families x fields")
    chosen = parser.add_mutually_exclusive_group()
    chosen.add_argument("--all", action="store_true", help="every catalog family")
    chosen.add_argument("--families", default=None, help="comma separated family ids")
    chosen.add_argument("--preset", choices=sorted(SweepConfig.PRESETS), default=None, help="named preset")
    parser.add_argument("--fields", default=None, help="comma separated fields (default COMAX_DEFAULT_FIELDS)")
    _add_common(parser)
    return parser


def _configure(args: argparse.Namespace) -> tuple[int, int]:
    """Apply logging and return (budget, threads); raises ValueError on bad values"""
    settings.validate()
    level = (args.log_level or settings.COMAX_LOG_LEVEL).upper()
    if not isinstance(logging.getLevelName(level), int):
        raise ValueError(f"unknown log level {level!r}")
    logging.basicConfig(level=level, format="%(levelname)s %(name)s: %(message)s")
    budget = args.budget if args.budget is not None else settings.COMAX_BUDGET
    threads = args.threads if args.threads is not None else settings.COMAX_THREADS
    if budget < 1 or threads < 1:
        raise ValueError("--budget and --threads must be positive")
    return budget, threads


def _run_config(args: argparse.Namespace, budget: int, threads: int, **fields) -> RunConfig:
    return RunConfig(
        star=args.star,
        invariants=parse_csv(args.invariants) if args.invariants else None,
        json_path=None if args.json_path == "-" else args.json_path,
        dot_path=args.dot_path,
        text_path=args.text_path,
        inventory_path=args.inventory_path,
        save_algebra_path=args.save_algebra_path,
        budget=budget,
        threads=threads,
        **fields,
    )


def _emit_report(report, json_path: str | None) -> None:
    if json_path == "-":
        sys.stdout.write(dumps(report.to_json()))
    else:
        sys.stdout.write(report.format_text())


def _main_run(argv: list[str]) -> int:
    args = build_run_parser().parse_args(argv)
    budget, threads = _configure(args)
    config = _run_config(
        args,
        budget,
        threads,
        family=args.family,
        field=args.field,
        params=parse_param_pairs(args.param),
        check=args.check,
    )
    report = run(config)
    _emit_report(report, args.json_path)
    return report.exit_code


def _main_load(argv: list[str]) -> int:
    args = build_load_parser().parse_args(argv)
    budget, threads = _configure(args)
    report = run(_run_config(args, budget, threads, algebra_path=args.file, check=args.check == "all"))
    _emit_report(report, args.json_path)
    return report.exit_code


def _main_sweep(argv: list[str]) -> int:
    args = build_sweep_parser().parse_args(argv)
    budget, threads = _configure(args)
    preset = SweepConfig(args.preset or "full")
    if args.families:
        families = parse_csv(args.families)
    else:
        families = preset.get_families()
    if args.fields:
        fields = parse_csv(args.fields)
    elif args.preset:
        fields = preset.get_fields()
    else:
        fields = parse_csv(settings.COMAX_DEFAULT_FIELDS)
    print(f"sweeping {len(families)} families over fields {', '.join(fields)}", file=sys.stderr)
    report = sweep(families, fields, budget=budget, threads=threads)
    if args.json_path and args.json_path != "-":
        report.export(args.json_path)
    if args.json_path == "-":
        sys.stdout.write(dumps(report.to_json()))
    else:
        sys.stdout.write(report.format_text())
    return report.exit_code


def main(argv: list[str] | None = None) -> int:
    """Dispatch to run, sweep or load and map errors to exit codes"""
    argv = list(sys.argv[1:] if argv is None else argv)
    handlers = {"sweep": _main_sweep, "load": _main_load}
    handler = _main_run
    if argv and argv[0] in handlers:
        handler = handlers[argv.pop(0)]
    try:
        return handler(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 on --help
        return exc.code if isinstance(exc.code, int) else EXIT_USAGE
    except ComaxError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except ValueError as exc:
        print(f"configuration error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except OSError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_USAGE
