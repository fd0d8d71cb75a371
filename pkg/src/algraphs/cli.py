# ==============================================================================
# cli.py — Command-line front end
# ==============================================================================
# Purpose: Parse algebra specs, build and export graphs and complexes, classify
#          graphs, compute invariants, describe algebras and run the
#          verification suites, mapping errors to exit codes.
# Sections: Imports, Public exports, Parser, Helpers, Commands, Entry Point
# ==============================================================================

# ==============================================================================
# Imports
# ==============================================================================

# Standard Library --------------------------------------------------------------
from __future__ import annotations

import argparse
import logging
import sys
from pathlib import Path
from typing import Callable, Sequence

# Third-Party -------------------------------------------------------------------
from pydantic import TypeAdapter, ValidationError

# Internal ----------------------------------------------------------------------
from .core.algebra import FiniteAlgebra, rank_of, subalgebra_lattice
from .core.algebra_graphs import GRAPH_TAGS, GraphKind, build_digraph, build_graph
from .core.arith import clique_ratio_table, max_ratio_row, write_ratio_csv
from .core.builders import parse_algebra
from .core.complexes import build_complex
from .core.endomorphisms import enumerate_endomorphisms
from .core.exceptions import ClaimFalsified, InputError, ResourceLimitExceeded
from .core.export import GraphExporter
from .core.graph_classes import GRAPH_CLASSES, classify
from .core.invariants import INVARIANT_NAMES, graph_invariant
from .core.logger import logger
from .core.properties import PROPERTY_NAMES, check_property, group_signature
from .core.settings import DEFAULT_LIMITS, SearchLimits
from .payloads.documents import dump_algebra
from .payloads.reports import ClassVerdictRecord, InvariantRecord
from .verify.catalog import FAMILIES
from .verify.runner import EXIT_FAILED, EXIT_OK, EXIT_RESOURCE, EXIT_USAGE, report_exit_code, run_suite
from .verify.suites import SUITE_IDS

# ==============================================================================
# Public exports
# ==============================================================================
__all__ = ["build_parser", "run", "main"]


# ==============================================================================
# Parser
# ==============================================================================

def _common_options() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("-v", "--verbose", action="count", default=0, help="-v for info, -vv for debug logs")
    common.add_argument("--max-subset-size", type=int, default=None, help="cap on generating-set searches")
    common.add_argument("--max-lattice-size", type=int, default=None, help="cap on the subalgebra lattice")
    common.add_argument("--max-simplex-size", type=int, default=None, help="cap on simplices in a complex")
    return common


def _graph_options(parser: argparse.ArgumentParser) -> None:
    parser.add_argument("--algebra", required=True, help="builder spec such as cyclic:6 or file:<path>")
    parser.add_argument("--graph", required=True, choices=GRAPH_TAGS)
    parser.add_argument("--variant", choices=("strict", "loose"), default=None, help="enhanced power graph only")


def build_parser() -> argparse.ArgumentParser:
    common = _common_options()
    parser = argparse.ArgumentParser(
        prog="algraphs",
        description="Graphs, digraphs and complexes on finite algebras.",
    )
    commands = parser.add_subparsers(dest="command", required=True)

    build = commands.add_parser("build", parents=[common], help="build a graph and export it")
    _graph_options(build)
    build.add_argument("--digraph", action="store_true", help="directed version (power or endomorphism)")
    build.add_argument("--format", choices=("dot", "json"), default="dot")
    build.add_argument("--out", type=Path, default=None)

    classify_cmd = commands.add_parser("classify", parents=[common], help="test graph classes")
    _graph_options(classify_cmd)
    classify_cmd.add_argument("--classes", default=",".join(GRAPH_CLASSES), help="comma-separated class names")

    invariant = commands.add_parser("invariant", parents=[common], help="compute a graph invariant")
    _graph_options(invariant)
    invariant.add_argument("--which", required=True, choices=INVARIANT_NAMES)

    complex_cmd = commands.add_parser("complex", parents=[common], help="build an independence complex")
    complex_cmd.add_argument("--algebra", required=True)
    complex_cmd.add_argument("--kind", choices=("independence", "strong"), default="independence")
    complex_cmd.add_argument("--out", type=Path, default=None)

    verify = commands.add_parser("verify", parents=[common], help="run a theorem suite over a catalog")
    verify.add_argument("--suite", required=True, choices=SUITE_IDS)
    verify.add_argument("--family", choices=FAMILIES, default="groups")
    verify.add_argument("--max-order", type=int, default=None)
    verify.add_argument("--include-a5", action="store_true", help="add the alternating group of order 60")
    verify.add_argument("--fail-fast", action="store_true", help="stop at the first falsified claim")
    verify.add_argument("--out", type=Path, default=None)

    ratio = commands.add_parser("f-ratio", parents=[common], help="tabulate f(n)/phi(n) as CSV")
    ratio.add_argument("--max-n", type=int, default=30)
    ratio.add_argument("--out", type=Path, default=None)

    describe = commands.add_parser("describe", parents=[common], help="summarize an algebra")
    describe.add_argument("--algebra", required=True)

    export = commands.add_parser("export-algebra", parents=[common], help="write the algebra document")
    export.add_argument("--algebra", required=True)
    export.add_argument("--out", type=Path, default=None)
    return parser


# ==============================================================================
# Helpers
# ==============================================================================

def _configure_logging(verbosity: int) -> None:
    level = logging.WARNING if verbosity == 0 else logging.INFO if verbosity == 1 else logging.DEBUG
    logging.basicConfig(
        level=level,
        stream=sys.stderr,
        format="%(levelname)s %(name)s: %(message)s",
        force=True,
    )


def _limits(args: argparse.Namespace) -> SearchLimits:
    overrides = {
        name: getattr(args, name)
        for name in ("max_subset_size", "max_lattice_size", "max_simplex_size")
        if getattr(args, name) is not None
    }
    if not overrides:
        return DEFAULT_LIMITS
    try:
        return DEFAULT_LIMITS.clone(**overrides)
    except ValidationError as e:
        raise InputError(f"invalid search limit: {e.errors()[0]['msg']}") from None


def _emit(text: str, out: Path | None) -> None:
    """Write `text` to `out` if given, otherwise to standard output."""
    if not text.endswith("\n"):
        text += "\n"
    if out is None:
        sys.stdout.write(text)
    else:
        out.write_text(text, encoding="utf-8")
        logger.info(f"wrote {out}")


def _kind(args: argparse.Namespace) -> GraphKind:
    return GraphKind.parse(args.graph, args.variant)


def _set_labels(algebra: FiniteAlgebra, members) -> str:
    return "{" + ", ".join(algebra.label(x) for x in sorted(members)) + "}"


# ==============================================================================
# Commands
# ==============================================================================

def _cmd_build(args: argparse.Namespace, limits: SearchLimits) -> int:
    algebra = parse_algebra(args.algebra)
    if args.digraph:
        graph = build_digraph(algebra, args.graph, limits)
        name = f"{args.graph}_digraph"
    else:
        graph = build_graph(algebra, _kind(args), limits)
        name = args.graph
    if args.format == "dot":
        text = GraphExporter.to_dot(graph, name)
    else:
        text = GraphExporter.to_edge_list(graph).model_dump_json(indent=2)
    _emit(text, args.out)
    return EXIT_OK


def _cmd_classify(args: argparse.Namespace, limits: SearchLimits) -> int:
    classes = [c.strip() for c in args.classes.split(",") if c.strip()]
    unknown = [c for c in classes if c not in GRAPH_CLASSES]
    if unknown:
        raise InputError(f"unknown graph class {unknown[0]!r}; expected any of {', '.join(GRAPH_CLASSES)}")
    graph = build_graph(parse_algebra(args.algebra), _kind(args), limits)
    records = []
    for cls in classes:
        result = classify(graph, cls, limits)  # type: ignore[arg-type]
        records.append(
            ClassVerdictRecord(
                graph_class=cls,
                verdict=result.verdict,
                configuration=result.configuration,
                witness=result.witness_labels(graph),
                certificate=result.certificate,
            )
        )
    _emit(TypeAdapter(list[ClassVerdictRecord]).dump_json(records, indent=2).decode(), None)
    return EXIT_OK


def _cmd_invariant(args: argparse.Namespace, limits: SearchLimits) -> int:
    algebra = parse_algebra(args.algebra)
    kind = _kind(args)
    value = graph_invariant(build_graph(algebra, kind, limits), args.which, limits)
    record = InvariantRecord(algebra=algebra.name, graph=str(kind), name=value.name, value=value.value, bound=value.bound)
    _emit(record.model_dump_json(indent=2), None)
    return EXIT_OK


def _cmd_complex(args: argparse.Namespace, limits: SearchLimits) -> int:
    kind = "strong_independence" if args.kind == "strong" else "independence"
    complex_ = build_complex(parse_algebra(args.algebra), kind, limits)
    _emit(GraphExporter.to_complex_document(complex_).model_dump_json(indent=2), args.out)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace, limits: SearchLimits) -> int:
    try:
        report = run_suite(
            args.suite,
            args.family,
            args.max_order,
            limits=limits,
            fail_fast=args.fail_fast,
            include_a5=args.include_a5,
        )
    except ClaimFalsified as e:
        logger.error(str(e))
        _emit(e.claim_result.to_record().model_dump_json(indent=2), args.out)
        return EXIT_FAILED
    text = report.model_dump_json(indent=2)
    if args.out is not None:
        _emit(text, args.out)
    _emit(text, None)
    return report_exit_code(report)


def _cmd_f_ratio(args: argparse.Namespace, limits: SearchLimits) -> int:
    rows = clique_ratio_table(args.max_n, limits)
    text = write_ratio_csv(rows, args.out)
    if args.out is None:
        sys.stdout.write(text)
    top = max_ratio_row(rows)
    # summary goes to stderr so stdout stays plain CSV
    sys.stderr.write(f"max ratio {top.ratio} at n={top.n}\n")
    return EXIT_OK


def _cmd_describe(args: argparse.Namespace, limits: SearchLimits) -> int:
    algebra = parse_algebra(args.algebra)
    ops = ", ".join(f"{op.name}/{op.arity}" for op in algebra.operations)
    lines = [
        f"algebra: {algebra.name} ({algebra.size} elements)",
        f"operations: {ops}",
        f"E(A): {_set_labels(algebra, algebra.constants)}",
        f"rank: {rank_of(algebra, algebra.universe, limits)}",
        "subalgebras:",
    ]
    for sub in subalgebra_lattice(algebra, limits):
        lines.append(f"  {_set_labels(algebra, sub.members)}  rank {sub.with_rank(limits).rank}")
    lines.append("properties:")
    is_group = group_signature(algebra) is not None
    for prop in PROPERTY_NAMES:
        if prop == "EPPO" and not is_group:
            lines.append(f"  {prop}: n/a")
            continue
        try:
            verdict = "yes" if check_property(algebra, prop, limits) else "no"
        except ResourceLimitExceeded as e:
            verdict = f"unknown ({e.limit} reached)"
        lines.append(f"  {prop}: {verdict}")
    lines.append(f"endomorphisms: {len(enumerate_endomorphisms(algebra, limits))}")
    _emit("\n".join(lines), None)
    return EXIT_OK


def _cmd_export_algebra(args: argparse.Namespace, limits: SearchLimits) -> int:
    algebra = parse_algebra(args.algebra)
    if args.out is None:
        _emit(dump_algebra(algebra), None)
    else:
        dump_algebra(algebra, args.out)
    return EXIT_OK


_COMMANDS: dict[str, Callable[[argparse.Namespace, SearchLimits], int]] = {
    "build": _cmd_build,
    "classify": _cmd_classify,
    "invariant": _cmd_invariant,
    "complex": _cmd_complex,
    "verify": _cmd_verify,
    "f-ratio": _cmd_f_ratio,
    "describe": _cmd_describe,
    "export-algebra": _cmd_export_algebra,
}


# ==============================================================================
# Entry Point
# ==============================================================================

def run(argv: Sequence[str] | None = None) -> int:
    """
    Execute one command and return its exit status: 0 success, 1 falsified
    claims, 2 bad input or usage, 3 a search cap was reached.
    """
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as e:
        return EXIT_USAGE if e.code else EXIT_OK

    _configure_logging(args.verbose)
    try:
        limits = _limits(args)
        return _COMMANDS[args.command](args, limits)
    except InputError as e:
        logger.error(f"input error: {e}")
        return EXIT_USAGE
    except ResourceLimitExceeded as e:
        logger.error(f"resource limit reached: {e}")
        return EXIT_RESOURCE


def main() -> None:
    sys.exit(run())
