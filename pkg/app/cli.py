"""
Command-line front end: `python -m app <command> ...`.

Reports go to stdout as JSON (or DOT for `gen --export dot`); diagnostics go
to stderr through the toolkit logger.

Exit codes: 0 success, 1 a verification failed, 2 usage or validation error.
"""
import argparse
import json
import sys
from dataclasses import asdict
from typing import Any, List, Optional, Sequence

from pydantic import ValidationError

from app.core import config
from app.core.errors import RamseyToolkitError
from app.core.logging import get_logger
from app.core.metrics import get_metrics
from app.graphs.io import graph_from_json, graph_to_dot, graph_to_json, poset_from_json
from app.models.checks import CheckOptions, ClaimResult
from app.models.ramsey import RamseyQuery
from app.schemas.graph import INVARIANTS
from app.services.analysis_service import get_analysis_service
from app.services.generator_service import FamilyParams, get_generator_service
from app.services.metrics_service import get_metrics_service
from app.services.ramsey_service import format_report, get_ramsey_service
from app.services.theorem_service import THEOREM_ALIASES, get_theorem_service

logger = get_logger(__name__)

EXIT_OK = 0
EXIT_FAILED = 1
EXIT_USAGE = 2


def _int_list(text: str) -> List[int]:
    try:
        return [int(part) for part in text.split(",") if part.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}")


def _invariant_list(text: str) -> List[str]:
    names = [part.strip() for part in text.split(",") if part.strip()]
    unknown = [name for name in names if name not in INVARIANTS]
    if unknown or not names:
        raise argparse.ArgumentTypeError(
            f"unknown invariant(s) {', '.join(unknown) or '(none given)'}; choose from {', '.join(INVARIANTS)}"
        )
    return names


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="python -m app",
        allow_abbrev=False,
        description="Comparability-graph Ramsey toolkit: graph families, invariants, witnesses and exhaustive checks.",
    )
    parser.add_argument("--max-poset-order", type=int, default=None,
                        help=f"Largest poset order enumerated (default {config.MAX_POSET_ORDER})")
    parser.add_argument("--max-graph-order", type=int, default=None,
                        help=f"Largest graph order enumerated (default {config.MAX_GRAPH_ORDER})")
    parser.add_argument("--workers", type=int, default=None,
                        help=f"Worker processes for exhaustive runs (default {config.RAMSEY_WORKERS})")
    commands = parser.add_subparsers(dest="command", required=True)

    gen = commands.add_parser("gen", help="Generate a graph family")
    gen.add_argument("family", choices=get_generator_service().families)
    gen.add_argument("--n", type=int)
    gen.add_argument("--m", type=int)
    gen.add_argument("--width", type=int)
    gen.add_argument("--k", type=int)
    gen.add_argument("--lo", type=int)
    gen.add_argument("--hi", type=int)
    gen.add_argument("--moduli", type=_int_list, help="Pairwise-coprime moduli for pdg, e.g. 4,9,5")
    gen.add_argument("--dimension", type=int, default=2, help="Matrix dimension for extremal-mat")
    output = gen.add_mutually_exclusive_group()
    output.add_argument("--export", choices=["dot", "json"], default="json")
    output.add_argument("--analyze", type=_invariant_list, help=f"Comma-separated: {','.join(INVARIANTS)}")

    analyze = commands.add_parser("analyze", help="Compute invariants of a Graph JSON file")
    analyze.add_argument("input", nargs="?", default="-", help="Graph JSON path, or - for stdin")
    analyze.add_argument("--invariants", type=_invariant_list, default=list(INVARIANTS))

    ramsey = commands.add_parser("ramsey", help="Witnesses and exhaustive verification")
    modes = ramsey.add_subparsers(dest="mode", required=True)

    witness = modes.add_parser("witness", help="Extract a chain/antichain witness from a poset")
    witness.add_argument("--poset", required=True, help="Poset JSON path, or - for stdin")
    witness.add_argument("--n", type=int, required=True)
    witness.add_argument("--m", type=int, required=True)
    witness.add_argument("--subset", type=_int_list)

    verify_po = modes.add_parser("verify-po", help="Check the closed form over all labeled posets")
    verify_po.add_argument("--n", type=int, required=True)
    verify_po.add_argument("--m", type=int, required=True)

    verify_cone = modes.add_parser("verify-cone", help="Check the semi-cone formula")
    verify_cone.add_argument("--k", type=int, required=True)
    verify_cone.add_argument("--n", type=int, required=True)
    verify_cone.add_argument("--m", type=int, required=True)

    search = modes.add_parser("search-general", help="Check every labeled graph of one order")
    search.add_argument("--n", type=int, required=True)
    search.add_argument("--m", type=int, required=True)
    search.add_argument("--order", type=int, required=True)

    check = commands.add_parser("check", help="Run a theorem check")
    check.add_argument("theorem_id", help=", ".join(get_theorem_service().theorem_ids + list(THEOREM_ALIASES)))
    check.add_argument("--n", type=int, action="append", help="pdg size; repeatable")
    check.add_argument("--k", type=int, action="append", help="semi-cone modulus; repeatable")
    check.add_argument("--max-product", type=int, default=12, help="Largest (n-1)(m-1) in sharpness sweeps")
    check.add_argument("--fuzz-samples", type=int)
    check.add_argument("--fuzz-max-size", type=int)
    check.add_argument("--seed", type=int)
    return parser


def _emit(payload: Any) -> None:
    sys.stdout.write(json.dumps(payload) + "\n")
    sys.stdout.flush()


def _emit_claim(claim: ClaimResult) -> None:
    _emit({**asdict(claim), "elapsed_ms": round(claim.elapsed_ms, 2)})


def _read_json(path: str) -> Any:
    if path == "-":
        return json.load(sys.stdin)
    with open(path, encoding="utf-8") as handle:
        return json.load(handle)


def _gen(args: argparse.Namespace) -> int:
    params = FamilyParams(
        n=args.n, m=args.m, width=args.width, k=args.k, lo=args.lo, hi=args.hi,
        moduli=tuple(args.moduli) if args.moduli else None,
        dimension=args.dimension,
    )
    generated = get_generator_service().generate(args.family, params)
    graph = generated.graph
    logger.info(f"✅ {args.family}: {graph.size} vertices, {graph.edge_count} edges")
    if generated.blocks is not None:
        logger.info(f"blocks: {generated.blocks}")

    if args.analyze:
        results = get_analysis_service().analyze(graph, args.analyze)
        _emit({"family": args.family, "size": graph.size, "edge_count": graph.edge_count, "results": results})
    elif args.export == "dot":
        sys.stdout.write(graph_to_dot(graph, args.family))
    else:
        _emit(graph_to_json(graph))
    return EXIT_OK


def _analyze(args: argparse.Namespace) -> int:
    graph = graph_from_json(_read_json(args.input))
    results = get_analysis_service().analyze(graph, args.invariants)
    _emit({"size": graph.size, "edge_count": graph.edge_count, "results": results})
    return EXIT_OK


def _ramsey(args: argparse.Namespace) -> int:
    service = get_ramsey_service()
    q = RamseyQuery(args.n, args.m)
    if args.mode == "witness":
        response = service.witness(poset_from_json(_read_json(args.poset)), q, args.subset)
        _emit(response.model_dump())
        return EXIT_OK if response.valid else EXIT_FAILED
    if args.mode == "verify-po":
        report = service.verify_po(q, args.max_poset_order, args.workers)
    elif args.mode == "verify-cone":
        report = service.verify_cone(args.k, q)
    else:
        report = service.search(q, args.order, args.max_graph_order, args.workers)
        _emit(format_report(report))
        # below the classical Ramsey number a counterexample is the expected answer
        return EXIT_OK
    _emit(format_report(report))
    return EXIT_OK if report.all_pass else EXIT_FAILED


def _check(args: argparse.Namespace) -> int:
    options = CheckOptions(
        ns=args.n,
        ks=args.k,
        max_poset_order=args.max_poset_order,
        max_graph_order=args.max_graph_order,
        workers=args.workers,
        max_product=args.max_product,
        fuzz_samples=args.fuzz_samples,
        fuzz_max_size=args.fuzz_max_size,
        seed=args.seed,
    )
    reports = get_theorem_service().run(args.theorem_id, options, on_claim=_emit_claim)

    metrics_service = get_metrics_service()
    summary = metrics_service.create_metrics_report(metrics_service.snapshot(get_metrics()))
    all_pass = all(report.all_pass for report in reports)
    logger.info(
        f"{'✅' if all_pass else '❌'} {summary['verification_runs']} claims, "
        f"{summary['verification_failures']} failed, mean {summary['verification_ms_mean']:.1f} ms, "
        f"p95 {summary['verification_ms_p95']:.1f} ms"
    )
    return EXIT_OK if all_pass else EXIT_FAILED


_HANDLERS = {
    "gen": _gen,
    "analyze": _analyze,
    "ramsey": _ramsey,
    "check": _check,
}


def run(argv: Optional[Sequence[str]] = None) -> int:
    """Parse argv, dispatch, and map outcomes to exit codes."""
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK

    try:
        return _HANDLERS[args.command](args)
    except RamseyToolkitError as error:
        logger.error(f"❌ {type(error).__name__}: {error}")
        return EXIT_USAGE
    except (ValidationError, json.JSONDecodeError) as error:
        logger.error(f"❌ invalid JSON input: {error}")
        return EXIT_USAGE
    except OSError as error:
        logger.error(f"❌ {error}")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run())
