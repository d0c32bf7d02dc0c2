"""Command-line interface.

Subcommands: simulate (one revelation order), expect (exact expected
sizes), extremal (worst/best-case counts), series (EGF count table),
sample (Monte Carlo), verify (the cross-validation suite).

Exit codes: 0 success, 1 invalid input, 2 verification/consistency
failure, 3 resource-guard refusal.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import time
from fractions import Fraction

from . import __version__, expectation, extremal, montecarlo, series, verification
from . import graphs
from .domination import run_online_domination
from .errors import ConsistencyError, ResourceLimitError

EXIT_OK = 0
EXIT_INVALID = 1
EXIT_VERIFY_FAILED = 2
EXIT_RESOURCE = 3


def _default_workers() -> int:
    try:
        return max(1, int(os.environ.get("PATHDOM_WORKERS", "1")))
    except ValueError:
        return 1


def _rational(value: Fraction) -> str:
    return f"{value.numerator}/{value.denominator}"


def _write(text: str, output: str | None) -> None:
    if output:
        with open(output, "w", encoding="utf-8", newline="") as handle:
            handle.write(text)
    else:
        sys.stdout.write(text)


def _parse_int_list(raw: str, what: str) -> list[int]:
    try:
        return [int(piece) for piece in raw.split(",") if piece.strip() != ""]
    except ValueError:
        raise ValueError(f"could not parse {what} from {raw!r}") from None


def _parse_edges(raw: str) -> list[tuple[int, int]]:
    edges = []
    for piece in raw.split(","):
        piece = piece.strip()
        if not piece:
            continue
        try:
            u, v = piece.split("-")
            edges.append((int(u), int(v)))
        except ValueError:
            raise ValueError(f"could not parse edge {piece!r}; expected 'u-v'") from None
    return edges


def _graph_from_args(args: argparse.Namespace) -> graphs.Graph:
    family = args.family
    if family == "path":
        if args.n is None:
            raise ValueError("--family path requires --n")
        return graphs.path(args.n)
    if family == "cycle":
        if args.n is None:
            raise ValueError("--family cycle requires --n")
        return graphs.cycle(args.n)
    if family == "star":
        if args.leaves is None:
            raise ValueError("--family star requires --leaves")
        return graphs.star(args.leaves)
    if family == "wheel":
        if args.spokes is None:
            raise ValueError("--family wheel requires --spokes")
        return graphs.wheel(args.spokes)
    if family == "multipartite":
        if not args.parts:
            raise ValueError("--family multipartite requires --parts")
        return graphs.complete_multipartite(_parse_int_list(args.parts, "part sizes"))
    if args.n is None or not args.edges:
        raise ValueError("--family explicit requires --n and --edges")
    return graphs.explicit(args.n, _parse_edges(args.edges))


def _add_family_args(parser: argparse.ArgumentParser) -> None:
    parser.add_argument(
        "--family",
        choices=("path", "cycle", "star", "wheel", "multipartite", "explicit"),
        default="path",
    )
    parser.add_argument("--n", type=int, help="vertex count (path/cycle/explicit)")
    parser.add_argument("--leaves", type=int, help="star leaf count")
    parser.add_argument("--spokes", type=int, help="wheel spoke count")
    parser.add_argument("--parts", help="comma-separated multipartite part sizes")
    parser.add_argument("--edges", help="explicit edge list, e.g. 1-2,2-3")


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="pathdom",
        description="Online domination of paths: simulation, exact expectations, "
        "extremal counts, generating functions, Monte Carlo sampling.",
    )
    parser.add_argument(
        "--version", action="version", version=f"pathdom {__version__}"
    )
    sub = parser.add_subparsers(dest="command", required=True)

    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--format", choices=("text", "csv", "json"), default="text")
    common.add_argument("--output", metavar="PATH", help="write to PATH, not stdout")
    common.add_argument(
        "--verbose", action="store_true", help="timing diagnostics on stderr"
    )

    p = sub.add_parser("simulate", parents=[common], help="run one revelation order")
    _add_family_args(p)
    p.add_argument("--order", required=True, help="revelation order, e.g. 2,1,3")

    p = sub.add_parser("expect", parents=[common], help="exact expected set size")
    _add_family_args(p)
    p.add_argument(
        "--method",
        choices=("recurrence", "closed-form", "brute"),
        default="recurrence",
        help="path route, or 'brute' to average over all orders of any family",
    )
    p.add_argument(
        "--as-printed",
        action="store_true",
        help="wheel only: evaluate the uncorrected closed form",
    )
    p.add_argument(
        "--caro-wei",
        action="store_true",
        help="emit the degree-based lower bound for the graph instead",
    )
    p.add_argument("--float", dest="as_float", action="store_true")
    p.add_argument("--cap", type=int, default=extremal.DEFAULT_BRUTE_CAP)
    p.add_argument("--force", action="store_true")

    p = sub.add_parser("extremal", parents=[common], help="count extremal orders")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--bound", choices=("worst", "best"), required=True)
    p.add_argument(
        "--method",
        choices=("brute", "recurrence", "egf", "formula", "all"),
        default="brute",
    )
    p.add_argument("--witnesses", type=int, default=0, metavar="K",
                   help="include up to K witness orders (brute only)")
    p.add_argument("--cap", type=int, default=extremal.DEFAULT_BRUTE_CAP)
    p.add_argument("--force", action="store_true", help="override the brute cap")
    p.add_argument("--workers", type=int, default=_default_workers())

    p = sub.add_parser("series", parents=[common], help="EGF count table")
    p.add_argument("--order", type=int, default=series.DEFAULT_ORDER)

    p = sub.add_parser("sample", parents=[common], help="Monte Carlo sampling")
    p.add_argument("--n", type=int, required=True)
    p.add_argument("--samples", type=int, required=True)
    p.add_argument("--seed", type=int, default=0)
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument(
        "--normalization",
        choices=montecarlo.NORMALIZATION_MODES,
        default="none",
    )
    p.add_argument("--budget", type=int, default=montecarlo.DEFAULT_BUDGET)
    p.add_argument(
        "--plot-data",
        action="store_true",
        help="two-column 'x weight' output, gnuplot-friendly",
    )

    p = sub.add_parser("verify", parents=[common], help="cross-validation suite")
    p.add_argument("--depth", choices=("quick", "full"), default="quick")
    p.add_argument("--workers", type=int, default=_default_workers())
    p.add_argument(
        "--n11",
        action="store_true",
        help="also recount the worst case at n=11 exhaustively (slow)",
    )

    return parser


# ---------------------------------------------------------------------------
# Handlers
# ---------------------------------------------------------------------------


def _cmd_simulate(args: argparse.Namespace) -> int:
    graph = _graph_from_args(args)
    order = _parse_int_list(args.order, "revelation order")
    outcome = run_online_domination(graph, order)
    if args.format == "json":
        doc = {
            "family": graph.family,
            "n": graph.n,
            "order": order,
            "chosen": list(outcome.chosen),
            "gamma": outcome.size,
        }
        _write(json.dumps(doc, indent=2) + "\n", args.output)
    elif args.format == "csv":
        rows = ["position,vertex,added"]
        added = set(outcome.chosen)
        rows += [f"{i},{v},{int(v in added)}" for i, v in enumerate(order, start=1)]
        _write("\n".join(rows) + "\n", args.output)
    else:
        chosen = ",".join(str(v) for v in outcome.chosen)
        _write(f"gamma: {outcome.size}\nchosen: {chosen}\n", args.output)
    return EXIT_OK


def _expect_value(args: argparse.Namespace) -> tuple[str, Fraction]:
    if args.caro_wei:
        return "caro_wei", expectation.caro_wei_bound(_graph_from_args(args))
    if args.method == "brute":
        graph = _graph_from_args(args)
        return "brute", expectation.bruteforce_expected_gamma(
            graph, cap=args.cap, force=args.force
        )
    family = args.family
    if family == "path":
        if args.n is None:
            raise ValueError("--family path requires --n")
        if args.method == "closed-form":
            return "closed-form", expectation.expected_gamma_path_closed_form(args.n)
        return "recurrence", expectation.expected_gamma_path(args.n)
    if family == "cycle":
        if args.n is None:
            raise ValueError("--family cycle requires --n")
        return "formula", expectation.expected_gamma_cycle(args.n)
    if family == "star":
        if args.leaves is None:
            raise ValueError("--family star requires --leaves")
        return "formula", expectation.expected_gamma_star(args.leaves)
    if family == "wheel":
        if args.spokes is None:
            raise ValueError("--family wheel requires --spokes")
        label = "formula-as-printed" if args.as_printed else "formula"
        return label, expectation.expected_gamma_wheel(
            args.spokes, as_printed=args.as_printed
        )
    if family == "multipartite":
        if not args.parts:
            raise ValueError("--family multipartite requires --parts")
        sizes = _parse_int_list(args.parts, "part sizes")
        return "formula", expectation.expected_gamma_complete_multipartite(sizes)
    raise ValueError("expect supports explicit graphs only with --method brute")


def _cmd_expect(args: argparse.Namespace) -> int:
    method, value = _expect_value(args)
    if args.format == "json":
        doc = {
            "family": args.family,
            "method": method,
            "value": _rational(value),
            "float": float(value),
        }
        _write(json.dumps(doc, indent=2) + "\n", args.output)
    elif args.format == "csv":
        _write(
            "family,method,value\n"
            f"{args.family},{method},{_rational(value)}\n",
            args.output,
        )
    else:
        _write(f"{float(value)}\n" if args.as_float else f"{value}\n", args.output)
    return EXIT_OK


def _extremal_reports(args: argparse.Namespace) -> list[extremal.ExtremalReport]:
    n, kind = args.n, args.bound
    size = (
        extremal.max_dominating_size(n)
        if kind == "worst"
        else extremal.min_dominating_size(n)
    )
    methods = (
        ["brute", "recurrence", "egf"]
        if kind == "worst"
        else ["brute", "formula"]
    ) if args.method == "all" else [args.method]
    reports = []
    for method in methods:
        if method == "brute":
            reports.append(
                extremal.count_extremal_bruteforce(
                    n,
                    kind,
                    cap=args.cap,
                    force=args.force,
                    workers=args.workers,
                    witness_cap=args.witnesses,
                )
            )
        elif method == "recurrence":
            if kind != "worst":
                raise ValueError("--method recurrence applies to --bound worst only")
            reports.append(
                extremal.ExtremalReport(
                    n=n, bound_kind=kind, extremal_size=size,
                    count=extremal.worst_case_count_recurrence(n),
                    method="recurrence",
                )
            )
        elif method == "egf":
            if kind != "worst":
                raise ValueError("--method egf applies to --bound worst only")
            reports.append(
                extremal.ExtremalReport(
                    n=n, bound_kind=kind, extremal_size=size,
                    count=series.worst_case_counts_egf(n)[n],
                    method="egf",
                )
            )
        else:
            if kind != "best":
                raise ValueError("--method formula applies to --bound best only")
            reports.append(
                extremal.ExtremalReport(
                    n=n, bound_kind=kind, extremal_size=size,
                    count=extremal.best_case_count_formula(n),
                    method="formula",
                )
            )
    return reports


def _cmd_extremal(args: argparse.Namespace) -> int:
    reports = _extremal_reports(args)
    if args.format == "json":
        docs = [r.to_json_dict(include_witnesses=args.witnesses > 0) for r in reports]
        _write(json.dumps(docs[0] if len(docs) == 1 else docs, indent=2) + "\n",
               args.output)
    elif args.format == "csv":
        rows = ["n,bound_kind,extremal_size,count,method"]
        rows += [
            f"{r.n},{r.bound_kind},{r.extremal_size},{r.count},{r.method}"
            for r in reports
        ]
        _write("\n".join(rows) + "\n", args.output)
    else:
        lines = [
            f"{r.method}: {r.count} orders of length {r.n} hit the {r.bound_kind}-case "
            f"size {r.extremal_size}"
            for r in reports
        ]
        for r in reports:
            for witness in r.witnesses:
                lines.append("  witness " + ",".join(str(v) for v in witness))
        _write("\n".join(lines) + "\n", args.output)
    counts = {r.count for r in reports}
    if len(counts) > 1:
        by_method = {r.method: r.count for r in reports}
        print(f"error: methods disagree at n={args.n}: {by_method}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


def _cmd_series(args: argparse.Namespace) -> int:
    if args.order < 0:
        raise ValueError("--order must be nonnegative")
    odd_config = series.odd_configuration_counts_egf(args.order)
    worst = series.worst_case_counts_egf(args.order)
    if args.format == "json":
        docs = [
            {"n": n, "odd_config": str(d), "worst_case": str(f)}
            for n, (d, f) in enumerate(zip(odd_config, worst))
        ]
        _write(json.dumps(docs, indent=2) + "\n", args.output)
    else:
        rows = ["n,odd_config,worst_case"]
        rows += [f"{n},{d},{f}" for n, (d, f) in enumerate(zip(odd_config, worst))]
        _write("\n".join(rows) + "\n", args.output)
    return EXIT_OK


def _cmd_sample(args: argparse.Namespace) -> int:
    config = montecarlo.SampleConfig(
        n=args.n,
        samples=args.samples,
        seed=args.seed,
        workers=args.workers,
        normalization=args.normalization,
        budget=args.budget,
    )
    hist = montecarlo.sample_gamma(config)
    meta = hist.to_json_dict()
    if args.format == "json":
        doc = dict(meta)
        doc["bins"] = {str(size): count for size, count in hist.bins.items()}
        if args.normalization != "none":
            doc["normalized"] = [
                [x, w] for x, w in montecarlo.normalize(hist, args.normalization)
            ]
        _write(json.dumps(doc, indent=2) + "\n", args.output)
        return EXIT_OK
    if args.plot_data:
        if args.normalization == "none":
            body = "\n".join(f"{size} {count}" for size, count in hist.bins.items())
        else:
            points = montecarlo.normalize(hist, args.normalization)
            body = "\n".join(f"{x:.10g} {w:.10g}" for x, w in points)
    else:
        body = "gamma,count\n" + "\n".join(
            f"{size},{count}" for size, count in hist.bins.items()
        )
    _write(body + "\n", args.output)
    sidecar = json.dumps(meta, indent=2) + "\n"
    if args.output:
        with open(args.output + ".json", "w", encoding="utf-8") as handle:
            handle.write(sidecar)
    else:
        sys.stderr.write(sidecar)
    return EXIT_OK


def _cmd_verify(args: argparse.Namespace) -> int:
    results = verification.run_verification(
        depth=args.depth, workers=args.workers, extended=args.n11
    )
    if args.format == "json":
        docs = [
            {"name": r.name, "passed": r.passed, "detail": r.detail} for r in results
        ]
        _write(json.dumps(docs, indent=2) + "\n", args.output)
    else:
        _write("".join(r.line() + "\n" for r in results), args.output)
    failures = [r for r in results if not r.passed]
    if failures:
        print(f"first divergence: {failures[0].detail}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    return EXIT_OK


_HANDLERS = {
    "simulate": _cmd_simulate,
    "expect": _cmd_expect,
    "extremal": _cmd_extremal,
    "series": _cmd_series,
    "sample": _cmd_sample,
    "verify": _cmd_verify,
}


def main(argv: list[str] | None = None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        # argparse exits 2 on usage errors and 0 for --help/--version
        code = exc.code if isinstance(exc.code, int) else EXIT_INVALID
        return EXIT_OK if code == 0 else EXIT_INVALID
    try:
        started = time.perf_counter()
        code = _HANDLERS[args.command](args)
        if getattr(args, "verbose", False):
            print(
                f"{args.command} finished in {time.perf_counter() - started:.2f}s",
                file=sys.stderr,
            )
        return code
    except ResourceLimitError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_RESOURCE
    except ConsistencyError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_VERIFY_FAILED
    except (ValueError, OSError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INVALID


def entry() -> None:
    raise SystemExit(main())
