"""Command-line interface.

Subcommands:
  analyze <file>   full pipeline on a curve document
  sing <expr>      quick local analysis of one plane equation
  corpus           run the builtin corpus and print the summary table

Exit codes: 0 success, 1 invariant-check failure, 2 input error,
3 truncation cap exceeded.
"""

from __future__ import annotations

import argparse
import sys
from typing import List, Optional

from .errors import (
    CurveInvError,
    NonIsolated,
    NotMPrimary,
    ParseError,
    SchemaError,
    TruncationCapExceeded,
)
from .plane import PlaneAnalysis, PlaneSingularity
from .poly import parse_poly
from .report import AnalysisOptions, analyze, run_corpus, to_json, to_text
from .schema import load_curve

EXIT_OK = 0
EXIT_CHECK_FAILURE = 1
EXIT_INPUT_ERROR = 2
EXIT_TRUNCATION_CAP = 3


def _parse_window(text: str):
    parts = text.split(",")
    if len(parts) != 2:
        raise argparse.ArgumentTypeError("window must be 'a,b'")
    try:
        lo, hi = int(parts[0]), int(parts[1])
    except ValueError:
        raise argparse.ArgumentTypeError("window bounds must be integers")
    if lo > hi:
        raise argparse.ArgumentTypeError("window must satisfy a <= b")
    return (lo, hi)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="curveinv",
        description=(
            "exact local invariants of curve singularities and "
            "second-page degeneration verdicts for curve models"
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument(
            "--truncation", type=int, default=None,
            help="jet truncation order override",
        )
        p.add_argument(
            "--format", choices=("text", "json-like"), default="text",
            help="report format",
        )
        p.add_argument(
            "--hc-window", type=_parse_window, default=(-2, 4), metavar="a,b",
            help="range of the cyclic splitting integer m (default -2,4)",
        )
        p.add_argument(
            "--tail-window", type=int, default=4, metavar="p",
            help="largest tail index p rendered (default 4)",
        )

    p_analyze = sub.add_parser("analyze", help="analyze a curve document")
    p_analyze.add_argument("file", help="path to a curve JSON document")
    common(p_analyze)

    p_sing = sub.add_parser("sing", help="quick analysis of one plane equation")
    p_sing.add_argument("expr", help="defining equation, e.g. 'u^2+v^3'")
    p_sing.add_argument(
        "--vars", default="u,v", metavar="u,v",
        help="comma-separated variable names (default u,v)",
    )
    common(p_sing)

    p_corpus = sub.add_parser("corpus", help="run the builtin corpus")
    common(p_corpus)
    return parser


def _options(args) -> AnalysisOptions:
    if args.truncation is not None and args.truncation < 1:
        raise SchemaError("truncation must be at least 1", "--truncation")
    if args.tail_window < 1:
        raise SchemaError("tail window must be at least 1", "--tail-window")
    return AnalysisOptions(
        truncation=args.truncation,
        tail_window=args.tail_window,
        hc_window=tuple(args.hc_window),
    )


def _cmd_analyze(args) -> int:
    doc = load_curve(args.file)
    report = analyze(doc, _options(args))
    if args.format == "json-like":
        print(to_json(report))
    else:
        print(to_text(report))
    return EXIT_OK if report.ok() else EXIT_CHECK_FAILURE


def _cmd_sing(args) -> int:
    variables = tuple(v.strip() for v in args.vars.split(",") if v.strip())
    if len(variables) != 2:
        raise SchemaError("exactly two variables required", "--vars")
    f = parse_poly(args.expr, variables)
    sing = PlaneSingularity(f, label=args.expr)
    analysis = PlaneAnalysis(sing, truncation=args.truncation)
    mu, tau = analysis.milnor_tjurina()
    tail = analysis.tail_map_general()
    weights = analysis.effective_weights
    if args.format == "json-like":
        import json

        print(
            json.dumps(
                {
                    "equation": str(f),
                    "mu": mu,
                    "tau": tau,
                    "qh_by_saito": analysis.saito_test(),
                    "wh_in_coords": weights is not None,
                    "weights": None if weights is None else [str(w) for w in weights],
                    "tail_rank": tail.rank,
                    "tail_matrix": [[str(x) for x in row] for row in tail.matrix],
                },
                sort_keys=True,
                indent=2,
            )
        )
    else:
        print(f"equation: {f}")
        print(f"mu = {mu}, tau = {tau}")
        print(f"quasihomogeneous (tau = mu): {analysis.saito_test()}")
        if weights is not None:
            print(f"weights in these coordinates: ({weights[0]}, {weights[1]})")
        else:
            print("no weight system in these coordinates")
        print(f"tail map rank: {tail.rank}")
    return EXIT_OK


def _cmd_corpus(args) -> int:
    text, ok = run_corpus(_options(args))
    print(text)
    return EXIT_OK if ok else EXIT_CHECK_FAILURE


def main(argv: Optional[List[str]] = None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    handlers = {
        "analyze": _cmd_analyze,
        "sing": _cmd_sing,
        "corpus": _cmd_corpus,
    }
    try:
        return handlers[args.command](args)
    except (TruncationCapExceeded, NonIsolated, NotMPrimary) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_TRUNCATION_CAP
    except (ParseError, SchemaError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR
    except CurveInvError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CHECK_FAILURE
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT_ERROR


if __name__ == "__main__":
    sys.exit(main())
