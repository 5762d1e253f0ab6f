"""Command-line surface.

Commands: ``rc``, ``check-coloring``, ``verify {diam2|diam3|formulas}``,
``enumerate``. Exit codes: 0 pass, 1 semantic fail, 2 parse error, 3 invalid
input graph, 4 cap exceeded. All output is deterministic for fixed flags;
``--jobs`` never changes what gets printed or written, and wall-clock timing
goes to stderr only.
"""

from __future__ import annotations

import argparse
import sys
from pathlib import Path

from .enumeration import EnumerationStream
from .formats import (
    EDGELIST,
    FORMATS,
    GRAPH6,
    ParseError,
    parse_coloring,
    parse_graph,
    render_graph6,
)
from .graphs import GraphError
from .rainbow import check_coloring, rc_exact
from .verify import THEOREMS, render_report, run_verify

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_PARSE = 2
EXIT_BAD_GRAPH = 3
EXIT_CAP = 4


def _read(path: str) -> str:
    try:
        return Path(path).read_text(encoding="ascii")
    except OSError as exc:
        raise ParseError(1, 1, f"cannot read {path}: {exc.strerror}") from exc
    except UnicodeDecodeError as exc:
        raise ParseError(1, 1, f"{path} is not ASCII text") from exc


def cmd_rc(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.input), args.format)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    try:
        result = rc_exact(g)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    print(f"rc = {result.rc}")
    for (u, v), c in zip(result.witness.edges, result.witness.colors):
        print(f"{u} {v} {c}")
    return EXIT_OK


def cmd_check_coloring(args: argparse.Namespace) -> int:
    try:
        g = parse_graph(_read(args.graph), args.format)
        coloring = parse_coloring(_read(args.coloring), g)
    except ParseError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_PARSE
    ok, failing = check_coloring(g, coloring)
    if ok:
        print("pass")
        return EXIT_OK
    print("fail")
    for u, v in failing:
        print(f"{u} {v}")
    return EXIT_FAIL


def cmd_verify(args: argparse.Namespace) -> int:
    try:
        report = run_verify(args.theorem, args.max_n, args.jobs)
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_CAP
    text = render_report(report)
    sys.stdout.write(text)
    if args.report:
        Path(args.report).write_text(text, encoding="ascii")
    print(f"elapsed: {report.timing:.3f}s", file=sys.stderr)
    return EXIT_OK if report.verdict else EXIT_FAIL


def cmd_enumerate(args: argparse.Namespace) -> int:
    stream = EnumerationStream(
        order=args.n, graph_class=args.graph_class, diameter=args.diameter
    )
    if args.n > stream.max_order():
        print(
            f"error: class {args.graph_class!r} is capped at "
            f"n <= {stream.max_order()}",
            file=sys.stderr,
        )
        return EXIT_CAP
    try:
        for g in stream:
            if args.format == GRAPH6:
                print(render_graph6(g))
            else:
                flat = " ".join(f"{u} {v}" for u, v in g.edges)
                print(f"{g.n} {g.m} {flat}".rstrip())
    except GraphError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_GRAPH
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="rainbowconn",
        description=(
            "Exact rainbow-connection toolkit: solve rc, check colorings, "
            "enumerate bridgeless outerplanar graphs, verify classifications."
        ),
    )
    sub = parser.add_subparsers(dest="command", required=True)

    p_rc = sub.add_parser("rc", help="compute rc and a witness coloring")
    p_rc.add_argument("input", help="graph file")
    p_rc.add_argument("--format", choices=FORMATS, default=EDGELIST)
    p_rc.set_defaults(func=cmd_rc)

    p_cc = sub.add_parser(
        "check-coloring", help="verify that a coloring rainbow-connects a graph"
    )
    p_cc.add_argument("graph", help="graph file")
    p_cc.add_argument("coloring", help="coloring file, lines 'u v c'")
    p_cc.add_argument("--format", choices=FORMATS, default=EDGELIST)
    p_cc.set_defaults(func=cmd_check_coloring)

    p_v = sub.add_parser("verify", help="machine-check a classification claim")
    p_v.add_argument("theorem", choices=THEOREMS)
    p_v.add_argument("--max-n", type=int, required=True, dest="max_n")
    p_v.add_argument("--jobs", type=int, default=1)
    p_v.add_argument("--report", help="also write the report to this path")
    p_v.set_defaults(func=cmd_verify)

    p_e = sub.add_parser("enumerate", help="stream a graph class to stdout")
    p_e.add_argument(
        "--class",
        dest="graph_class",
        choices=("all", "outerplanar", "bridgeless-outerplanar", "mop"),
        default="bridgeless-outerplanar",
    )
    p_e.add_argument("--n", type=int, required=True)
    p_e.add_argument("--diameter", type=int, default=None)
    p_e.add_argument("--format", choices=FORMATS, default=EDGELIST)
    p_e.set_defaults(func=cmd_enumerate)
    return parser


def main(argv: list[str] | None = None) -> int:
    args = build_parser().parse_args(argv)
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
