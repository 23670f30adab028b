"""Command-line entry point: ``hexdet <generate|det|formula|trace|verify>``.

Exit codes: 0 success, 1 verification failure, 2 parse or flag error,
3 enumeration cap exceeded without ``--force``.
"""

from __future__ import annotations

import argparse
import sys
from concurrent.futures import ProcessPoolExecutor

from . import graphio
from .det_oracles import TooLargeForEnumeration, enum_cap, graph_det, sachs_det
from .graph_core import GraphError
from .hexgrid import GridSpec, InvalidSpec, build_grid, closed_form, reduce_det

EXIT_OK = 0
EXIT_FAIL = 1
EXIT_USAGE = 2
EXIT_CAP = 3

METHODS = ("bareiss", "sachs", "reduce")


class UsageError(Exception):
    pass


def _grid_arg(text: str) -> GridSpec:
    try:
        parts = [int(p) for p in text.split(",")]
        if len(parts) not in (2, 3):
            raise ValueError
        return GridSpec(*parts)
    except (ValueError, InvalidSpec):
        raise argparse.ArgumentTypeError(f"expected N,M[,X] with N,M >= 1 and X >= 0, got {text!r}")


def _spec_from(args) -> GridSpec:
    try:
        return GridSpec(args.n, args.m, args.x)
    except InvalidSpec as exc:
        raise UsageError(str(exc)) from None


def _write(text: str, path: str | None) -> None:
    if path is None or path == "-":
        sys.stdout.write(text)
    else:
        with open(path, "w", encoding="utf-8", newline="\n") as fh:
            fh.write(text)


def _cap(args) -> int:
    if args.force:
        return -1
    return enum_cap() if args.cap is None else args.cap


def cmd_generate(args) -> int:
    spec = _spec_from(args)
    g, _ = build_grid(spec)
    _write(graphio.serialize_graph(g, hexgrid=(spec.n, spec.m, spec.x)), args.output)
    return EXIT_OK


def _read_graph(path: str):
    try:
        if path == "-":
            text = sys.stdin.read()
        else:
            with open(path, encoding="utf-8") as fh:
                text = fh.read()
    except OSError as exc:
        raise UsageError(f"cannot read {path}: {exc.strerror}") from None
    return graphio.parse_graph_document(text)


def cmd_det(args) -> int:
    if (args.file is None) == (args.grid is None):
        raise UsageError("det needs exactly one of FILE or --grid")
    if args.grid is not None:
        spec = args.grid
        g = build_grid(spec)[0] if args.method != "reduce" else None
    else:
        g, meta = _read_graph(args.file)
        spec = None
        if "hexgrid" in meta:
            try:
                spec = GridSpec(*meta["hexgrid"])
            except InvalidSpec as exc:
                raise UsageError(f"bad hexgrid metadata: {exc}") from None
    if args.method == "reduce":
        if spec is None:
            raise UsageError("--method reduce needs --grid or a file with '# hexgrid' metadata")
        if g is not None and build_grid(spec)[0] != g:
            raise UsageError(f"file does not match its hexgrid metadata n={spec.n} m={spec.m} x={spec.x}")
        value = reduce_det(spec)[0]
    elif args.method == "sachs":
        value = sachs_det(g, cap=_cap(args))
    else:
        value = graph_det(g)
    print(graphio.format_rational(value))
    return EXIT_OK


def cmd_formula(args) -> int:
    print(graphio.format_rational(closed_form(_spec_from(args))))
    return EXIT_OK


def cmd_trace(args) -> int:
    _, trace = reduce_det(_spec_from(args))
    _write(graphio.serialize_trace(trace), args.output)
    return EXIT_OK


def verify_one(spec: GridSpec, cap: int) -> tuple[str, bool]:
    expected = closed_form(spec)
    g, _ = build_grid(spec)
    values = {"bareiss": graph_det(g)}
    try:
        values["sachs"] = sachs_det(g, cap=cap)
    except TooLargeForEnumeration:
        values["sachs"] = None
    values["reduce"] = reduce_det(spec)[0]
    ok = all(v == expected for v in values.values() if v is not None)
    shown = " ".join(
        f"{k}={'skipped' if v is None else graphio.format_rational(v)}" for k, v in values.items()
    )
    line = (
        f"n={spec.n} m={spec.m} x={spec.x} formula={graphio.format_rational(expected)} "
        f"{shown} {'OK' if ok else 'FAIL'}"
    )
    return line, ok


def _verify_star(item):
    return verify_one(*item)


def cmd_verify(args) -> int:
    if args.max_n < 1 or args.max_m < 1 or args.max_x < 0:
        raise UsageError("--max-n and --max-m must be >= 1, --max-x >= 0")
    cap = _cap(args)
    work = [
        (GridSpec(n, m, x), cap)
        for n in range(1, args.max_n + 1)
        for m in range(1, args.max_m + 1)
        for x in range(args.max_x + 1)
    ]
    if args.jobs > 1:
        with ProcessPoolExecutor(max_workers=args.jobs) as pool:
            results = list(pool.map(_verify_star, work))
    else:
        results = [verify_one(*item) for item in work]
    failed = 0
    for line, ok in results:
        print(line)
        failed += not ok
    if failed:
        print(f"{failed} of {len(results)} grids FAILED", file=sys.stderr)
        return EXIT_FAIL
    return EXIT_OK


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="hexdet",
        description="Exact determinants of weighted graphs and hexagonal grids.",
    )
    sub = parser.add_subparsers(dest="command", required=True)

    def grid_flags(p):
        p.add_argument("--n", type=int, required=True)
        p.add_argument("--m", type=int, required=True)
        p.add_argument("--x", type=int, default=0)

    def cap_flags(p):
        p.add_argument("--cap", type=int, default=None,
                       help="enumeration vertex cap (default 24 or $HEXDET_ENUM_CAP)")
        p.add_argument("--force", action="store_true", help="ignore the enumeration cap")

    p = sub.add_parser("generate", help="write the canonical graph file of a grid")
    grid_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_generate)

    p = sub.add_parser("det", help="determinant of a graph file or a grid")
    p.add_argument("file", nargs="?", help="graph file, '-' for stdin")
    p.add_argument("--grid", type=_grid_arg, metavar="N,M[,X]")
    p.add_argument("--method", choices=METHODS, default="bareiss")
    cap_flags(p)
    p.set_defaults(func=cmd_det)

    p = sub.add_parser("formula", help="closed-form grid determinant")
    grid_flags(p)
    p.set_defaults(func=cmd_formula)

    p = sub.add_parser("trace", help="serialized row-peel reduction trace")
    grid_flags(p)
    p.add_argument("-o", "--output")
    p.set_defaults(func=cmd_trace)

    p = sub.add_parser("verify", help="compare all methods with the formula over a range of grids")
    p.add_argument("--max-n", type=int, required=True)
    p.add_argument("--max-m", type=int, required=True)
    p.add_argument("--max-x", type=int, default=0)
    p.add_argument("--jobs", type=int, default=1)
    cap_flags(p)
    p.set_defaults(func=cmd_verify)
    return parser


def main(argv=None) -> int:
    parser = build_parser()
    try:
        args = parser.parse_args(argv)
    except SystemExit as exc:
        return EXIT_USAGE if exc.code else EXIT_OK
    try:
        return args.func(args)
    except (UsageError, graphio.ParseError, GraphError, InvalidSpec) as exc:
        print(f"hexdet: error: {exc}", file=sys.stderr)
        return EXIT_USAGE
    except TooLargeForEnumeration as exc:
        print(f"hexdet: error: {exc} (use --force or --cap)", file=sys.stderr)
        return EXIT_CAP


if __name__ == "__main__":
    sys.exit(main())
