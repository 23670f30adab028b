"""Canonical text formats for graphs and reduction traces.

Graph file::

    # hexgrid n=1 m=1 x=0      (optional metadata comment)
    graph 6
    0 1 1
    0 8 -3/2

Trace file: one record per step, ``<index> <kind> <actors> <coefficient>
<factor> <accumulated>``, with ``-`` for a missing coefficient and actors
joined by commas, followed by ``det <value>``.
"""

from __future__ import annotations

import re
from fractions import Fraction

from . import graph_core as gc
from .reductions import STEP_KINDS, ReductionTrace

_INT = r"[+-]?\d+"
_RATIONAL = re.compile(rf"^({_INT})(?:/(\d+))?$")
_HEXGRID = re.compile(r"^#\s*hexgrid\s+n=(\d+)\s+m=(\d+)\s+x=(\d+)\s*$")


class ParseError(ValueError):
    def __init__(self, message: str, line: int):
        super().__init__(f"line {line}: {message}")
        self.line = line


def format_rational(value) -> str:
    value = Fraction(value)
    if value.denominator == 1:
        return str(value.numerator)
    return f"{value.numerator}/{value.denominator}"


def parse_rational(token: str) -> Fraction:
    match = _RATIONAL.match(token)
    if not match:
        raise ValueError(f"malformed rational {token!r}")
    num, den = match.groups()
    if den is not None and int(den) == 0:
        raise ValueError(f"zero denominator in {token!r}")
    return Fraction(int(num), int(den) if den else 1)


def parse_graph_document(text: str) -> tuple[gc.WeightedGraph, dict]:
    """Parse a graph file; also return any recognised metadata comment."""
    metadata: dict = {}
    n = None
    weights: dict[tuple[int, int], Fraction] = {}
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line:
            continue
        if line.startswith("#"):
            match = _HEXGRID.match(line)
            if match:
                metadata["hexgrid"] = tuple(int(t) for t in match.groups())
            continue
        fields = line.split()
        if n is None:
            if len(fields) != 2 or fields[0] != "graph" or not fields[1].isdigit():
                raise ParseError(f"expected header 'graph <vertex count>', got {line!r}", lineno)
            n = int(fields[1])
            continue
        if len(fields) != 3:
            raise ParseError(f"expected '<a> <b> <weight>', got {line!r}", lineno)
        try:
            a, b = int(fields[0]), int(fields[1])
        except ValueError:
            raise ParseError(f"bad vertex index in {line!r}", lineno) from None
        if not (0 <= a < n and 0 <= b < n):
            raise ParseError(f"vertex index out of range 0..{n - 1}", lineno)
        if a == b:
            raise ParseError(f"self-loop at vertex {a}", lineno)
        try:
            w = parse_rational(fields[2])
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
        if w == 0:
            raise ParseError("zero weight", lineno)
        key = gc.pair(a, b)
        if key in weights:
            raise ParseError(f"duplicate edge {key[0]} {key[1]}", lineno)
        weights[key] = w
    if n is None:
        raise ParseError("missing 'graph <vertex count>' header", max(len(text.splitlines()), 1))
    return gc.WeightedGraph(n, weights), metadata


def parse_graph(text: str) -> gc.WeightedGraph:
    return parse_graph_document(text)[0]


def serialize_graph(g: gc.WeightedGraph, hexgrid: tuple | None = None) -> str:
    lines = []
    if hexgrid is not None:
        n, m, x = hexgrid
        lines.append(f"# hexgrid n={n} m={m} x={x}")
    lines.append(f"graph {g.vertex_count}")
    for a, b, w in sorted(g.edges()):
        lines.append(f"{a} {b} {format_rational(w)}")
    return "\n".join(lines) + "\n"


def serialize_trace(t: ReductionTrace) -> str:
    lines = []
    spec = t.metadata.get("spec")
    if spec is not None:
        lines.append(f"# hexgrid n={spec.n} m={spec.m} x={spec.x}")
    for idx, step in enumerate(t.steps):
        actors = step.labels if step.labels is not None else tuple(str(a) for a in step.actors)
        coef = "-" if step.coefficient is None else format_rational(step.coefficient)
        acc = step.accumulated if step.accumulated is not None else t.accumulated
        lines.append(
            f"{idx} {step.kind} {','.join(actors) or '-'} {coef} "
            f"{format_rational(step.factor)} {format_rational(acc)}"
        )
    result = t.result if t.result is not None else t.accumulated
    lines.append(f"det {format_rational(result)}")
    return "\n".join(lines) + "\n"


def parse_trace(text: str) -> tuple[list[dict], Fraction]:
    """Read back a serialized trace as plain records plus the final determinant."""
    records = []
    det = None
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.strip()
        if not line or line.startswith("#"):
            continue
        fields = line.split()
        try:
            if fields[0] == "det" and len(fields) == 2:
                det = parse_rational(fields[1])
                continue
            idx, kind, actors, coef, factor, acc = fields
            if kind not in STEP_KINDS:
                raise ValueError(f"unknown step kind {kind!r}")
            records.append({
                "index": int(idx),
                "kind": kind,
                "actors": [] if actors == "-" else actors.split(","),
                "coefficient": None if coef == "-" else parse_rational(coef),
                "factor": parse_rational(factor),
                "accumulated": parse_rational(acc),
            })
        except ValueError as exc:
            raise ParseError(str(exc), lineno) from None
    if det is None:
        raise ParseError("missing final 'det' line", max(len(text.splitlines()), 1))
    return records, det
