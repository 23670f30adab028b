"""Determinant-preserving graph rewrites and closed forms for paths and cycles.

Every rewrite can log a :class:`ReductionStep` into a :class:`ReductionTrace`
so that a whole reduction can be replayed and audited.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Callable

from .graph_core import (
    WeightedGraph,
    as_rational,
    connected_components,
    pair,
    remove_vertices,
)

STEP_KINDS = (
    "combine",
    "isolate",
    "detach_p2",
    "closed_form_path",
    "closed_form_cycle",
    "component_split",
)


class ReductionError(ValueError):
    pass


class AdjacentVertices(ReductionError):
    pass


class ZeroCoefficient(ReductionError):
    pass


class SameVertex(ReductionError):
    pass


class NotPendant(ReductionError):
    pass


class CycleTooShort(ReductionError):
    pass


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    actors: tuple
    coefficient: Fraction | None = None
    factor: Fraction = Fraction(1)
    labels: tuple | None = None
    accumulated: Fraction | None = None

    def __post_init__(self):
        if self.kind not in STEP_KINDS:
            raise ValueError(f"unknown step kind {self.kind!r}")


@dataclass
class ReductionTrace:
    """Ordered log of reduction steps.

    ``accumulated`` is the product of every step factor so far.  With
    ``keep_graphs`` set, ``graphs[i]`` is the working graph right after
    ``steps[i]``; the detached parts live only in ``accumulated``.
    """

    steps: list = field(default_factory=list)
    accumulated: Fraction = Fraction(1)
    result: Fraction | None = None
    keep_graphs: bool = False
    graphs: list = field(default_factory=list)
    metadata: dict = field(default_factory=dict)

    def record(self, kind, actors, *, coefficient=None, factor=1, labels=None, graph=None):
        factor = as_rational(factor)
        self.accumulated *= factor
        step = ReductionStep(
            kind,
            tuple(actors),
            None if coefficient is None else as_rational(coefficient),
            factor,
            None if labels is None else tuple(labels),
            self.accumulated,
        )
        self.steps.append(step)
        if self.keep_graphs:
            self.graphs.append(graph)
        return step

    def count(self, kind: str) -> int:
        return sum(1 for s in self.steps if s.kind == kind)


@dataclass(frozen=True)
class EdgeBipartition:
    e1: tuple
    e2: tuple


def vertex_combine(g: WeightedGraph, v: int, u: int, c) -> WeightedGraph:
    """Add ``c`` times u's row and column to v's.

    Requires ``v`` and ``u`` distinct and non-adjacent, and ``c`` nonzero;
    under those conditions the determinant is unchanged.
    """
    c = as_rational(c)
    if v == u:
        raise SameVertex(f"cannot combine vertex {v} with itself")
    if c == 0:
        raise ZeroCoefficient("combine coefficient must be nonzero")
    if g.weight(v, u) != 0:
        raise AdjacentVertices(f"vertices {v} and {u} are adjacent")
    weights = dict(g.weights)
    for b, w_ub in g.row(u).items():
        key = pair(v, b)
        new = weights.get(key, Fraction(0)) + c * w_ub
        if new == 0:
            weights.pop(key, None)
        else:
            weights[key] = new
    return WeightedGraph(g.vertex_count, weights)


def _pendant_neighbor(g: WeightedGraph, v: int) -> int:
    row = g.row(v)
    if len(row) != 1:
        raise NotPendant(f"vertex {v} has degree {len(row)}, expected 1")
    return next(iter(row))


def pendant_isolate(g: WeightedGraph, v: int) -> WeightedGraph:
    """Drop every edge at v's neighbour except the one back to ``v``."""
    u = _pendant_neighbor(g, v)
    weights = {
        key: w for key, w in g.weights.items() if u not in key or v in key
    }
    return WeightedGraph(g.vertex_count, weights)


def pendant_reduce(g: WeightedGraph, v: int) -> tuple[Fraction, WeightedGraph]:
    """Split off the pendant edge at ``v``: det(g) = factor * det(rest)."""
    u = _pendant_neighbor(g, v)
    factor = -g.weight(v, u) ** 2
    rest, _ = remove_vertices(g, (v, u))
    return factor, rest


def component_split_det(g: WeightedGraph, det_fn: Callable[[WeightedGraph], Fraction]) -> Fraction:
    value = Fraction(1)
    for comp in connected_components(g):
        others = set(range(g.vertex_count)) - set(comp)
        sub, _ = remove_vertices(g, others)
        value *= as_rational(det_fn(sub))
        if value == 0:
            break
    return value


def path_bipartition(n: int) -> EdgeBipartition:
    """Split the edge positions of P_n (0-based) into the first, third, ... and the rest."""
    positions = range(max(n - 1, 0))
    return EdgeBipartition(
        tuple(i for i in positions if i % 2 == 0),
        tuple(i for i in positions if i % 2 == 1),
    )


def cycle_bipartition(n: int) -> EdgeBipartition:
    """Edge positions of C_n: ``e1`` holds v1v2, v3v4, ...; the closing edge is never in ``e1``."""
    e1 = tuple(i for i in range(n) if i % 2 == 0 and i <= n - 2)
    return EdgeBipartition(e1, tuple(i for i in range(n) if i not in e1))


def _product(values) -> Fraction:
    out = Fraction(1)
    for v in values:
        out *= v
    return out


def path_det(weights) -> Fraction:
    """Determinant of the weighted path whose edges, in order, carry ``weights``."""
    weights = [as_rational(w) for w in weights]
    n = len(weights) + 1
    if n % 2:
        return Fraction(0)
    part = path_bipartition(n)
    return (-1) ** (n // 2) * _product(weights[i] ** 2 for i in part.e1)


def cycle_det(weights) -> Fraction:
    """Determinant of the weighted cycle whose edges, in cyclic order, carry ``weights``."""
    weights = [as_rational(w) for w in weights]
    n = len(weights)
    if n < 3:
        raise CycleTooShort(f"a cycle needs at least 3 edges, got {n}")
    if n % 2:
        return 2 * _product(weights)
    part = cycle_bipartition(n)
    p1 = _product(weights[i] for i in part.e1)
    p2 = _product(weights[i] for i in part.e2)
    if n % 4:
        return -((p1 + p2) ** 2)
    return (p1 - p2) ** 2
