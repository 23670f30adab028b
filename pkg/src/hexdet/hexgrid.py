"""Hexagonal grids H(n, m), their closed-form determinant, and the row-peel reduction.

Vertex ``(i, j)`` is position ``j`` on row ``i``.  Rows ``1..m`` are paths on
positions ``1..2n+2``; the last row ``m+1`` is a path on positions ``2..2n+1``.
Row ``i+1`` attaches to row ``i`` by ``(i+1, 2)-(i, 1)`` and by
``(i+1, 2k+1)-(i, 2k+2)`` for ``k = 1..n``.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction

from . import reductions as red
from .graph_core import WeightedGraph, graph_new

__all__ = [
    "GridSpec",
    "GridLabeling",
    "InvalidSpec",
    "ScheduleBroken",
    "build_grid",
    "binomial",
    "closed_form",
    "peel_first_row",
    "reduce_det",
    "weighted_path",
]


class InvalidSpec(ValueError):
    pass


class ScheduleBroken(RuntimeError):
    pass


@dataclass(frozen=True)
class GridSpec:
    n: int
    m: int
    x: int = 0

    def __post_init__(self):
        for name in ("n", "m", "x"):
            value = getattr(self, name)
            if not isinstance(value, int) or isinstance(value, bool):
                raise InvalidSpec(f"{name} must be an integer, got {value!r}")
        if self.n < 1 or self.m < 1 or self.x < 0:
            raise InvalidSpec(f"need n >= 1, m >= 1, x >= 0; got {self}")

    @property
    def vertex_count(self) -> int:
        return 2 * (self.n * self.m + self.n + self.m)

    @property
    def edge_count(self) -> int:
        return 3 * self.n * self.m + 2 * self.m + 2 * self.n - 1


class GridLabeling:
    """Bijection between vertex indices and grid positions ``(row, col)``.

    ``row_offset`` only affects the printed names: after k peels the residual
    grid is relabelled from row 1, but traces keep naming vertices by their
    row in the original grid.
    """

    def __init__(self, n: int, m: int, row_offset: int = 0):
        self.n = n
        self.m = m
        self.row_offset = row_offset
        self._labels = []
        for i in range(1, m + 2):
            cols = range(1, 2 * n + 3) if i <= m else range(2, 2 * n + 2)
            self._labels.extend((i, j) for j in cols)
        self._index = {lab: k for k, lab in enumerate(self._labels)}

    @classmethod
    def for_spec(cls, spec: GridSpec, row_offset: int = 0) -> "GridLabeling":
        return cls(spec.n, spec.m, row_offset)

    def __len__(self):
        return len(self._labels)

    def index(self, i: int, j: int) -> int:
        try:
            return self._index[(i, j)]
        except KeyError:
            raise KeyError(f"no vertex at row {i}, column {j}") from None

    def label(self, v: int) -> tuple[int, int]:
        return self._labels[v]

    def labels(self) -> list[tuple[int, int]]:
        return list(self._labels)

    def name(self, lab: tuple[int, int]) -> str:
        i, j = lab
        return f"r{i + self.row_offset}c{j}"


def build_grid(spec: GridSpec) -> tuple[WeightedGraph, GridLabeling]:
    if not isinstance(spec, GridSpec):
        raise InvalidSpec(f"expected a GridSpec, got {spec!r}")
    n, m, x = spec.n, spec.m, spec.x
    lab = GridLabeling.for_spec(spec)
    v = lab.index
    edges = []
    for i in range(1, m + 1):
        for j in range(1, 2 * n + 2):
            w = Fraction(x + j // 2, j // 2) if i == 1 and j % 2 == 0 else 1
            edges.append((v(i, j), v(i, j + 1), w))
    for j in range(2, 2 * n + 1):
        edges.append((v(m + 1, j), v(m + 1, j + 1), 1))
    for i in range(1, m + 1):
        edges.append((v(i + 1, 2), v(i, 1), 1))
        for k in range(1, n + 1):
            edges.append((v(i + 1, 2 * k + 1), v(i, 2 * k + 2), 1))
    return graph_new(spec.vertex_count, edges), lab


def weighted_path(n: int, x: int) -> WeightedGraph:
    """P_2n whose edges at odd positions i = 1..n carry (x + i) / i, the rest 1."""
    edges = []
    for p in range(2 * n - 1):
        i = p // 2 + 1
        w = Fraction(x + i, i) if p % 2 == 0 else 1
        edges.append((p, p + 1, w))
    return graph_new(2 * n, edges)


def binomial(a: int, b: int) -> int:
    if b > a:
        return 0
    return math.comb(a, b)


def closed_form(spec: GridSpec) -> Fraction:
    if not isinstance(spec, GridSpec):
        raise InvalidSpec(f"expected a GridSpec, got {spec!r}")
    n, m, x = spec.n, spec.m, spec.x
    sign = -1 if (n * m + n + m) % 2 else 1
    return Fraction(sign * binomial(x + n + m, n) ** 2)


class _Peeler:
    """Working state for one peel: the live graph plus label -> index map."""

    def __init__(self, g, labeling, trace):
        self.g = g
        self.labeling = labeling
        self.trace = trace
        self.where = {labeling.label(k): k for k in range(g.vertex_count)}

    def names(self, *labs):
        return tuple(self.labeling.name(lab) for lab in labs)

    def weight(self, a, b):
        return self.g.weight(self.where[a], self.where[b])

    def combine(self, target, source, c):
        try:
            self.g = red.vertex_combine(self.g, self.where[target], self.where[source], c)
        except red.ReductionError as exc:
            raise ScheduleBroken(str(exc)) from exc
        self.trace.record(
            "combine",
            (self.where[target], self.where[source]),
            coefficient=c,
            labels=self.names(target, source),
            graph=self.g,
        )

    def cancel(self, target, source, edge_end):
        """Combine ``source`` into ``target`` so that edge target-edge_end vanishes."""
        w_target = self.weight(target, edge_end)
        w_source = self.weight(source, edge_end)
        if w_target == 0 or w_source == 0:
            raise ScheduleBroken(
                f"cannot cancel {self.names(target, edge_end)} using {self.names(source)[0]}"
            )
        self.combine(target, source, -w_target / w_source)

    def isolate_and_detach(self, pendant):
        v = self.where[pendant]
        try:
            self.g = red.pendant_isolate(self.g, v)
        except red.NotPendant as exc:
            raise ScheduleBroken(str(exc)) from exc
        u = next(iter(self.g.row(v)))
        partner = next(lab for lab, k in self.where.items() if k == u)
        self.trace.record("isolate", (v, u), labels=self.names(pendant, partner), graph=self.g)
        factor, self.g = red.pendant_reduce(self.g, v)
        pair_labels = (pendant, partner) if v < u else (partner, pendant)
        self.trace.record(
            "detach_p2",
            (min(u, v), max(u, v)),
            factor=factor,
            labels=self.names(*pair_labels),
            graph=self.g,
        )
        del self.where[pendant], self.where[partner]
        for lab, k in self.where.items():
            self.where[lab] = k - (k > u) - (k > v)
        return factor


def peel_first_row(g: WeightedGraph, spec: GridSpec, labeling: GridLabeling, trace: red.ReductionTrace):
    """Detach row 1 of a weighted grid as n + 1 unit P_2 components.

    Returns ``(residual, reduced_spec, trace)``.  For ``m >= 2`` the residual is
    exactly ``build_grid(n, m - 1, x + 1)``; for ``m == 1`` it is
    ``weighted_path(n, x + 1)`` and ``reduced_spec`` is ``None``.  Combine
    coefficients are read off the live weights.
    """
    n, m = spec.n, spec.m
    if g.vertex_count != spec.vertex_count or len(labeling) != g.vertex_count:
        raise ScheduleBroken("graph does not have the shape of the given grid spec")
    p = _Peeler(g, labeling, trace)

    p.combine((2, 2), (1, 2), -1)
    p.isolate_and_detach((1, 1))
    for k in range(n):
        p.combine((2, 2 * k + 3), (1, 2 * k + 3), -1)
        if k < n - 1:
            p.cancel((1, 2 * k + 5), (1, 2 * k + 3), (1, 2 * k + 4))
            p.isolate_and_detach((1, 2 * k + 4))
            p.cancel((1, 2 * k + 5), (2, 2 * k + 3), (2, 2 * k + 2))
    p.isolate_and_detach((1, 2 * n + 2))

    if any(lab[0] == 1 for lab in p.where):
        raise ScheduleBroken("row 1 was not fully detached")
    reduced = GridSpec(n, m - 1, spec.x + 1) if m >= 2 else None
    return p.g, reduced, trace


def reduce_det(spec: GridSpec, keep_graphs: bool = False):
    """Determinant of ``build_grid(spec)`` by repeated row peeling.

    Returns ``(value, trace)``; never forms the adjacency matrix.
    """
    g, labeling = build_grid(spec)
    trace = red.ReductionTrace(keep_graphs=keep_graphs)
    trace.metadata["spec"] = spec
    if keep_graphs:
        trace.metadata["initial_graph"] = g
    current = spec
    offset = 0
    while current is not None:
        g, current, trace = peel_first_row(g, current, labeling, trace)
        offset += 1
        if current is not None:
            labeling = GridLabeling.for_spec(current, offset)

    weights = [g.weight(k, k + 1) for k in range(g.vertex_count - 1)]
    value = red.path_det(weights)
    trace.record(
        "closed_form_path",
        tuple(range(g.vertex_count)),
        factor=value,
        labels=tuple(f"r{spec.m + 1}c{j}" for j in range(2, 2 * spec.n + 2)),
        graph=WeightedGraph(0),
    )
    trace.result = trace.accumulated
    return trace.result, trace
