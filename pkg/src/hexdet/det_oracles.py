"""Exact determinants by basic-figure expansion and by Bareiss elimination."""

from __future__ import annotations

import math
import os
from dataclasses import dataclass
from fractions import Fraction

from .graph_core import WeightedGraph, adjacency_matrix, as_rational, pair

DEFAULT_ENUM_CAP = 24


class TooLargeForEnumeration(ValueError):
    pass


class NonSquareMatrix(ValueError):
    pass


def enum_cap() -> int:
    """Default vertex cap, overridable through ``HEXDET_ENUM_CAP``."""
    raw = os.environ.get("HEXDET_ENUM_CAP")
    if raw:
        return int(raw)
    return DEFAULT_ENUM_CAP


@dataclass(frozen=True)
class BasicFigure:
    """A spanning subgraph whose components are single edges or cycles.

    Cycles are stored with their lowest vertex first and the second vertex
    smaller than the last, which fixes both rotation and direction.
    """

    p2_edges: frozenset
    cycles: tuple

    @property
    def cycle_count(self) -> int:
        return len(self.cycles)

    @property
    def even_components(self) -> int:
        # sg: components with an even number of vertices
        return len(self.p2_edges) + sum(1 for c in self.cycles if len(c) % 2 == 0)

    def cycle_edges(self):
        for cyc in self.cycles:
            for i, a in enumerate(cyc):
                yield pair(a, cyc[(i + 1) % len(cyc)])

    def vertices(self) -> set[int]:
        out = set()
        for a, b in self.p2_edges:
            out.update((a, b))
        for cyc in self.cycles:
            out.update(cyc)
        return out

    def term(self, g: WeightedGraph) -> Fraction:
        value = Fraction((-1) ** self.even_components * 2 ** self.cycle_count)
        for a, b in self.p2_edges:
            value *= g.weight(a, b) ** 2
        for a, b in self.cycle_edges():
            value *= g.weight(a, b)
        return value


def _check_cap(g: WeightedGraph, cap: int | None) -> None:
    limit = enum_cap() if cap is None else cap
    if limit >= 0 and g.vertex_count > limit:
        raise TooLargeForEnumeration(
            f"{g.vertex_count} vertices exceeds the enumeration cap of {limit}"
        )


def enumerate_basic_figures(g: WeightedGraph, cap: int | None = None) -> list[BasicFigure]:
    """All sesquivalent spanning subgraphs of ``g`` in a deterministic order.

    Recurses on the lowest uncovered vertex ``v``: pair it with a free
    neighbour, or close a simple cycle through free vertices that starts at
    ``v``.  Every vertex below ``v`` is already covered, so ``v`` is the
    minimum of any cycle it starts, and requiring ``second < last`` keeps one
    orientation.  A negative ``cap`` disables the size check.
    """
    _check_cap(g, cap)
    n = g.vertex_count
    nbrs = [sorted(g.row(v)) for v in range(n)]
    free = [True] * n
    p2: list[tuple[int, int]] = []
    cycles: list[tuple[int, ...]] = []
    out: list[BasicFigure] = []

    def next_uncovered(start):
        for v in range(start, n):
            if free[v]:
                return v
        return n

    def recurse(start):
        v = next_uncovered(start)
        if v == n:
            out.append(BasicFigure(frozenset(p2), tuple(cycles)))
            return
        free[v] = False
        for u in nbrs[v]:
            if free[u]:
                free[u] = False
                p2.append((v, u))
                recurse(v + 1)
                p2.pop()
                free[u] = True
        path = [v]

        def grow(tip):
            for u in nbrs[tip]:
                if u == v and len(path) >= 3 and path[1] < path[-1]:
                    cycles.append(tuple(path))
                    recurse(v + 1)
                    cycles.pop()
                elif free[u]:
                    free[u] = False
                    path.append(u)
                    grow(u)
                    path.pop()
                    free[u] = True

        grow(v)
        free[v] = True

    recurse(0)
    return out


def sachs_det(g: WeightedGraph, cap: int | None = None) -> Fraction:
    total = Fraction(0)
    for fig in enumerate_basic_figures(g, cap):
        total += fig.term(g)
    return total


def bareiss_det(m) -> Fraction:
    """Exact determinant of a square matrix of rationals.

    Each row is scaled by the lcm of its denominators, the integer matrix is
    eliminated fraction-free, and the scaling is divided back out.
    """
    rows = [[as_rational(x) for x in row] for row in m]
    n = len(rows)
    if any(len(row) != n for row in rows):
        raise NonSquareMatrix(f"matrix is not square ({n} rows)")
    if n == 0:
        return Fraction(1)
    scale = 1
    a = []
    for row in rows:
        d = math.lcm(*(x.denominator for x in row))
        scale *= d
        a.append([x.numerator * (d // x.denominator) for x in row])

    sign = 1
    prev = 1
    for k in range(n - 1):
        if a[k][k] == 0:
            for i in range(k + 1, n):
                if a[i][k] != 0:
                    a[k], a[i] = a[i], a[k]
                    sign = -sign
                    break
            else:
                return Fraction(0)
        pivot = a[k][k]
        row_k = a[k]
        for i in range(k + 1, n):
            row_i = a[i]
            lead = row_i[k]
            for j in range(k + 1, n):
                row_i[j] = (pivot * row_i[j] - lead * row_k[j]) // prev
            row_i[k] = 0
        prev = pivot
    return Fraction(sign * a[n - 1][n - 1], scale)


def graph_det(g: WeightedGraph) -> Fraction:
    return bareiss_det(adjacency_matrix(g))
