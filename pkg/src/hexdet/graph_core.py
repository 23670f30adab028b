"""Immutable weighted undirected graphs with exact rational weights.

An edge exists iff its weight is nonzero; every mutator returns a new graph
and drops pairs whose weight becomes zero.
"""

from __future__ import annotations

from fractions import Fraction
from types import MappingProxyType
from typing import Iterable, Mapping

Rational = Fraction


class GraphError(ValueError):
    pass


class DuplicateEdge(GraphError):
    pass


class SelfLoop(GraphError):
    pass


class ZeroWeightEdge(GraphError):
    pass


class IndexOutOfRange(GraphError, IndexError):
    pass


def as_rational(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, float):
        raise TypeError("floating-point weights are not allowed")
    return Fraction(value)


def pair(a: int, b: int) -> tuple[int, int]:
    return (a, b) if a < b else (b, a)


class WeightedGraph:
    """Vertices ``0..vertex_count-1`` and a symmetric map of nonzero weights.

    Keys of ``weights`` are ordered pairs ``(a, b)`` with ``a < b``.
    """

    __slots__ = ("_n", "_weights", "_adj")

    def __init__(self, vertex_count: int, weights: Mapping[tuple[int, int], Fraction] = ()):
        if vertex_count < 0:
            raise ValueError("vertex_count must be non-negative")
        clean: dict[tuple[int, int], Fraction] = {}
        adj: list[dict[int, Fraction]] = [{} for _ in range(vertex_count)]
        for (a, b), w in dict(weights).items():
            _check_index(a, vertex_count)
            _check_index(b, vertex_count)
            if a == b:
                raise SelfLoop(f"self-loop at vertex {a}")
            w = as_rational(w)
            if w == 0:
                continue
            key = pair(a, b)
            if key in clean:
                raise DuplicateEdge(f"duplicate edge {key}")
            clean[key] = w
            adj[a][b] = w
            adj[b][a] = w
        self._n = vertex_count
        self._weights = MappingProxyType(dict(sorted(clean.items())))
        self._adj = tuple(MappingProxyType(d) for d in adj)

    @property
    def vertex_count(self) -> int:
        return self._n

    @property
    def weights(self) -> Mapping[tuple[int, int], Fraction]:
        return self._weights

    @property
    def edge_count(self) -> int:
        return len(self._weights)

    def weight(self, a: int, b: int) -> Fraction:
        _check_index(a, self._n)
        _check_index(b, self._n)
        return self._adj[a].get(b, Fraction(0))

    def row(self, v: int) -> Mapping[int, Fraction]:
        """Nonzero weights at ``v`` keyed by neighbour."""
        _check_index(v, self._n)
        return self._adj[v]

    def degree(self, v: int) -> int:
        return len(self.row(v))

    def edges(self) -> Iterable[tuple[int, int, Fraction]]:
        for (a, b), w in self._weights.items():
            yield a, b, w

    def __eq__(self, other):
        if not isinstance(other, WeightedGraph):
            return NotImplemented
        return self._n == other._n and dict(self._weights) == dict(other._weights)

    def __hash__(self):
        return hash((self._n, frozenset(self._weights.items())))

    def __repr__(self):
        return f"WeightedGraph({self._n}, {dict(self._weights)!r})"


def _check_index(v: int, n: int) -> None:
    if not isinstance(v, int) or not 0 <= v < n:
        raise IndexOutOfRange(f"vertex {v!r} out of range for {n} vertices")


def graph_new(vertex_count: int, edges: Iterable[tuple[int, int, object]] = ()) -> WeightedGraph:
    """Build a graph from ``(a, b, w)`` triples.

    Unlike the raw constructor this rejects zero weights and duplicate
    unordered pairs instead of silently normalising them.
    """
    weights: dict[tuple[int, int], Fraction] = {}
    for a, b, w in edges:
        _check_index(a, vertex_count)
        _check_index(b, vertex_count)
        if a == b:
            raise SelfLoop(f"self-loop at vertex {a}")
        w = as_rational(w)
        if w == 0:
            raise ZeroWeightEdge(f"edge {pair(a, b)} has zero weight")
        key = pair(a, b)
        if key in weights:
            raise DuplicateEdge(f"duplicate edge {key}")
        weights[key] = w
    return WeightedGraph(vertex_count, weights)


def set_edge_weight(g: WeightedGraph, a: int, b: int, w) -> WeightedGraph:
    if a == b:
        raise SelfLoop(f"self-loop at vertex {a}")
    _check_index(a, g.vertex_count)
    _check_index(b, g.vertex_count)
    weights = dict(g.weights)
    w = as_rational(w)
    if w == 0:
        weights.pop(pair(a, b), None)
    else:
        weights[pair(a, b)] = w
    return WeightedGraph(g.vertex_count, weights)


def neighbors(g: WeightedGraph, v: int) -> set[int]:
    return set(g.row(v))


def connected_components(g: WeightedGraph) -> list[list[int]]:
    """Components as sorted vertex lists, ordered by their smallest vertex."""
    seen = [False] * g.vertex_count
    components = []
    for start in range(g.vertex_count):
        if seen[start]:
            continue
        seen[start] = True
        stack = [start]
        comp = []
        while stack:
            v = stack.pop()
            comp.append(v)
            for u in g.row(v):
                if not seen[u]:
                    seen[u] = True
                    stack.append(u)
        components.append(sorted(comp))
    return components


def adjacency_matrix(g: WeightedGraph) -> list[list[Fraction]]:
    n = g.vertex_count
    matrix = [[Fraction(0)] * n for _ in range(n)]
    for a, b, w in g.edges():
        matrix[a][b] = w
        matrix[b][a] = w
    return matrix


def remove_vertices(g: WeightedGraph, s: Iterable[int]) -> tuple[WeightedGraph, dict[int, int]]:
    """Delete ``s`` and reindex survivors by ascending old index.

    Returns the new graph and the old -> new index map of the survivors.
    """
    removed = set(s)
    for v in removed:
        _check_index(v, g.vertex_count)
    mapping = {}
    for v in range(g.vertex_count):
        if v not in removed:
            mapping[v] = len(mapping)
    weights = {
        (mapping[a], mapping[b]): w
        for a, b, w in g.edges()
        if a in mapping and b in mapping
    }
    return WeightedGraph(len(mapping), weights), mapping


def disjoint_union(g: WeightedGraph, h: WeightedGraph) -> WeightedGraph:
    """``g`` followed by ``h`` with h's vertices shifted by ``g.vertex_count``."""
    shift = g.vertex_count
    weights = dict(g.weights)
    for a, b, w in h.edges():
        weights[(a + shift, b + shift)] = w
    return WeightedGraph(shift + h.vertex_count, weights)


def relabel(g: WeightedGraph, perm: list[int]) -> WeightedGraph:
    """Graph with vertex ``v`` renamed to ``perm[v]``."""
    if sorted(perm) != list(range(g.vertex_count)):
        raise ValueError("perm must be a permutation of the vertices")
    return WeightedGraph(g.vertex_count, {pair(perm[a], perm[b]): w for a, b, w in g.edges()})


def path_graph(weights: list) -> WeightedGraph:
    """Path ``0-1-...-n-1`` whose i-th edge carries ``weights[i]``."""
    return graph_new(len(weights) + 1, [(i, i + 1, w) for i, w in enumerate(weights)])


def cycle_graph(weights: list) -> WeightedGraph:
    """Cycle ``0-1-...-(n-1)-0``; the last weight closes the cycle."""
    n = len(weights)
    if n < 3:
        raise ValueError("a cycle needs at least 3 edges")
    return graph_new(n, [(i, (i + 1) % n, w) for i, w in enumerate(weights)])
