import itertools
import random
from fractions import Fraction

import pytest

from hexdet.graph_core import WeightedGraph


def leibniz_det(matrix):
    """Determinant straight from the permutation expansion; only for n <= 7."""
    n = len(matrix)
    total = Fraction(0)
    for perm in itertools.permutations(range(n)):
        inversions = sum(1 for i in range(n) for j in range(i + 1, n) if perm[i] > perm[j])
        term = Fraction(-1 if inversions % 2 else 1)
        for i in range(n):
            term *= matrix[i][perm[i]]
            if term == 0:
                break
        total += term
    return total


def random_rational(rng, num=(-3, 3), den=(1, 4), nonzero=True):
    while True:
        value = Fraction(rng.randint(*num), rng.randint(*den))
        if value or not nonzero:
            return value


def random_graph(rng, max_vertices=10, density=None, min_vertices=0):
    n = rng.randint(min_vertices, max_vertices)
    p = rng.uniform(0.2, 0.8) if density is None else density
    weights = {}
    for a in range(n):
        for b in range(a + 1, n):
            if rng.random() < p:
                weights[(a, b)] = random_rational(rng)
    return WeightedGraph(n, weights)


@pytest.fixture
def rng():
    return random.Random(20240611)
