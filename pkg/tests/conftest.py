import random
from fractions import Fraction
from itertools import combinations

import pytest

from hdx.complexes import from_top_faces
from hdx.generators import torus7


@pytest.fixture(scope="session")
def full_2_simplex():
    return from_top_faces([("a", "b", "c")])


@pytest.fixture(scope="session")
def complete_42():
    return from_top_faces(list(combinations("abcd", 3)))


@pytest.fixture(scope="session")
def boundary_3_simplex():
    return from_top_faces(list(combinations(range(4), 3)))


@pytest.fixture(scope="session")
def torus():
    return torus7()


@pytest.fixture(scope="session")
def k3():
    return from_top_faces([("a", "b"), ("a", "c"), ("b", "c")])


def random_pure_complex(rng: random.Random, n_max=8, d_max=3, weighted=False):
    """Seeded random pure complex on up to n_max vertices."""
    n = rng.randint(3, n_max)
    d = rng.randint(1, min(d_max, n - 1))
    p = rng.uniform(0.3, 0.9)
    tops = [c for c in combinations(range(n), d + 1) if rng.random() < p]
    if not tops:
        tops = [tuple(rng.sample(range(n), d + 1))]
        tops = [tuple(sorted(tops[0]))]
    weights = None
    if weighted:
        raw = [rng.randint(1, 9) for _ in tops]
        total = sum(raw)
        weights = [Fraction(x, total) for x in raw]
    return from_top_faces(tops, weights)


def random_connected_weighted_graph(rng: random.Random, n_max=12):
    """Seeded random connected graph with random positive rational weights."""
    from hdx.spectral import WeightedGraph

    n = rng.randint(2, n_max)
    edges = set()
    order = list(range(n))
    rng.shuffle(order)
    for i in range(1, n):
        j = rng.randrange(i)
        edges.add(tuple(sorted((order[i], order[j]))))
    for u, v in combinations(range(n), 2):
        if rng.random() < 0.3:
            edges.add((u, v))
    edges = sorted(edges)
    raw = [rng.randint(1, 12) for _ in edges]
    total = sum(raw)
    return WeightedGraph.from_edges(
        edges, [Fraction(x, total) for x in raw], labels=list(range(n))
    )
