"""Bundled reference instances: complexes, graphs, and matroids."""

from __future__ import annotations

import random
import re
from itertools import combinations

from .complexes import WeightedComplex, from_top_faces
from .errors import BadParams
from .matroids import GraphicMatroid, Matroid, UniformMatroid

RANDOM_PURE_RETRIES = 50


def complete_complex(n: int, d: int) -> WeightedComplex:
    """All (d+1)-subsets of n vertices as tops, uniform."""
    if not 0 <= d < n:
        raise BadParams(f"need 0 <= d < n, got d={d}, n={n}")
    return from_top_faces(list(combinations(range(n), d + 1)))


def simplex(n: int) -> WeightedComplex:
    """The full n-simplex (a single top on n+1 vertices)."""
    if n < 0:
        raise BadParams("simplex dimension must be >= 0")
    return from_top_faces([tuple(range(n + 1))])


def simplex_boundary(n: int) -> WeightedComplex:
    """Boundary of the n-simplex: all n-subsets of n+1 vertices."""
    if n < 1:
        raise BadParams("boundary needs n >= 1")
    return from_top_faces(list(combinations(range(n + 1), n)))


def torus7() -> WeightedComplex:
    """The 7-vertex, 21-edge, 14-triangle triangulated torus."""
    tops = []
    for i in range(7):
        tops.append(tuple(sorted((i, (i + 1) % 7, (i + 3) % 7))))
        tops.append(tuple(sorted((i, (i + 2) % 7, (i + 3) % 7))))
    return from_top_faces(tops)


def complete_multipartite(parts: list[int]) -> WeightedComplex:
    """1-dimensional complex: all edges between distinct groups, uniform."""
    if len(parts) < 2 or any(p < 1 for p in parts):
        raise BadParams("need at least two positive part sizes")
    groups = []
    start = 0
    for p in parts:
        groups.append(range(start, start + p))
        start += p
    edges = [
        (u, v)
        for i, g in enumerate(groups)
        for h in groups[i + 1 :]
        for u in g
        for v in h
    ]
    return from_top_faces(edges)


def random_pure(n: int, d: int, p: float, seed: int) -> WeightedComplex:
    """Each (d+1)-subset of n vertices kept with probability p; retried
    until nonempty (pure by construction)."""
    if not 0 <= d < n:
        raise BadParams(f"need 0 <= d < n, got d={d}, n={n}")
    if not 0 < p <= 1:
        raise BadParams("probability must be in (0, 1]")
    rng = random.Random(seed)
    for _ in range(RANDOM_PURE_RETRIES):
        tops = [c for c in combinations(range(n), d + 1) if rng.random() < p]
        if tops:
            return from_top_faces(tops)
    raise BadParams(f"no tops after {RANDOM_PURE_RETRIES} retries; raise p")


_NAMED_GRAPH = re.compile(r"^([KCP])(\d+)$")


def named_graph_edges(name: str) -> tuple[int, list[tuple[int, int]]]:
    """Edge list of a named graph: Kn complete, Cn cycle, Pn path, triangle."""
    if name == "triangle":
        name = "K3"
    m = _NAMED_GRAPH.match(name)
    if not m:
        raise BadParams(f"unknown graph name {name!r} (use Kn, Cn, Pn, triangle)")
    fam, n = m.group(1), int(m.group(2))
    if fam == "K":
        if n < 2:
            raise BadParams("Kn needs n >= 2")
        return n, list(combinations(range(n), 2))
    if fam == "C":
        if n < 3:
            raise BadParams("Cn needs n >= 3")
        return n, [(i, (i + 1) % n) for i in range(n)]
    if n < 2:
        raise BadParams("Pn needs n >= 2")
    return n, [(i, i + 1) for i in range(n - 1)]


def graphic_matroid(name: str) -> GraphicMatroid:
    n, edges = named_graph_edges(name)
    return GraphicMatroid(n, edges)


def uniform_matroid(n: int, r: int) -> Matroid:
    return UniformMatroid(n, r)
