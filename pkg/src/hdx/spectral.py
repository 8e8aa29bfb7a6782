"""Weighted graph spectra, Cheeger constants, and local spectral certification.

Eigenvalues come from a dense symmetric eigensolver applied to the conjugated
matrix S[u,v] = w({u,v}) / (2 sqrt(w(u) w(v))), which shares the spectrum of
the walk operator A[u,v] = w({u,v}) / (2 w(v)). Everything combinatorial
(connectivity, Cheeger minimization) is exact; floats appear only in spectra.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from math import gcd, sqrt
from typing import Sequence

import numpy as np

from . import kernels
from .complexes import Face, WeightedComplex, link
from .errors import (
    BadDistribution,
    DisconnectedLink,
    NotConnected,
    NumericalFailure,
    OutOfRange,
    ParseError,
    TooLarge,
)

DEFAULT_TOL = 1e-9
EIGEN_CAP = 4096
CUT_ENUM_CAP = 24


class WeightedGraph:
    """Graph with edge weights summing to 1 and the induced vertex weights."""

    def __init__(self, labels: Sequence, edge_weights: dict[Face, Fraction]):
        self.labels = tuple(labels)
        n = len(self.labels)
        self.edges: list[Face] = sorted(edge_weights)
        self.edge_weights = {e: Fraction(edge_weights[e]) for e in self.edges}
        if not self.edges:
            raise ParseError("graph has no edges")
        for u, v in self.edges:
            if not (0 <= u < v < n):
                raise ParseError(f"bad edge ({u}, {v})")
        if any(w <= 0 for w in self.edge_weights.values()):
            raise BadDistribution("edge weights must be positive")
        if sum(self.edge_weights.values()) != 1:
            raise BadDistribution("edge weights must sum to 1")
        self.vertex_weights = [Fraction(0)] * n
        for (u, v), w in self.edge_weights.items():
            self.vertex_weights[u] += w / 2
            self.vertex_weights[v] += w / 2
        if any(w == 0 for w in self.vertex_weights):
            raise ParseError("isolated vertex")

    @classmethod
    def from_edges(cls, edges, weights=None, labels=None) -> "WeightedGraph":
        raw = [tuple(e) for e in edges]
        if labels is None:
            seen = {v for e in raw for v in e}
            try:
                labels = sorted(seen)
            except TypeError:
                labels = sorted(seen, key=repr)
        index = {lab: i for i, lab in enumerate(labels)}
        canon = [tuple(sorted((index[u], index[v]))) for u, v in raw]
        if any(u == v for u, v in canon):
            raise ParseError("self loop")
        if weights is None:
            weights = [Fraction(1, len(canon))] * len(canon)
        acc: dict[Face, Fraction] = {}
        for e, w in zip(canon, weights):
            if e in acc:
                raise ParseError(f"duplicate edge {e}")
            acc[e] = Fraction(w)
        return cls(labels, acc)

    @property
    def n(self) -> int:
        return len(self.labels)

    def neighbors(self) -> list[list[tuple[int, Fraction]]]:
        adj: list[list[tuple[int, Fraction]]] = [[] for _ in self.labels]
        for (u, v), w in self.edge_weights.items():
            adj[u].append((v, w))
            adj[v].append((u, w))
        return adj

    def adjacency_rational(self) -> list[dict[int, Fraction]]:
        """Row-stochastic walk matrix A[v][u] = w({v,u}) / (2 w(v))."""
        rows: list[dict[int, Fraction]] = [{} for _ in self.labels]
        for (u, v), w in self.edge_weights.items():
            rows[u][v] = w / (2 * self.vertex_weights[u])
            rows[v][u] = w / (2 * self.vertex_weights[v])
        return rows

    def is_connected(self) -> bool:
        adj = self.neighbors()
        seen = {0}
        stack = [0]
        while stack:
            v = stack.pop()
            for u, _ in adj[v]:
                if u not in seen:
                    seen.add(u)
                    stack.append(u)
        return len(seen) == self.n


def graph_from_complex(X: WeightedComplex) -> WeightedGraph:
    """The 1-skeleton as a weighted graph (level-1 weights already sum to 1).

    Links keep their base complex's vertex indexing, so the graph compresses
    to the vertices actually present.
    """
    if X.d < 1:
        raise OutOfRange("complex has no edges")
    verts = [v for (v,) in X.level(0)]
    pos = {v: i for i, v in enumerate(verts)}
    labels = [X.labels[v] for v in verts]
    edges = {(pos[u], pos[v]): X.weights[(u, v)] for (u, v) in X.level(1)}
    return WeightedGraph(labels, edges)


@dataclass
class Spectrum:
    eigenvalues: list[float]
    eigenvectors: np.ndarray | None = None

    @property
    def lambda2(self) -> float:
        return self.eigenvalues[1]


def eigen(graph: WeightedGraph, vectors: bool = False, tol: float = DEFAULT_TOL) -> Spectrum:
    """Walk spectrum, descending; eigenvectors orthonormal in the w-inner product."""
    n = graph.n
    if n > EIGEN_CAP:
        raise TooLarge(f"{n} vertices exceeds eigensolver cap {EIGEN_CAP}")
    root = np.array([sqrt(float(w)) for w in graph.vertex_weights])
    S = np.zeros((n, n))
    for (u, v), w in graph.edge_weights.items():
        S[u, v] = S[v, u] = float(w) / (2.0 * root[u] * root[v])
    try:
        if vectors:
            vals, vecs = np.linalg.eigh(S)
        else:
            vals = np.linalg.eigvalsh(S)
            vecs = None
    except np.linalg.LinAlgError as exc:
        raise NumericalFailure(str(exc)) from exc
    order = np.argsort(vals)[::-1]
    vals = vals[order]
    if abs(vals[0] - 1.0) > tol or vals[-1] < -1.0 - tol:
        raise NumericalFailure(f"spectrum outside [-1, 1]: {vals[0]}, {vals[-1]}")
    if vecs is not None:
        vecs = vecs[:, order] / root[:, None]
    return Spectrum(list(map(float, vals)), vecs)


def cheeger(graph: WeightedGraph, cap: int = CUT_ENUM_CAP) -> Fraction:
    """Exact Cheeger constant by exhaustive minimization over cuts."""
    n = graph.n
    if n < 2:
        raise OutOfRange("need at least 2 vertices")
    if n > cap:
        raise TooLarge(f"{n} vertices exceeds cut enumeration cap {cap}")
    vw, dv = _scaled(graph.vertex_weights)
    ew, de = _scaled([graph.edge_weights[e] for e in graph.edges])
    adj: list[list[tuple[int, int]]] = [[] for _ in range(n)]
    for (u, v), w in zip(graph.edges, ew):
        adj[u].append((v, w))
        adj[v].append((u, w))
    cut, side, _ = kernels.min_cut_ratio(n, vw, adj)
    return Fraction(cut * dv, side * de)


def _scaled(fracs: Sequence[Fraction]) -> tuple[list[int], int]:
    denom = 1
    for f in fracs:
        denom = denom * f.denominator // gcd(denom, f.denominator)
    return [int(f * denom) for f in fracs], denom


def check_cheeger_inequalities(
    graph: WeightedGraph, tol: float = DEFAULT_TOL, cap: int = CUT_ENUM_CAP
) -> dict:
    """Both directions of the weighted Cheeger inequality, over every cut.

    Direction 1: for every nonempty proper A,
        ||delta 1_A|| >= 2 (1 - lambda2) ||1_A|| (1 - ||1_A||).
    Direction 2: lambda2 <= sqrt(1 - h^2 / 4) for the exact h.
    """
    if not graph.is_connected():
        raise NotConnected("graph is disconnected")
    n = graph.n
    if n > cap:
        raise TooLarge(f"{n} vertices exceeds enumeration cap {cap}")
    lam2 = eigen(graph, tol=tol).lambda2
    h = cheeger(graph, cap=cap)

    adj = graph.neighbors()
    total = Fraction(1)
    in_s = 0
    cut = Fraction(0)
    side = Fraction(0)
    worst_margin = None
    worst_set = 0
    coef = 2.0 * (1.0 - lam2)
    for g in range(1, 1 << (n - 1)):
        v = (g & -g).bit_length()
        bit = 1 << v
        entering = not in_s & bit
        if entering:
            for u, wuv in adj[v]:
                cut += -wuv if in_s >> u & 1 else wuv
            side += graph.vertex_weights[v]
            in_s |= bit
        else:
            in_s ^= bit
            for u, wuv in adj[v]:
                cut += wuv if in_s >> u & 1 else -wuv
            side -= graph.vertex_weights[v]
        for s in (side, total - side):
            bound = coef * float(s) * (1.0 - float(s))
            margin = float(cut) - bound
            if worst_margin is None or margin < worst_margin:
                worst_margin = margin
                worst_set = in_s if s == side else ((1 << n) - 1) ^ in_s
    dir1_ok = worst_margin >= -tol
    bound2 = sqrt(max(0.0, 1.0 - float(h) ** 2 / 4.0))
    dir2_ok = lam2 <= bound2 + tol
    return {
        "h": h,
        "lambda2": lam2,
        "direction1": {
            "ok": dir1_ok,
            "worst_margin": worst_margin,
            "worst_set": [graph.labels[v] for v in range(n) if worst_set >> v & 1],
        },
        "direction2": {"ok": dir2_ok, "bound": bound2},
        "ok": dir1_ok and dir2_ok,
    }


@dataclass
class LinkSpectrumRow:
    face: tuple
    dim: int
    lambda2: float
    connected: bool


@dataclass
class LocalExpansionReport:
    lam: float
    dimension: int
    gamma: float | None
    strong: bool
    certified: bool
    tolerance: float
    links: list[LinkSpectrumRow] = field(default_factory=list)

    def to_json(self) -> dict:
        return {
            "gamma": self.gamma,
            "strong": self.strong,
            "certified": self.certified,
            "lambda": self.lam,
            "links": [
                {
                    "face": list(r.face),
                    "dim": r.dim,
                    "lambda2": r.lambda2,
                    "connected": r.connected,
                }
                for r in self.links
            ],
            "tolerance": self.tolerance,
        }


def link_spectra(
    X: WeightedComplex, lo: int = -1, tol: float = DEFAULT_TOL, threads: int = 1
) -> list[LinkSpectrumRow]:
    """lambda2 and connectivity of every link 1-skeleton for lo <= dim tau <= d-2.

    Per-link work is independent; threads > 1 maps it over a pool (order
    preserved, so results are deterministic either way).
    """
    faces = [(i, tau) for i in range(lo, X.d - 1) for tau in X.level(i)]

    def one(item) -> LinkSpectrumRow:
        i, tau = item
        G = graph_from_complex(link(X, tau))
        connected = G.is_connected()
        lam2 = eigen(G, tol=tol).lambda2 if G.n >= 2 else 1.0
        return LinkSpectrumRow(X.label_face(tau), i, lam2, connected)

    if threads > 1:
        from concurrent.futures import ThreadPoolExecutor

        with ThreadPoolExecutor(max_workers=threads) as pool:
            return list(pool.map(one, faces))
    return [one(item) for item in faces]


def certify_local_spectral(
    X: WeightedComplex, lam: float, tol: float = DEFAULT_TOL, threads: int = 1
) -> LocalExpansionReport:
    """Check every link through codimension 2 (including the empty face).

    A link passes when its 1-skeleton is connected (by traversal, never
    spectrally) and its lambda2 is at most lam + tol. Disconnection is
    reported, not raised.
    """
    if X.d < 1:
        raise OutOfRange("certification needs dimension >= 1")
    rows = link_spectra(X, lo=-1, tol=tol, threads=threads)
    connected_rows = [r for r in rows if r.connected]
    gamma = max((r.lambda2 for r in connected_rows), default=None)
    certified = len(connected_rows) == len(rows) and all(
        r.lambda2 <= lam + tol for r in rows
    )
    strong = gamma is not None and gamma < 1.0 / X.d
    return LocalExpansionReport(
        lam=lam,
        dimension=X.d,
        gamma=gamma,
        strong=strong,
        certified=certified,
        tolerance=tol,
        links=rows,
    )


def trickling_check(X: WeightedComplex, tol: float = DEFAULT_TOL) -> dict:
    """Verify the spectral-gap descent bound from vertex links.

    Walk form: lambda2 of the 1-skeleton is at most m / (1 - m) where m is
    the worst local-expansion constant among vertex links. Laplacian form:
    the smallest nontrivial Laplacian eigenvalue mu = 1 - lambda2 satisfies
    mu >= 2 - 1/g for g the worst vertex-link Laplacian gap. The two are the
    same inequality through g = 1 - m; both sides are computed independently.
    """
    if X.d < 2:
        raise OutOfRange("descent bound needs dimension >= 2")
    rows = link_spectra(X, lo=-1, tol=tol)
    bad = [r for r in rows if not r.connected]
    if bad:
        raise DisconnectedLink(f"link of {bad[0].face} has a disconnected 1-skeleton")
    lam2 = eigen(graph_from_complex(X), tol=tol).lambda2
    lam_vert = max(r.lambda2 for r in rows if r.dim >= 0)
    walk_bound = lam_vert / (1.0 - lam_vert) if lam_vert < 1.0 else None
    walk_ok = walk_bound is not None and lam2 <= walk_bound + tol

    vertex_rows = [r for r in rows if r.dim == 0]
    lap_gap = min(1.0 - r.lambda2 for r in vertex_rows)
    lap_bound = 2.0 - 1.0 / lap_gap
    mu = 1.0 - lam2
    lap_ok = mu >= lap_bound - tol

    # iterated form: the worst codimension-2 link value m2 propagates all the
    # way up, certifying the whole complex at m2 / (1 - (d-1) m2)
    d = X.d
    m2 = max(r.lambda2 for r in rows if r.dim == d - 2)
    gamma = max(r.lambda2 for r in rows)
    if (d - 1) * m2 < 1.0:
        iterated_lambda = m2 / (1.0 - (d - 1) * m2)
        iterated_ok = gamma <= iterated_lambda + tol
    else:
        iterated_lambda = None
        iterated_ok = None
    return {
        "lambda2": lam2,
        "lambda_vert": lam_vert,
        "walk_bound": walk_bound,
        "walk_ok": walk_ok,
        "walk_slack": None if walk_bound is None else walk_bound - lam2,
        "mu": mu,
        "laplacian_gap": lap_gap,
        "laplacian_bound": lap_bound,
        "laplacian_ok": lap_ok,
        "laplacian_slack": mu - lap_bound,
        "iterated_lambda": iterated_lambda,
        "iterated_ok": iterated_ok,
        "ok": walk_ok and lap_ok and iterated_ok is not False,
    }
