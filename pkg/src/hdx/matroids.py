"""Matroid oracles, axiom checks, independence complexes, and base exchange.

Ground elements are 0..n-1. The base-exchange step removes a uniform element
and re-adds a uniform valid extension (the removed element always qualifies,
so the chain is lazy); with the uniform top distribution this is exactly the
top-level down-up walk of the independence complex, matrix for matrix.
"""

from __future__ import annotations

import random
from fractions import Fraction
from typing import Iterable, Sequence

import numpy as np

from . import gf2
from .complexes import WeightedComplex, from_top_faces
from .errors import BadParams, BadStart, NoExchange, OutOfRange, TooLarge
from .spectral import DEFAULT_TOL, LocalExpansionReport, WeightedGraph, certify_local_spectral
from .walks import WalkOperator

AXIOM_CAP = 16
BASIS_ENUM_CAP = 10**6
GROUND_CAP = 24


class Matroid:
    """Independence oracle over ground set 0..n-1."""

    kind = "abstract"

    def __init__(self, n: int):
        if n < 1:
            raise BadParams("ground set must be nonempty")
        self.n = n

    def is_independent(self, subset: Iterable[int]) -> bool:
        s = frozenset(subset)
        if any(not 0 <= e < self.n for e in s):
            raise OutOfRange(f"element outside ground set of size {self.n}")
        return self._indep(s)

    def _indep(self, s: frozenset) -> bool:
        raise NotImplementedError

    @property
    def rank(self) -> int:
        if not hasattr(self, "_rank"):
            cur: set[int] = set()
            for e in range(self.n):
                if self._indep(frozenset(cur | {e})):
                    cur.add(e)
            self._rank = len(cur)
        return self._rank

    def subset_rank(self, subset: Iterable[int]) -> int:
        """Size of a maximal independent subset of `subset` (greedy oracle)."""
        s = sorted(set(subset))
        if any(not 0 <= e < self.n for e in s):
            raise OutOfRange("element outside ground set")
        cur: set[int] = set()
        for e in s:
            if self._indep(frozenset(cur | {e})):
                cur.add(e)
        return len(cur)


class UniformMatroid(Matroid):
    kind = "uniform"

    def __init__(self, n: int, r: int):
        super().__init__(n)
        if not 0 <= r <= n:
            raise BadParams(f"rank {r} outside 0..{n}")
        self.r = r

    def _indep(self, s: frozenset) -> bool:
        return len(s) <= self.r


class GraphicMatroid(Matroid):
    """Ground set = edge indices of a multigraph; independent = acyclic."""

    kind = "graphic"

    def __init__(self, n_vertices: int, edges: Sequence[tuple[int, int]]):
        super().__init__(len(edges))
        self.n_vertices = n_vertices
        self.edges = [tuple(e) for e in edges]
        for u, v in self.edges:
            if not (0 <= u < n_vertices and 0 <= v < n_vertices):
                raise BadParams(f"edge ({u},{v}) outside vertex range")

    def _indep(self, s: frozenset) -> bool:
        parent = list(range(self.n_vertices))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for e in s:
            u, v = self.edges[e]
            ru, rv = find(u), find(v)
            if ru == rv:
                return False
            parent[ru] = rv
        return True


class LinearF2Matroid(Matroid):
    """Ground set = column indices of vectors over F2 (ints as bitmasks)."""

    kind = "linear_f2"

    def __init__(self, columns: Sequence[int]):
        super().__init__(len(columns))
        self.columns = [int(c) for c in columns]

    def _indep(self, s: frozenset) -> bool:
        cols = [self.columns[e] for e in s]
        return gf2.rank(cols) == len(cols)


class ExplicitMatroid(Matroid):
    """Independence given by an explicit list; validate with verify_axioms."""

    kind = "explicit"

    def __init__(self, n: int, independent: Iterable[Iterable[int]]):
        super().__init__(n)
        self.independent = {frozenset(s) for s in independent}
        if not self.independent:
            raise BadParams("independent family must be nonempty")
        for s in self.independent:
            if any(not 0 <= e < n for e in s):
                raise OutOfRange("element outside ground set")

    def _indep(self, s: frozenset) -> bool:
        return s in self.independent

    @property
    def rank(self) -> int:
        return max(len(s) for s in self.independent)


def verify_axioms(M: Matroid, cap: int = AXIOM_CAP) -> dict:
    """Exhaustive hereditary and exchange check; first counterexamples reported."""
    if M.n > cap:
        raise TooLarge(f"ground size {M.n} exceeds axiom cap {cap}")
    n = M.n
    indep_masks = []
    indep_set = set()
    for mask in range(1 << n):
        if M._indep(frozenset(_bits(mask))):
            indep_masks.append(mask)
            indep_set.add(mask)
    report = {
        "ok": True,
        "nonempty": bool(indep_masks),
        "hereditary": None,
        "exchange": None,
    }
    if not indep_masks:
        report["ok"] = False
        return report
    for s in indep_masks:
        rest = s
        while rest:
            low = rest & -rest
            if s ^ low not in indep_set:
                report["ok"] = False
                report["hereditary"] = {"set": _bits(s), "missing": _bits(s ^ low)}
                break
            rest ^= low
        if report["hereditary"]:
            break

    masks = np.array(indep_masks, dtype=np.int64)
    sizes = np.array([m.bit_count() for m in indep_masks], dtype=np.int64)
    for t2 in indep_masks:
        ext = 0
        for e in range(n):
            if not t2 >> e & 1 and (t2 | 1 << e) in indep_set:
                ext |= 1 << e
        hits = ((masks & ~t2 & ext) == 0) & (sizes > t2.bit_count())
        if hits.any():
            t1 = int(masks[np.argmax(hits)])
            report["ok"] = False
            report["exchange"] = {"t1": _bits(t1), "t2": _bits(t2)}
            break
    return report


def _bits(mask: int) -> list[int]:
    out = []
    while mask:
        low = mask & -mask
        out.append(low.bit_length() - 1)
        mask ^= low
    return out


def bases(M: Matroid, cap: int = BASIS_ENUM_CAP) -> list[tuple[int, ...]]:
    """All bases, enumerated by depth-first extension (hereditary pruning)."""
    if M.n > GROUND_CAP:
        raise TooLarge(f"ground size {M.n} exceeds cap {GROUND_CAP}")
    r = M.rank
    out: list[tuple[int, ...]] = []

    def extend(cur: tuple[int, ...], lo: int):
        if len(out) > cap:
            raise TooLarge(f"more than {cap} bases")
        if len(cur) == r:
            out.append(cur)
            return
        for e in range(lo, M.n):
            if M._indep(frozenset(cur + (e,))):
                extend(cur + (e,), e + 1)

    extend((), 0)
    return out


def count_bases(M: Matroid, cap: int = BASIS_ENUM_CAP) -> int:
    return len(bases(M, cap))


def independence_complex(M: Matroid, cap: int = BASIS_ENUM_CAP) -> WeightedComplex:
    """Pure (rank-1)-dimensional complex of independent sets, uniform on bases.

    Explicit matroids are axiom-checked first; purity would otherwise be an
    accident of the input list.
    """
    if isinstance(M, ExplicitMatroid):
        rep = verify_axioms(M)
        if not rep["ok"]:
            raise NoExchange(f"explicit family is not a matroid: {rep}")
    tops = bases(M, cap)
    if not tops or M.rank == 0:
        raise BadParams("matroid has rank 0; no complex to build")
    return from_top_faces(tops)


def verify_exchange_property(X: WeightedComplex) -> tuple[bool, dict | None]:
    """Exhaustive pairwise check over faces of unequal size."""
    all_faces = [f for k in range(0, X.d + 1) for f in X.level(k)]
    by_size: dict[int, list] = {}
    for f in all_faces:
        by_size.setdefault(len(f), []).append(f)
    face_set = {f for f in all_faces}
    for small_size in sorted(by_size):
        for big_size in sorted(by_size):
            if big_size <= small_size:
                continue
            for sigma in by_size[small_size]:
                ss = set(sigma)
                for tau in by_size[big_size]:
                    if not any(
                        tuple(sorted(ss | {v})) in face_set for v in tau if v not in ss
                    ):
                        return False, {
                            "sigma": X.label_face(sigma),
                            "tau": X.label_face(tau),
                        }
    return True, None


def multipartite_partition(G) -> list[list]:
    """Partition a graph with the exchange property into independent parts
    with all cross pairs present (complete multipartite).

    From an edge {u, v}: vertices seeing u but not v join v's part, vertices
    seeing v but not u join u's part, and the construction recurses on the
    common neighborhood. A vertex seeing neither, or a failed verification,
    raises NoExchange.
    """
    if isinstance(G, WeightedComplex):
        verts = [v for (v,) in G.level(0)]
        edge_set = {e for e in G.level(1)} if G.d >= 1 else set()
        labels = G.labels
    elif isinstance(G, WeightedGraph):
        verts = list(range(G.n))
        edge_set = set(G.edges)
        labels = G.labels
    else:
        raise BadParams("expected a complex or weighted graph")
    if not edge_set:
        raise BadParams("partition requires at least one edge")

    def adjacent(a: int, b: int) -> bool:
        return (min(a, b), max(a, b)) in edge_set

    remaining = set(verts)
    parts: list[set[int]] = []
    while True:
        inner = sorted(
            e for e in edge_set if e[0] in remaining and e[1] in remaining
        )
        if not inner:
            break
        u, v = inner[0]
        v_u, v_v, v_uv = set(), set(), set()
        for w in remaining:
            if w in (u, v):
                continue
            see_u, see_v = adjacent(u, w), adjacent(v, w)
            if see_u and see_v:
                v_uv.add(w)
            elif see_u:
                v_u.add(w)
            elif see_v:
                v_v.add(w)
            else:
                raise NoExchange(f"vertex {labels[w]} sees neither endpoint")
        parts.append(v_u | {v})
        parts.append(v_v | {u})
        remaining = v_uv
    if remaining:
        parts.append(remaining)

    for part in parts:
        for a in part:
            for b in part:
                if a < b and adjacent(a, b):
                    raise NoExchange("partition class is not independent")
    for i, p in enumerate(parts):
        for q in parts[i + 1 :]:
            for a in p:
                for b in q:
                    if not adjacent(a, b):
                        raise NoExchange("missing cross edge")
    return [sorted(labels[w] for w in part) for part in parts]


def certify_zero_local(
    M: Matroid, tol: float = DEFAULT_TOL, cap: int = BASIS_ENUM_CAP
) -> LocalExpansionReport:
    """Certify the independence complex at lambda = 0."""
    X = independence_complex(M, cap)
    if X.d < 1:
        return LocalExpansionReport(
            lam=0.0,
            dimension=X.d,
            gamma=None,
            strong=False,
            certified=True,
            tolerance=tol,
            links=[],
        )
    return certify_local_spectral(X, 0.0, tol)


def _extensions(M: Matroid, indep: tuple[int, ...]) -> list[int]:
    s = frozenset(indep)
    return [e for e in range(M.n) if e not in s and M._indep(frozenset(s | {e}))]


def sample_base(
    M: Matroid, start: Sequence[int], steps: int, seed: int
) -> tuple[int, ...]:
    """Run the base-exchange walk for `steps` steps from `start`."""
    cur = tuple(sorted(start))
    if len(cur) != M.rank or not M.is_independent(cur):
        raise BadStart(f"{start} is not a base")
    rng = random.Random(seed)
    r = len(cur)
    for _ in range(steps):
        drop = rng.randrange(r)
        rest = cur[:drop] + cur[drop + 1 :]
        ext = _extensions(M, rest)
        cur = tuple(sorted(rest + (ext[rng.randrange(len(ext))],)))
    return cur


def base_walk_matrix(M: Matroid, cap: int = 4096) -> WalkOperator:
    """Exact transition matrix of the base-exchange walk, uniform-stationary."""
    all_bases = bases(M)
    if len(all_bases) > cap:
        raise TooLarge(f"{len(all_bases)} bases exceeds matrix cap {cap}")
    pos = {b: i for i, b in enumerate(all_bases)}
    r = M.rank
    rows: list[dict[int, Fraction]] = []
    for b in all_bases:
        row: dict[int, Fraction] = {}
        for drop in range(r):
            rest = b[:drop] + b[drop + 1 :]
            ext = _extensions(M, rest)
            share = Fraction(1, r * len(ext))
            for e in ext:
                j = pos[tuple(sorted(rest + (e,)))]
                row[j] = row.get(j, Fraction(0)) + share
        rows.append(row)
    stationary = [Fraction(1, len(all_bases))] * len(all_bases)
    return WalkOperator("down-up", r - 1, all_bases, all_bases, rows, stationary)
