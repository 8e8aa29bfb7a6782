"""Weighted pure simplicial complexes.

Faces are tuples of dense vertex indices in strictly increasing order; the
empty face () is materialized at dimension -1. Vertex identifiers (labels)
are mapped to indices at construction and only reappear at the I/O boundary.
All weights are exact `fractions.Fraction` values; each level's weights sum
to exactly 1 by the top-down averaging recursion.
"""

from __future__ import annotations

from fractions import Fraction
from math import comb, gcd
from typing import Iterable, Sequence

from .errors import (
    BadDistribution,
    DimensionMismatch,
    FaceNotInComplex,
    NotPure,
    OutOfRange,
    ParseError,
)

Face = tuple[int, ...]

ONE = Fraction(1)


def _facets(face: Face) -> list[Face]:
    return [face[:i] + face[i + 1 :] for i in range(len(face))]


class WeightedComplex:
    """Pure d-dimensional complex with a top-face distribution.

    Immutable after construction; internal caches only memoize derived data.
    """

    def __init__(
        self,
        labels: Sequence,
        faces_by_dim: dict[int, list[Face]],
        weights: dict[Face, Fraction],
        pi: dict[Face, Fraction],
    ):
        self.labels = tuple(labels)
        self.d = max(faces_by_dim)
        self.faces_by_dim = {k: list(v) for k, v in faces_by_dim.items()}
        self.weights = dict(weights)
        self.pi = dict(pi)
        self._label_index = {lab: i for i, lab in enumerate(self.labels)}
        self._positions: dict[int, dict[Face, int]] = {}
        self._cofaces: dict[int, dict[Face, list[Face]]] = {}
        self._cache: dict = {}
        self._validate()

    def _validate(self):
        if self.faces_by_dim.get(-1) != [()]:
            raise NotPure("complex must contain exactly the empty face at dimension -1")
        for k in range(-1, self.d + 1):
            lvl = self.faces_by_dim.get(k, [])
            if not lvl:
                raise NotPure(f"no faces at dimension {k}")
            if sum(self.weights[f] for f in lvl) != ONE:
                raise BadDistribution(f"level {k} weights do not sum to 1")
            if any(self.weights[f] <= 0 for f in lvl):
                raise BadDistribution(f"nonpositive weight at level {k}")

    # -- basic structure ---------------------------------------------------

    @property
    def tops(self) -> list[Face]:
        return self.faces_by_dim[self.d]

    @property
    def num_vertices(self) -> int:
        return len(self.faces_by_dim.get(0, []))

    def level(self, i: int) -> list[Face]:
        if i < -1 or i > self.d:
            raise OutOfRange(f"no level {i} in a {self.d}-dimensional complex")
        return self.faces_by_dim[i]

    def level_positions(self, i: int) -> dict[Face, int]:
        if i not in self._positions:
            self._positions[i] = {f: p for p, f in enumerate(self.level(i))}
        return self._positions[i]

    def has_face(self, face: Face) -> bool:
        k = len(face) - 1
        return -1 <= k <= self.d and face in self.level_positions(k)

    def w(self, face: Face) -> Fraction:
        return self.weights[face]

    def level_weights(self, i: int) -> list[Fraction]:
        return [self.weights[f] for f in self.level(i)]

    def scaled_level_weights(self, i: int) -> tuple[list[int], int]:
        """Weights as integers over a common denominator (cached)."""
        key = ("scaled", i)
        if key not in self._cache:
            ws = self.level_weights(i)
            denom = 1
            for f in ws:
                denom = denom * f.denominator // gcd(denom, f.denominator)
            self._cache[key] = ([int(f * denom) for f in ws], denom)
        return self._cache[key]

    def cofaces(self, face: Face) -> list[Face]:
        """Faces one dimension up containing `face`."""
        k = len(face) - 1
        if k not in self._cofaces:
            table: dict[Face, list[Face]] = {f: [] for f in self.level(k)}
            if k + 1 <= self.d:
                for sigma in self.level(k + 1):
                    for tau in _facets(sigma):
                        table[tau].append(sigma)
            self._cofaces[k] = table
        return self._cofaces[k][face]

    # -- label <-> index boundary -------------------------------------------

    def index_face(self, face: Iterable) -> Face:
        """Canonicalize a face given by labels (or indices) to index form."""
        idx = self._label_index
        out = []
        for v in face:
            if v in idx:
                out.append(idx[v])
            elif isinstance(v, int) and 0 <= v < len(self.labels):
                out.append(v)
            else:
                raise FaceNotInComplex(f"unknown vertex {v!r}")
        t = tuple(sorted(out))
        if len(set(t)) != len(t):
            raise ParseError(f"face {face!r} has repeated vertices")
        return t

    def label_face(self, face: Face) -> tuple:
        return tuple(self.labels[v] for v in face)

    def __repr__(self):
        return (
            f"WeightedComplex(dim={self.d}, vertices={self.num_vertices}, "
            f"tops={len(self.tops)})"
        )


class LinkView(WeightedComplex):
    """The induced weighted complex X_tau, remembering its base and tau."""

    def __init__(self, base: WeightedComplex, tau: Face, *args):
        self.base = base
        self.tau = tau
        super().__init__(*args)


def from_top_faces(
    tops: Sequence[Iterable],
    weights: Sequence[Fraction] | None = None,
    labels: Sequence | None = None,
) -> WeightedComplex:
    """Downward closure of the given maximal faces with induced weights.

    `weights`, when given, must be positive exact rationals summing to 1 and
    aligned with `tops`; otherwise the distribution is uniform. All maximal
    faces must have equal size (purity).
    """
    if not tops:
        raise NotPure("no top faces given")
    raw = [tuple(t) for t in tops]
    if labels is None:
        seen = {v for t in raw for v in t}
        try:
            labels = sorted(seen)
        except TypeError:
            labels = sorted(seen, key=repr)
    index = {lab: i for i, lab in enumerate(labels)}
    try:
        top_faces = [tuple(sorted(index[v] for v in t)) for t in raw]
    except KeyError as exc:
        raise ParseError(f"vertex {exc.args[0]!r} not in vertex list") from exc
    for t, r in zip(top_faces, raw):
        if len(set(t)) != len(t):
            raise ParseError(f"top face {r!r} has repeated vertices")
    if len(set(top_faces)) != len(top_faces):
        raise ParseError("duplicate top faces")
    sizes = {len(t) for t in top_faces}
    if len(sizes) != 1:
        raise NotPure(f"maximal faces of sizes {sorted(sizes)}")

    if weights is None:
        pi_vals = [Fraction(1, len(top_faces))] * len(top_faces)
    else:
        if len(weights) != len(top_faces):
            raise BadDistribution("one weight per top face required")
        pi_vals = [Fraction(x) for x in weights]
        if any(p <= 0 for p in pi_vals):
            raise BadDistribution("top weights must be positive")
        if sum(pi_vals) != ONE:
            raise BadDistribution("top weights must sum to 1")

    order = sorted(range(len(top_faces)), key=lambda j: top_faces[j])
    top_faces = [top_faces[j] for j in order]
    pi_vals = [pi_vals[j] for j in order]

    d = len(top_faces[0]) - 1
    pi = dict(zip(top_faces, pi_vals))
    w: dict[Face, Fraction] = dict(pi)
    faces_by_dim: dict[int, list[Face]] = {d: top_faces}
    for k in range(d - 1, -2, -1):
        acc: dict[Face, Fraction] = {}
        for sigma in faces_by_dim[k + 1]:
            share = w[sigma] / (k + 2)
            for tau in _facets(sigma):
                acc[tau] = acc.get(tau, Fraction(0)) + share
        faces_by_dim[k] = sorted(acc)
        w.update(acc)
    return WeightedComplex(labels, faces_by_dim, w, pi)


def top_weight_closed_form(X: WeightedComplex, face: Face) -> Fraction:
    """Weight of a face summed directly from the top distribution.

    Equals the recursion's value with normalization 1/C(d+1, i+1): removing
    the d-i vertices one at a time reaches `face` with probability
    (d-i)!(i+1)!/(d+1)!.
    """
    i = len(face) - 1
    fs = set(face)
    total = sum(p for t, p in X.pi.items() if fs.issubset(t))
    return total / comb(X.d + 1, i + 1)


def skeleton(X: WeightedComplex, i: int) -> WeightedComplex:
    """All faces of dimension <= i; level-i weights become the top distribution."""
    if i < -1 or i > X.d:
        raise OutOfRange(f"skeleton dimension {i} outside -1..{X.d}")
    if i == X.d:
        return X
    faces_by_dim = {k: X.faces_by_dim[k] for k in range(-1, i + 1)}
    w = {f: X.weights[f] for lvl in faces_by_dim.values() for f in lvl}
    pi = {f: X.weights[f] for f in faces_by_dim[i]}
    return WeightedComplex(X.labels, faces_by_dim, w, pi)


def link(X: WeightedComplex, tau: Face) -> LinkView:
    """The weighted link X_tau with the conditional distribution.

    Weights follow the closed formula w_tau(s) = w(s u tau) / (C(|s|+|tau|, |tau|) w(tau))
    at every level; tests cross-check this against re-running the recursion.
    """
    if not X.has_face(tau):
        raise FaceNotInComplex(f"{tau} not in complex")
    cached = X._cache.get(("link", tau))
    if cached is not None:
        return cached
    if tau == ():
        view = LinkView(X, (), X.labels, X.faces_by_dim, X.weights, X.pi)
        X._cache[("link", tau)] = view
        return view
    t = len(tau)
    tau_set = set(tau)
    w_tau = X.weights[tau]
    faces_by_dim: dict[int, list[Face]] = {}
    w: dict[Face, Fraction] = {}
    for k in range(len(tau) - 1, X.d + 1):
        lvl = []
        for sigma in X.level(k):
            if tau_set.issubset(sigma):
                rest = tuple(v for v in sigma if v not in tau_set)
                lvl.append(rest)
                w[rest] = X.weights[sigma] / (comb(len(rest) + t, t) * w_tau)
        faces_by_dim[k - t] = sorted(lvl)
    pi = {f: w[f] for f in faces_by_dim[X.d - t]}
    view = LinkView(X, tau, X.labels, faces_by_dim, w, pi)
    X._cache[("link", tau)] = view
    return view


def degree(X: WeightedComplex) -> int:
    """Maximal number of faces containing a single vertex."""
    counts = [0] * len(X.labels)
    for k in range(0, X.d + 1):
        for face in X.level(k):
            for v in face:
                counts[v] += 1
    return max(counts) if counts else 0


def _cochain_level(f) -> int:
    if hasattr(f, "level"):
        return f.level
    lengths = {len(face) for face in f}
    if len(lengths) != 1:
        raise DimensionMismatch("cochain keys must all have the same dimension")
    return lengths.pop() - 1


def restrict_cochain(X: WeightedComplex, f, tau: Face):
    """Localized cochain f^tau(s) = f(s u tau) on the link, at level k-|tau|.

    Accepts an F2 cochain (object with .level/.bits) or a mapping
    face -> value; returns the same kind over X_tau.
    """
    if not X.has_face(tau):
        raise FaceNotInComplex(f"{tau} not in complex")
    k = _cochain_level(f)
    i = len(tau) - 1
    if k <= i:
        raise DimensionMismatch(f"cochain level {k} must exceed dim(tau) = {i}")
    L = link(X, tau)
    new_level = k - i - 1
    if hasattr(f, "bits"):
        from .f2 import F2Cochain

        pos = X.level_positions(k)
        bits = 0
        for p, sigma in enumerate(L.level(new_level)):
            joined = tuple(sorted(sigma + tau))
            if f.bits >> pos[joined] & 1:
                bits |= 1 << p
        return F2Cochain(new_level, bits, len(L.level(new_level)))
    return {
        sigma: f.get(tuple(sorted(sigma + tau)), 0) for sigma in L.level(new_level)
    }


def restrict_domain(X: WeightedComplex, f, tau: Face):
    """Same-level restriction: f narrowed to the faces lying in X_tau.

    This is the restriction that commutes with the coboundary operator;
    `restrict_cochain` (the union shift) deliberately does not.
    """
    if not X.has_face(tau):
        raise FaceNotInComplex(f"{tau} not in complex")
    k = _cochain_level(f)
    L = link(X, tau)
    if k > L.d:
        raise DimensionMismatch(f"level {k} exceeds link dimension {L.d}")
    if hasattr(f, "bits"):
        from .f2 import F2Cochain

        pos = X.level_positions(k)
        bits = 0
        for p, sigma in enumerate(L.level(k)):
            if f.bits >> pos[sigma] & 1:
                bits |= 1 << p
        return F2Cochain(k, bits, len(L.level(k)))
    return {sigma: f.get(sigma, 0) for sigma in L.level(k)}
