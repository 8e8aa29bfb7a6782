"""Up/down averaging operators, walk matrices, mixing bounds, and samplers.

Operators act on functions; their matrices are row-stochastic with exact
rational entries, and double as transition matrices (row = current face).
Spectra are computed on the w_k-symmetrized matrix. The Monte-Carlo sampler
realizes one step as the two sub-steps: up moves to a coface with probability
proportional to its weight, down moves to a uniform facet.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction
from math import sqrt
from typing import Sequence

import numpy as np

from .complexes import Face, WeightedComplex
from .errors import BadStart, NumericalFailure, OutOfRange, TooLarge
from .spectral import DEFAULT_TOL, link_spectra

MATRIX_CAP = 4096


@dataclass
class WalkOperator:
    """Averaging operator between cochain levels, with exact rational rows."""

    kind: str  # "up" | "down" | "up-down" | "down-up"
    level: int
    domain: list[Face]  # faces indexing columns (input functions)
    codomain: list[Face]  # faces indexing rows (output functions)
    rows: list[dict[int, Fraction]]
    stationary: list[Fraction]  # w_k on the walk level (domain for endomorphisms)

    def __post_init__(self):
        for r, row in enumerate(self.rows):
            if sum(row.values()) != 1:
                raise NumericalFailure(f"row {r} of {self.kind} operator not stochastic")
        if self.kind in ("up-down", "down-up"):
            acc = [Fraction(0)] * len(self.domain)
            for i, row in enumerate(self.rows):
                wi = self.stationary[i]
                for j, c in row.items():
                    acc[j] += wi * c
            if acc != list(self.stationary):
                raise NumericalFailure("stationary distribution not preserved")

    def apply(self, f: Sequence) -> list:
        """Apply to a function given as a sequence over the domain faces."""
        return [sum(c * f[j] for j, c in row.items()) for row in self.rows]

    def dense(self) -> np.ndarray:
        m = np.zeros((len(self.codomain), len(self.domain)))
        for i, row in enumerate(self.rows):
            for j, c in row.items():
                m[i, j] = float(c)
        return m


def up_operator(X: WeightedComplex, k: int) -> WalkOperator:
    """U_k: functions on X(k) to functions on X(k+1) by uniform facet averaging."""
    if not 0 <= k <= X.d - 1:
        raise OutOfRange(f"up operator level {k} outside 0..{X.d - 1}")
    dom = X.level(k)
    cod = X.level(k + 1)
    pos = X.level_positions(k)
    share = Fraction(1, k + 2)
    rows = []
    for tau in cod:
        rows.append({pos[tau[:i] + tau[i + 1 :]]: share for i in range(len(tau))})
    return WalkOperator("up", k, dom, cod, rows, X.level_weights(k))


def down_operator(X: WeightedComplex, k: int) -> WalkOperator:
    """D_k: conditional expectation over cofaces, functions on X(k) to X(k-1)."""
    if not 0 <= k <= X.d:
        raise OutOfRange(f"down operator level {k} outside 0..{X.d}")
    dom = X.level(k)
    cod = X.level(k - 1)
    pos = X.level_positions(k)
    rows = []
    for tau in cod:
        denom = (k + 1) * X.weights[tau]
        rows.append({pos[s]: X.weights[s] / denom for s in X.cofaces(tau)})
    return WalkOperator("down", k, dom, cod, rows, X.level_weights(k))


def _compose(a: WalkOperator, b: WalkOperator, kind: str, level: int) -> WalkOperator:
    """Operator a o b (rows of a applied after b)."""
    rows = []
    for arow in a.rows:
        acc: dict[int, Fraction] = {}
        for t, c in arow.items():
            for j, cb in b.rows[t].items():
                acc[j] = acc.get(j, Fraction(0)) + c * cb
        rows.append(acc)
    return WalkOperator(kind, level, b.domain, a.codomain, rows, b.stationary)


def walk_matrix(X: WeightedComplex, k: int, kind: str) -> WalkOperator:
    """The up-down (M_k^+ = D_{k+1} U_k) or down-up (M_k^- = U_{k-1} D_k) walk."""
    if len(X.level(max(k, 0))) > MATRIX_CAP:
        raise TooLarge(f"level {k} exceeds matrix cap {MATRIX_CAP}")
    if kind == "up-down":
        if not 0 <= k <= X.d - 1:
            raise OutOfRange(f"up-down level {k} outside 0..{X.d - 1}")
        return _compose(down_operator(X, k + 1), up_operator(X, k), kind, k)
    if kind == "down-up":
        if not 1 <= k <= X.d:
            raise OutOfRange(f"down-up level {k} outside 1..{X.d}")
        return _compose(up_operator(X, k - 1), down_operator(X, k), kind, k)
    raise OutOfRange(f"unknown walk kind {kind!r}")


def operator_spectrum(op: WalkOperator, tol: float = DEFAULT_TOL) -> list[float]:
    """Eigenvalues of a self-adjoint walk operator, descending."""
    if op.kind not in ("up-down", "down-up"):
        raise OutOfRange("spectrum is for endomorphism walks")
    n = len(op.domain)
    root = [sqrt(float(w)) for w in op.stationary]
    S = np.zeros((n, n))
    for i, row in enumerate(op.rows):
        for j, c in row.items():
            S[i, j] = float(c) * root[i] / root[j]
    S = (S + S.T) / 2.0
    vals = np.linalg.eigvalsh(S)[::-1]
    if abs(vals[0] - 1.0) > tol:
        raise NumericalFailure(f"leading walk eigenvalue {vals[0]} != 1")
    return list(map(float, vals))


def ko_bound(k: int, gamma):
    """Second-eigenvalue bound 1 - 1/(k+1) + (k/2) gamma for gamma-local expansion."""
    return 1 - Fraction(1, k + 1) + Fraction(k, 2) * gamma


def al_bound(k: int, gamma_profile: Sequence):
    """Bound 1 - prod(1 - gamma_i) / (k+1) over i = -1 .. k-2."""
    if len(gamma_profile) != k:
        raise OutOfRange(f"need {k} profile entries for level {k}")
    prod = 1
    for g in gamma_profile:
        prod = prod * (1 - g)
    return 1 - prod * Fraction(1, k + 1)


def lambda2_of(op: WalkOperator, tol: float = DEFAULT_TOL) -> float:
    """Second eigenvalue of an endomorphism walk.

    A single-state walk has an empty orthogonal complement; 0.0 keeps the
    identity with the adjacent walk, whose extra spectrum is exactly zero.
    """
    if len(op.domain) == 1:
        return 0.0
    return operator_spectrum(op, tol)[1]


@dataclass
class MixingReport:
    level: int
    lambda2_minus: float
    lambda2_plus: float
    identity_ok: bool
    gamma: float | None
    gamma_profile: list[float]
    profile_connected: bool
    ko: float | None
    ko_ok: bool | None
    al: float | None
    al_ok: bool | None
    tolerance: float
    tv_curve: list[tuple[int, Fraction]] | None = None

    @property
    def ok(self) -> bool:
        return self.identity_ok and self.ko_ok is not False and self.al_ok is not False

    def to_json(self) -> dict:
        return {
            "level": self.level,
            "lambda2_minus": self.lambda2_minus,
            "lambda2_plus": self.lambda2_plus,
            "identity_ok": self.identity_ok,
            "gamma": self.gamma,
            "gamma_profile": self.gamma_profile,
            "ko_bound": self.ko,
            "ko_ok": self.ko_ok,
            "al_bound": self.al,
            "al_ok": self.al_ok,
            "ok": self.ok,
            "tolerance": self.tolerance,
            "tv_curve": None
            if self.tv_curve is None
            else [[t, float(v)] for t, v in self.tv_curve],
        }


def verify_mixing(X: WeightedComplex, k: int, tol: float = DEFAULT_TOL) -> MixingReport:
    """Check the spectral identity and both mixing bounds at level k.

    The one-step bound applies when every link through codimension 2 is
    connected (gamma exists); the per-level product bound applies when the
    links of dimension -1..k-2 are connected. Inapplicable bounds are
    reported as None rather than raised.
    """
    if not 1 <= k <= X.d:
        raise OutOfRange(f"mixing level {k} outside 1..{X.d}")
    minus = walk_matrix(X, k, "down-up")
    plus = walk_matrix(X, k - 1, "up-down")
    lam_minus = lambda2_of(minus, tol)
    lam_plus = lambda2_of(plus, tol)
    identity_ok = abs(lam_minus - lam_plus) <= tol

    rows = link_spectra(X, lo=-1, tol=tol)
    all_connected = all(r.connected for r in rows)
    gamma = max(r.lambda2 for r in rows) if all_connected else None
    profile = []
    profile_connected = True
    for i in range(-1, k - 1):
        level_rows = [r for r in rows if r.dim == i]
        profile_connected &= all(r.connected for r in level_rows)
        profile.append(max(r.lambda2 for r in level_rows))
    ko = float(ko_bound(k, gamma)) if gamma is not None else None
    ko_ok = None if ko is None else lam_minus <= ko + tol
    al = float(al_bound(k, profile)) if profile_connected else None
    al_ok = None if al is None else lam_minus <= al + tol
    return MixingReport(
        level=k,
        lambda2_minus=lam_minus,
        lambda2_plus=lam_plus,
        identity_ok=identity_ok,
        gamma=gamma,
        gamma_profile=profile,
        profile_connected=profile_connected,
        ko=ko,
        ko_ok=ko_ok,
        al=al,
        al_ok=al_ok,
        tolerance=tol,
    )


def _coface_sampler(X: WeightedComplex, k: int):
    """Per-face cofaces with float cumulative weights for the up sub-step."""
    key = ("coface-sampler", k)
    if key not in X._cache:
        table = {}
        for tau in X.level(k):
            cof = X.cofaces(tau)
            table[tau] = (cof, [float(X.weights[s]) for s in cof])
        X._cache[key] = table
    return X._cache[key]


def run_walk(
    X: WeightedComplex, k: int, kind: str, start: Face, steps: int, seed: int
) -> list[Face]:
    """Seeded trajectory of the chosen walk; element 0 is the start face."""
    if kind not in ("up-down", "down-up"):
        raise OutOfRange(f"unknown walk kind {kind!r}")
    if kind == "up-down" and not 0 <= k <= X.d - 1:
        raise OutOfRange(f"up-down level {k} outside 0..{X.d - 1}")
    if kind == "down-up" and not 1 <= k <= X.d:
        raise OutOfRange(f"down-up level {k} outside 1..{X.d}")
    if len(start) - 1 != k or not X.has_face(start):
        raise BadStart(f"{start} is not a face of X({k})")
    rng = random.Random(seed)
    traj = [start]
    cur = start
    if kind == "up-down":
        up_table = _coface_sampler(X, k)
        for _ in range(steps):
            cof, wts = up_table[cur]
            tau = rng.choices(cof, weights=wts)[0]
            drop = rng.randrange(len(tau))
            cur = tau[:drop] + tau[drop + 1 :]
            traj.append(cur)
    else:
        up_table = _coface_sampler(X, k - 1)
        for _ in range(steps):
            drop = rng.randrange(len(cur))
            rho = cur[:drop] + cur[drop + 1 :]
            cof, wts = up_table[rho]
            cur = rng.choices(cof, weights=wts)[0]
            traj.append(cur)
    return traj


def exact_tv_curve(
    X: WeightedComplex, k: int, kind: str, start: Face, max_steps: int
) -> list[tuple[int, Fraction]]:
    """Total-variation distance to stationarity after t steps, exact rationals."""
    if len(X.level(k)) > MATRIX_CAP:
        raise TooLarge(f"level {k} exceeds matrix cap {MATRIX_CAP}")
    op = walk_matrix(X, k, kind)
    pos = {f: i for i, f in enumerate(op.domain)}
    if start not in pos:
        raise BadStart(f"{start} is not a face of X({k})")
    n = len(op.domain)
    dist = [Fraction(0)] * n
    dist[pos[start]] = Fraction(1)
    out = []
    for t in range(max_steps + 1):
        tv = sum(abs(p - w) for p, w in zip(dist, op.stationary)) / 2
        out.append((t, tv))
        if t == max_steps:
            break
        nxt = [Fraction(0)] * n
        for i, p in enumerate(dist):
            if p:
                for j, c in op.rows[i].items():
                    nxt[j] += p * c
        dist = nxt
    return out
