"""F2 cochain complexes: coboundary, cohomology, and expansion constants.

Cochains are int bitsets over the canonical face order of their level. The
complex is augmented: level -1 holds the empty face, so B^0 is the constants
and H^0 vanishes exactly on connected complexes. Expansion constants are
exact rationals found by exhaustive Gray-code scans (see `kernels`); the
searches are capped, never sampled.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from . import gf2, kernels
from .complexes import WeightedComplex, link, restrict_cochain
from .errors import DimensionMismatch, OutOfRange, TooLarge

INF = float("inf")
ENUM_CAP_BITS = 24


@dataclass(frozen=True)
class F2Cochain:
    level: int
    bits: int
    size: int

    def __post_init__(self):
        if self.bits >> self.size:
            raise DimensionMismatch("cochain has bits beyond its level size")

    @classmethod
    def from_faces(cls, X: WeightedComplex, level: int, faces: Iterable) -> "F2Cochain":
        pos = X.level_positions(level)
        bits = 0
        for f in faces:
            bits |= 1 << pos[X.index_face(f)]
        return cls(level, bits, len(pos))

    @classmethod
    def zero(cls, X: WeightedComplex, level: int) -> "F2Cochain":
        return cls(level, 0, len(X.level(level)))

    @classmethod
    def ones(cls, X: WeightedComplex, level: int) -> "F2Cochain":
        n = len(X.level(level))
        return cls(level, (1 << n) - 1, n)

    def support(self, X: WeightedComplex) -> list[tuple]:
        return [
            X.label_face(f)
            for p, f in enumerate(X.level(self.level))
            if self.bits >> p & 1
        ]

    def __add__(self, other: "F2Cochain") -> "F2Cochain":
        if self.level != other.level or self.size != other.size:
            raise DimensionMismatch("cochain levels differ")
        return F2Cochain(self.level, self.bits ^ other.bits, self.size)


def delta_rows(X: WeightedComplex, i: int) -> list[int]:
    """Matrix of delta_i: one mask over X(i) per face of X(i+1)."""
    if not -1 <= i <= X.d - 1:
        raise OutOfRange(f"coboundary level {i} outside -1..{X.d - 1}")
    key = ("delta-rows", i)
    if key not in X._cache:
        pos = X.level_positions(i)
        rows = []
        for sigma in X.level(i + 1):
            m = 0
            for j in range(len(sigma)):
                m |= 1 << pos[sigma[:j] + sigma[j + 1 :]]
            rows.append(m)
        X._cache[key] = rows
    return X._cache[key]


def delta_cols(X: WeightedComplex, i: int) -> list[int]:
    key = ("delta-cols", i)
    if key not in X._cache:
        X._cache[key] = gf2.transpose(delta_rows(X, i), len(X.level(i)))
    return X._cache[key]


def coboundary(X: WeightedComplex, i: int, f: F2Cochain) -> F2Cochain:
    """(delta f)(sigma) = sum of f over the codimension-1 faces of sigma, mod 2."""
    if f.level != i:
        raise DimensionMismatch(f"cochain level {f.level} != {i}")
    cols = delta_cols(X, i)
    bits = 0
    rest = f.bits
    while rest:
        low = rest & -rest
        bits ^= cols[low.bit_length() - 1]
        rest ^= low
    return F2Cochain(i + 1, bits, len(X.level(i + 1)))


def norm(X: WeightedComplex, f: F2Cochain) -> Fraction:
    """Weighted support size ||f||_w."""
    ws = X.level_weights(f.level)
    total = Fraction(0)
    rest = f.bits
    while rest:
        low = rest & -rest
        total += ws[low.bit_length() - 1]
        rest ^= low
    return total


def space_basis(X: WeightedComplex, i: int, which: str) -> list[int]:
    """Reduced basis of B^i (coboundaries) or Z^i (cocycles) at level i."""
    key = ("basis", which, i)
    if key not in X._cache:
        if which == "B":
            basis = [] if i == -1 else gf2.row_reduce(delta_cols(X, i - 1))
        elif which == "Z":
            n = len(X.level(i))
            if i == X.d:
                basis = [1 << j for j in range(n)]  # delta_d = 0 by convention
            else:
                basis = gf2.nullspace(delta_rows(X, i), n)
        else:
            raise OutOfRange(f"unknown space {which!r}")
        X._cache[key] = gf2.row_reduce(basis)
    return X._cache[key]


def _check_matrix(X: WeightedComplex, i: int, which: str) -> list[int]:
    """Rows K with kernel exactly the space: a basis of its orthogonal complement."""
    key = ("check", which, i)
    if key not in X._cache:
        n = len(X.level(i))
        X._cache[key] = gf2.nullspace(space_basis(X, i, which), n)
    return X._cache[key]


def _syndrome_cols(X: WeightedComplex, i: int, which: str) -> list[int]:
    key = ("synd-cols", which, i)
    if key not in X._cache:
        n = len(X.level(i))
        X._cache[key] = gf2.transpose(_check_matrix(X, i, which), n)
    return X._cache[key]


def _syndrome(bits: int, synd_cols: list[int]) -> int:
    s = 0
    rest = bits
    while rest:
        low = rest & -rest
        s ^= synd_cols[low.bit_length() - 1]
        rest ^= low
    return s


def _coset_table(X: WeightedComplex, i: int, which: str, cap_bits: int):
    """Min weight and witness per coset of the space, scaled level weights."""
    key = ("coset-table", which, i)
    if key not in X._cache:
        n = len(X.level(i))
        if n > cap_bits:
            raise TooLarge(f"|X({i})| = {n} exceeds enumeration cap {cap_bits}")
        scaled, denom = X.scaled_level_weights(i)
        cols = _syndrome_cols(X, i, which)
        n_synd = len(_check_matrix(X, i, which))
        minwt, witness = kernels.coset_min_weight_table(n, scaled, cols, n_synd)
        X._cache[key] = (minwt, witness, denom, n_synd)
    return X._cache[key]


def distance_to_space(
    X: WeightedComplex, f: F2Cochain, which: str, cap_bits: int = ENUM_CAP_BITS
) -> Fraction:
    """Exact min_{g in space} ||f + g||_w by subspace scan or syndrome table."""
    i = f.level
    basis = space_basis(X, i, which)
    scaled, denom = X.scaled_level_weights(i)
    if len(basis) <= cap_bits:
        got = kernels.span_min_weight(basis, scaled, f.bits, [0] * len(basis), False)
        return Fraction(got[0], denom)
    if len(X.level(i)) <= cap_bits:
        minwt, _, denom, _ = _coset_table(X, i, which, cap_bits)
        s = _syndrome(f.bits, _syndrome_cols(X, i, which))
        return Fraction(minwt[s], denom)
    raise TooLarge(f"space dimension {len(basis)} exceeds cap {cap_bits}")


def _coset_reps_delta(X: WeightedComplex, i: int, which: str) -> list[int]:
    """Coboundary masks of coset representatives r_t with syndrome e_t."""
    K = _check_matrix(X, i, which)
    n = len(X.level(i))
    cols = delta_cols(X, i)
    reps = []
    for t in range(len(K)):
        r = gf2.solve(K, n, 1 << t)
        assert r is not None
        d = 0
        rest = r
        while rest:
            low = rest & -rest
            d ^= cols[low.bit_length() - 1]
            rest ^= low
        reps.append(d)
    return reps


def _ratio_search(
    X: WeightedComplex,
    i: int,
    which: str,
    cap_bits: int,
    mu: Fraction | None = None,
):
    """Minimum of ||delta F|| / dist(F, space) over nontrivial cosets.

    Returns None when the space fills C^i, or when no coset passes the
    optional norm threshold mu; otherwise (ratio, witness cochain, delta norm,
    coset min norm) with the witness realizing the coset's min weight.
    """
    n = len(X.level(i))
    if n > cap_bits:
        raise TooLarge(f"|X({i})| = {n} exceeds enumeration cap {cap_bits}")
    minwt, witness, d1, n_synd = _coset_table(X, i, which, cap_bits)
    if n_synd == 0:
        return None
    reps = _coset_reps_delta(X, i, which)
    scaled2, d2 = X.scaled_level_weights(i + 1)
    if mu is None:
        mu_num, mu_den = -1, 1
    else:
        mu_num, mu_den = mu.numerator, mu.denominator
    got = kernels.best_ratio_over_cosets(reps, scaled2, minwt, mu_num, mu_den, d1)
    if got is None:
        return None
    num, den, syn = got
    f = F2Cochain(i, witness[syn], n)
    return (
        Fraction(num * d1, den * d2),
        f,
        Fraction(num, d2),
        Fraction(den, d1),
    )


def coboundary_expansion(X: WeightedComplex, i: int, cap_bits: int = ENUM_CAP_BITS):
    """Exact h^i: worst ratio of ||delta F|| to the distance from B^i.

    Returns +inf when C^i = B^i (nothing to minimize over).
    """
    if not -1 <= i <= X.d - 1:
        raise OutOfRange(f"expansion level {i} outside -1..{X.d - 1}")
    got = _ratio_search(X, i, "B", cap_bits)
    return INF if got is None else got[0]


def cosystolic_expansion(X: WeightedComplex, i: int, cap_bits: int = ENUM_CAP_BITS):
    """(h-tilde^i, cosyst^i): expansion relative to Z^i and the lightest
    nontrivial cocycle. h-tilde is None at i = d where delta is undefined;
    +inf sentinels appear when the minimized sets are empty."""
    if not -1 <= i <= X.d:
        raise OutOfRange(f"level {i} outside -1..{X.d}")
    if i == X.d:
        h_tilde = None
    else:
        got = _ratio_search(X, i, "Z", cap_bits)
        h_tilde = INF if got is None else got[0]

    zb = space_basis(X, i, "Z")
    bb = space_basis(X, i, "B")
    if len(zb) == len(bb):
        return h_tilde, INF
    if len(zb) > cap_bits:
        raise TooLarge(f"dim Z^{i} = {len(zb)} exceeds cap {cap_bits}")
    scaled, denom = X.scaled_level_weights(i)
    synd_cols = _syndrome_cols(X, i, "B")
    classes = [_syndrome(z, synd_cols) for z in zb]
    got = kernels.span_min_weight(zb, scaled, 0, classes, True)
    assert got is not None
    return h_tilde, Fraction(got[0], denom)


@dataclass
class LevelSpaces:
    i: int
    dim_c: int
    dim_z: int
    dim_b: int
    dim_h: int
    f2_connected: bool


@dataclass
class CochainSpaces:
    levels: list[LevelSpaces]

    def dim_h(self, i: int) -> int:
        return self.levels[i + 1].dim_h

    def to_json(self) -> dict:
        return {
            "levels": [
                {
                    "i": s.i,
                    "dim_C": s.dim_c,
                    "dim_Z": s.dim_z,
                    "dim_B": s.dim_b,
                    "dim_H": s.dim_h,
                    "f2_connected": s.f2_connected,
                }
                for s in self.levels
            ]
        }


def spaces(X: WeightedComplex, cap: int = 4096) -> CochainSpaces:
    """Dimensions of C/Z/B/H per level -1..d by exact F2 elimination."""
    out = []
    for i in range(-1, X.d + 1):
        n = len(X.level(i))
        if n > cap:
            raise TooLarge(f"|X({i})| = {n} exceeds cap {cap}")
        dz = len(space_basis(X, i, "Z"))
        db = len(space_basis(X, i, "B"))
        out.append(LevelSpaces(i, n, dz, db, dz - db, dz == db))
    return CochainSpaces(out)


def is_minimal(X: WeightedComplex, f: F2Cochain, cap_bits: int = ENUM_CAP_BITS) -> bool:
    """Whether ||f|| equals the distance from f to B^level."""
    return norm(X, f) == distance_to_space(X, f, "B", cap_bits)


def is_locally_minimal(
    X: WeightedComplex, f: F2Cochain, cap_bits: int = ENUM_CAP_BITS
) -> bool:
    """Whether every localization of f to a face of lower dimension is minimal."""
    for i in range(0, f.level):
        for sigma in X.level(i):
            L = link(X, sigma)
            if not is_minimal(L, restrict_cochain(X, f, sigma), cap_bits):
                return False
    return True


def small_set_expansion_check(
    X: WeightedComplex,
    eps: Fraction,
    mu: Fraction,
    cap_bits: int = ENUM_CAP_BITS,
) -> dict:
    """Do all small minimal cochains expand: ||delta f|| > eps ||f||?

    Quantified over nonzero globally minimal f with ||f|| <= mu at every
    level below d; equivalently, per nontrivial coset of B^k whose min
    weight is small enough. Returns the worst violator or a pass.
    """
    eps = Fraction(eps)
    mu = Fraction(mu)
    worst = None
    for k in range(0, X.d):
        got = _ratio_search(X, k, "B", cap_bits, mu=mu)
        if got is None:
            continue
        ratio, f, dnorm, fnorm = got
        if ratio <= eps and (worst is None or ratio < worst["ratio"]):
            worst = {
                "level": k,
                "ratio": ratio,
                "norm": fnorm,
                "delta_norm": dnorm,
                "witness": f,
            }
    return {"ok": worst is None, "eps": eps, "mu": mu, "worst": worst}
