"""Cocycle testers, exact testability constants, and CSS code extraction.

The tester samples faces by weight and rejects on a nonzero coboundary bit;
its exact rejection probability is the weighted coboundary norm. The
testability constant is recomputed here by a direct definitional double loop
(every cochain against the full coboundary space) so it can serve as an
independent oracle for the coset-scan route in `f2`.
"""

from __future__ import annotations

import random
from dataclasses import dataclass
from fractions import Fraction

from . import f2, gf2, kernels
from .complexes import WeightedComplex
from .errors import OutOfRange, TooLarge, WrongDimension

NAIVE_CAP_BITS = 16


@dataclass
class LinearCodeF2:
    """Length-n code with mutually orthogonal generator and check bases."""

    length: int
    generators: list[int]
    checks: list[int]

    def __post_init__(self):
        for g in self.generators:
            for h in self.checks:
                if gf2.parity(g & h):
                    raise OutOfRange("generator and check bases not orthogonal")

    @property
    def dimension(self) -> int:
        return len(self.generators)


def coboundary_code(X: WeightedComplex, i: int) -> LinearCodeF2:
    """The code B^i(X) whose words the (i+1)-cocycle test accepts."""
    gens = f2.space_basis(X, i, "B")
    checks = f2._check_matrix(X, i, "B")
    return LinearCodeF2(len(X.level(i)), gens, checks)


def cocycle_test(
    X: WeightedComplex, i: int, f: f2.F2Cochain, seed: int, trials: int
) -> dict:
    """Run the (i+1)-cocycle test: sample a face by weight, reject if the
    coboundary is set there. Returns the empirical and exact rejection rates."""
    if not -1 <= i <= X.d - 1:
        raise OutOfRange(f"test level {i} outside -1..{X.d - 1}")
    if trials < 1:
        raise OutOfRange("at least one trial")
    df = f2.coboundary(X, i, f)
    exact = f2.norm(X, df)
    weights = [float(w) for w in X.level_weights(i + 1)]
    rng = random.Random(seed)
    m = len(weights)
    cum = []
    acc = 0.0
    for w in weights:
        acc += w
        cum.append(acc)
    picks = rng.choices(range(m), cum_weights=cum, k=trials)
    rejected = sum(1 for p in picks if df.bits >> p & 1)
    return {
        "exact_rejection": exact,
        "empirical_rejection": rejected / trials,
        "trials": trials,
        "rejected": rejected,
    }


def testability_epsilon(
    X: WeightedComplex, i: int, cap_bits: int = NAIVE_CAP_BITS
) -> Fraction | float:
    """Worst-case rejection-to-distance ratio of the cocycle test on B^i.

    Direct enumeration: every cochain outside B^i, with its distance found by
    scanning the full coboundary space. Deliberately the slow definitional
    route; equality with `f2.coboundary_expansion` is the executable content
    of the tester-expansion equivalence.
    """
    if not -1 <= i <= X.d - 1:
        raise OutOfRange(f"level {i} outside -1..{X.d - 1}")
    n = len(X.level(i))
    gens = f2.space_basis(X, i, "B")
    if n > cap_bits or len(gens) + n > 2 * cap_bits:
        raise TooLarge(f"naive search needs |X({i})| and dim B within {cap_bits}")
    w1, d1 = X.scaled_level_weights(i)
    w2, d2 = X.scaled_level_weights(i + 1)
    cols = f2.delta_cols(X, i)

    space = [0]
    for g in gens:
        space += [x ^ g for x in space]
    b_set = set(space)

    def wt(bits: int, table: list[int]) -> int:
        total = 0
        while bits:
            low = bits & -bits
            total += table[low.bit_length() - 1]
            bits ^= low
        return total

    best_num = best_den = None
    for F in range(1, 1 << n):
        if F in b_set:
            continue
        dF = 0
        rest = F
        while rest:
            low = rest & -rest
            dF ^= cols[low.bit_length() - 1]
            rest ^= low
        num = wt(dF, w2)
        den = min(wt(F ^ g, w1) for g in space)
        if best_num is None or num * best_den < best_num * den:
            best_num, best_den = num, den
    if best_num is None:
        return f2.INF  # every word is a codeword
    return Fraction(best_num * d1, best_den * d2)


@dataclass
class CssCode:
    """CSS pair extracted from a 2-complex: qubits on edges, checks on
    vertices (hx) and triangles (hz), as masks over the edge order."""

    n: int
    hx: list[int]
    hz: list[int]
    rate: int
    d_x: int | None = None
    d_z: int | None = None

    def __post_init__(self):
        for a in self.hx:
            for b in self.hz:
                if gf2.parity(a & b):
                    raise WrongDimension("H_X and H_Z rows not orthogonal")

    def to_json(self) -> dict:
        return {
            "n": self.n,
            "rate": self.rate,
            "d_x": self.d_x,
            "d_z": self.d_z,
            "h_x_rows": len(self.hx),
            "h_z_rows": len(self.hz),
        }

    def export_checks(self) -> tuple[str, str]:
        """Sparse coordinate text (row col per line) for H_X and H_Z."""

        def fmt(rows: list[int]) -> str:
            lines = []
            for r, mask in enumerate(rows):
                while mask:
                    low = mask & -mask
                    lines.append(f"{r} {low.bit_length() - 1}")
                    mask ^= low
            return "\n".join(lines) + ("\n" if lines else "")

        return fmt(self.hx), fmt(self.hz)


def css_from_complex(X: WeightedComplex) -> CssCode:
    """Qubits on X(1); H_Z is the triangle-edge matrix of delta_1, H_X the
    transposed vertex-edge matrix of delta_0 (genuine vertices only)."""
    if X.d != 2:
        raise WrongDimension(f"CSS extraction needs a 2-complex, got d={X.d}")
    n = len(X.level(1))
    hz = f2.delta_rows(X, 1)
    hx = f2.delta_cols(X, 0)  # row per vertex: edges containing it
    rate = (n - gf2.rank(hx)) - gf2.rank(hz)
    return CssCode(n=n, hx=list(hx), hz=list(hz), rate=rate)


def _coset_leader_distance(
    checks: list[int], stabilizers: list[int], n: int, cap_bits: int
) -> int | None:
    """Min Hamming weight over ker(checks) minus rowspan(stabilizers)."""
    kernel = gf2.nullspace(checks, n)
    stab = gf2.row_reduce(stabilizers)
    reduced, pivots = gf2.rref(stab)
    logical = []
    for v in kernel:
        if gf2.reduce_vector(v, reduced, pivots):
            logical.append(v)
    logical = gf2.row_reduce(
        [gf2.reduce_vector(v, reduced, pivots) for v in logical]
    )
    if not logical:
        return None
    gens = stab + logical
    if len(gens) > cap_bits:
        raise TooLarge(f"kernel dimension {len(gens)} exceeds cap {cap_bits}")
    classes = [0] * len(stab) + [1 << t for t in range(len(logical))]
    got = kernels.span_min_weight(gens, [1] * n, 0, classes, True)
    assert got is not None
    return got[0]


def css_distances(code: CssCode, cap_bits: int = f2.ENUM_CAP_BITS) -> tuple:
    """Exact (d_X, d_Z) by coset enumeration; None when the rate is 0."""
    if code.rate == 0:
        code.d_x = code.d_z = None
        return None, None
    code.d_x = _coset_leader_distance(code.hx, code.hz, code.n, cap_bits)
    code.d_z = _coset_leader_distance(code.hz, code.hx, code.n, cap_bits)
    return code.d_x, code.d_z


def classical_min_distance(checks: list[int], n: int, cap_bits: int = f2.ENUM_CAP_BITS) -> int | None:
    """Min weight of a nonzero codeword of ker(checks); the same searcher as
    the CSS distances, with no stabilizer quotient."""
    return _coset_leader_distance(checks, [], n, cap_bits)
