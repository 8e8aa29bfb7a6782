"""GF(2) linear algebra on int bitsets.

A vector in F2^n is a Python int whose bit j is coordinate j; a matrix is a
list of row ints. Python ints give arbitrary width and word-parallel xor.
All routines use reduced row echelon form with the lowest set bit as pivot.
"""

from __future__ import annotations


def rref(rows: list[int]) -> tuple[list[int], list[int]]:
    """Reduced row echelon form: (reduced nonzero rows, their pivot columns)."""
    reduced: list[int] = []
    pivots: list[int] = []
    for r in rows:
        for b, p in zip(reduced, pivots):
            if r >> p & 1:
                r ^= b
        if r == 0:
            continue
        p = (r & -r).bit_length() - 1
        for i, b in enumerate(reduced):
            if b >> p & 1:
                reduced[i] = b ^ r
        reduced.append(r)
        pivots.append(p)
    order = sorted(range(len(pivots)), key=pivots.__getitem__)
    return [reduced[i] for i in order], [pivots[i] for i in order]


def rank(rows: list[int]) -> int:
    return len(rref(rows)[0])


def row_reduce(rows: list[int]) -> list[int]:
    """Basis of the rowspan, fully reduced."""
    return rref(rows)[0]


def reduce_vector(vec: int, reduced_rows: list[int], pivots: list[int]) -> int:
    """Residue of vec modulo the span of an rref basis."""
    for b, p in zip(reduced_rows, pivots):
        if vec >> p & 1:
            vec ^= b
    return vec


def in_span(vec: int, rows: list[int]) -> bool:
    reduced, pivots = rref(rows)
    return reduce_vector(vec, reduced, pivots) == 0


def nullspace(rows: list[int], n_cols: int) -> list[int]:
    """Basis of {x : parity(r & x) = 0 for every row r}."""
    reduced, pivots = rref(rows)
    pivot_set = set(pivots)
    basis = []
    for j in range(n_cols):
        if j in pivot_set:
            continue
        vec = 1 << j
        for b, p in zip(reduced, pivots):
            if b >> j & 1:
                vec |= 1 << p
        basis.append(vec)
    return basis


def solve(rows: list[int], n_cols: int, target: int) -> int | None:
    """One x with parity(rows[i] & x) = bit i of target, or None."""
    m = list(rows)
    t = [target >> i & 1 for i in range(len(rows))]
    pivcols: list[int] = []
    pivrows: list[int] = []
    taken = [False] * len(m)
    for j in range(n_cols):
        pr = None
        for i in range(len(m)):
            if not taken[i] and m[i] >> j & 1:
                pr = i
                break
        if pr is None:
            continue
        taken[pr] = True
        pivcols.append(j)
        pivrows.append(pr)
        for i in range(len(m)):
            if i != pr and m[i] >> j & 1:
                m[i] ^= m[pr]
                t[i] ^= t[pr]
    if any(m[i] == 0 and t[i] for i in range(len(m))):
        return None
    sol = 0
    for j, i in zip(pivcols, pivrows):
        if t[i]:
            sol |= 1 << j
    return sol


def parity(x: int) -> int:
    return x.bit_count() & 1


def transpose(rows: list[int], n_cols: int) -> list[int]:
    cols = [0] * n_cols
    for i, r in enumerate(rows):
        while r:
            low = r & -r
            cols[low.bit_length() - 1] |= 1 << i
            r ^= low
    return cols


def matmul(a: list[int], b: list[int], n_cols_b: int) -> list[int]:
    """Product over GF(2); bit j of a row of `a` selects row j of `b`."""
    out = []
    for r in a:
        acc = 0
        while r:
            low = r & -r
            acc ^= b[low.bit_length() - 1]
            r ^= low
        out.append(acc)
    return out
