"""Pure-Python Gray-code scan kernels.

Reference implementations of the exhaustive searches; exact for arbitrary
integer weights (Python ints). The compiled backend in `_core.pyx` mirrors
these signatures for 64-bit-safe inputs.

State convention: step g of a scan flips bit ctz(g), so the visited subset
after step g is gray(g) = g ^ (g >> 1).
"""

from __future__ import annotations

BACKEND = "python"


def _bits_and_weights(mask: int, weights: list[int]) -> list[tuple[int, int]]:
    out = []
    while mask:
        low = mask & -mask
        j = low.bit_length() - 1
        out.append((low, weights[j]))
        mask ^= low
    return out


def coset_min_weight_table(
    n_bits: int, weights: list[int], synd_cols: list[int], n_synd: int
) -> tuple[list[int], list[int]]:
    """Min weight and a witness vector per syndrome class, over all 2^n_bits vectors."""
    size = 1 << n_synd
    sentinel = sum(weights) + 1
    minwt = [sentinel] * size
    witness = [0] * size
    minwt[0] = 0
    cur = wt = syn = 0
    for g in range(1, 1 << n_bits):
        j = (g & -g).bit_length() - 1
        bit = 1 << j
        cur ^= bit
        wt += weights[j] if cur & bit else -weights[j]
        syn ^= synd_cols[j]
        if wt < minwt[syn]:
            minwt[syn] = wt
            witness[syn] = cur
    return minwt, witness


def span_min_weight(
    gens: list[int],
    weights: list[int],
    shift: int,
    class_bits: list[int],
    require_nonzero_class: bool,
) -> tuple[int, int, int] | None:
    """Scan shift + span(gens); returns (min weight, argmin vector, class) or None.

    `class_bits[t]` is xor-ed into a class label when generator t is toggled;
    with `require_nonzero_class` only vectors with a nonzero label compete.
    """
    gen_bits = [_bits_and_weights(m, weights) for m in gens]
    cur = shift
    wt = sum(w for _, w in _bits_and_weights(shift, weights))
    cls = 0
    best = None
    if not require_nonzero_class:
        best = (wt, cur, cls)
    for g in range(1, 1 << len(gens)):
        t = (g & -g).bit_length() - 1
        for low, w in gen_bits[t]:
            wt += -w if cur & low else w
        cur ^= gens[t]
        cls ^= class_bits[t]
        if (cls or not require_nonzero_class) and (best is None or wt < best[0]):
            best = (wt, cur, cls)
    return best


def best_ratio_over_cosets(
    reps_delta: list[int],
    weights2: list[int],
    minwt_table: list[int],
    mu_num: int,
    mu_den: int,
    wt_scale: int,
) -> tuple[int, int, int] | None:
    """Minimize wt(delta rep_s) / minwt_table[s] over nonzero syndromes s.

    rep_s is the coset representative whose syndrome is s; its coboundary is
    the xor of `reps_delta` over the bits of s. With mu_num >= 0 only cosets
    whose min weight w satisfies w * mu_den <= mu_num * wt_scale compete.
    Returns (numerator, denominator, syndrome) of the exact minimum or None.
    """
    rep_bits = [_bits_and_weights(m, weights2) for m in reps_delta]
    cur = dwt = syn = 0
    best = None
    for g in range(1, 1 << len(reps_delta)):
        t = (g & -g).bit_length() - 1
        for low, w in rep_bits[t]:
            dwt += -w if cur & low else w
        cur ^= reps_delta[t]
        syn ^= 1 << t
        den = minwt_table[syn]
        if mu_num >= 0 and den * mu_den > mu_num * wt_scale:
            continue
        if best is None or dwt * best[1] < best[0] * den:
            best = (dwt, den, syn)
    return best


def min_cut_ratio(
    n: int, vtx_w: list[int], adj: list[list[tuple[int, int]]]
) -> tuple[int, int, int]:
    """Exact Cheeger scan: minimize cut(S)/min(w(S), w(V-S)).

    Vertex 0 stays outside S, which visits each complementary pair once.
    Returns (cut, side, S) with weights in the caller's integer scales.
    """
    total = sum(vtx_w)
    in_s = cut = side = 0
    best = None
    for g in range(1, 1 << (n - 1)):
        v = (g & -g).bit_length()  # flipped vertex is ctz(g) + 1
        bit = 1 << v
        entering = not in_s & bit
        if entering:
            for u, wuv in adj[v]:
                cut += -wuv if in_s >> u & 1 else wuv
            side += vtx_w[v]
        else:
            in_s ^= bit
            for u, wuv in adj[v]:
                cut += wuv if in_s >> u & 1 else -wuv
            side -= vtx_w[v]
        if entering:
            in_s |= bit
        den = min(side, total - side)
        if best is None or cut * best[1] < best[0] * den:
            best = (cut, den, in_s)
    return best
