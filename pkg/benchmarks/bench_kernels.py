"""Compare the compiled Gray-scan kernels against the pure-Python reference.

Run: python benchmarks/bench_kernels.py [--bits N]

Times the four kernels on identical inputs and checks the results agree.
The compiled backend is required here; install with a C compiler present.
"""

from __future__ import annotations

import argparse
import random
import time

from hdx.kernels import _core, pure


def timed(fn, *args):
    t0 = time.perf_counter()
    out = fn(*args)
    return out, time.perf_counter() - t0


def row(name, pure_t, core_t):
    speedup = pure_t / core_t if core_t > 0 else float("inf")
    print(f"{name:34s} {pure_t:10.3f}s {core_t:10.3f}s {speedup:8.1f}x")


def main():
    ap = argparse.ArgumentParser()
    ap.add_argument("--bits", type=int, default=20, help="scan size exponent")
    args = ap.parse_args()
    if _core is None:
        raise SystemExit("compiled kernels not built; reinstall with a C compiler")

    rng = random.Random(1)
    n = args.bits
    print(f"{'kernel':34s} {'python':>11s} {'cython':>11s} {'speedup':>9s}")

    weights = [rng.randint(1, 99) for _ in range(n)]
    n_synd = n - 6
    synd_cols = [1 << j for j in range(n_synd)]
    synd_cols += [rng.getrandbits(n_synd) for _ in range(n - n_synd)]
    rng.shuffle(synd_cols)
    a, tp = timed(pure.coset_min_weight_table, n, weights, synd_cols, n_synd)
    b, tc = timed(_core.coset_min_weight_table, n, weights, synd_cols, n_synd)
    assert list(a[0]) == list(b[0])
    row(f"coset_min_weight_table 2^{n}", tp, tc)

    k = n
    m = 96
    gens = [rng.getrandbits(m) for _ in range(k)]
    w2 = [rng.randint(1, 99) for _ in range(m)]
    cls = [rng.getrandbits(4) for _ in range(k)]
    a, tp = timed(pure.span_min_weight, gens, w2, 0, cls, True)
    b, tc = timed(_core.span_min_weight, gens, w2, 0, cls, True)
    assert a[0] == b[0]
    row(f"span_min_weight 2^{k}", tp, tc)

    table = [rng.randint(1, 999) for _ in range(1 << k)]
    a, tp = timed(pure.best_ratio_over_cosets, gens, w2, table, -1, 1, 1)
    b, tc = timed(_core.best_ratio_over_cosets, gens, w2, table, -1, 1, 1)
    assert a[0] * b[1] == b[0] * a[1]
    row(f"best_ratio_over_cosets 2^{k}", tp, tc)

    nv = n + 1
    vw = [rng.randint(1, 9) for _ in range(nv)]
    adj = [[] for _ in range(nv)]
    for u in range(nv):
        for v in range(u + 1, nv):
            if rng.random() < 0.4:
                w = rng.randint(1, 9)
                adj[u].append((v, w))
                adj[v].append((u, w))
    a, tp = timed(pure.min_cut_ratio, nv, vw, adj)
    b, tc = timed(_core.min_cut_ratio, nv, vw, adj)
    assert a[0] * b[1] == b[0] * a[1]
    row(f"min_cut_ratio 2^{nv - 1}", tp, tc)


if __name__ == "__main__":
    main()
