"""Kernel backend selection.

The compiled extension handles the hot exhaustive scans when inputs fit its
64-bit weight arithmetic; otherwise (or when the extension is missing, or
HDX_KERNEL_BACKEND=python is set) the pure-Python reference runs. Both are
exact; `benchmarks/bench_kernels.py` compares their speed.
"""

from __future__ import annotations

import os

from . import pure

try:
    from . import _core
except ImportError:
    _core = None

_FORCED = os.environ.get("HDX_KERNEL_BACKEND", "")
_I62 = 1 << 62
_I31 = 1 << 31

BACKEND = "cython" if (_core is not None and _FORCED != "python") else "python"


def _compiled_ok() -> bool:
    return _core is not None and _FORCED != "python"


def coset_min_weight_table(n_bits, weights, synd_cols, n_synd):
    if _compiled_ok() and sum(weights) < _I62 and n_synd <= 26:
        return _core.coset_min_weight_table(n_bits, weights, synd_cols, n_synd)
    return pure.coset_min_weight_table(n_bits, weights, synd_cols, n_synd)


def span_min_weight(gens, weights, shift, class_bits, require_nonzero_class):
    if (
        _compiled_ok()
        and sum(weights) < _I62
        and len(gens) <= 62
        and all(0 <= c < _I62 for c in class_bits)
    ):
        return _core.span_min_weight(
            gens, weights, shift, class_bits, require_nonzero_class
        )
    return pure.span_min_weight(gens, weights, shift, class_bits, require_nonzero_class)


def best_ratio_over_cosets(reps_delta, weights2, minwt_table, mu_num, mu_den, wt_scale):
    if (
        _compiled_ok()
        and sum(weights2) < _I62
        and len(reps_delta) <= 62
        and -1 <= mu_num < _I31
        and 0 < mu_den < _I31
        and 0 < wt_scale < _I62
    ):
        return _core.best_ratio_over_cosets(
            reps_delta, weights2, minwt_table, mu_num, mu_den, wt_scale
        )
    return pure.best_ratio_over_cosets(
        reps_delta, weights2, minwt_table, mu_num, mu_den, wt_scale
    )


def min_cut_ratio(n, vtx_w, adj):
    edge_total = sum(w for row in adj for _, w in row)
    if _compiled_ok() and sum(vtx_w) < _I62 and edge_total < _I62 and n <= 62:
        return _core.min_cut_ratio(n, vtx_w, adj)
    return pure.min_cut_ratio(n, vtx_w, adj)
