# cython: boundscheck=False, wraparound=False, cdivision=True
"""Compiled Gray-code scan kernels.

Same contracts as `pure.py`, restricted to inputs whose scaled weights fit
int64 (the dispatcher checks before routing here). Ratio and threshold
comparisons use 128-bit products, so they stay exact.
"""

import numpy as np

cdef extern from *:
    ctypedef long long int128 "__int128"
    int __builtin_ctzll(unsigned long long) nogil


def coset_min_weight_table(int n_bits, object weights, object synd_cols, int n_synd):
    cdef long long[::1] w = np.asarray(weights, dtype=np.int64)
    cdef long long[::1] sc = np.asarray(synd_cols, dtype=np.int64)
    cdef Py_ssize_t size = (<Py_ssize_t>1) << n_synd
    cdef long long total = 0
    cdef int j
    for j in range(n_bits):
        total += w[j]
    minwt_arr = np.full(size, total + 1, dtype=np.int64)
    wit_arr = np.zeros(size, dtype=np.int64)
    cdef long long[::1] minwt = minwt_arr
    cdef long long[::1] wit = wit_arr
    minwt[0] = 0
    cdef unsigned long long g, end = (<unsigned long long>1) << n_bits
    cdef unsigned long long cur = 0, bit
    cdef long long wt = 0, syn = 0
    with nogil:
        for g in range(1, end):
            j = __builtin_ctzll(g)
            bit = (<unsigned long long>1) << j
            cur ^= bit
            if cur & bit:
                wt += w[j]
            else:
                wt -= w[j]
            syn ^= sc[j]
            if wt < minwt[syn]:
                minwt[syn] = wt
                wit[syn] = <long long>cur
    return minwt_arr.tolist(), wit_arr.tolist()


cdef _pack(masks, int n_bits):
    """Python ints -> (k, W) uint64 words plus flattened set-bit index lists."""
    cdef int k = len(masks)
    cdef int W = (n_bits + 63) // 64 if n_bits else 1
    words = np.zeros((k, W), dtype=np.uint64)
    idx_off = [0]
    idx_flat = []
    for t, m in enumerate(masks):
        mm = int(m)
        while mm:
            low = mm & -mm
            b = low.bit_length() - 1
            idx_flat.append(b)
            words[t, b >> 6] |= np.uint64(1) << np.uint64(b & 63)
            mm ^= low
        idx_off.append(len(idx_flat))
    return (
        words,
        np.asarray(idx_flat, dtype=np.int32),
        np.asarray(idx_off, dtype=np.int64),
    )


cdef object _unpack(unsigned long long[::1] vec, int W):
    out = 0
    cdef int i
    for i in range(W):
        out |= int(vec[i]) << (64 * i)
    return out


def span_min_weight(gens, weights, shift, class_bits, bint require_nonzero_class):
    cdef int n_bits = len(weights)
    cdef int k = len(gens)
    cdef int W = (n_bits + 63) // 64 if n_bits else 1
    cdef long long[::1] w = np.asarray(weights, dtype=np.int64)
    words_arr, idx_flat_arr, idx_off_arr = _pack(gens, n_bits)
    cdef unsigned long long[:, ::1] words = words_arr
    cdef int[::1] idx = idx_flat_arr
    cdef long long[::1] off = idx_off_arr
    cdef long long[::1] cls_bits = np.asarray(class_bits, dtype=np.int64)

    cur_arr = np.zeros(W, dtype=np.uint64)
    best_arr = np.zeros(W, dtype=np.uint64)
    cdef unsigned long long[::1] cur = cur_arr
    cdef unsigned long long[::1] best_vec = best_arr
    cdef long long wt = 0, cls = 0
    cdef int i, t, b
    sm = int(shift)
    while sm:
        low = sm & -sm
        b = low.bit_length() - 1
        cur[b >> 6] ^= (<unsigned long long>1) << (b & 63)
        wt += w[b]
        sm ^= low
    cdef bint found = False
    cdef long long best_wt = 0, best_cls = 0
    if not require_nonzero_class:
        found = True
        best_wt = wt
        best_vec[:] = cur
        best_cls = cls
    cdef unsigned long long g, end = (<unsigned long long>1) << k
    cdef long long p
    cdef unsigned long long mbit
    with nogil:
        for g in range(1, end):
            t = __builtin_ctzll(g)
            for p in range(off[t], off[t + 1]):
                b = idx[p]
                mbit = (<unsigned long long>1) << (b & 63)
                if cur[b >> 6] & mbit:
                    wt -= w[b]
                else:
                    wt += w[b]
                cur[b >> 6] ^= mbit
            cls ^= cls_bits[t]
            if (cls != 0 or not require_nonzero_class) and (not found or wt < best_wt):
                found = True
                best_wt = wt
                best_cls = cls
                for i in range(W):
                    best_vec[i] = cur[i]
    if not found:
        return None
    return best_wt, _unpack(best_vec, W), best_cls


def best_ratio_over_cosets(
    reps_delta, weights2, minwt_table, object mu_num, object mu_den, object wt_scale
):
    cdef int n_bits = len(weights2)
    cdef int k = len(reps_delta)
    cdef int W = (n_bits + 63) // 64 if n_bits else 1
    cdef long long[::1] w = np.asarray(weights2, dtype=np.int64)
    cdef long long[::1] table = np.asarray(minwt_table, dtype=np.int64)
    words_arr, idx_flat_arr, idx_off_arr = _pack(reps_delta, n_bits)
    cdef unsigned long long[:, ::1] words = words_arr
    cdef int[::1] idx = idx_flat_arr
    cdef long long[::1] off = idx_off_arr
    cur_arr = np.zeros(W, dtype=np.uint64)
    cdef unsigned long long[::1] cur = cur_arr
    cdef long long dwt = 0, syn = 0
    cdef long long mu_n = mu_num, mu_d = mu_den, scale = wt_scale
    cdef bint found = False
    cdef long long best_num = 0, best_den = 1, best_syn = 0, den
    cdef unsigned long long g, end = (<unsigned long long>1) << k
    cdef unsigned long long mbit
    cdef int t, b
    cdef long long p
    with nogil:
        for g in range(1, end):
            t = __builtin_ctzll(g)
            for p in range(off[t], off[t + 1]):
                b = idx[p]
                mbit = (<unsigned long long>1) << (b & 63)
                if cur[b >> 6] & mbit:
                    dwt -= w[b]
                else:
                    dwt += w[b]
                cur[b >> 6] ^= mbit
            syn ^= (<long long>1) << t
            den = table[syn]
            if mu_n >= 0 and <int128>den * mu_d > <int128>mu_n * scale:
                continue
            if not found or <int128>dwt * best_den < <int128>best_num * den:
                found = True
                best_num = dwt
                best_den = den
                best_syn = syn
    if not found:
        return None
    return best_num, best_den, best_syn


def min_cut_ratio(int n, vtx_w, adj):
    cdef long long[::1] vw = np.asarray(vtx_w, dtype=np.int64)
    offs = [0]
    nbrs = []
    ws = []
    for row in adj:
        for u_pair in row:
            nbrs.append(u_pair[0])
            ws.append(u_pair[1])
        offs.append(len(nbrs))
    cdef long long[::1] off = np.asarray(offs, dtype=np.int64)
    cdef int[::1] nbr = np.asarray(nbrs, dtype=np.int32)
    cdef long long[::1] ew = np.asarray(ws, dtype=np.int64)
    cdef long long total = 0
    cdef int v
    for v in range(n):
        total += vw[v]
    cdef unsigned long long in_s = 0, bit, g, end = (<unsigned long long>1) << (n - 1)
    cdef long long cut = 0, side = 0, den
    cdef bint entering
    cdef long long best_cut = 0, best_den = 0
    cdef unsigned long long best_mask = 0
    cdef bint found = False
    cdef long long p
    cdef int u
    with nogil:
        for g in range(1, end):
            v = __builtin_ctzll(g) + 1
            bit = (<unsigned long long>1) << v
            entering = (in_s & bit) == 0
            if entering:
                for p in range(off[v], off[v + 1]):
                    u = nbr[p]
                    if in_s >> u & 1:
                        cut -= ew[p]
                    else:
                        cut += ew[p]
                side += vw[v]
                in_s |= bit
            else:
                in_s ^= bit
                for p in range(off[v], off[v + 1]):
                    u = nbr[p]
                    if in_s >> u & 1:
                        cut += ew[p]
                    else:
                        cut -= ew[p]
                side -= vw[v]
            den = side if side < total - side else total - side
            if not found or <int128>cut * best_den < <int128>best_cut * den:
                found = True
                best_cut = cut
                best_den = den
                best_mask = in_s
    return best_cut, best_den, int(best_mask)
