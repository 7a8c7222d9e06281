"""numba-compiled kernels for the hot loops.

Same contracts as backends.numpy_impl; field arithmetic is inlined on
int64 digit vectors using the context's F_q lookup tables.
"""

from __future__ import annotations

import numpy as np
from numba import njit

from .. import arrayops as ao

NAME = "numba"


@njit(cache=True)
def _gf_mul(a, b, out, scratch, mul_t, add_t, red, m):
    for i in range(2 * m - 1):
        scratch[i] = 0
    for i in range(m):
        ai = a[i]
        if ai == 0:
            continue
        for j in range(m):
            bj = b[j]
            if bj:
                scratch[i + j] = add_t[scratch[i + j], mul_t[ai, bj]]
    for d in range(2 * m - 2, m - 1, -1):
        c = scratch[d]
        if c:
            for j in range(m):
                rj = red[d - m, j]
                if rj:
                    scratch[j] = add_t[scratch[j], mul_t[c, rj]]
    for j in range(m):
        out[j] = scratch[j]


@njit(cache=True)
def _gf_pow(a, n, out, base, tmp, scratch, mul_t, add_t, red, m):
    for j in range(m):
        out[j] = 0
        base[j] = a[j]
    out[0] = 1
    e = n
    while e > 0:
        if e & 1:
            _gf_mul(out, base, tmp, scratch, mul_t, add_t, red, m)
            for j in range(m):
                out[j] = tmp[j]
        _gf_mul(base, base, tmp, scratch, mul_t, add_t, red, m)
        for j in range(m):
            base[j] = tmp[j]
        e >>= 1


@njit(cache=True)
def _rref_kernel(data, mul_t, add_t, neg_t, red, qm):
    rows, cols, m = data.shape
    scratch = np.zeros(2 * m - 1, dtype=np.int64)
    inv = np.zeros(m, dtype=np.int64)
    base = np.zeros(m, dtype=np.int64)
    tmp = np.zeros(m, dtype=np.int64)
    fac = np.zeros(m, dtype=np.int64)
    pivots = np.empty(min(rows, cols), dtype=np.int64)
    npv = 0
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pr = -1
        for r in range(row, rows):
            for t in range(m):
                if data[r, col, t] != 0:
                    pr = r
                    break
            if pr >= 0:
                break
        if pr < 0:
            continue
        if pr != row:
            for c2 in range(cols):
                for t in range(m):
                    v = data[row, c2, t]
                    data[row, c2, t] = data[pr, c2, t]
                    data[pr, c2, t] = v
        _gf_pow(data[row, col], qm - 2, inv, base, tmp, scratch, mul_t, add_t, red, m)
        for c2 in range(cols):
            _gf_mul(data[row, c2], inv, tmp, scratch, mul_t, add_t, red, m)
            for t in range(m):
                data[row, c2, t] = tmp[t]
        for r2 in range(rows):
            if r2 == row:
                continue
            nz = False
            for t in range(m):
                fac[t] = data[r2, col, t]
                if fac[t] != 0:
                    nz = True
            if not nz:
                continue
            for c2 in range(cols):
                _gf_mul(fac, data[row, c2], tmp, scratch, mul_t, add_t, red, m)
                for t in range(m):
                    data[r2, c2, t] = add_t[data[r2, c2, t], neg_t[tmp[t]]]
        pivots[npv] = col
        npv += 1
        row += 1
    return pivots[:npv]


def rref_fqm(ctx, data):
    """In-place Gauss-Jordan on (rows, cols, m); returns pivot columns."""
    return _rref_kernel(data, ctx.mul_t, ctx.add_t, ctx.neg_t, ctx.red, ctx.qm)


@njit(cache=True)
def _rank_fq_kernel(mat, mul_t, add_t, neg_t, inv_t):
    rows, cols = mat.shape
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        pr = -1
        for r in range(row, rows):
            if mat[r, col] != 0:
                pr = r
                break
        if pr < 0:
            continue
        if pr != row:
            for c2 in range(cols):
                v = mat[row, c2]
                mat[row, c2] = mat[pr, c2]
                mat[pr, c2] = v
        f = inv_t[mat[row, col]]
        for c2 in range(cols):
            mat[row, c2] = mul_t[f, mat[row, c2]]
        for r2 in range(rows):
            if r2 == row or mat[r2, col] == 0:
                continue
            g = mat[r2, col]
            for c2 in range(cols):
                mat[r2, c2] = add_t[mat[r2, c2], neg_t[mul_t[g, mat[row, c2]]]]
        row += 1
    return row


def rank_fq(ctx, mat):
    mat = np.ascontiguousarray(mat, dtype=np.int64).copy()
    return int(_rank_fq_kernel(mat, ctx.mul_t, ctx.add_t, ctx.neg_t, ctx.inv_t))


@njit(cache=True)
def _batched_rank_kernel(mats, mul_t, add_t, neg_t, inv_t):
    B = mats.shape[0]
    out = np.empty(B, dtype=np.int64)
    for b in range(B):
        out[b] = _rank_fq_kernel(mats[b], mul_t, add_t, neg_t, inv_t)
    return out


def batched_rank_fq(ctx, mats):
    mats = np.ascontiguousarray(mats, dtype=np.int64).copy()
    return _batched_rank_kernel(mats, ctx.mul_t, ctx.add_t, ctx.neg_t, ctx.inv_t)


@njit(cache=True)
def _min_rank_kernel(G, q, qm, mul_t, add_t, neg_t, inv_t, red):
    k, n, m = G.shape
    scratch = np.zeros(2 * m - 1, dtype=np.int64)
    tmp = np.zeros(m, dtype=np.int64)
    msg = np.zeros((k, m), dtype=np.int64)
    word = np.zeros((n, m), dtype=np.int64)
    expand = np.zeros((n, m), dtype=np.int64)
    best = n * m + 1
    total = qm ** k
    for code in range(1, total):
        # message digits from the packed code, base q, low digit first
        c = code
        for j in range(k):
            r = c % qm
            c //= qm
            for t in range(m):
                msg[j, t] = r % q
                r //= q
        for i in range(n):
            for t in range(m):
                word[i, t] = 0
        for j in range(k):
            nz = False
            for t in range(m):
                if msg[j, t] != 0:
                    nz = True
                    break
            if not nz:
                continue
            for i in range(n):
                _gf_mul(msg[j], G[j, i], tmp, scratch, mul_t, add_t, red, m)
                for t in range(m):
                    word[i, t] = add_t[word[i, t], tmp[t]]
        for i in range(n):
            for t in range(m):
                expand[i, t] = word[i, t]
        r = _rank_fq_kernel(expand, mul_t, add_t, neg_t, inv_t)
        if r < best:
            best = r
            if best == 1:
                break
    return best


def min_rank_scan(ctx, G):
    return int(_min_rank_kernel(np.ascontiguousarray(G, dtype=np.int64),
                                ctx.q, ctx.qm, ctx.mul_t, ctx.add_t,
                                ctx.neg_t, ctx.inv_t, ctx.red))


@njit(cache=True)
def _hyperplane_kernel(gens, q, qm, max_weight, mul_t, add_t, neg_t, inv_t, red):
    n, k, m = gens.shape
    scratch = np.zeros(2 * m - 1, dtype=np.int64)
    tmp = np.zeros(m, dtype=np.int64)
    h = np.zeros((k, m), dtype=np.int64)
    vals = np.zeros((n, m), dtype=np.int64)
    for lead in range(k):
        total = qm ** (k - lead - 1)
        for code in range(total):
            for j in range(k):
                for t in range(m):
                    h[j, t] = 0
            h[lead, 0] = 1
            c = code
            for j in range(lead + 1, k):
                r = c % qm
                c //= qm
                for t in range(m):
                    h[j, t] = r % q
                    r //= q
            for i in range(n):
                for t in range(m):
                    vals[i, t] = 0
                for j in range(lead, k):
                    _gf_mul(h[j], gens[i, j], tmp, scratch, mul_t, add_t, red, m)
                    for t in range(m):
                        vals[i, t] = add_t[vals[i, t], tmp[t]]
            r = _rank_fq_kernel(vals, mul_t, add_t, neg_t, inv_t)
            if n - r > max_weight:
                return False
    return True


def hyperplane_scan(ctx, gens, max_weight):
    return bool(_hyperplane_kernel(np.ascontiguousarray(gens, dtype=np.int64),
                                   ctx.q, ctx.qm, max_weight, ctx.mul_t,
                                   ctx.add_t, ctx.neg_t, ctx.inv_t, ctx.red))


@njit(cache=True)
def _coset_kernel(A, E, mul_t, add_t, neg_t, red):
    k = A.shape[0]
    m = A.shape[2]
    L = E.shape[0]
    scratch = np.zeros(2 * m - 1, dtype=np.int64)
    tmp = np.zeros(m, dtype=np.int64)
    acc = np.zeros(m, dtype=np.int64)
    bars = np.zeros((k, m), dtype=np.int64)
    total = L ** k
    members = np.empty(total, dtype=np.int64)
    cnt = 0
    for code in range(total):
        c = code
        for j in range(k):
            idx = c % L
            c //= L
            for t in range(m):
                bars[j, t] = E[idx, t]
        ok = True
        for t in range(k):
            for u in range(m):
                acc[u] = 0
            for i in range(t):
                _gf_mul(A[i, t], bars[i], tmp, scratch, mul_t, add_t, red, m)
                for u in range(m):
                    acc[u] = add_t[acc[u], tmp[u]]
            for j in range(t + 1, k):
                _gf_mul(A[t, j], bars[j], tmp, scratch, mul_t, add_t, red, m)
                for u in range(m):
                    acc[u] = add_t[acc[u], neg_t[tmp[u]]]
            for u in range(m):
                if acc[u] != 0:
                    ok = False
                    break
            if not ok:
                break
        if ok:
            members[cnt] = code
            cnt += 1
    return members[:cnt]


def coset_scan(ctx, A, E):
    return _coset_kernel(np.ascontiguousarray(A, dtype=np.int64),
                         np.ascontiguousarray(E, dtype=np.int64),
                         ctx.mul_t, ctx.add_t, ctx.neg_t, ctx.red)


def warmup(ctx):
    """Force compilation of every kernel on tiny inputs."""
    data = ao.zeros(ctx, (2, 2))
    data[0, 0, 0] = 1
    rref_fqm(ctx, data.copy())
    rank_fq(ctx, np.eye(2, dtype=np.int64))
    batched_rank_fq(ctx, np.eye(2, dtype=np.int64)[None])
    G = ao.zeros(ctx, (1, 1))
    G[0, 0, 0] = 1
    min_rank_scan(ctx, G)
    hyperplane_scan(ctx, ao.ones(ctx, (1, 1)), 1)
    coset_scan(ctx, ao.zeros(ctx, (2, 2)), ao.zeros(ctx, (1,)))
