"""Pure-numpy reference implementations of the hot kernels.

Row operations are vectorized across whole matrices through the F_q
lookup tables; semantics match backends.numba_impl exactly.
"""

from __future__ import annotations

import numpy as np

from .. import arrayops as ao

NAME = "numpy"


def _scalar_inv(ctx, digits):
    return np.array(ctx._inv_digits(tuple(int(d) for d in digits)), dtype=np.int64)


def rref_fqm(ctx, data):
    """In-place Gauss-Jordan on (rows, cols, m); returns pivot columns."""
    rows, cols, m = data.shape
    pivots = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(np.any(data[row:, col, :] != 0, axis=-1))[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            data[[row, pr]] = data[[pr, row]]
        inv = _scalar_inv(ctx, data[row, col])
        data[row] = ao.amul(ctx, data[row], inv[None, :])
        factors = data[:, col, :].copy()
        factors[row] = 0
        update = ao.amul(ctx, factors[:, None, :], data[row][None, :, :])
        data[:] = ao.asub(ctx, data, update)
        pivots.append(col)
        row += 1
    return np.array(pivots, dtype=np.int64)


def rank_fq(ctx, mat):
    """Rank over F_q of a matrix of F_q codes (not modified)."""
    return int(batched_rank_fq(ctx, mat[None, :, :])[0])


def batched_rank_fq(ctx, mats):
    """Ranks over F_q of a (B, R, C) stack of F_q-code matrices."""
    mats = np.ascontiguousarray(mats, dtype=np.int64).copy()
    B, R, C = mats.shape
    add_t, mul_t, neg_t, inv_t = ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t
    row_ptr = np.zeros(B, dtype=np.int64)
    bidx = np.arange(B)
    rows = np.arange(R)
    for col in range(C):
        live = row_ptr < R
        cand = (mats[:, :, col] != 0) & (rows[None, :] >= row_ptr[:, None]) & live[:, None]
        has = cand.any(axis=1)
        if not has.any():
            continue
        sel = np.nonzero(has)[0]
        pr = cand[sel].argmax(axis=1)
        tr = row_ptr[sel]
        pivot_rows = mats[sel, pr].copy()
        mats[sel, pr] = mats[sel, tr]
        mats[sel, tr] = pivot_rows
        inv = inv_t[mats[sel, tr, col]]
        mats[sel, tr, :] = mul_t[inv[:, None], mats[sel, tr, :]]
        factors = mats[sel, :, col].copy()
        factors[bidx[: sel.size], tr] = 0
        update = mul_t[factors[:, :, None], mats[sel, tr, :][:, None, :]]
        mats[sel] = add_t[mats[sel], neg_t[update]]
        row_ptr[sel] += 1
    return row_ptr


_BLOCK = 4096


def min_rank_scan(ctx, G):
    """Minimum F_q-rank weight over all nonzero codewords of rowspace(G)."""
    k, n, m = G.shape
    total = ctx.qm ** k
    best = n * m + 1
    for start in range(1, total, _BLOCK):
        stop = min(start + _BLOCK, total)
        msgs = _message_block(ctx, start, stop, k)
        words = ao.zeros(ctx, (stop - start, n))
        for j in range(k):
            words = ao.aadd(ctx, words, ao.amul(ctx, msgs[:, j, None, :], G[j][None, :, :]))
        ranks = batched_rank_fq(ctx, words)
        best = min(best, int(ranks.min()))
        if best == 1:
            break
    return best


def _message_block(ctx, start, stop, k):
    codes = np.arange(start, stop, dtype=np.int64)
    out = np.empty((stop - start, k, ctx.m), dtype=np.int64)
    rem = codes.copy()
    for j in range(k):
        out[:, j] = ao.unpack_codes(ctx, rem % ctx.qm)
        rem //= ctx.qm
    return out


def hyperplane_scan(ctx, gens, max_weight):
    """True iff every hyperplane H of PG(k-1, q^m) has w_U(H) <= max_weight.

    gens: (n, k, m) system generators; the weight of H with normal h is
    n minus the F_q-rank of the values h . g_i.
    """
    n, k, m = gens.shape
    qm = ctx.qm
    for lead in range(k):
        total = qm ** (k - lead - 1)
        for start in range(0, total, _BLOCK):
            stop = min(start + _BLOCK, total)
            B = stop - start
            h = ao.zeros(ctx, (B, k))
            h[:, lead, 0] = 1
            rem = np.arange(start, stop, dtype=np.int64)
            for j in range(lead + 1, k):
                h[:, j] = ao.unpack_codes(ctx, rem % qm)
                rem //= qm
            vals = ao.zeros(ctx, (B, n))
            for j in range(k):
                vals = ao.aadd(ctx, vals, ao.amul(ctx, h[:, j, None, :], gens[None, :, j, :]))
            ranks = batched_rank_fq(ctx, vals)
            if int((n - ranks).max()) > max_weight:
                return False
    return True


def coset_scan(ctx, A, E):
    """Indices of tuples in E^k satisfying the k vanishing conditions of A.

    A: (k, k, m) strictly upper coefficient array; E: (L, m) candidate
    shift values.  Tuple index i encodes (i % L, (i // L) % L, ...).
    """
    k = A.shape[0]
    L = E.shape[0]
    total = L ** k
    members = []
    for start in range(0, total, _BLOCK):
        stop = min(start + _BLOCK, total)
        idx = np.arange(start, stop, dtype=np.int64)
        bars = np.empty((stop - start, k, ctx.m), dtype=np.int64)
        rem = idx.copy()
        for j in range(k):
            bars[:, j] = E[rem % L]
            rem //= L
        ok = np.ones(stop - start, dtype=bool)
        for t in range(k):
            acc = ao.zeros(ctx, (stop - start,))
            for i in range(t):
                acc = ao.aadd(ctx, acc, ao.amul(ctx, A[i, t][None, :], bars[:, i]))
            for j in range(t + 1, k):
                acc = ao.asub(ctx, acc, ao.amul(ctx, A[t, j][None, :], bars[:, j]))
            ok &= ao.is_zero_mask(acc)
        members.append(idx[ok])
    return np.concatenate(members) if members else np.zeros(0, dtype=np.int64)
