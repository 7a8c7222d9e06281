"""Vectorized operations on digit arrays of F_{q^m} elements.

A digit array has shape (..., m) with int64 entries in 0..q-1; the last
axis holds the polynomial-basis coefficients of one field element.  All
functions broadcast over the leading axes using the context's F_q lookup
tables, so they serve both compute backends.
"""

from __future__ import annotations

import numpy as np


def zeros(ctx, shape):
    return np.zeros(tuple(shape) + (ctx.m,), dtype=np.int64)

def ones(ctx, shape):
    out = zeros(ctx, shape)
    out[..., 0] = 1
    return out


def aadd(ctx, a, b):
    return ctx.add_t[a, b]


def aneg(ctx, a):
    return ctx.neg_t[a]


def asub(ctx, a, b):
    return ctx.add_t[a, ctx.neg_t[b]]


def amul(ctx, a, b):
    """Elementwise field product of two digit arrays (broadcasting)."""
    m = ctx.m
    add_t, mul_t = ctx.add_t, ctx.mul_t
    shape = np.broadcast_shapes(a.shape[:-1], b.shape[:-1])
    acc = np.zeros(shape + (2 * m - 1,), dtype=np.int64)
    for i in range(m):
        ai = np.broadcast_to(a[..., i], shape)
        for j in range(m):
            acc[..., i + j] = add_t[acc[..., i + j], mul_t[ai, b[..., j]]]
    red = ctx.red
    for d in range(2 * m - 2, m - 1, -1):
        top = acc[..., d]
        for j in range(m):
            rj = red[d - m, j]
            if rj:
                acc[..., j] = add_t[acc[..., j], mul_t[top, rj]]
    return np.ascontiguousarray(acc[..., :m])


def ascale(ctx, c: int, a):
    """Multiply a digit array by a single F_q scalar code."""
    return ctx.mul_t[c, a]


def afrob(ctx, a, s: int):
    """Entrywise q^s-power Frobenius of a digit array."""
    mat = ctx.frob_mat(s)
    m = ctx.m
    add_t, mul_t = ctx.add_t, ctx.mul_t
    out = np.zeros_like(a)
    for t in range(m):
        acc = out[..., t]
        for j in range(m):
            f = mat[t, j]
            if f:
                acc[...] = add_t[acc, mul_t[f, a[..., j]]]
    return out


def apow(ctx, a, n: int):
    """Elementwise n-th power (n >= 0) of a digit array."""
    result = ones(ctx, a.shape[:-1])
    base = a
    while n > 0:
        if n & 1:
            result = amul(ctx, result, base)
        base = amul(ctx, base, base)
        n >>= 1
    return result


def matmul(ctx, A, B):
    """(r, t, m) x (t, c, m) -> (r, c, m) matrix product over F_{q^m}."""
    r, t, _ = A.shape
    t2, c, _ = B.shape
    assert t == t2
    out = zeros(ctx, (r, c))
    for u in range(t):
        out = aadd(ctx, out, amul(ctx, A[:, u, None, :], B[None, u, :, :]))
    return out


def is_zero_mask(a):
    return ~np.any(a != 0, axis=-1)


def nonzero_mask(a):
    return np.any(a != 0, axis=-1)


def pack_codes(ctx, a):
    """Digit arrays (..., m) -> integer codes in 0..q^m-1."""
    pw = ctx.q ** np.arange(ctx.m, dtype=np.int64)
    return (a * pw).sum(axis=-1)


def unpack_codes(ctx, codes):
    """Integer codes -> digit arrays (..., m)."""
    codes = np.asarray(codes, dtype=np.int64)
    out = np.empty(codes.shape + (ctx.m,), dtype=np.int64)
    rem = codes.copy()
    for i in range(ctx.m):
        out[..., i] = rem % ctx.q
        rem //= ctx.q
    return out


def unique_rows(flat):
    """Deduplicated, lexicographically sorted rows of a 2-D digit array."""
    flat = np.ascontiguousarray(flat, dtype=np.int64)
    if flat.shape[0] == 0:
        return flat, np.zeros(0, dtype=np.int64)
    # big-endian bytes make memcmp order agree with digit-wise lex order
    packed = np.ascontiguousarray(flat.astype(">u8")).view(
        np.dtype((np.void, flat.shape[1] * 8)))[:, 0]
    _, idx, counts = np.unique(packed, return_index=True, return_counts=True)
    return flat[idx], counts
