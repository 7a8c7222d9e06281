"""Rank-metric code constructions and their classical invariants.

Covers generalized Gabidulin (Moore-matrix) codes, seeded random codes in
systematic form, rank weights and exhaustive minimum distance, q-power
images and q-sums, the systematic-form delta rank, and Galois
intersection dimensions.
"""

from __future__ import annotations

import math

import numpy as np

from . import arrayops as ao
from . import backends
from .errors import BudgetError, PreconditionError
from .gfcore import FieldCtx, FieldElement, field_for
from .linalg import MatrixFqm, fq_rank_data, rank_data, rref_data

DEFAULT_MAX_CODEWORDS = 2 ** 22

_M64 = (1 << 64) - 1
_GOLDEN = 0x9E3779B97F4A7C15


def _splitmix64(x: int) -> int:
    z = (x + _GOLDEN) & _M64
    z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _M64
    z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _M64
    return (z ^ (z >> 31)) & _M64


def _rand_codes(seed: int, count: int, modulus: int):
    """Counter-based stream of element codes; same seed, same stream."""
    return [_splitmix64((seed & _M64) + i * _GOLDEN) % modulus for i in range(count)]


class RankMetricCode:
    """A linear code in F_{q^m}^n given by a full-rank generator matrix."""

    def __init__(self, ctx: FieldCtx, G: MatrixFqm):
        if G.ctx is not ctx:
            raise PreconditionError("generator matrix from a different context")
        k, n = G.rows, G.cols
        if not 0 < k <= n:
            raise PreconditionError(f"need 0 < k <= n, got k={k}, n={n}")
        if rank_data(ctx, G.data) != k:
            raise PreconditionError("generator matrix must have full row rank")
        self.ctx = ctx
        self.G = G
        self.n = n
        self.k = k
        self._nondeg = None

    @property
    def nondegenerate(self) -> bool:
        """True iff the columns of G span an n-dimensional F_q-space."""
        if self._nondeg is None:
            self._nondeg = fq_rank_data(self.ctx, self.G.columns_array()) == self.n
        return self._nondeg

    def __eq__(self, other):
        return (isinstance(other, RankMetricCode) and self.ctx is other.ctx
                and self.G == other.G)

    def __repr__(self):
        return f"RankMetricCode(n={self.n}, k={self.k}, {self.ctx.identity})"


def gabidulin(ctx: FieldCtx, evals, k: int, s: int = 1) -> RankMetricCode:
    """Generalized Gabidulin code: rows are the q^(s*j) powers of the
    evaluation points, j = 0..k-1.

    The points must be linearly independent over F_q (hence n <= m) and
    gcd(s, m) must be 1.
    """
    pts = [x if isinstance(x, FieldElement) else ctx.scalar(x) for x in evals]
    n = len(pts)
    if n > ctx.m:
        raise PreconditionError(f"n = {n} exceeds m = {ctx.m}")
    if not 0 < k <= n:
        raise PreconditionError(f"need 0 < k <= n, got k={k}")
    if math.gcd(s, ctx.m) != 1:
        raise PreconditionError(f"gcd(s, m) must be 1, got s={s}, m={ctx.m}")
    row = np.array([x.digits for x in pts], dtype=np.int64)
    if fq_rank_data(ctx, row[:, None, :]) != n:
        raise PreconditionError("evaluation points are F_q-dependent")
    data = ao.zeros(ctx, (k, n))
    cur = row
    for j in range(k):
        data[j] = cur
        cur = ao.afrob(ctx, cur, s)
    return RankMetricCode(ctx, MatrixFqm(ctx, data, copy=False))


def random_systematic(ctx: FieldCtx, n: int, k: int, seed: int) -> RankMetricCode:
    """Seeded uniform code with generator [I_k | X]; reproducible."""
    if k >= n:
        raise PreconditionError(f"systematic form needs k < n, got k={k}, n={n}")
    codes = _rand_codes(seed, k * (n - k), ctx.qm)
    data = ao.zeros(ctx, (k, n))
    for i in range(k):
        data[i, i, 0] = 1
        for j in range(n - k):
            data[i, k + j] = ao.unpack_codes(ctx, codes[i * (n - k) + j])
    return RankMetricCode(ctx, MatrixFqm(ctx, data, copy=False))


def rank_weight(ctx: FieldCtx, v) -> int:
    """dim over F_q of the span of the entries of v."""
    if isinstance(v, np.ndarray):
        arr = np.ascontiguousarray(v, dtype=np.int64)
    else:
        arr = np.array([x.digits if isinstance(x, FieldElement) else ctx.scalar(x).digits
                        for x in v], dtype=np.int64)
    return fq_rank_data(ctx, arr[:, None, :])


def min_rank_distance(code: RankMetricCode,
                      max_codewords: int = DEFAULT_MAX_CODEWORDS) -> int:
    """Exhaustive minimum rank weight over all q^(mk) - 1 nonzero codewords."""
    total = code.ctx.qm ** code.k
    if total - 1 > max_codewords:
        raise BudgetError(
            f"{total - 1} codewords exceed the budget of {max_codewords}")
    return backends.active().min_rank_scan(code.ctx, code.G.data)


def is_mrd(code: RankMetricCode,
           max_codewords: int = DEFAULT_MAX_CODEWORDS) -> bool:
    """True iff the code attains d = n - k + 1; requires n <= m."""
    if code.n > code.ctx.m:
        raise PreconditionError("the rank Singleton bound is stated for n <= m")
    return min_rank_distance(code, max_codewords) == code.n - code.k + 1


def code_qpower(code: RankMetricCode, s: int) -> RankMetricCode:
    """The code {c^(q^s) : c in C}, via the entrywise Frobenius of G."""
    if s < 0:
        raise PreconditionError("q-power exponent must be nonnegative")
    return RankMetricCode(code.ctx, code.G.qpower(s))


def qsum_dim(code: RankMetricCode, i: int) -> int:
    """Dimension of C + C^[1] + ... + C^[i]."""
    if i < 0:
        raise PreconditionError("q-sum index must be nonnegative")
    ctx = code.ctx
    blocks = []
    cur = code.G.data
    for _ in range(i + 1):
        blocks.append(cur)
        cur = ao.afrob(ctx, cur, 1)
    return rank_data(ctx, np.concatenate(blocks, axis=0))


def systematic_form(code: RankMetricCode):
    """RREF-based systematic form.

    Returns (X, perm) where perm maps new column position to original
    column index; applying perm to the code's columns yields a generator
    [I_k | X].  perm is the identity when the first k columns carry the
    pivots.
    """
    ctx = code.ctx
    work, pivots = rref_data(ctx, code.G.data)
    nonpivots = [c for c in range(code.n) if c not in pivots]
    perm = tuple(pivots + nonpivots)
    X = MatrixFqm(ctx, work[:, nonpivots, :] if nonpivots else ao.zeros(ctx, (code.k, 0)))
    return X, perm


def delta_rank(code: RankMetricCode, s: int) -> int:
    """rk(X^[s] - X) for the systematic block X of the code."""
    X, _ = systematic_form(code)
    ctx = code.ctx
    diff = ao.asub(ctx, ao.afrob(ctx, X.data, s % ctx.m), X.data)
    return rank_data(ctx, diff)


def galois_intersection_dim(code: RankMetricCode, s1: int, s2: int) -> int:
    """dim(C^[s1] (intersect) C^[s2])."""
    ctx = code.ctx
    A = ao.afrob(ctx, code.G.data, s1 % ctx.m)
    B = ao.afrob(ctx, code.G.data, s2 % ctx.m)
    return 2 * code.k - rank_data(ctx, np.concatenate([A, B], axis=0))


def isometry_image(code: RankMetricCode, alpha: FieldElement, A_fq) -> RankMetricCode:
    """Image of the code under v -> alpha * v * A, A in GL_n(F_q)."""
    ctx = code.ctx
    if alpha.is_zero():
        raise PreconditionError("isometry scalar must be nonzero")
    A_fq = np.asarray(A_fq, dtype=np.int64)
    if A_fq.shape != (code.n, code.n):
        raise PreconditionError("A must be n x n over F_q")
    if backends.active().rank_fq(ctx, A_fq) != code.n:
        raise PreconditionError("A must be invertible over F_q")
    lifted = ao.zeros(ctx, A_fq.shape)
    lifted[..., 0] = A_fq
    data = ao.matmul(ctx, code.G.scale(alpha).data, lifted)
    return RankMetricCode(ctx, MatrixFqm(ctx, data, copy=False))


# ---------------------------------------------------------------------------
# Text serialization: header `q m n k`, then k rows of n digit strings.
# ---------------------------------------------------------------------------

def serialize_code(code: RankMetricCode) -> str:
    ctx = code.ctx
    lines = [f"{ctx.q} {ctx.m} {code.n} {code.k}"]
    for i in range(code.k):
        lines.append(" ".join(ctx.to_string(code.G[i, j]) for j in range(code.n)))
    return "\n".join(lines) + "\n"


def parse_code(text: str, ctx: FieldCtx | None = None) -> RankMetricCode:
    """Parse the text format; the field context defaults to the catalog
    entry for (q, m) when not supplied."""
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise PreconditionError("empty code file")
    try:
        q, m, n, k = (int(t) for t in lines[0].split())
    except ValueError:
        raise PreconditionError(f"bad code header: {lines[0]!r}") from None
    if ctx is None:
        ctx = field_for(q, m)
    if ctx.q != q or ctx.m != m:
        raise PreconditionError(
            f"field context {ctx.identity} does not match header q={q}, m={m}")
    if len(lines) != k + 1:
        raise PreconditionError(f"expected {k} rows, found {len(lines) - 1}")
    data = ao.zeros(ctx, (k, n))
    for i in range(k):
        toks = lines[i + 1].split()
        if len(toks) != n:
            raise PreconditionError(f"row {i} has {len(toks)} entries, expected {n}")
        for j, tok in enumerate(toks):
            data[i, j] = ctx.from_string(tok).digits
    return RankMetricCode(ctx, MatrixFqm(ctx, data, copy=False))
