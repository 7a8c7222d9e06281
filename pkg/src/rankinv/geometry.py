"""Systems of generator columns, extended matrices, and linear sets.

The F_q-span U of the generator columns of a nondegenerate code is
enumerated exhaustively; one canonical representative per F_q^*-class of
U \\ {0} forms the extended matrix, and deduplication modulo F_{q^m}^*
yields the associated linear set with its point weights.
"""

from __future__ import annotations

import numpy as np

from . import arrayops as ao
from . import backends
from .errors import BudgetError, PreconditionError
from .gfcore import FieldCtx, FieldElement
from .rankcodes import RankMetricCode

DEFAULT_MAX_ENUM = 2 ** 20


class QSystem:
    """The F_q-span of the n generator columns, sitting in F_{q^m}^k."""

    def __init__(self, ctx: FieldCtx, generators: np.ndarray):
        self.ctx = ctx
        self.generators = np.ascontiguousarray(generators, dtype=np.int64)
        self.n = self.generators.shape[0]
        self.k = self.generators.shape[1]

    def span_elements(self, max_enum: int = DEFAULT_MAX_ENUM) -> np.ndarray:
        """All q^n elements of U as a (q^n, k, m) digit array."""
        ctx = self.ctx
        total = ctx.q ** self.n
        if total > max_enum:
            raise BudgetError(f"|U| = {total} exceeds the budget of {max_enum}")
        out = ao.zeros(ctx, (total, self.k))
        coeffs = np.arange(total, dtype=np.int64)
        for i in range(self.n):
            ci = coeffs % ctx.q
            coeffs //= ctx.q
            out = ao.aadd(ctx, out, ctx.mul_t[ci[:, None, None], self.generators[None, i]])
        return out


class ExtendedMatrix:
    """One canonical column per F_q^*-class of U \\ {0} (N of them)."""

    def __init__(self, ctx: FieldCtx, columns: np.ndarray, n: int):
        self.ctx = ctx
        self.columns = columns  # (N, k, m), lexicographically sorted
        self.n = n

    @property
    def N(self) -> int:
        return self.columns.shape[0]

    @property
    def k(self) -> int:
        return self.columns.shape[1]


class LinearSet:
    """Deduplicated projective points of U \\ {0} with their weights."""

    def __init__(self, ctx: FieldCtx, points: np.ndarray, weights: np.ndarray, n: int):
        self.ctx = ctx
        self.points = points    # (P, k, m) canonical reps, sorted
        self.weights = weights  # (P,) ints
        self.n = n

    @property
    def k(self) -> int:
        return self.points.shape[1]

    def __len__(self) -> int:
        return self.points.shape[0]

    def point_keys(self):
        """Hashable canonical coordinates, one tuple per point."""
        return {tuple(map(int, row)) for row in
                self.points.reshape(len(self), -1)}

    def weight_of(self, vector) -> int:
        """Weight of the projective point spanned by the given vector."""
        key = tuple(map(int, canonical_point(self.ctx, vector).ravel()))
        for i, row in enumerate(self.points.reshape(len(self), -1)):
            if tuple(map(int, row)) == key:
                return int(self.weights[i])
        raise PreconditionError("point does not belong to the linear set")

    def contains(self, vector) -> bool:
        key = tuple(map(int, canonical_point(self.ctx, vector).ravel()))
        return key in self.point_keys()


def canonical_point(ctx: FieldCtx, vector) -> np.ndarray:
    """Scale a nonzero vector so its first nonzero entry is 1."""
    if isinstance(vector, np.ndarray):
        arr = np.ascontiguousarray(vector, dtype=np.int64)
    else:
        arr = np.array([x.digits if isinstance(x, FieldElement) else ctx.scalar(x).digits
                        for x in vector], dtype=np.int64)
    nz = ao.nonzero_mask(arr)
    if not nz.any():
        raise PreconditionError("the zero vector spans no projective point")
    lead = int(np.argmax(nz))
    inv = ao.apow(ctx, arr[lead], ctx.qm - 2)
    return ao.amul(ctx, arr, inv[None, :])


def system_of(code: RankMetricCode) -> QSystem:
    """The system of generator columns; rejects degenerate codes."""
    if not code.nondegenerate:
        raise PreconditionError(
            "degenerate code: columns span less than n dimensions over F_q")
    return QSystem(code.ctx, code.G.columns_array())


def extended_matrix(sys: QSystem, max_enum: int = DEFAULT_MAX_ENUM) -> ExtendedMatrix:
    """Enumerate U, drop zero, canonicalize each F_q^*-class, deduplicate.

    The canonical class representative is the scaling whose concatenated
    coefficient vector is lexicographically smallest.
    """
    ctx = sys.ctx
    elems = sys.span_elements(max_enum)
    elems = elems[ao.nonzero_mask(elems).any(axis=1)]
    flat = elems.reshape(elems.shape[0], -1)
    best = flat
    for lam in range(2, ctx.q):
        cand = ctx.mul_t[lam, flat]
        less = _lex_less(cand, best)
        best = np.where(less[:, None], cand, best)
    cols, counts = ao.unique_rows(best)
    if not (counts == ctx.q - 1).all():
        raise AssertionError("scaling classes of unequal size")
    N = (ctx.q ** sys.n - 1) // (ctx.q - 1)
    assert cols.shape[0] == N
    return ExtendedMatrix(ctx, cols.reshape(N, sys.k, ctx.m), sys.n)


def _lex_less(a: np.ndarray, b: np.ndarray) -> np.ndarray:
    """Row-wise lexicographic a < b for equal-shape 2-D int arrays."""
    neq = a != b
    any_neq = neq.any(axis=1)
    first = np.where(any_neq, neq.argmax(axis=1), 0)
    rows = np.arange(a.shape[0])
    return any_neq & (a[rows, first] < b[rows, first])


def linear_set(sys: QSystem, max_enum: int = DEFAULT_MAX_ENUM) -> LinearSet:
    """Points of PG(k-1, q^m) under U, with weights from class counts.

    A point of weight w lies over exactly (q^w - 1)/(q - 1) extended
    columns, which is how the weights are read off.
    """
    ctx = sys.ctx
    ext = extended_matrix(sys, max_enum)
    cols = ext.columns
    lead = ao.nonzero_mask(cols).argmax(axis=1)
    rows = np.arange(cols.shape[0])
    inv = ao.apow(ctx, cols[rows, lead], ctx.qm - 2)
    canon = ao.amul(ctx, cols, inv[:, None, :])
    points, counts = ao.unique_rows(canon.reshape(cols.shape[0], -1))
    weights = np.zeros(len(counts), dtype=np.int64)
    for i, c in enumerate(counts):
        w, tot = 1, 1
        while tot != int(c):
            w += 1
            tot = (ctx.q ** w - 1) // (ctx.q - 1)
            if tot > c:
                raise AssertionError("class count is not a projective class size")
        weights[i] = w
    return LinearSet(ctx, points.reshape(len(counts), sys.k, ctx.m), weights, sys.n)


def is_scattered(ls: LinearSet) -> bool:
    """True iff every point weight is 1 (|L_U| attains its maximum)."""
    return bool((ls.weights == 1).all())


def is_scattered_wrt_hyperplanes(sys: QSystem,
                                 max_enum: int = DEFAULT_MAX_ENUM) -> bool:
    """True iff every hyperplane of PG(k-1, q^m) has weight at most k-1.

    Enumerates all hyperplanes by canonical normal vectors; the weight of
    a hyperplane equals n minus the F_q-rank of the values of its defining
    functional on the generators.
    """
    ctx = sys.ctx
    count = (ctx.qm ** sys.k - 1) // (ctx.qm - 1)
    if count > max_enum:
        raise BudgetError(f"{count} hyperplanes exceed the budget of {max_enum}")
    return backends.active().hyperplane_scan(ctx, sys.generators, sys.k - 1)


def length_lower_bound(h_i_value: int, q: int) -> int:
    """Least n with q^n >= (q-1) * h + 1."""
    if h_i_value < 1:
        raise PreconditionError("dimension-sequence values are at least 1")
    target = (q - 1) * h_i_value + 1
    n, power = 0, 1
    while power < target:
        power *= q
        n += 1
    return n
