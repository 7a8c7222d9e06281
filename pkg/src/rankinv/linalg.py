"""Dense exact linear algebra over F_{q^m}, plus F_q-ranks of expanded vectors."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import arrayops as ao
from . import backends
from .errors import PreconditionError
from .gfcore import FieldCtx, FieldElement


class MatrixFqm:
    """Dense matrix over F_{q^m}.

    Entries live in a (rows, cols, m) int64 digit array.  Instances are
    treated as immutable: operations return new matrices.
    """

    __slots__ = ("ctx", "data")

    def __init__(self, ctx: FieldCtx, data: np.ndarray, copy: bool = True):
        data = np.asarray(data, dtype=np.int64)
        if data.ndim != 3 or data.shape[2] != ctx.m:
            raise PreconditionError("matrix data must have shape (rows, cols, m)")
        self.ctx = ctx
        self.data = data.copy() if copy else data

    @classmethod
    def from_rows(cls, ctx: FieldCtx, rows) -> "MatrixFqm":
        """Build from nested iterables of FieldElement (or int) entries."""
        rows = [list(r) for r in rows]
        nr = len(rows)
        nc = len(rows[0]) if nr else 0
        data = ao.zeros(ctx, (nr, nc))
        for i, r in enumerate(rows):
            if len(r) != nc:
                raise PreconditionError("ragged rows")
            for j, x in enumerate(r):
                if isinstance(x, int):
                    x = ctx.scalar(x)
                elif x.ctx is not ctx:
                    raise PreconditionError("entry from a different field context")
                data[i, j] = x.digits
        return cls(ctx, data, copy=False)

    @classmethod
    def zeros(cls, ctx, rows, cols):
        return cls(ctx, ao.zeros(ctx, (rows, cols)), copy=False)

    @classmethod
    def identity(cls, ctx, n):
        data = ao.zeros(ctx, (n, n))
        for i in range(n):
            data[i, i, 0] = 1
        return cls(ctx, data, copy=False)

    @property
    def rows(self) -> int:
        return self.data.shape[0]

    @property
    def cols(self) -> int:
        return self.data.shape[1]

    def __getitem__(self, key) -> FieldElement:
        i, j = key
        return FieldElement(self.ctx, tuple(int(t) for t in self.data[i, j]))

    def row(self, i):
        return tuple(self[i, j] for j in range(self.cols))

    def column(self, j):
        return tuple(self[i, j] for i in range(self.rows))

    def columns_array(self) -> np.ndarray:
        """Columns as an (n, k, m) stack of vectors."""
        return np.ascontiguousarray(self.data.transpose(1, 0, 2))

    def hstack(self, other: "MatrixFqm") -> "MatrixFqm":
        return MatrixFqm(self.ctx, np.concatenate([self.data, other.data], axis=1),
                         copy=False)

    def vstack(self, other: "MatrixFqm") -> "MatrixFqm":
        return MatrixFqm(self.ctx, np.concatenate([self.data, other.data], axis=0),
                         copy=False)

    def transpose(self) -> "MatrixFqm":
        return MatrixFqm(self.ctx, self.data.transpose(1, 0, 2))

    def qpower(self, s: int) -> "MatrixFqm":
        """Entrywise q^s-power Frobenius."""
        return MatrixFqm(self.ctx, ao.afrob(self.ctx, self.data, s % self.ctx.m),
                         copy=False)

    def scale(self, alpha: FieldElement) -> "MatrixFqm":
        return MatrixFqm(self.ctx,
                         ao.amul(self.ctx, self.data,
                                 np.array(alpha.digits, dtype=np.int64)),
                         copy=False)

    def __matmul__(self, other: "MatrixFqm") -> "MatrixFqm":
        if self.cols != other.rows:
            raise PreconditionError("inner dimensions differ")
        return MatrixFqm(self.ctx, ao.matmul(self.ctx, self.data, other.data),
                         copy=False)

    def __sub__(self, other: "MatrixFqm") -> "MatrixFqm":
        return MatrixFqm(self.ctx, ao.asub(self.ctx, self.data, other.data),
                         copy=False)

    def __add__(self, other: "MatrixFqm") -> "MatrixFqm":
        return MatrixFqm(self.ctx, ao.aadd(self.ctx, self.data, other.data),
                         copy=False)

    def __eq__(self, other):
        return (isinstance(other, MatrixFqm) and self.ctx is other.ctx
                and self.data.shape == other.data.shape
                and bool(np.array_equal(self.data, other.data)))

    def __repr__(self):
        body = "; ".join(
            ", ".join(self.ctx.elem_repr(tuple(self.data[i, j])) for j in range(self.cols))
            for i in range(self.rows))
        return f"MatrixFqm[{body}]"


@dataclass
class RrefResult:
    rref: MatrixFqm
    rank: int
    pivot_cols: list
    kernel_basis: list  # tuples of FieldElement, one per free column


def rref_data(ctx, data: np.ndarray):
    """Reduced row echelon form of a digit array; returns (rref, pivots)."""
    work = np.ascontiguousarray(data, dtype=np.int64).copy()
    pivots = backends.active().rref_fqm(ctx, work)
    return work, [int(c) for c in pivots]


def rank_data(ctx, data: np.ndarray) -> int:
    work = np.ascontiguousarray(data, dtype=np.int64).copy()
    return len(backends.active().rref_fqm(ctx, work))


def rref(A: MatrixFqm) -> RrefResult:
    """Gauss-Jordan elimination with exact inversion.

    Pivot selection scans each column top to bottom for the first nonzero
    entry, so the result (and the kernel basis) is reproducible.  Kernel
    vectors set each free variable to 1 in ascending column order.
    """
    ctx = A.ctx
    work, pivots = rref_data(ctx, A.data)
    rank = len(pivots)
    free_cols = [c for c in range(A.cols) if c not in pivots]
    kernel = []
    for f in free_cols:
        vec = ao.zeros(ctx, (A.cols,))
        vec[f, 0] = 1
        for i, pc in enumerate(pivots):
            vec[pc] = ao.aneg(ctx, work[i, f])
        kernel.append(tuple(FieldElement(ctx, tuple(int(t) for t in vec[c]))
                            for c in range(A.cols)))
    return RrefResult(MatrixFqm(ctx, work, copy=False), rank, pivots, kernel)


def kernel_dim(A: MatrixFqm) -> int:
    return A.cols - rank_data(A.ctx, A.data)


def solve_right_kernel(A: MatrixFqm):
    """Basis of {x : A x = 0} as tuples of FieldElement."""
    return rref(A).kernel_basis


def vectors_to_array(ctx, vectors) -> np.ndarray:
    """Normalize a list of F_{q^m}^k vectors to a (count, k, m) digit array."""
    if isinstance(vectors, np.ndarray):
        return np.ascontiguousarray(vectors, dtype=np.int64)
    out = []
    for v in vectors:
        row = []
        for x in v:
            if isinstance(x, int):
                x = ctx.scalar(x)
            row.append(x.digits)
        out.append(row)
    arr = np.array(out, dtype=np.int64)
    if arr.ndim == 2:  # vectors of bare F_q codes are not supported
        raise PreconditionError("vectors must contain field elements")
    return arr


def vector_to_array(ctx, v) -> np.ndarray:
    """Normalize one F_{q^m}^k vector to a (k, m) digit array."""
    if isinstance(v, np.ndarray):
        return np.ascontiguousarray(v, dtype=np.int64)
    return vectors_to_array(ctx, [v])[0]


def fq_rank(ctx, vectors) -> int:
    """Dimension over F_q of the span of vectors in F_{q^m}^k.

    Each vector expands to its k*m coefficients over F_q in the polynomial
    basis; the rank of the expanded matrix is computed over F_q.
    """
    arr = vectors_to_array(ctx, vectors)
    if arr.shape[0] == 0:
        return 0
    flat = arr.reshape(arr.shape[0], -1)
    return backends.active().rank_fq(ctx, flat)


def fq_rank_data(ctx, arr: np.ndarray) -> int:
    flat = np.ascontiguousarray(arr, dtype=np.int64).reshape(arr.shape[0], -1)
    return backends.active().rank_fq(ctx, flat)
