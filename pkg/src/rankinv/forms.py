"""Vanishing of the degree-(q^s+1) forms x_i^[s] x_j - x_i x_j^[s] on
cosets of F_q^k and F_{q^delta}^k, and the zero-coset counts and bounds.

Whether a form vanishes on the coset alpha + F_q^k depends only on
bar(alpha) = alpha^[s] - alpha, through k linear conditions on the form
coefficients; enumeration therefore runs over the image of bar, which is
the componentwise kernel of the relative trace.
"""

from __future__ import annotations

import math
from dataclasses import dataclass, field

import numpy as np

from . import arrayops as ao
from . import backends
from .errors import BudgetError, PreconditionError
from .gfcore import FieldCtx, FieldElement, frobenius
from .linalg import vector_to_array

DEFAULT_MAX_ENUM = 2 ** 20


class FsForm:
    """A form sum A_ij (x_i^[s] x_j - x_i x_j^[s]), 1 <= i < j <= k.

    Coefficients sit in a strictly upper triangular (k, k, m) digit array.
    """

    def __init__(self, ctx: FieldCtx, k: int, s: int, coeffs: np.ndarray):
        coeffs = np.ascontiguousarray(coeffs, dtype=np.int64)
        if coeffs.shape != (k, k, ctx.m):
            raise PreconditionError("coefficient array must be (k, k, m)")
        lower = np.tril(np.ones((k, k), dtype=bool))
        if (coeffs[lower] != 0).any():
            raise PreconditionError("coefficients must be strictly upper triangular")
        if not 1 <= s:
            raise PreconditionError("s must be positive")
        self.ctx = ctx
        self.k = k
        self.s = s
        self.coeffs = coeffs

    @classmethod
    def from_pairs(cls, ctx: FieldCtx, k: int, s: int, pairs: dict) -> "FsForm":
        """Build from {(i, j): element} with 0-based indices i < j."""
        coeffs = ao.zeros(ctx, (k, k))
        for (i, j), x in pairs.items():
            if not 0 <= i < j < k:
                raise PreconditionError(f"bad index pair {(i, j)}")
            if isinstance(x, int):
                x = ctx.scalar(x)
            coeffs[i, j] = x.digits
        return cls(ctx, k, s, coeffs)

    def coefficient(self, i: int, j: int) -> FieldElement:
        return FieldElement(self.ctx, tuple(int(t) for t in self.coeffs[i, j]))

    def is_zero(self) -> bool:
        return not self.coeffs.any()

    def evaluate(self, vector) -> FieldElement:
        """Direct evaluation at a vector of F_{q^m}^k."""
        ctx = self.ctx
        arr = vector_to_array(ctx, vector)
        x = [FieldElement(ctx, tuple(int(t) for t in row)) for row in arr]
        acc = ctx.zero()
        for i in range(self.k):
            for j in range(i + 1, self.k):
                a = self.coefficient(i, j)
                if a.is_zero():
                    continue
                term = frobenius(ctx, x[i], self.s) * x[j] - x[i] * frobenius(ctx, x[j], self.s)
                acc = acc + a * term
        return acc


@dataclass
class CosetZeroReport:
    s: int
    delta: int
    r: int
    zero_count: int
    lower_bound: int
    upper_bound: int
    multiplier: int                 # vanishing F_q^k-cosets counted per class
    subspace_dims: list             # dim of H_alpha over F_{q^delta}, per chosen alpha
    chosen: list = field(default_factory=list)  # spanning bar vectors, digit tuples
    tight: bool = False


def bar(ctx: FieldCtx, alpha: np.ndarray, s: int) -> np.ndarray:
    """alpha^[s] - alpha on digit arrays."""
    return ao.asub(ctx, ao.afrob(ctx, alpha, s % ctx.m), alpha)


def pair_index(k: int):
    return [(i, j) for i in range(k) for j in range(i + 1, k)]


def fs_condition_matrix(ctx: FieldCtx, k: int, bars: np.ndarray) -> np.ndarray:
    """Linear conditions on the C(k,2) coefficients for vanishing on the
    cosets with the given bar vectors.

    bars: (r, k, m).  Returns an (r*k, C(k,2), m) digit array; condition
    (l, t) reads  sum_{i<t} A[i,t] bar_{l,i} - sum_{j>t} A[t,j] bar_{l,j} = 0.
    """
    pairs = pair_index(k)
    col_of = {pr: idx for idx, pr in enumerate(pairs)}
    r = bars.shape[0]
    out = ao.zeros(ctx, (r * k, len(pairs)))
    for l in range(r):
        for t in range(k):
            row = l * k + t
            for i in range(t):
                out[row, col_of[(i, t)]] = bars[l, i]
            for j in range(t + 1, k):
                out[row, col_of[(t, j)]] = ao.aneg(ctx, bars[l, j])
    return out


def vanishes_on_coset(p: FsForm, alpha) -> bool:
    """True iff p vanishes identically on alpha + F_q^k."""
    ctx = p.ctx
    arr = vector_to_array(ctx, alpha)
    bars = bar(ctx, arr, p.s)
    for t in range(p.k):
        acc = ao.zeros(ctx, ())
        for i in range(t):
            acc = ao.aadd(ctx, acc, ao.amul(ctx, p.coeffs[i, t], bars[i]))
        for j in range(t + 1, p.k):
            acc = ao.asub(ctx, acc, ao.amul(ctx, p.coeffs[t, j], bars[j]))
        if acc.any():
            return False
    return True


def coset_equal(ctx: FieldCtx, alpha, beta, s: int) -> bool:
    """alpha + F_q^k = beta + F_q^k, tested via the bar map (gcd(s,m)=1)."""
    if math.gcd(s, ctx.m) != 1:
        raise PreconditionError("coset_equal requires gcd(s, m) = 1; "
                                "use the delta variant of the coset machinery")
    a = vector_to_array(ctx, alpha)
    b = vector_to_array(ctx, beta)
    return bool(np.array_equal(bar(ctx, a, s), bar(ctx, b, s)))


# ---------------------------------------------------------------------------
# F_q-linear structure helpers.
# ---------------------------------------------------------------------------

def trace_map_matrix(ctx: FieldCtx, delta: int) -> np.ndarray:
    """(m, m) F_q-matrix of x -> Tr_{q^m/q^delta}(x) in the polynomial basis."""
    if ctx.m % delta != 0:
        raise PreconditionError(f"delta = {delta} does not divide m = {ctx.m}")
    mat = np.zeros((ctx.m, ctx.m), dtype=np.int64)
    steps = ctx.m // delta
    for j in range(ctx.m):
        digits = [0] * ctx.m
        digits[j] = 1
        acc = tuple(digits)
        cur = tuple(digits)
        for _ in range(steps - 1):
            cur = ctx._frob_digits(cur, delta)
            acc = ctx._add_digits(acc, cur)
        mat[:, j] = acc
    return mat


def _fq_kernel_basis(ctx: FieldCtx, mat: np.ndarray) -> np.ndarray:
    """Right-kernel basis of an F_q-code matrix, rows = basis vectors."""
    mat = np.ascontiguousarray(mat, dtype=np.int64).copy()
    rows, cols = mat.shape
    add_t, mul_t, neg_t, inv_t = ctx.add_t, ctx.mul_t, ctx.neg_t, ctx.inv_t
    pivots = []
    row = 0
    for col in range(cols):
        if row >= rows:
            break
        nz = np.nonzero(mat[row:, col])[0]
        if nz.size == 0:
            continue
        pr = row + int(nz[0])
        if pr != row:
            mat[[row, pr]] = mat[[pr, row]]
        mat[row] = mul_t[inv_t[mat[row, col]], mat[row]]
        f = mat[:, col].copy()
        f[row] = 0
        mat = add_t[mat, neg_t[mul_t[f[:, None], mat[row][None, :]]]]
        pivots.append(col)
        row += 1
    free = [c for c in range(cols) if c not in pivots]
    basis = np.zeros((len(free), cols), dtype=np.int64)
    for b, fc in enumerate(free):
        basis[b, fc] = 1
        for i, pc in enumerate(pivots):
            basis[b, pc] = neg_t[mat[i, fc]]
    return basis


def trace_kernel_elements(ctx: FieldCtx, delta: int) -> np.ndarray:
    """All q^(m-delta) elements with Tr_{q^m/q^delta} = 0, as (L, m) digits."""
    basis = _fq_kernel_basis(ctx, trace_map_matrix(ctx, delta))
    b = basis.shape[0]
    total = ctx.q ** b
    out = np.zeros((total, ctx.m), dtype=np.int64)
    coeffs = np.arange(total, dtype=np.int64)
    for i in range(b):
        ci = coeffs % ctx.q
        coeffs //= ctx.q
        out = ao.aadd(ctx, out, ctx.mul_t[ci[:, None], basis[None, i]])
    return out


def fqm_span_basis(ctx: FieldCtx, vectors: np.ndarray):
    """Greedy F_{q^m}-span basis of (count, k, m) vectors.

    Returns (rank, chosen_indices): the first spanning subset in input
    order.
    """
    count, k, _ = vectors.shape
    residue = vectors.copy()
    chosen = []
    while len(chosen) < k:
        nz = ao.nonzero_mask(residue).any(axis=1)
        idx = np.nonzero(nz)[0]
        if idx.size == 0:
            break
        first = int(idx[0])
        v = residue[first]
        pos = int(np.argmax(ao.nonzero_mask(v)))
        norm = ao.amul(ctx, v, ao.apow(ctx, v[pos], ctx.qm - 2)[None, :])
        chosen.append(first)
        factors = residue[:, pos, :].copy()
        residue = ao.asub(ctx, residue, ao.amul(ctx, factors[:, None, :], norm[None, :, :]))
    return len(chosen), chosen


def _subspace_dim(ctx: FieldCtx, bar_vec: np.ndarray, delta: int,
                  trmat: np.ndarray) -> int:
    """dim over F_{q^delta} of {v : Tr_{q^m/q^delta}(bar_j v) = 0 for all j}."""
    k = bar_vec.shape[0]
    rows = []
    for j in range(k):
        mul_mat = np.zeros((ctx.m, ctx.m), dtype=np.int64)
        for t in range(ctx.m):
            digits = [0] * ctx.m
            digits[t] = 1
            mul_mat[:, t] = ctx._mul_digits(tuple(int(x) for x in bar_vec[j]), tuple(digits))
        comp = _fq_matmul(ctx, trmat, mul_mat)
        rows.append(comp)
    stacked = np.concatenate(rows, axis=0)
    dim_q = ctx.m - backends.active().rank_fq(ctx, stacked)
    assert dim_q % delta == 0
    return dim_q // delta


def _fq_matmul(ctx: FieldCtx, A: np.ndarray, B: np.ndarray) -> np.ndarray:
    add_t, mul_t = ctx.add_t, ctx.mul_t
    out = np.zeros((A.shape[0], B.shape[1]), dtype=np.int64)
    for t in range(A.shape[1]):
        out = add_t[out, mul_t[A[:, t][:, None], B[t][None, :]]]
    return out


# ---------------------------------------------------------------------------
# Zero-coset enumeration and bounds.
# ---------------------------------------------------------------------------

def _zero_coset_report(p: FsForm, delta: int, max_enum: int) -> CosetZeroReport:
    ctx = p.ctx
    k = p.k
    if p.is_zero():
        raise PreconditionError("zero-coset bounds are stated for nonzero forms")
    E = trace_kernel_elements(ctx, delta)
    L = E.shape[0]
    total = L ** k
    if total > max_enum:
        raise BudgetError(f"{total} candidate classes exceed the budget of {max_enum}")
    members = backends.active().coset_scan(ctx, p.coeffs, E)
    count = int(members.size)
    bars = np.empty((count, k, ctx.m), dtype=np.int64)
    rem = members.copy()
    for j in range(k):
        bars[:, j] = E[rem % L]
        rem //= L
    r, chosen_pos = fqm_span_basis(ctx, bars)
    trmat = trace_map_matrix(ctx, delta)
    dims = [_subspace_dim(ctx, bars[i], delta, trmat) for i in chosen_pos]
    lower = (ctx.q ** delta) ** sum(dims)
    upper = ctx.q ** (r * (ctx.m - delta))
    max_count = ctx.q ** ((k - 2) * (ctx.m - delta))
    return CosetZeroReport(
        s=p.s,
        delta=delta,
        r=r,
        zero_count=count,
        lower_bound=lower,
        upper_bound=upper,
        multiplier=ctx.q ** (delta - 1),
        subspace_dims=dims,
        chosen=[tuple(map(int, bars[i].ravel())) for i in chosen_pos],
        tight=(count == max_count),
    )


def zero_cosets(p: FsForm, max_enum: int = DEFAULT_MAX_ENUM) -> CosetZeroReport:
    """Exhaustive census of the cosets alpha + F_q^k killed by p (gcd(s,m)=1)."""
    delta = math.gcd(p.s, p.ctx.m)
    if delta != 1:
        raise PreconditionError("gcd(s, m) > 1: use zero_cosets_delta")
    return _zero_coset_report(p, 1, max_enum)


def zero_cosets_delta(p: FsForm, max_enum: int = DEFAULT_MAX_ENUM) -> CosetZeroReport:
    """Census over the classes alpha + F_{q^delta}^k for delta = gcd(s, m) > 1."""
    delta = math.gcd(p.s, p.ctx.m)
    if delta == 1:
        raise PreconditionError("gcd(s, m) = 1: use zero_cosets")
    return _zero_coset_report(p, delta, max_enum)


def linearity_check(p: FsForm, alpha1, alpha2) -> bool:
    """Vanishing on two cosets propagates to every F_q-combination."""
    ctx = p.ctx
    a1 = vector_to_array(ctx, alpha1)
    a2 = vector_to_array(ctx, alpha2)
    if not (vanishes_on_coset(p, a1) and vanishes_on_coset(p, a2)):
        raise PreconditionError("form does not vanish on both input cosets")
    for l1 in range(ctx.q):
        for l2 in range(ctx.q):
            combo = ao.aadd(ctx, ctx.mul_t[l1, a1], ctx.mul_t[l2, a2])
            if not vanishes_on_coset(p, combo):
                return False
    return True


def max_zero_form_check(ctx: FieldCtx, k: int, s: int) -> bool:
    """k-1 cosets with independent bar values force the zero form."""
    if math.gcd(s, ctx.m) != 1:
        raise PreconditionError("requires gcd(s, m) = 1")
    if k < 2:
        raise PreconditionError("needs k >= 2")
    if ctx.m < 2:
        raise PreconditionError("no element outside F_q exists for m = 1")
    gamma = np.array(ctx.gen().digits, dtype=np.int64)
    gb = bar(ctx, gamma[None, :], s)[0]
    assert gb.any()
    bars = ao.zeros(ctx, (k - 1, k))
    for i in range(k - 1):
        bars[i, i] = gb
    from .linalg import MatrixFqm, kernel_dim
    M = MatrixFqm(ctx, fs_condition_matrix(ctx, k, bars), copy=False)
    return kernel_dim(M) == 0


def tightness_form(ctx: FieldCtx, k: int, s: int) -> FsForm:
    """The form vanishing on the cosets of gamma e_1, ..., gamma e_{k-2}.

    Solving those vanishing conditions kills every coefficient pair that
    touches the first k-2 coordinates, leaving A_{k-1,k}; its zero-class
    count meets the maximum exactly.
    """
    if k < 3:
        raise PreconditionError("the tightness construction needs k >= 3")
    coeffs = ao.zeros(ctx, (k, k))
    coeffs[k - 2, k - 1, 0] = 1
    return FsForm(ctx, k, s, coeffs)


# ---------------------------------------------------------------------------
# Text serialization of forms: header `q m k s`, lines `i j digits` (1-based).
# ---------------------------------------------------------------------------

def serialize_form(p: FsForm) -> str:
    ctx = p.ctx
    lines = [f"{ctx.q} {ctx.m} {p.k} {p.s}"]
    for i, j in pair_index(p.k):
        x = p.coefficient(i, j)
        if not x.is_zero():
            lines.append(f"{i + 1} {j + 1} {ctx.to_string(x)}")
    return "\n".join(lines) + "\n"


def parse_form(text: str, ctx: FieldCtx | None = None) -> FsForm:
    from .gfcore import field_for
    lines = [ln for ln in (s.strip() for s in text.splitlines()) if ln]
    if not lines:
        raise PreconditionError("empty form file")
    try:
        q, m, k, s = (int(t) for t in lines[0].split())
    except ValueError:
        raise PreconditionError(f"bad form header: {lines[0]!r}") from None
    if ctx is None:
        ctx = field_for(q, m)
    if ctx.q != q or ctx.m != m:
        raise PreconditionError("field context does not match form header")
    pairs = {}
    for ln in lines[1:]:
        toks = ln.split()
        if len(toks) != 3:
            raise PreconditionError(f"bad form line: {ln!r}")
        i, j = int(toks[0]) - 1, int(toks[1]) - 1
        pairs[(i, j)] = ctx.from_string(toks[2])
    return FsForm.from_pairs(ctx, k, s, pairs)
