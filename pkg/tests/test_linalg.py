import random

import numpy as np
import pytest

from rankinv import arrayops as ao
from rankinv.gfcore import field_for, get_field
from rankinv.linalg import (
    MatrixFqm,
    fq_rank,
    rank_data,
    rref,
    solve_right_kernel,
)


def random_matrix(ctx, rows, cols, rng):
    data = ao.unpack_codes(
        ctx, np.array([[rng.randrange(ctx.qm) for _ in range(cols)]
                       for _ in range(rows)], dtype=np.int64))
    return MatrixFqm(ctx, data, copy=False)


def matvec_is_zero(A, vec):
    ctx = A.ctx
    for i in range(A.rows):
        s = ctx.zero()
        for j in range(A.cols):
            s = s + A[i, j] * vec[j]
        if not s.is_zero():
            return False
    return True


class TestRref:
    def test_identity(self, f8):
        res = rref(MatrixFqm.identity(f8, 3))
        assert res.rank == 3
        assert res.pivot_cols == [0, 1, 2]
        assert res.kernel_basis == []

    def test_zero_matrix(self, f8):
        res = rref(MatrixFqm.zeros(f8, 2, 4))
        assert res.rank == 0
        assert len(res.kernel_basis) == 4

    def test_example_generator(self, f8):
        a = f8.gen()
        res = rref(MatrixFqm.from_rows(f8, [[1, 0, a], [0, 1, 1]]))
        assert res.rank == 2

    @pytest.mark.parametrize("key", ["gf8", "gf16"])
    def test_idempotent(self, key):
        ctx = get_field(key)
        rng = random.Random(23)
        for _ in range(15):
            A = random_matrix(ctx, rng.randrange(1, 5), rng.randrange(1, 6), rng)
            R = rref(A).rref
            again = rref(R).rref
            assert again == R

    def test_rank_equals_transpose_rank(self, f16):
        rng = random.Random(29)
        for _ in range(20):
            A = random_matrix(f16, rng.randrange(1, 6), rng.randrange(1, 6), rng)
            assert rank_data(f16, A.data) == rank_data(f16, A.transpose().data)

    def test_kernel_vectors_annihilate(self, f16):
        rng = random.Random(31)
        for _ in range(15):
            A = random_matrix(f16, rng.randrange(1, 4), rng.randrange(1, 6), rng)
            res = rref(A)
            assert len(res.kernel_basis) == A.cols - res.rank
            for vec in res.kernel_basis:
                assert matvec_is_zero(A, vec)

    def test_kernel_free_variable_convention(self, f8):
        # [[1, 1]] has the single kernel vector (1, 1): free column 1 set to 1
        kb = solve_right_kernel(MatrixFqm.from_rows(f8, [[1, 1]]))
        assert len(kb) == 1
        assert kb[0][1] == f8.one()
        assert kb[0][0] == f8.one()  # -1 = 1 in characteristic 2

    def test_empty_kernel_for_identity(self, f8):
        assert solve_right_kernel(MatrixFqm.identity(f8, 2)) == []

    def test_two_level_field_rref(self):
        ctx = field_for(4, 2)
        rng = random.Random(37)
        for _ in range(10):
            A = random_matrix(ctx, 3, 4, rng)
            res = rref(A)
            assert rank_data(ctx, res.rref.data) == res.rank
            for vec in res.kernel_basis:
                assert matvec_is_zero(A, vec)


class TestFqRank:
    def test_independent_over_fq(self, f8):
        a = f8.gen()
        assert fq_rank(f8, [[f8.one(), f8.zero()], [a, f8.zero()]]) == 2

    def test_repeated_vector(self, f8):
        assert fq_rank(f8, [[f8.one(), f8.zero()], [f8.one(), f8.zero()]]) == 1

    def test_example_columns(self, f8):
        a = f8.gen()
        cols = [[f8.one(), f8.zero()], [f8.zero(), f8.one()], [a, f8.one()]]
        assert fq_rank(f8, cols) == 3

    def test_bounds(self, f16):
        rng = random.Random(41)
        k = 2
        for count in (1, 3, 5, 9):
            vecs = random_matrix(f16, count, k, rng).data
            r = fq_rank(f16, vecs)
            assert 0 <= r <= min(count, k * f16.m)

    def test_fq_scaling_does_not_change_rank(self, f8):
        # F_q-dependent set: v and its F_q multiples
        a = f8.gen()
        v = [[a, f8.one()]]
        w = [[a, f8.one()], [a, f8.one()]]
        assert fq_rank(f8, v) == fq_rank(f8, w) == 1

    def test_basis_vectors_count(self, f8):
        vecs = [[f8.one(), f8.zero()], [f8.gen(), f8.zero()],
                [f8.gen() ** 2, f8.zero()], [f8.zero(), f8.one()]]
        assert fq_rank(f8, vecs) == 4
