import random
from math import comb

import pytest

from rankinv.errors import BudgetError, PreconditionError
from rankinv.gfcore import field_for
from rankinv.geometry import extended_matrix, linear_set, system_of
from rankinv.hilbert import (
    classify,
    fs_intersection_dim_eval,
    fs_intersection_dim_system,
    h_qplus1_closed_form,
    h_qsplus1_upper_bound,
    hilbert_sequence,
    monomial_exponents,
    regularity_lower_bound,
    schur_power_dim_oracle,
    schur_product_dim,
)
from rankinv.linalg import MatrixFqm
from rankinv.rankcodes import (
    RankMetricCode,
    delta_rank,
    gabidulin,
    isometry_image,
    random_systematic,
)


@pytest.fixture
def ex_code(f8):
    a = f8.gen()
    return RankMetricCode(f8, MatrixFqm.from_rows(f8, [[1, 0, a], [0, 1, 1]]))


def nondegenerate_codes(ctx, n, k, count, seed0=0):
    """First `count` nondegenerate seeded random codes for the parameters."""
    out = []
    seed = seed0
    while len(out) < count:
        code = random_systematic(ctx, n, k, seed)
        if code.nondegenerate:
            out.append(code)
        seed += 1
    return out


class TestMonomials:
    def test_counts(self):
        for k in (2, 3, 4):
            for i in (0, 1, 2, 5):
                assert monomial_exponents(k, i).shape[0] == comb(k + i - 1, i)

    def test_graded_lex_order(self):
        exps = monomial_exponents(3, 2).tolist()
        assert exps[0] == [2, 0, 0] and exps[-1] == [0, 0, 2]


class TestSequence:
    def test_example_sequence(self, ex_code):
        rep = hilbert_sequence(ex_code)
        assert rep.values == [1, 2, 3, 4, 5]
        assert rep.regularity == 4
        assert rep.point_count == 5
        assert rep.ideal_dims == [0, 0, 0, 0, 0]
        assert rep.prefix(7) == [1, 2, 3, 4, 5, 5, 5, 5]
        assert [rep.ideal_dim_at(i, 2) for i in range(8)] == [0, 0, 0, 0, 0, 1, 2, 3]

    def test_h0_and_h1(self, f16):
        for code in nondegenerate_codes(f16, 4, 2, 3):
            rep = hilbert_sequence(code)
            assert rep.values[0] == 1
            assert rep.value_at(1) == code.k

    def test_nondecreasing_and_stabilizes(self, f16):
        for code in nondegenerate_codes(f16, 4, 2, 4, seed0=50):
            rep = hilbert_sequence(code)
            assert all(a <= b for a, b in zip(rep.values, rep.values[1:]))
            assert rep.values[-1] == rep.point_count
            ls = linear_set(system_of(code))
            assert schur_product_dim(ls, rep.regularity + 1) == rep.point_count

    def test_degenerate_rejected(self, f8):
        code = RankMetricCode(f8, MatrixFqm.from_rows(f8, [[1, 0, 1], [0, 1, 1]]))
        with pytest.raises(PreconditionError):
            hilbert_sequence(code)

    def test_degree_budget(self, ex_code):
        with pytest.raises(BudgetError):
            hilbert_sequence(ex_code, max_degree=2)

    def test_thm_small_degrees(self, f8, f16):
        # h_i = C(k+i-1, i) for every i <= q, on every nondegenerate code
        configs = [(f8, 3, 2), (f16, 4, 2), (field_for(3, 3), 4, 2)]
        for ctx, n, k in configs:
            for code in nondegenerate_codes(ctx, n, k, 4):
                rep = hilbert_sequence(code)
                for i in range(ctx.q + 1):
                    assert rep.value_at(i) == comb(k + i - 1, i)


class TestOracle:
    def test_degree_zero_and_one(self, ex_code):
        GH = extended_matrix(system_of(ex_code))
        assert schur_power_dim_oracle(GH, 0) == 1
        assert schur_power_dim_oracle(GH, 1) == 2

    def test_example_degree_five(self, ex_code):
        GH = extended_matrix(system_of(ex_code))
        assert schur_power_dim_oracle(GH, 5) == 5

    def test_matches_monomial_method(self, f8, f16):
        configs = [(f8, 3, 2), (f8, 4, 2), (f16, 4, 2), (field_for(3, 3), 4, 2)]
        rng = random.Random(61)
        for ctx, n, k in configs:
            for code in nondegenerate_codes(ctx, n, k, 3, seed0=rng.randrange(100)):
                sys = system_of(code)
                ls = linear_set(sys)
                GH = extended_matrix(sys)
                rep = hilbert_sequence(code)
                for i in range(rep.regularity + 2):
                    assert schur_power_dim_oracle(GH, i) == rep.value_at(i)

    def test_budget(self, ex_code):
        GH = extended_matrix(system_of(ex_code))
        with pytest.raises(BudgetError):
            schur_power_dim_oracle(GH, 5, max_products=3)


class TestClosedForm:
    def test_values(self):
        assert h_qplus1_closed_form(2, 2, 1) == 4
        assert h_qplus1_closed_form(3, 2, 1) == comb(5, 3) - 1
        assert h_qplus1_closed_form(3, 2, 3) == comb(5, 3)
        assert h_qplus1_closed_form(4, 2, 4) == comb(6, 3)

    def test_r_range(self):
        with pytest.raises(PreconditionError):
            h_qplus1_closed_form(2, 2, 3)

    def test_identity_on_random_codes(self, f8, f16, f256):
        # measured h_{q+1} equals C(k+q, q+1) - C(k-r, 2) exactly
        configs = [(f8, 3, 2), (f8, 4, 2), (f16, 4, 2), (f16, 5, 3), (f256, 6, 3)]
        for ctx, n, k in configs:
            for code in nondegenerate_codes(ctx, n, k, 4):
                ls = linear_set(system_of(code))
                measured = schur_product_dim(ls, ctx.q + 1)
                r = delta_rank(code, 1)
                assert measured == h_qplus1_closed_form(k, ctx.q, r)


class TestFsIntersection:
    def test_both_routes_agree(self, f8, f16):
        configs = [(f8, 3, 2), (f8, 4, 3), (f16, 4, 2), (f16, 5, 3)]
        for ctx, n, k in configs:
            for code in nondegenerate_codes(ctx, n, k, 3):
                ls = linear_set(system_of(code))
                for s in range(1, ctx.m):
                    a = fs_intersection_dim_system(code, s)
                    b = fs_intersection_dim_eval(ls, ctx, s)
                    r = delta_rank(code, s)
                    expected = (k - r) * (k - r - 1) // 2 if k - r >= 2 else 0
                    assert a == b == expected, (ctx.identity, n, k, s)

    def test_gabidulin_value(self, f256):
        # MRD generalized Gabidulin with parameter s: dimension C(k-1, 2)
        for s in (1, 3):
            code = gabidulin(f256, f256.basis()[:6], k=3, s=s)
            assert fs_intersection_dim_system(code, s) == 1  # C(2, 2)

    def test_subfield_block(self, f8):
        # X over F_q: every form in F_s vanishes, dimension C(k, 2)
        code = RankMetricCode(f8, MatrixFqm.from_rows(
            f8, [[1, 0, 0, 1], [0, 1, 0, 1], [0, 0, 1, 1]]))
        assert fs_intersection_dim_system(code, 1) == 3  # C(3, 2)

    def test_eval_method_on_pg(self, f8):
        # the full code I_k: linear set is PG(k-1, q); all basis forms vanish
        code = RankMetricCode(f8, MatrixFqm.identity(f8, 3))
        ls = linear_set(system_of(code))
        assert fs_intersection_dim_eval(ls, f8, 1) == 3

    def test_s_out_of_range(self, ex_code):
        with pytest.raises(PreconditionError):
            fs_intersection_dim_system(ex_code, 0)
        with pytest.raises(PreconditionError):
            fs_intersection_dim_system(ex_code, ex_code.ctx.m)


class TestUpperBound:
    def test_s1_equals_closed_form(self, f16):
        for code in nondegenerate_codes(f16, 4, 2, 4):
            r = delta_rank(code, 1)
            assert h_qsplus1_upper_bound(code, 1) == \
                h_qplus1_closed_form(code.k, f16.q, r)

    def test_k2_no_correction(self, f16):
        for code in nondegenerate_codes(f16, 4, 2, 2):
            for s in range(1, 4):
                if delta_rank(code, s) >= 1:
                    qs = f16.q ** s
                    assert h_qsplus1_upper_bound(code, s) == qs + 2

    def test_bound_vs_measured(self, f256):
        # [6,3] code: bound at s=1 equals C(5,3) - C(0,2) = 10 = h_3
        code = RankMetricCode(f256, _sec3_g1(f256))
        assert h_qsplus1_upper_bound(code, 1) == 10
        rep = hilbert_sequence(code)
        assert rep.value_at(3) == 10
        for s in range(1, 8):
            assert rep.value_at(f256.q ** s + 1) <= h_qsplus1_upper_bound(code, s)


def _sec3_g1(f):
    a = f.gen()
    one, zero = f.one(), f.zero()
    return MatrixFqm.from_rows(f, [
        [one, zero, zero, a ** 95, a ** 173, a ** 98],
        [zero, one, zero, a ** 54, a ** 218, a ** 109],
        [zero, zero, one, a ** 12, a ** 98, a ** 135]])


class TestRegularityBound:
    def test_example(self, ex_code):
        rep = hilbert_sequence(ex_code)
        bound = regularity_lower_bound(ex_code, rep.point_count)
        assert bound == 3
        assert bound < rep.regularity

    def test_pg_linear_set(self, f8):
        code = RankMetricCode(f8, MatrixFqm.identity(f8, 2))
        bound = regularity_lower_bound(code)
        rep = hilbert_sequence(code)
        assert bound < rep.regularity or bound == 0

    def test_sec3_code(self, f256):
        code = RankMetricCode(f256, _sec3_g1(f256))
        rep = hilbert_sequence(code)
        bound = regularity_lower_bound(code, rep.point_count)
        assert bound == 9  # s = 3: C(11, 9) - C(0, 2) = 55 < 63
        assert bound < rep.regularity == 12


class TestClassify:
    def test_gabidulin(self, f256):
        code = gabidulin(f256, f256.basis()[:6], k=3, s=1)
        verdict, ev = classify(code, measure=True)
        assert verdict == "gabidulin_like"
        assert ev["r"] == 1
        assert ev["qsum1"] == 4
        assert ev["measured_h"] == ev["predicted_h"] == comb(5, 3) - 1

    def test_random(self, f256):
        hits = 0
        for code in nondegenerate_codes(f256, 6, 3, 20):
            verdict, ev = classify(code)
            if verdict == "random_like":
                hits += 1
                assert ev["r"] == 3
        assert hits >= 18  # bound 1 - 3/128 makes misses rare

    def test_uninformative_shape(self, f8):
        code = random_systematic(f8, 3, 2, 1)  # k = n-1
        verdict, ev = classify(code)
        assert verdict == "other"
        assert "note" in ev

    def test_k_equals_n(self, f8):
        code = RankMetricCode(f8, MatrixFqm.identity(f8, 2))
        verdict, ev = classify(code)
        assert verdict == "other"


class TestEquivalenceInvariance:
    def test_h_sequence_invariant(self, f8, f16):
        rng = random.Random(71)
        from test_rankcodes import random_invertible_fq
        for ctx, n, k in ((f8, 3, 2), (f16, 4, 2)):
            base = nondegenerate_codes(ctx, n, k, 1)[0]
            rep0 = hilbert_sequence(base).values
            for _ in range(5):
                alpha = ctx.element_from_code(rng.randrange(1, ctx.qm))
                A = random_invertible_fq(ctx, n, rng)
                image = isometry_image(base, alpha, A)
                assert hilbert_sequence(image).values == rep0
