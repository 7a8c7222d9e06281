import math
import random

import pytest

from rankinv.errors import PreconditionError
from rankinv.gfcore import (
    BUILTIN_CATALOG,
    FieldCtx,
    catalog_key,
    field_for,
    field_new,
    frobenius,
    get_field,
    in_subfield,
    load_catalog,
    parse_field_spec,
    trace_rel,
)


class TestConstruction:
    def test_paper_moduli(self, f8, f16, f256):
        a8 = f8.gen()
        assert a8 ** 3 == a8 + 1
        a16 = f16.gen()
        assert a16 ** 4 == a16 + 1
        a = f256.gen()
        assert a ** 8 == a ** 4 + a ** 3 + a ** 2 + 1

    def test_identity_string(self, f8):
        assert f8.identity == "GF(8)/GF(2) x^3+x+1"

    def test_reducible_ext_modulus_rejected(self):
        with pytest.raises(PreconditionError, match="reducible"):
            field_new(2, 1, (0, 1), 2, (1, 0, 1))  # x^2+1 = (x+1)^2

    def test_degree_mismatch_rejected(self):
        with pytest.raises(PreconditionError):
            field_new(2, 1, (0, 1), 3, (1, 1, 1))
        with pytest.raises(PreconditionError):
            field_new(2, 2, (0, 1), 3, (1, 1, 0, 1))

    def test_nonprime_p_rejected(self):
        with pytest.raises(PreconditionError, match="not prime"):
            field_new(4, 1, (0, 1), 2, (1, 1, 1))

    def test_nonmonic_rejected(self):
        with pytest.raises(PreconditionError):
            field_new(3, 1, (0, 1), 2, (1, 1, 2))

    def test_element_enumeration_complete(self, f8):
        seen = {x.digits for x in f8.elements()}
        assert len(seen) == 8

    def test_two_level_field(self):
        ctx = field_for(4, 3)
        assert ctx.p == 2 and ctx.e == 2 and ctx.q == 4 and ctx.qm == 64
        seen = {x.digits for x in ctx.elements()}
        assert len(seen) == 64
        x = ctx.gen()
        assert x ** 64 == x
        # coefficients expose the two-level representation
        assert len(x.coeffs) == 3 and len(x.coeffs[0]) == 2


class TestArithmetic:
    @pytest.mark.parametrize("key", ["gf8", "gf16", "gf4_2"])
    def test_field_axioms_random_triples(self, key):
        ctx = field_for(4, 2) if key == "gf4_2" else get_field(key)
        rng = random.Random(17)
        elems = list(ctx.elements())
        for _ in range(120):
            x, y, z = (rng.choice(elems) for _ in range(3))
            assert (x + y) + z == x + (y + z)
            assert x + y == y + x
            assert (x * y) * z == x * (y * z)
            assert x * y == y * x
            assert x * (y + z) == x * y + x * z
            assert x + ctx.zero() == x
            assert x * ctx.one() == x
            assert (x - x).is_zero()
            if not x.is_zero():
                assert x * x.inverse() == ctx.one()

    def test_inverse_matches_exponentiation(self, f16):
        for x in f16.elements():
            if x.is_zero():
                continue
            assert x.inverse() == x ** (f16.qm - 2)

    def test_zero_inversion_raises(self, f8):
        with pytest.raises(ZeroDivisionError):
            f8.zero().inverse()

    def test_string_roundtrip(self, f256):
        for code in (0, 1, 7, 200, 255):
            x = f256.element_from_code(code)
            assert f256.from_string(f256.to_string(x)) == x

    def test_scalar_embedding(self, f8):
        assert f8.scalar(2).is_zero()
        assert f8.scalar(3) == f8.one()


class TestFrobenius:
    def test_squaring_in_char_two(self, f8):
        a = f8.gen()
        assert frobenius(f8, a, 1) == a * a

    def test_full_power_is_identity(self, f8):
        a = f8.gen()
        assert frobenius(f8, a + 1, 3) == a + 1
        for x in f8.elements():
            assert frobenius(f8, x, f8.m) == x

    def test_repeated_squaring_oracle(self, f16):
        # q = 2: x^(q^s) must equal s successive squarings
        rng = random.Random(3)
        elems = list(f16.elements())
        for _ in range(40):
            x = rng.choice(elems)
            for s in range(5):
                expect = x
                for _ in range(s):
                    expect = expect * expect
                assert frobenius(f16, x, s) == expect
        a = f16.gen()
        assert frobenius(f16, a, 2) == a ** 4 == a + 1

    def test_additive_and_multiplicative(self, f256):
        rng = random.Random(5)
        for _ in range(60):
            x = f256.element_from_code(rng.randrange(256))
            y = f256.element_from_code(rng.randrange(256))
            s = rng.randrange(1, 8)
            assert frobenius(f256, x + y, s) == frobenius(f256, x, s) + frobenius(f256, y, s)
            assert frobenius(f256, x * y, s) == frobenius(f256, x, s) * frobenius(f256, y, s)

    @pytest.mark.parametrize("key,s", [("gf8", 1), ("gf8", 2), ("gf16", 1), ("gf16", 3)])
    def test_fixed_points_count(self, key, s):
        ctx = get_field(key)
        assert math.gcd(s, ctx.m) == 1
        fixed = sum(1 for x in ctx.elements() if frobenius(ctx, x, s) == x)
        assert fixed == ctx.q

    def test_bar_map_image_and_fibers(self, f8):
        # x -> x^q - x has image of size q^(m-1), every fiber of size q
        from collections import Counter
        images = Counter(
            (frobenius(f8, x, 1) - x).digits for x in f8.elements())
        assert len(images) == f8.q ** (f8.m - 1)
        assert set(images.values()) == {f8.q}

    def test_negative_s_rejected(self, f8):
        with pytest.raises(PreconditionError):
            frobenius(f8, f8.gen(), -1)


class TestTrace:
    def test_alpha_trace_zero(self, f8):
        assert trace_rel(f8, f8.gen(), 1).is_zero()

    def test_zero_trace(self, f16):
        for delta in (1, 2, 4):
            assert trace_rel(f16, f16.zero(), delta).is_zero()

    def test_trace_zero_count(self, f8):
        zeros = sum(1 for x in f8.elements() if trace_rel(f8, x, 1).is_zero())
        assert zeros == f8.q ** (f8.m - 1)

    @pytest.mark.parametrize("delta", [1, 2])
    def test_surjective_with_equal_fibers(self, f16, delta):
        from collections import Counter
        fibers = Counter(trace_rel(f16, x, delta).digits for x in f16.elements())
        assert len(fibers) == f16.q ** delta
        assert set(fibers.values()) == {f16.q ** (f16.m - delta)}

    def test_linearity(self, f16):
        rng = random.Random(11)
        elems = list(f16.elements())
        for _ in range(50):
            x, y = rng.choice(elems), rng.choice(elems)
            assert trace_rel(f16, x + y, 2) == trace_rel(f16, x, 2) + trace_rel(f16, y, 2)

    def test_bad_delta(self, f8):
        with pytest.raises(PreconditionError):
            trace_rel(f8, f8.gen(), 2)


class TestSubfield:
    def test_one_in_prime_subfield(self, f8):
        assert in_subfield(f8, f8.one(), 1)

    def test_generator_not_in_prime_subfield(self, f8):
        assert not in_subfield(f8, f8.gen(), 1)

    def test_alpha5_generates_f4(self, f16):
        a = f16.gen()
        assert in_subfield(f16, a ** 5, 2)
        assert not in_subfield(f16, a ** 5, 1)
        # F_4 inside F_16 has exactly 4 members
        members = sum(1 for x in f16.elements() if in_subfield(f16, x, 2))
        assert members == 4


class TestCatalog:
    def test_builtin_keys(self):
        for key in BUILTIN_CATALOG:
            ctx = get_field(key)
            assert catalog_key(ctx.p, ctx.e, ctx.m) == key

    def test_inline_spec(self):
        ctx = get_field("2 1 0 1 3 1 1 0 1")
        assert ctx.identity == "GF(8)/GF(2) x^3+x+1"

    def test_spec_errors(self):
        with pytest.raises(PreconditionError):
            parse_field_spec("2 1 0 1 3 1 1 0")
        with pytest.raises(PreconditionError):
            get_field("gf_nonsense")

    def test_derived_key_lookup(self):
        ctx = get_field("gf64")
        assert ctx.qm == 64 and ctx.q == 2

    def test_catalog_file(self, tmp_path, monkeypatch):
        path = tmp_path / "fields.txt"
        path.write_text("# custom F_9\n3 1 0 1 2 2 2 1\n")
        entries = load_catalog(str(path))
        assert "gf9" in entries
        monkeypatch.setenv("RANKINV_CATALOG", str(path))
        ctx = get_field("gf9")
        assert ctx.q == 3 and ctx.m == 2 and ctx.qm == 9

    def test_field_for_prime_power(self):
        ctx = field_for(3, 2)
        assert ctx.qm == 9
        with pytest.raises(PreconditionError):
            field_for(6, 2)
