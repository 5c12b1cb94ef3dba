import random

import pytest

from trace3 import gf2x
from trace3.anf import sweep
from trace3.field import MAX_DEGREE, FieldContext, build_context


def naive_poly_mul(a, b):
    r = 0
    i = 0
    while a >> i:
        if (a >> i) & 1:
            r ^= b << i
        i += 1
    return r


def naive_irreducible(f):
    """Trial division by every lower-degree polynomial."""
    d = f.bit_length() - 1
    for g in range(2, 1 << (d // 2 + 1)):
        if g.bit_length() - 1 < 1:
            continue
        if gf2x.mod(f, g) == 0:
            return False
    return True


def test_canonical_modulus_small():
    assert gf2x.canonical_modulus(1) == 0b11          # x + 1
    assert gf2x.canonical_modulus(2) == 0b111         # x^2 + x + 1
    assert gf2x.canonical_modulus(3) == 0b1011        # x^3 + x + 1


def test_canonical_modulus_degree8_by_enumeration():
    # independent oracle: scan octics in increasing packed order, trial-divide
    expected = None
    for cand in range((1 << 8) + 1, 1 << 9, 2):
        if naive_irreducible(cand):
            expected = cand
            break
    assert gf2x.canonical_modulus(8) == expected


@pytest.mark.parametrize("m", range(1, 17))
def test_canonical_modulus_is_irreducible(m):
    assert naive_irreducible(gf2x.canonical_modulus(m))


def test_build_context_range():
    with pytest.raises(ValueError):
        build_context(0)
    with pytest.raises(ValueError):
        FieldContext(MAX_DEGREE + 1)
    assert build_context(26).m == 26


def test_context_determinism():
    a = FieldContext(11)
    b = FieldContext(11)
    assert a.modulus == b.modulus
    rng = random.Random(3)
    for _ in range(50):
        x, y = rng.randrange(1 << 11), rng.randrange(1 << 11)
        assert a.mul(x, y) == b.mul(x, y)


def test_field_axioms_random():
    ctx = build_context(13)
    rng = random.Random(5)
    for _ in range(200):
        a, b, c = (rng.randrange(ctx.order) for _ in range(3))
        assert ctx.add(a, a) == 0
        assert ctx.mul(a, ctx.add(b, c)) == ctx.add(ctx.mul(a, b), ctx.mul(a, c))
        assert ctx.mul(ctx.mul(a, b), c) == ctx.mul(a, ctx.mul(b, c))
        if a:
            assert ctx.mul(a, ctx.inv(a)) == 1
            assert ctx.pow(a, ctx.order - 1) == 1
    assert ctx.inv(1) == 1
    with pytest.raises(ZeroDivisionError):
        ctx.inv(0)


def test_mul_matches_schoolbook():
    ctx = build_context(7)
    for a in range(1 << 7):
        for b in range(0, 1 << 7, 5):
            assert ctx.mul(a, b) == gf2x.mod(naive_poly_mul(a, b), ctx.modulus)


@pytest.mark.parametrize("m", [2, 3, 5, 8, 12])
def test_squaring_is_additive_exhaustive(m):
    # a degree-1 ANF sweep reproduces squaring everywhere iff it is additive
    ctx = build_context(m)
    arr = sweep(m, ctx.sqr, 1, spot_check=0)
    for x in range(1 << m):
        assert int(arr[x]) == ctx.sqr(x)


def test_frobenius_iter():
    ctx = build_context(2)
    omega = 0b10  # root of x^2 + x + 1
    assert ctx.frobenius(omega, 1) == omega ^ 1
    ctx6 = build_context(6)
    rng = random.Random(9)
    for _ in range(50):
        a = rng.randrange(ctx6.order)
        assert ctx6.frobenius(a, 0) == a
        assert ctx6.frobenius(a, 6) == a
        assert ctx6.frobenius(a, 2) == ctx6.sqr(ctx6.sqr(a))


def test_relative_trace_values():
    ctx = build_context(3)
    assert ctx.relative_trace(0, 1) == 0
    assert ctx.relative_trace(0b010, 1) == 0  # root of the modulus x^3+x+1
    for a in range(8):
        assert ctx.relative_trace(a, 3) == a
    with pytest.raises(ValueError):
        ctx.relative_trace(1, 2)


@pytest.mark.parametrize("m,r", [(4, 1), (4, 2), (6, 2), (6, 3), (12, 3), (16, 4)])
def test_relative_trace_image_and_linearity(m, r):
    ctx = build_context(m)
    zeros = sum(1 for a in range(1 << m) if ctx.relative_trace(a, r) == 0)
    assert zeros == 1 << (m - r)
    rng = random.Random(m * 31 + r)
    for _ in range(50):
        a, b = rng.randrange(ctx.order), rng.randrange(ctx.order)
        ta, tb = ctx.relative_trace(a, r), ctx.relative_trace(b, r)
        assert ctx.relative_trace(a ^ b, r) == ta ^ tb
        assert ctx.is_in_subfield(ta, r)
        c = rng.choice(ctx.subfield_elements(r))
        assert ctx.relative_trace(ctx.mul(c, a), r) == ctx.mul(c, ta)


def test_is_in_subfield():
    ctx = build_context(2)
    assert ctx.is_in_subfield(0, 1) and ctx.is_in_subfield(1, 1)
    assert not ctx.is_in_subfield(0b10, 1)


@pytest.mark.parametrize("m,r", [(4, 2), (6, 2), (6, 3), (8, 4), (12, 4)])
def test_subfield_elements_form_a_field(m, r):
    ctx = build_context(m)
    sub = ctx.subfield_elements(r)
    assert len(sub) == 1 << r
    assert all(ctx.is_in_subfield(a, r) for a in sub)
    subset = set(sub)
    rng = random.Random(m + r)
    for _ in range(40):
        a, b = rng.choice(sub), rng.choice(sub)
        assert a ^ b in subset and ctx.mul(a, b) in subset


@pytest.mark.parametrize("m,r", [(4, 2), (6, 2), (6, 3), (12, 3), (20, 4)])
def test_embed_subfield_is_homomorphism(m, r):
    big = build_context(m)
    small = build_context(r)
    emb = big.embed_subfield(r)
    assert emb[0] == 0 and emb[1] == 1
    assert sorted(emb) == big.subfield_elements(r)
    rng = random.Random(m * 7 + r)
    for _ in range(60):
        a, b = rng.randrange(1 << r), rng.randrange(1 << r)
        assert emb[a ^ b] == emb[a] ^ emb[b]
        assert emb[small.mul(a, b)] == big.mul(emb[a], emb[b])


def test_enumeration():
    assert list(build_context(1).elements()) == [0, 1]
    two = list(build_context(2).elements())
    assert len(two) == 4 and two[0] == 0
    ctx = build_context(10)
    assert len(ctx.elements()) == 1024
    assert list(ctx.elements(10, 14)) == [10, 11, 12, 13]
