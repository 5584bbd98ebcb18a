import numpy as np
import pytest

from bentzoo.errors import ZeroInversion
from bentzoo.gf2m import (
    Field,
    PairSplit,
    SubfieldEmbedding,
    default_polynomial,
    default_polynomials,
    is_irreducible,
)


def test_known_small_values_m3():
    f = Field(3, 0xB)  # x^3 + x + 1
    # a * a^2 = a^3 = a + 1
    assert f.mul(0b010, 0b100) == 0b011
    # inv(a) = a^6 = a^2 + 1
    assert f.inv(0b010) == 0b101
    for e in range(8):
        assert f.mul(e, 0) == 0
        assert f.mul(e, 1) == e


def test_inverse_m2():
    f = Field(2)
    w = 0b10
    assert f.inv(w) == w ^ 1  # w^2 = w + 1
    with pytest.raises(ZeroInversion):
        f.inv(0)


def test_mul_associative_distributive_exhaustive_small():
    for m in (2, 3, 4):
        f = Field(m)
        for a in range(f.order):
            for b in range(f.order):
                for c in range(0, f.order, 3):
                    assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
                    assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)


def test_mul_randomized_larger_fields():
    rng = np.random.default_rng(0)
    for m in (6, 10):
        f = Field(m)
        for _ in range(200):
            a, b, c = (int(v) for v in rng.integers(0, f.order, 3))
            assert f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c)
            assert f.mul(a, b ^ c) == f.mul(a, b) ^ f.mul(a, c)
            if a:
                assert f.mul(a, f.inv(a)) == 1


def test_registry_polynomials_are_smallest_irreducible():
    regs = default_polynomials()
    assert set(regs) == set(range(2, 17))
    for m, poly in regs.items():
        assert poly.bit_length() - 1 == m
        assert is_irreducible(poly)
        for cand in range((1 << m) | 1, poly, 2):
            assert not is_irreducible(cand)


def test_known_registry_entries():
    assert default_polynomial(3) == 0xB
    assert default_polynomial(4) == 0x13
    assert default_polynomial(6) == 0x43
    assert default_polynomial(8) == 0x11B


def test_bad_polynomials_rejected():
    with pytest.raises(ValueError):
        Field(3, 0b1111)  # x^3+x^2+x+1 = (x+1)(x^2+1): reducible
    with pytest.raises(ValueError):
        Field(3, 0b1010)  # constant term missing
    with pytest.raises(ValueError):
        Field(1)


def test_generator_is_primitive_and_smallest():
    for m in (2, 3, 4, 5, 8):
        f = Field(m)
        assert f.mult_order(f.generator) == f.order - 1
        for g in range(2, f.generator):
            assert f.mult_order(g) != f.order - 1


def test_trace_linear_and_balanced():
    for m in (2, 3, 4, 5, 6):
        f = Field(m)
        assert f.trace(0) == 0
        assert sum(f.trace(x) for x in range(f.order)) == f.order // 2
        for x in range(f.order):
            for y in range(0, f.order, 5):
                assert f.trace(x ^ y) == f.trace(x) ^ f.trace(y)


def test_trace_m3_values():
    f = Field(3)
    assert f.trace(1) == 1  # m odd
    assert f.trace(0b010) == 0  # Tr(a) = a + a^2 + a^4 = 0


def test_trace_is_conjugate_sum():
    for m in (3, 4, 5):
        f = Field(m)
        for x in range(f.order):
            s = 0
            z = x
            for _ in range(m):
                s ^= z
                z = f.mul(z, z)
            assert s == f.trace(x)


def test_sigma_basics():
    f = Field(3)
    for c in range(8):
        assert f.sigma(c, 0) == 0
        assert f.sigma(0, c) == 0
    assert f.sigma(1, 1) == 1  # C(3,2) mod 2
    # sigma(1, a) = a^3 + a^5 + a^6 = 1
    assert f.sigma(1, 0b010) == 1


def test_sigma_scaling_identity():
    for m in (3, 4, 5):
        f = Field(m)
        for c in range(1, f.order):
            for x in range(f.order):
                assert f.sigma(c, x) == f.sigma(1, f.mul(c, x))


def test_sigma_cocycle_exhaustive():
    for m in (2, 3, 4):
        assert Field(m).sigma_cocycle_holds()


def test_sigma_cocycle_rejects_large_m():
    with pytest.raises(ValueError):
        Field(9).sigma_cocycle_holds()


def test_psi_table_is_trace_pairing():
    for m in (3, 4):
        f = Field(m)
        psi = f.psi_table
        for u in range(f.order):
            for x in range(f.order):
                assert (int(psi[u]) & x).bit_count() & 1 == f.trace(f.mul(u, x))
        assert np.array_equal(f.psi_inv_table[psi], np.arange(f.order))


def test_spec_string_round_trip():
    f = Field(5)
    assert f.spec_str == "m=5,poly=0x25"
    g = Field.from_spec(f.spec_str)
    assert g == f


# -- subfield embeddings -------------------------------------------------


def test_embedding_is_field_homomorphism():
    parent = Field(6)
    emb = parent.subfield(3)
    sub = emb.sub
    imgs = emb.images
    for a in range(8):
        for b in range(8):
            assert imgs[a ^ b] == imgs[a] ^ imgs[b]
            assert imgs[sub.mul(a, b)] == parent.mul(int(imgs[a]), int(imgs[b]))
    assert imgs[0] == 0 and imgs[1] == 1
    for z in imgs:
        assert parent.pow(int(z), 8) == int(z)


def test_embedding_identity_when_k_equals_n():
    parent = Field(4)
    emb = parent.subfield(4)
    assert np.array_equal(emb.images, np.arange(16))


def test_rel_trace_values_and_fibers():
    parent = Field(4, 0x13)
    emb = parent.subfield(2)
    # Tr^4_2(a) = a + a^4 = 1 under x^4 + x + 1
    assert emb.rel_trace(0b0010) == 1
    assert emb.rel_trace(0) == 0
    fibers = {}
    for x in range(16):
        t = emb.rel_trace(x)
        assert emb.in_image(t)
        fibers[t] = fibers.get(t, 0) + 1
    assert set(fibers.values()) == {4} and len(fibers) == 4


def test_rel_trace_subfield_input_even_degree_vanishes():
    parent = Field(4)
    emb = parent.subfield(2)
    for v in range(4):  # n/k = 2 equal summands
        assert emb.rel_trace(int(emb.images[v])) == 0


def test_rel_trace_composes_to_absolute_trace():
    parent = Field(6)
    emb = parent.subfield(3)
    sub = emb.sub
    for x in range(parent.order):
        assert sub.trace(emb.rel_trace_sub(x)) == parent.trace(x)


def test_embedding_requires_divisor_degree():
    with pytest.raises(ValueError):
        Field(6).subfield(4)


# -- pair splitting -------------------------------------------------------


def test_pair_split_round_trip(f64):
    pair = PairSplit(f64)
    for x in range(8):
        for y in range(8):
            z = pair.univ(x, y)
            assert pair.split(z) == (x, y)
            t = pair.mv_index(x, y)
            assert pair.mv_split(t) == (x, y)


def test_pair_split_linear(f64):
    pair = PairSplit(f64)
    for x1, y1, x2, y2 in [(1, 2, 3, 4), (5, 0, 0, 7), (6, 6, 1, 1)]:
        assert pair.univ(x1 ^ x2, y1 ^ y2) == pair.univ(x1, y1) ^ pair.univ(x2, y2)


def test_pair_mv_index_carries_trace_pairing(f64):
    # mu(mv_index(x, y) pairing): sum_i xt_i y_i == Tr^m(x y)
    pair = PairSplit(f64)
    sub = pair.embed.sub
    for x in range(8):
        for y in range(8):
            t = pair.mv_index(x, y)
            lo = t & 7
            hi = t >> 3
            assert (lo & hi).bit_count() & 1 == sub.trace(sub.mul(x, y))
