"""Walsh / differential spectra against naive double-loop oracles."""

import random

import numpy as np
import pytest

from vbfkit.gf2m import Field
from vbfkit.spectra import (
    ParityMismatchError,
    differential_spectrum,
    differential_uniformity,
    is_ab,
    is_apn,
    is_three_valued,
    nonlinearity,
    walsh_matrix,
    walsh_spectrum,
    walsh_value,
)
from vbfkit.vbf import (
    FuncTable,
    UnivariatePoly,
    add,
    compose,
    evaluate,
    is_permutation,
    monomial,
)


def _random_table(f: Field, rng: random.Random) -> FuncTable:
    return FuncTable(f, [rng.randrange(f.size) for _ in range(f.size)])


def _diff_count_oracle(tab: FuncTable, a: int, b: int) -> int:
    vals = tab.values
    return sum(1 for x in range(tab.ctx.size) if vals[x ^ a] ^ vals[x] == b)


# ---------------------------------------------------------------- walsh_value

def test_walsh_value_identity_characters():
    f = Field(4)
    ident = monomial(f, 1)
    for a in range(16):
        for b in range(16):
            expect = 16 if a == b else 0
            if b == 0:
                expect = 16 if a == 0 else 0
            assert walsh_value(ident, a, b) == expect


def test_walsh_value_b_zero_collapses():
    rng = random.Random(8)
    f = Field(5)
    tab = _random_table(f, rng)
    assert walsh_value(tab, 0, 0) == 32
    for a in range(1, 32):
        assert walsh_value(tab, a, 0) == 0


def test_cube_gf32_walsh_values_three_valued():
    f = Field(5)
    tab = monomial(f, 3)
    seen = set()
    for a in range(32):
        for b in range(1, 32):
            seen.add(walsh_value(tab, a, b))
    assert seen == {0, 8, -8}


# ---------------------------------------------------------------- fast spectrum

def test_fast_spectrum_matches_oracle_pointwise_exhaustive():
    rng = random.Random(10)
    for m in (3, 4):
        f = Field(m)
        n = 1 << m
        tab = _random_table(f, rng)
        mat = walsh_matrix(tab)
        assert mat.shape == (n - 1, n)
        for b in range(1, n):
            for a in range(n):
                assert int(mat[b - 1, a]) == walsh_value(tab, a, b)


def test_fast_spectrum_matches_oracle_sampled_gf64():
    rng = random.Random(11)
    f = Field(6)
    tab = _random_table(f, rng)
    mat = walsh_matrix(tab)
    for _ in range(60):
        a, b = rng.randrange(64), rng.randrange(1, 64)
        assert int(mat[b - 1, a]) == walsh_value(tab, a, b)


def test_identity_spectrum_distribution_gf8():
    spec = walsh_spectrum(monomial(Field(3), 1))
    assert spec.distribution == {8: 7, 0: 49}
    assert spec.max_abs == 8


def test_spectrum_distribution_counts_total():
    rng = random.Random(12)
    for m in (3, 5):
        tab = _random_table(Field(m), rng)
        spec = walsh_spectrum(tab)
        n = 1 << m
        assert sum(spec.distribution.values()) == n * (n - 1)
        assert all(v % 2 == 0 for v in spec.distribution)


def test_parseval_per_component():
    rng = random.Random(13)
    for m in (4, 5):
        f = Field(m)
        tab = _random_table(f, rng)
        mat = walsh_matrix(tab).astype(np.int64)
        for row in mat:
            assert int(np.sum(row * row)) == 1 << (2 * m)


def test_balanced_components_iff_permutation():
    rng = random.Random(14)
    f = Field(4)
    perm = list(range(16))
    rng.shuffle(perm)
    for tab in (FuncTable(f, perm), _random_table(f, rng), monomial(f, 3)):
        mat = walsh_matrix(tab)
        balanced = all(int(mat[b - 1, 0]) == 0 for b in range(1, 16))
        assert balanced == is_permutation(tab)


def test_spectrum_matches_under_alternate_reduction_poly():
    # same power map, two bases: multisets agree
    s1 = walsh_spectrum(monomial(Field(5), 3))
    s2 = walsh_spectrum(monomial(Field(5, poly=0b101001), 3))
    assert s1.distribution == s2.distribution


# ---------------------------------------------------------------- nonlinearity

def test_nonlinearity_of_affine_is_zero():
    f = Field(4)
    assert nonlinearity(evaluate(UnivariatePoly(f, {1: 7, 0: 3}))) == 0
    assert nonlinearity(FuncTable(f, [5] * 16)) == 0


def test_nonlinearity_cube_gf32():
    assert nonlinearity(monomial(Field(5), 3)) == 12


def test_nonlinearity_inverse_map_gf64():
    assert nonlinearity(monomial(Field(6), 62)) == 24


# ---------------------------------------------------------------- verdicts

def test_cube_is_ab_gf32():
    assert is_ab(monomial(Field(5), 3))


def test_inverse_map_not_ab_gf32():
    assert not is_ab(monomial(Field(5), 30))


def test_even_degree_never_ab():
    assert not is_ab(monomial(Field(4), 3))
    assert not is_ab(monomial(Field(6), 5))


def test_gold_maps_ab_for_coprime_index():
    for m, i in ((3, 1), (5, 1), (5, 2), (7, 1), (7, 2), (7, 3)):
        assert is_ab(monomial(Field(m), (1 << i) + 1))


def test_ab_implies_apn_on_gold_maps():
    for m in (3, 5, 7):
        tab = monomial(Field(m), 3)
        assert is_ab(tab) and is_apn(tab)


def test_cube_apn_gf16():
    assert is_apn(monomial(Field(4), 3))


def test_affine_not_apn():
    f = Field(4)
    assert not is_apn(evaluate(UnivariatePoly(f, {1: 1, 0: 9})))


def test_dobbertin_exponent_29_gf32_apn_not_ab():
    tab = monomial(Field(5), 29)
    assert is_apn(tab)
    assert not is_ab(tab)


def test_three_valued_kasami_like_wide_spectrum():
    # x^(2^3+1) on m=9: gcd(3,9)=3 and m/3 odd, support {0, +-2^6}
    tab = monomial(Field(9), 9)
    assert is_three_valued(tab, 3)
    assert not is_three_valued(tab, 1)
    spec = walsh_spectrum(tab)
    assert set(spec.distribution) == {0, 64, -64}


def test_three_valued_agrees_with_ab_at_s_one():
    tab = monomial(Field(5), 3)
    assert is_three_valued(tab, 1)


def test_three_valued_identity_is_flat():
    tab = monomial(Field(5), 1)
    assert not is_three_valued(tab, 1)
    assert not is_three_valued(tab, 3)


def test_three_valued_parity_guard():
    tab = monomial(Field(5), 3)
    with pytest.raises(ParityMismatchError):
        is_three_valued(tab, 2)
    with pytest.raises(ValueError):
        is_three_valued(tab, 5)  # s must stay below m


# ---------------------------------------------------------------- differential

def test_differential_spectrum_matches_count_oracle():
    rng = random.Random(15)
    for m in (3, 4):
        f = Field(m)
        n = 1 << m
        tab = _random_table(f, rng)
        spec = differential_spectrum(tab)
        counts = {}
        for a in range(1, n):
            for b in range(n):
                c = _diff_count_oracle(tab, a, b)
                counts[c] = counts.get(c, 0) + 1
        assert spec.distribution == counts
        assert spec.max == max(c for c in counts if counts[c])


def test_differential_spectrum_of_linear_map():
    f = Field(4)
    tab = evaluate(UnivariatePoly(f, {2: 5, 1: 3}))
    spec = differential_spectrum(tab)
    # derivative in direction a is the constant L(a): one full fiber per row
    assert spec.distribution == {16: 15, 0: 15 * 15}
    assert spec.max == 16


def test_cube_gf32_differentially_two_uniform():
    spec = differential_spectrum(monomial(Field(5), 3))
    assert spec.max == 2
    assert differential_uniformity(monomial(Field(5), 3)) == 2


def test_inverse_map_gf64_differentially_four_uniform():
    assert differential_uniformity(monomial(Field(6), 62)) == 4


def test_differential_row_sums_and_evenness():
    rng = random.Random(16)
    for m in (3, 5):
        n = 1 << m
        tab = _random_table(Field(m), rng)
        spec = differential_spectrum(tab)
        assert all(v % 2 == 0 for v in spec.distribution)
        assert sum(v * c for v, c in spec.distribution.items()) == (n - 1) * n
        assert sum(spec.distribution.values()) == (n - 1) * n


# ---------------------------------------------------------------- EA invariance

def _abs_distribution(dist):
    out = {}
    for v, c in dist.items():
        out[abs(v)] = out.get(abs(v), 0) + c
    return out


def test_spectra_invariant_under_monomial_linear_maps():
    # homogeneous equivalence preserves the signed Walsh multiset exactly
    rng = random.Random(17)
    f = Field(5)
    base = monomial(f, 3)
    w0 = walsh_spectrum(base).distribution
    d0 = differential_spectrum(base).distribution
    for _ in range(5):
        a1, a2 = rng.randrange(1, 32), rng.randrange(1, 32)
        j1, j2 = rng.randrange(5), rng.randrange(5)
        outer = evaluate(UnivariatePoly(f, {1 << j1: a1}))
        inner = evaluate(UnivariatePoly(f, {1 << j2: a2}))
        g = compose(outer, compose(base, inner))
        assert walsh_spectrum(g).distribution == w0
        assert differential_spectrum(g).distribution == d0


def test_spectra_invariant_under_affine_shifts():
    # adding a constant flips walsh signs by a character factor, so the
    # absolute multiset (and everything derived from it) is the invariant
    rng = random.Random(18)
    f = Field(5)
    base = monomial(f, 3)
    w0 = _abs_distribution(walsh_spectrum(base).distribution)
    d0 = differential_spectrum(base).distribution
    for c in (1, 9, 30, rng.randrange(1, 32)):
        shifted = add(base, FuncTable(f, [c] * 32))
        spec = walsh_spectrum(shifted)
        assert _abs_distribution(spec.distribution) == w0
        assert differential_spectrum(shifted).distribution == d0
        assert nonlinearity(shifted, spec) == 12
        assert is_ab(shifted, spec)
