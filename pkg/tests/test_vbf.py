"""Lookup-table / univariate-polynomial function layer."""

import random

import numpy as np
import pytest

from vbfkit.gf2m import Field
from vbfkit.vbf import (
    ContextMismatchError,
    FuncTable,
    NotAPermutationError,
    UnivariatePoly,
    add,
    algebraic_degree,
    anf_degree,
    component_degree,
    component_table,
    compose,
    evaluate,
    interpolate,
    invert,
    is_permutation,
    mobius_transform,
    monomial,
    two_weight,
)


def _cube_by_hand(f: Field) -> FuncTable:
    vals = [f.mul(x, f.mul(x, x)) for x in range(1 << f.m)]
    return FuncTable(f, vals)


# ---------------------------------------------------------------- evaluate

def test_evaluate_identity_zero_constant():
    f = Field(4)
    assert list(evaluate(UnivariatePoly(f, {1: 1})).values) == list(range(16))
    assert list(evaluate(UnivariatePoly(f, {})).values) == [0] * 16
    assert list(evaluate(UnivariatePoly(f, {0: 9})).values) == [9] * 16


def test_evaluate_cube_matches_repeated_mul():
    for m in (3, 4, 5):
        f = Field(m)
        got = evaluate(UnivariatePoly(f, {3: 1}))
        assert list(got.values) == list(_cube_by_hand(f).values)


def test_evaluate_two_term_poly_by_hand():
    f = Field(3)
    p = UnivariatePoly(f, {1: 3, 5: 6})
    got = evaluate(p)
    for x in range(8):
        assert got.values[x] == f.mul(3, x) ^ f.mul(6, f.pow(x, 5))


def test_evaluate_honors_zero_to_the_zero():
    f = Field(3)
    got = evaluate(UnivariatePoly(f, {0: 5, 2: 1}))
    assert got.values[0] == 5


# ---------------------------------------------------------------- interpolate

def test_interpolate_constants():
    f = Field(4)
    assert interpolate(FuncTable(f, [7] * 16)).terms == {0: 7}
    assert interpolate(FuncTable(f, [0] * 16)).terms == {}


def test_interpolate_cube_recovers_single_term():
    f = Field(5)
    assert interpolate(_cube_by_hand(f)).terms == {3: 1}


def test_interpolate_monomials_exhaustive_gf16():
    f = Field(4)
    for d in range(1, 16):
        tab = FuncTable(f, [f.pow(x, d) for x in range(16)])
        assert interpolate(tab).terms == {d: 1}


def test_round_trip_poly_table_poly():
    rng = random.Random(42)
    for m in (3, 4, 5, 6, 8):
        f = Field(m)
        n = 1 << m
        for _ in range(8):
            terms = {}
            for _ in range(rng.randrange(1, 6)):
                terms[rng.randrange(n)] = rng.randrange(1, n)
            p = UnivariatePoly(f, terms)
            assert interpolate(evaluate(p)).terms == p.terms


def test_round_trip_table_poly_table():
    rng = random.Random(9)
    for m in (3, 4, 5, 7):
        f = Field(m)
        n = 1 << m
        for _ in range(5):
            tab = FuncTable(f, [rng.randrange(n) for _ in range(n)])
            assert list(evaluate(interpolate(tab)).values) == list(tab.values)


def test_interpolate_degree_stays_below_field_size():
    rng = random.Random(1)
    f = Field(4)
    for _ in range(20):
        tab = FuncTable(f, [rng.randrange(16) for _ in range(16)])
        assert all(0 <= e < 16 for e in interpolate(tab).terms)


# ---------------------------------------------------------------- two_weight

@pytest.mark.parametrize(
    "k,w",
    [(0, 0), (1, 1), (3, 2), (5, 2), (9, 2), (13, 3), (21, 3), (57, 4), (2**20 - 1, 20)],
)
def test_two_weight(k, w):
    assert two_weight(k) == w


def test_two_weight_of_quadratic_and_kasami_exponents():
    for i in range(1, 8):
        assert two_weight((1 << i) + 1) == 2
        assert two_weight((1 << (2 * i)) - (1 << i) + 1) == i + 1


# ---------------------------------------------------------------- degrees

def test_degree_of_affine_and_constant():
    f = Field(5)
    assert algebraic_degree(FuncTable(f, [6] * 32)) == 0
    assert algebraic_degree(FuncTable(f, [0] * 32)) == 0
    assert algebraic_degree(evaluate(UnivariatePoly(f, {1: 1, 0: 12}))) == 1
    # linearized: exponents all powers of two
    assert algebraic_degree(evaluate(UnivariatePoly(f, {1: 3, 2: 1, 8: 7}))) == 1


def test_degree_of_quadratic_power_maps():
    for m, i in ((4, 1), (5, 1), (5, 2), (6, 1)):
        f = Field(m)
        tab = evaluate(UnivariatePoly(f, {(1 << i) + 1: 1}))
        assert algebraic_degree(tab) == 2


def test_degree_of_inverse_map():
    # x^(2^m-2) has exponent of 2-weight m-1
    for m in (4, 5, 6):
        f = Field(m)
        tab = evaluate(UnivariatePoly(f, {(1 << m) - 2: 1}))
        assert algebraic_degree(tab) == m - 1


def test_degree_of_inverted_cube_gf32():
    f = Field(5)
    assert algebraic_degree(invert(_cube_by_hand(f))) == 3


def test_component_degree_zero_selector():
    f = Field(4)
    assert component_degree(_cube_by_hand(f), 0) == 0


def test_component_degrees_of_cube_gf32():
    f = Field(5)
    tab = _cube_by_hand(f)
    for c in range(1, 32):
        assert component_degree(tab, c) == 2


def test_degree_equals_max_component_degree():
    rng = random.Random(17)
    for m in (3, 4):
        f = Field(m)
        n = 1 << m
        for _ in range(10):
            tab = FuncTable(f, [rng.randrange(n) for _ in range(n)])
            comp = max(component_degree(tab, c) for c in range(1, n))
            assert algebraic_degree(tab) == comp


def test_component_degree_bounded_by_degree():
    rng = random.Random(23)
    f = Field(5)
    for _ in range(5):
        tab = FuncTable(f, [rng.randrange(32) for _ in range(32)])
        d = algebraic_degree(tab)
        for c in range(32):
            assert component_degree(tab, c) <= d


def test_degree_survives_affine_composition():
    # monomial affine maps a*x^(2^j)+b are permutations for a != 0
    rng = random.Random(31)
    f = Field(5)
    tab = _cube_by_hand(f)
    for _ in range(10):
        a1, a2 = rng.randrange(1, 32), rng.randrange(1, 32)
        b1, b2 = rng.randrange(32), rng.randrange(32)
        j1, j2 = rng.randrange(5), rng.randrange(5)
        outer = evaluate(UnivariatePoly(f, {1 << j1: a1, 0: b1} if b1 else {1 << j1: a1}))
        inner = evaluate(UnivariatePoly(f, {1 << j2: a2, 0: b2} if b2 else {1 << j2: a2}))
        assert algebraic_degree(compose(outer, compose(tab, inner))) == 2


# ---------------------------------------------------------------- permutations

def test_is_permutation_basics():
    f = Field(4)
    assert is_permutation(evaluate(UnivariatePoly(f, {1: 1})))
    assert not is_permutation(FuncTable(f, [3] * 16))


def test_cube_permutes_gf32_but_not_gf16():
    assert is_permutation(_cube_by_hand(Field(5)))
    assert not is_permutation(_cube_by_hand(Field(4)))


def test_is_permutation_equals_gcd_rule_for_power_maps():
    import math

    for m in (3, 4, 5, 6):
        f = Field(m)
        for d in range(1, 1 << m):
            tab = evaluate(UnivariatePoly(f, {d: 1}))
            assert is_permutation(tab) == (math.gcd(d, (1 << m) - 1) == 1)


def test_invert_round_trips():
    f = Field(5)
    tab = _cube_by_hand(f)
    inv = invert(tab)
    for x in range(32):
        assert inv.values[tab.values[x]] == x
    assert list(invert(inv).values) == list(tab.values)
    ident = evaluate(UnivariatePoly(f, {1: 1}))
    assert list(invert(ident).values) == list(ident.values)


def test_invert_rejects_non_permutation():
    with pytest.raises(NotAPermutationError):
        invert(_cube_by_hand(Field(4)))


def test_compose_and_add_semantics():
    rng = random.Random(2)
    f = Field(4)
    a = FuncTable(f, [rng.randrange(16) for _ in range(16)])
    b = FuncTable(f, [rng.randrange(16) for _ in range(16)])
    c = compose(a, b)
    s = add(a, b)
    for x in range(16):
        assert c.values[x] == a.values[b.values[x]]
        assert s.values[x] == a.values[x] ^ b.values[x]
    assert list(add(a, a).values) == [0] * 16
    ident = evaluate(UnivariatePoly(f, {1: 1}))
    assert list(compose(a, ident).values) == list(a.values)


def test_compose_cube_with_its_inverse_is_identity():
    f = Field(5)
    tab = _cube_by_hand(f)
    assert list(compose(tab, invert(tab)).values) == list(range(32))


def test_context_mismatch_rejected():
    a = FuncTable(Field(4), list(range(16)))
    b = FuncTable(Field(4, poly=0b11001), list(range(16)))
    with pytest.raises(ContextMismatchError):
        add(a, b)
    with pytest.raises(ContextMismatchError):
        compose(a, b)


# ---------------------------------------------------------------- ANF plumbing

def test_mobius_transform_is_an_involution():
    rng = np.random.default_rng(4)
    for m in (2, 3, 6):
        bits = rng.integers(0, 2, size=1 << m).astype(np.uint8)
        twice = mobius_transform(mobius_transform(bits))
        assert np.array_equal(twice, bits)


def test_mobius_transform_of_and_or_xor():
    # f(x1,x0) = x0 AND x1 -> single top monomial
    anf = mobius_transform(np.array([0, 0, 0, 1], dtype=np.uint8))
    assert list(anf) == [0, 0, 0, 1]
    # XOR -> the two linear monomials
    anf = mobius_transform(np.array([0, 1, 1, 0], dtype=np.uint8))
    assert list(anf) == [0, 1, 1, 0]
    # OR = x0 + x1 + x0x1
    anf = mobius_transform(np.array([0, 1, 1, 1], dtype=np.uint8))
    assert list(anf) == [0, 1, 1, 1]


def test_anf_degree_on_known_tables():
    assert anf_degree(np.array([0, 0, 0, 1], dtype=np.uint8)) == 2
    assert anf_degree(np.array([0, 1, 1, 0], dtype=np.uint8)) == 1
    assert anf_degree(np.array([1, 1, 1, 1], dtype=np.uint8)) == 0
    assert anf_degree(np.zeros(8, dtype=np.uint8)) == 0


def test_component_table_is_trace_of_scaled_output():
    f = Field(4)
    tab = _cube_by_hand(f)
    for c in (1, 5, 11):
        bits = component_table(tab, c)
        for x in range(16):
            assert int(bits[x]) == f.trace(f.mul(c, tab.values[x]))


# ---------------------------------------------------------------- validation

def test_functable_validates_shape_and_range():
    f = Field(3)
    with pytest.raises(ValueError):
        FuncTable(f, [0] * 7)
    with pytest.raises(ValueError):
        FuncTable(f, [8] + [0] * 7)


def test_poly_validates_terms():
    f = Field(3)
    with pytest.raises(ValueError):
        UnivariatePoly(f, {8: 1})  # exponent out of range
    with pytest.raises(ValueError):
        UnivariatePoly(f, {2: 0})  # zero coefficient stored
    with pytest.raises(ValueError):
        UnivariatePoly(f, {1: 9})  # coefficient out of range


def test_monomial_helper():
    f = Field(5)
    tab = monomial(f, 3)
    assert list(tab.values) == list(_cube_by_hand(f).values)
